#include "biblio/corpus_io.hpp"

#include <sstream>

#include <json.hpp>

namespace biblio {

using nlohmann::json;

CorpusFormat parse_format(const std::string& name) {
    if (name == "jsonl") return CorpusFormat::kJsonl;
    if (name == "tagged") return CorpusFormat::kTagged;
    throw CorpusError("unknown corpus format: " + name);
}

std::string format_name(CorpusFormat format) {
    return format == CorpusFormat::kJsonl ? "jsonl" : "tagged";
}

namespace {

void check_record(Publication& p, std::size_t index) {
    if (p.id.empty()) throw MalformedRecordError(index, "empty id");
    if (p.title.empty()) throw MissingFieldError(p.id, "title");
    if (p.source.empty()) throw MissingFieldError(p.id, "source");
    if (p.year < kMinYear || p.year > kMaxYear)
        throw MalformedRecordError(index, "year " + std::to_string(p.year) +
                                              " outside [" + std::to_string(kMinYear) +
                                              ", " + std::to_string(kMaxYear) + "]");
}

void insert_record(Corpus& corpus, Publication&& p) {
    auto [it, inserted] = corpus.publications.emplace(p.id, std::move(p));
    if (!inserted) throw DuplicateIdError(it->first);
}

Corpus parse_jsonl(const std::string& content) {
    Corpus corpus;
    std::istringstream iss(content);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(iss, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json rec = json::parse(line, nullptr, false);
        if (rec.is_discarded() || !rec.is_object())
            throw MalformedRecordError(line_no, "not a JSON object");

        Publication p;
        if (!rec.contains("id") || !rec["id"].is_string())
            throw MalformedRecordError(line_no, "missing id");
        p.id = rec["id"].get<std::string>();
        if (!rec.contains("title")) throw MissingFieldError(p.id, "title");
        if (!rec.contains("source")) throw MissingFieldError(p.id, "source");
        if (!rec.contains("year")) throw MissingFieldError(p.id, "year");
        p.title = rec["title"].get<std::string>();
        p.source = rec["source"].get<std::string>();
        if (!rec["year"].is_number_integer())
            throw MalformedRecordError(line_no, "year is not an integer");
        p.year = rec["year"].get<int>();
        if (rec.contains("authors")) {
            for (const auto& a : rec["authors"]) {
                Author author;
                author.name = a.at("name").get<std::string>();
                if (a.contains("affiliation") && !a["affiliation"].is_null())
                    author.affiliation = a["affiliation"].get<std::string>();
                p.authors.push_back(std::move(author));
            }
        }
        if (rec.contains("references"))
            for (const auto& r : rec["references"])
                p.references.push_back(r.get<std::string>());

        check_record(p, line_no);
        insert_record(corpus, std::move(p));
    }
    return corpus;
}

// Tagged export: `PT` begins a record, `ER` ends it; `TI` title,
// `SO` source, `AU` author lines, `C1` affiliation lines, `CR` cited
// references, `PY` year, `UT` id. Indented lines continue the last tag.
Corpus parse_tagged(const std::string& content) {
    Corpus corpus;
    std::istringstream iss(content);
    std::string line;
    std::size_t record_no = 0;

    bool in_record = false;
    Publication p;
    std::string tag;
    std::vector<std::string> affiliations;

    auto apply = [&](const std::string& t, const std::string& value,
                     std::size_t line_no) {
        if (t == "TI") {
            if (!p.title.empty()) p.title += ' ';
            p.title += value;
        } else if (t == "SO") {
            if (!p.source.empty()) p.source += ' ';
            p.source += value;
        } else if (t == "AU") {
            p.authors.push_back({value, std::nullopt});
        } else if (t == "C1") {
            affiliations.push_back(value);
        } else if (t == "CR") {
            p.references.push_back(value);
        } else if (t == "PY") {
            try {
                p.year = std::stoi(value);
            } catch (...) {
                throw MalformedRecordError(line_no, "bad PY value: " + value);
            }
        } else if (t == "UT") {
            p.id = value;
        }
        // Unknown tags ignored.
    };

    auto finish = [&](std::size_t line_no) {
        // `C1` lines may scope an affiliation to authors with a leading
        // "[Name; Name]" list; unscoped lines apply to all authors.
        for (const auto& aff : affiliations) {
            std::string names, body = aff;
            if (!aff.empty() && aff.front() == '[') {
                auto close = aff.find(']');
                if (close != std::string::npos) {
                    names = aff.substr(1, close - 1);
                    body = aff.substr(close + 1);
                    auto b = body.find_first_not_of(" \t");
                    body = b == std::string::npos ? "" : body.substr(b);
                }
            }
            for (auto& author : p.authors) {
                bool applies = names.empty();
                if (!applies) {
                    std::istringstream ns(names);
                    std::string n;
                    while (std::getline(ns, n, ';')) {
                        auto b = n.find_first_not_of(" \t");
                        auto e = n.find_last_not_of(" \t");
                        if (b != std::string::npos &&
                            n.substr(b, e - b + 1) == author.name) {
                            applies = true;
                            break;
                        }
                    }
                }
                if (applies && !author.affiliation) author.affiliation = body;
            }
        }
        if (p.id.empty())
            throw MalformedRecordError(record_no, "record without UT id");
        check_record(p, line_no);
        insert_record(corpus, std::move(p));
        p = Publication{};
        affiliations.clear();
    };

    std::size_t line_no = 0;
    while (std::getline(iss, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;

        bool continuation = line[0] == ' ' || line[0] == '\t';
        if (continuation) {
            if (!in_record || tag.empty())
                throw MalformedRecordError(line_no, "continuation outside a field");
            auto b = line.find_first_not_of(" \t");
            apply(tag, line.substr(b), line_no);
            continue;
        }

        std::string t = line.substr(0, line.find(' '));
        std::string value;
        auto sp = line.find(' ');
        if (sp != std::string::npos) {
            auto b = line.find_first_not_of(" \t", sp);
            if (b != std::string::npos) value = line.substr(b);
        }
        while (!value.empty() &&
               (value.back() == ' ' || value.back() == '\t'))
            value.pop_back();

        if (t == "PT") {
            if (in_record)
                throw MalformedRecordError(line_no, "PT inside an open record");
            ++record_no;
            in_record = true;
            tag.clear();
            continue;
        }
        if (t == "ER") {
            if (!in_record)
                throw MalformedRecordError(line_no, "ER without PT");
            finish(line_no);
            in_record = false;
            tag.clear();
            continue;
        }
        if (!in_record)
            throw MalformedRecordError(line_no, "field outside a record: " + t);
        tag = t;
        apply(tag, value, line_no);
    }
    if (in_record) throw MalformedRecordError(line_no, "unterminated record");
    return corpus;
}

}  // namespace

Corpus parse_corpus(const std::string& content, CorpusFormat format) {
    return format == CorpusFormat::kJsonl ? parse_jsonl(content)
                                          : parse_tagged(content);
}

std::string serialize_corpus(const Corpus& corpus) {
    std::string out;
    for (const auto& [id, p] : corpus.publications) {
        json rec;
        rec["id"] = p.id;
        rec["title"] = p.title;
        rec["source"] = p.source;
        rec["year"] = p.year;
        if (!p.authors.empty()) {
            json authors = json::array();
            for (const auto& a : p.authors) {
                json ja;
                ja["name"] = a.name;
                if (a.affiliation) ja["affiliation"] = *a.affiliation;
                authors.push_back(std::move(ja));
            }
            rec["authors"] = std::move(authors);
        }
        if (!p.references.empty()) rec["references"] = p.references;
        out += rec.dump();
        out += '\n';
    }
    return out;
}

std::string serialize_corpus_tagged(const Corpus& corpus) {
    std::string out;
    for (const auto& [id, p] : corpus.publications) {
        out += "PT J\n";
        for (const auto& a : p.authors) out += "AU " + a.name + "\n";
        out += "TI " + p.title + "\n";
        out += "SO " + p.source + "\n";
        for (const auto& a : p.authors)
            if (a.affiliation)
                out += "C1 [" + a.name + "] " + *a.affiliation + "\n";
        for (const auto& r : p.references) out += "CR " + r + "\n";
        out += "PY " + std::to_string(p.year) + "\n";
        out += "UT " + p.id + "\n";
        out += "ER\n";
    }
    return out;
}

Corpus filter_by_period(const Corpus& corpus, int start_year, int end_year) {
    if (start_year > end_year) throw InvalidPeriodError(start_year, end_year);
    Corpus out;
    out.provenance = corpus.provenance;
    for (const auto& [id, p] : corpus.publications)
        if (p.year >= start_year && p.year <= end_year) out.publications.emplace(id, p);
    return out;
}

std::vector<Warning> validate_corpus(const Corpus& corpus) {
    std::vector<Warning> warnings;
    for (const auto& [id, p] : corpus.publications) {
        if (p.authors.empty())
            warnings.push_back({id, "no authors"});
        if (p.references.empty())
            warnings.push_back({id, "no references"});
    }
    return warnings;
}

Corpus merge_corpora(const std::vector<Corpus>& parts) {
    Corpus out;
    for (const auto& part : parts) {
        for (const auto& [id, p] : part.publications) {
            auto [it, inserted] = out.publications.emplace(id, p);
            if (!inserted) throw DuplicateIdError(id);
        }
        if (!part.provenance.empty()) {
            if (!out.provenance.empty()) out.provenance += ";";
            out.provenance += part.provenance;
        }
    }
    return out;
}

}  // namespace biblio

#include "biblio/normalize.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace biblio {

namespace {

// Folds the common accented Latin codepoints (U+00C0..U+017F) to ASCII.
// Input is UTF-8; unmapped multibyte sequences are dropped.
std::string fold_to_ascii(const std::string& in) {
    static const struct { unsigned cp; const char* ascii; } kMap[] = {
        {0x00C0, "a"}, {0x00C1, "a"}, {0x00C2, "a"}, {0x00C3, "a"}, {0x00C4, "a"},
        {0x00C5, "a"}, {0x00C6, "ae"}, {0x00C7, "c"}, {0x00C8, "e"}, {0x00C9, "e"},
        {0x00CA, "e"}, {0x00CB, "e"}, {0x00CC, "i"}, {0x00CD, "i"}, {0x00CE, "i"},
        {0x00CF, "i"}, {0x00D0, "d"}, {0x00D1, "n"}, {0x00D2, "o"}, {0x00D3, "o"},
        {0x00D4, "o"}, {0x00D5, "o"}, {0x00D6, "o"}, {0x00D8, "o"}, {0x00D9, "u"},
        {0x00DA, "u"}, {0x00DB, "u"}, {0x00DC, "u"}, {0x00DD, "y"}, {0x00DE, "th"},
        {0x00DF, "ss"},
        {0x00E0, "a"}, {0x00E1, "a"}, {0x00E2, "a"}, {0x00E3, "a"}, {0x00E4, "a"},
        {0x00E5, "a"}, {0x00E6, "ae"}, {0x00E7, "c"}, {0x00E8, "e"}, {0x00E9, "e"},
        {0x00EA, "e"}, {0x00EB, "e"}, {0x00EC, "i"}, {0x00ED, "i"}, {0x00EE, "i"},
        {0x00EF, "i"}, {0x00F0, "d"}, {0x00F1, "n"}, {0x00F2, "o"}, {0x00F3, "o"},
        {0x00F4, "o"}, {0x00F5, "o"}, {0x00F6, "o"}, {0x00F8, "o"}, {0x00F9, "u"},
        {0x00FA, "u"}, {0x00FB, "u"}, {0x00FC, "u"}, {0x00FD, "y"}, {0x00FE, "th"},
        {0x00FF, "y"},
    };

    std::string out;
    out.reserve(in.size());
    std::size_t i = 0;
    while (i < in.size()) {
        unsigned char c = static_cast<unsigned char>(in[i]);
        if (c < 0x80) {
            out.push_back(static_cast<char>(c));
            ++i;
            continue;
        }
        // Decode one UTF-8 codepoint.
        unsigned cp = 0;
        std::size_t len = 0;
        if ((c & 0xE0) == 0xC0) { cp = c & 0x1F; len = 2; }
        else if ((c & 0xF0) == 0xE0) { cp = c & 0x0F; len = 3; }
        else if ((c & 0xF8) == 0xF0) { cp = c & 0x07; len = 4; }
        else { ++i; continue; }
        if (i + len > in.size()) break;
        bool valid = true;
        for (std::size_t k = 1; k < len; ++k) {
            unsigned char cc = static_cast<unsigned char>(in[i + k]);
            if ((cc & 0xC0) != 0x80) { valid = false; break; }
            cp = (cp << 6) | (cc & 0x3F);
        }
        i += valid ? len : 1;
        if (!valid) continue;
        bool mapped = false;
        for (const auto& m : kMap) {
            if (m.cp == cp) { out += m.ascii; mapped = true; break; }
        }
        if (!mapped && cp >= 0x0100 && cp <= 0x017F) {
            // Latin Extended-A pairs upper/lower variants of one base letter.
            static const char kExtA[] =
                "aaaccccddeeeeeggggghhiiiiijjklllllnnnnnoooorrrssssttuuuuuuwyyzzz";
            unsigned idx = (cp - 0x0100) / 2;
            if (idx < sizeof(kExtA) - 1) out.push_back(kExtA[idx]);
        }
    }
    return out;
}

bool is_alnum(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    return std::isalnum(u) != 0;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

// Lowercase, non-alphanumerics to spaces, collapsed and trimmed.
std::string canonical_phrase(const std::string& raw) {
    std::string folded = lower(fold_to_ascii(raw));
    std::string out;
    bool pending_space = false;
    for (char c : folded) {
        if (is_alnum(c)) {
            if (pending_space && !out.empty()) out.push_back(' ');
            pending_space = false;
            out.push_back(c);
        } else {
            pending_space = true;
        }
    }
    return out;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream iss(s);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Initials from given-name tokens, case-sensitive input. An all-caps
// short token is a block of initials ("SC", "AJ"); re-parsing the
// canonical lowercase form keeps its single initials token intact;
// anything else contributes the first letter of each period/hyphen
// separated piece.
std::string initials_of(const std::vector<std::string>& tokens, bool canonical_rest) {
    std::string out;
    for (const auto& raw_tok : tokens) {
        std::string letters;
        std::string all;
        bool piece_start = true;
        for (char c : raw_tok) {
            if (is_alnum(c)) {
                if (piece_start) letters.push_back(c);
                piece_start = false;
                all.push_back(c);
            } else {
                piece_start = true;
            }
        }
        bool alpha_only = !all.empty() &&
                          std::all_of(all.begin(), all.end(), [](char c) {
                              return std::isalpha(static_cast<unsigned char>(c)) != 0;
                          });
        bool all_upper = alpha_only &&
                         std::all_of(all.begin(), all.end(), [](char c) {
                             return std::isupper(static_cast<unsigned char>(c)) != 0;
                         });
        bool all_lower = alpha_only &&
                         std::all_of(all.begin(), all.end(), [](char c) {
                             return std::islower(static_cast<unsigned char>(c)) != 0;
                         });
        bool block = all.size() <= 4 &&
                     (all_upper || (canonical_rest && tokens.size() == 1 && all_lower));
        out += block ? all : letters;
    }
    return out;
}

}  // namespace

StopWordList parse_stop_words(const std::string& content) {
    StopWordList list;
    std::istringstream iss(content);
    std::string line;
    while (std::getline(iss, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        list.words.insert(lower(line));
    }
    return list;
}

StopWordList default_stop_words() {
    static const char* kWords[] = {
        "a", "an", "and", "are", "as", "at", "be", "by", "for", "from", "in",
        "into", "is", "it", "its", "of", "on", "or", "that", "the", "their",
        "this", "to", "was", "were", "with",
    };
    StopWordList list;
    for (const char* w : kWords) list.words.insert(w);
    return list;
}

std::string field_name(Field field) {
    switch (field) {
        case Field::kSource: return "source";
        case Field::kTitleWord: return "title_word";
        case Field::kAuthor: return "author";
        case Field::kReference: return "reference";
    }
    return "?";
}

SourceKey normalize_source(const std::string& raw) {
    std::string key = canonical_phrase(raw);
    if (key.empty()) throw EmptyAfterNormalizationError(raw);
    return key;
}

std::string normalize_affiliation(const std::string& raw) {
    return canonical_phrase(raw);
}

std::set<WordKey> tokenize_title(const std::string& raw, const StopWordList& stop) {
    std::set<WordKey> out;
    std::string folded = lower(fold_to_ascii(raw));
    std::string cur;
    auto flush = [&]() {
        if (cur.size() >= 2 && !stop.contains(cur) &&
            !std::all_of(cur.begin(), cur.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c)) != 0;
            })) {
            out.insert(cur);
        }
        cur.clear();
    };
    for (char c : folded) {
        if (is_alnum(c)) cur.push_back(c);
        else flush();
    }
    flush();
    return out;
}

AuthorKey normalize_author(const std::string& raw) {
    std::string folded = fold_to_ascii(raw);
    std::string surname;
    std::vector<std::string> rest;
    bool has_comma = false;
    auto comma = folded.find(',');
    if (comma != std::string::npos) {
        has_comma = true;
        surname = canonical_phrase(folded.substr(0, comma));
        rest = split_ws(folded.substr(comma + 1));
    } else {
        auto tokens = split_ws(folded);
        if (!tokens.empty()) {
            rest.assign(tokens.begin(), tokens.end() - 1);
            surname = canonical_phrase(tokens.back());
        }
    }
    std::string initials = lower(initials_of(rest, has_comma));
    if (surname.empty() && initials.empty()) throw EmptyAfterNormalizationError(raw);
    if (surname.empty()) return initials;
    if (initials.empty()) return surname;
    return surname + ", " + initials;
}

namespace {

// Cited-reference author segments are surname-first ("Bradford SC").
std::string ref_author_key(const std::string& segment) {
    std::string folded = fold_to_ascii(segment);
    if (folded.find(',') != std::string::npos) return normalize_author(folded);
    auto tokens = split_ws(folded);
    if (tokens.empty()) return "";
    if (tokens.size() == 1) return canonical_phrase(tokens[0]);
    std::string surname;
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
        std::string part = canonical_phrase(tokens[i]);
        if (part.empty()) continue;
        if (!surname.empty()) surname.push_back(' ');
        surname += part;
    }
    std::string initials = lower(initials_of({tokens.back()}, false));
    if (surname.empty()) return initials;
    if (initials.empty()) return surname;
    return surname + ", " + initials;
}

std::string find_year(const std::string& s, std::size_t* pos_out) {
    std::size_t run_start = std::string::npos;
    std::size_t run_len = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        bool digit = i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
        if (digit) {
            if (run_len == 0) run_start = i;
            ++run_len;
        } else {
            if (run_len == 4) {
                bool bounded = (run_start == 0 ||
                                !is_alnum(s[run_start - 1])) &&
                               (i >= s.size() || !is_alnum(s[i]));
                if (bounded) {
                    if (pos_out) *pos_out = run_start;
                    return s.substr(run_start, 4);
                }
            }
            run_len = 0;
        }
    }
    return "";
}

}  // namespace

RefKey normalize_reference(const std::string& raw) {
    // Already-keyed input re-normalizes componentwise (idempotence).
    if (raw.find('|') != std::string::npos) {
        std::vector<std::string> parts(3);
        std::size_t start = 0;
        for (int i = 0; i < 3; ++i) {
            auto bar = i < 2 ? raw.find('|', start) : std::string::npos;
            parts[i] = raw.substr(start, bar == std::string::npos
                                             ? std::string::npos
                                             : bar - start);
            if (bar == std::string::npos) break;
            start = bar + 1;
        }
        std::string author, year, source;
        try { if (!trim(parts[0]).empty()) author = normalize_author(parts[0]); } catch (...) {}
        year = find_year(parts[1], nullptr);
        try { if (!trim(parts[2]).empty()) source = normalize_source(parts[2]); } catch (...) {}
        if (author.empty() && year.empty() && source.empty())
            throw EmptyAfterNormalizationError(raw);
        return author + "|" + year + "|" + source;
    }

    std::vector<std::string> segments;
    std::size_t start = 0;
    while (true) {
        auto comma = raw.find(',', start);
        segments.push_back(trim(raw.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }

    std::string author = segments.empty() ? "" : ref_author_key(segments[0]);

    std::string year;
    std::size_t year_segment = 0;
    for (std::size_t i = 1; i < segments.size() && year.empty(); ++i) {
        year = find_year(segments[i], nullptr);
        if (!year.empty()) year_segment = i;
    }

    std::string source;
    if (!year.empty() && year_segment + 1 < segments.size()) {
        try {
            source = normalize_source(segments[year_segment + 1]);
        } catch (const EmptyAfterNormalizationError&) {
        }
    }

    if (author.empty() && year.empty() && source.empty())
        throw EmptyAfterNormalizationError(raw);
    return author + "|" + year + "|" + source;
}

RefKey ref_key_of(const Publication& p) {
    std::string author;
    if (!p.authors.empty()) {
        try {
            author = normalize_author(p.authors.front().name);
        } catch (const EmptyAfterNormalizationError&) {
        }
    }
    std::string source;
    try {
        source = normalize_source(p.source);
    } catch (const EmptyAfterNormalizationError&) {
    }
    return author + "|" + std::to_string(p.year) + "|" + source;
}

FieldValues extract_field_values(const Publication& p, const StopWordList& stop) {
    FieldValues fv;
    if (!p.title.empty()) fv.title_words = tokenize_title(p.title, stop);
    if (!p.source.empty()) {
        try {
            fv.sources.insert(normalize_source(p.source));
        } catch (const EmptyAfterNormalizationError&) {
        }
    }
    for (const auto& a : p.authors) {
        try {
            fv.authors.insert(normalize_author(a.name));
        } catch (const EmptyAfterNormalizationError&) {
        }
    }
    for (const auto& r : p.references) {
        try {
            fv.references.insert(normalize_reference(r));
        } catch (const EmptyAfterNormalizationError&) {
        }
    }
    return fv;
}

const std::set<std::string>& field_of(const FieldValues& fv, Field field) {
    switch (field) {
        case Field::kSource: return fv.sources;
        case Field::kTitleWord: return fv.title_words;
        case Field::kAuthor: return fv.authors;
        case Field::kReference: return fv.references;
    }
    return fv.sources;
}

}  // namespace biblio

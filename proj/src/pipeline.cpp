#include "biblio/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace biblio {

const std::set<std::string>& KeyValueProfile::keys_of(Field field) const {
    switch (field) {
        case Field::kSource: return key_sources;
        case Field::kTitleWord: return key_title_words;
        case Field::kAuthor: return key_authors;
        case Field::kReference: return key_references;
    }
    return key_sources;
}

PublicationRecord build_publication_record(const Corpus& corpus,
                                           const ApplicantSelector& selector,
                                           const std::string& owner_label) {
    PublicationRecord pr;
    pr.owner_label = owner_label;
    if (const auto* explicit_ids = std::get_if<IdListSelector>(&selector)) {
        for (const auto& id : explicit_ids->ids) {
            if (!corpus.contains(id)) throw UnknownIdError(id);
            pr.ids.insert(id);
        }
    } else {
        const auto& key = std::get<AuthorSelector>(selector).key;
        for (const auto& [id, p] : corpus.publications) {
            for (const auto& a : p.authors) {
                try {
                    if (normalize_author(a.name) == key) {
                        pr.ids.insert(id);
                        break;
                    }
                } catch (const EmptyAfterNormalizationError&) {
                }
            }
        }
    }
    if (pr.ids.empty()) throw EmptyRecordError();
    return pr;
}

SeedRecord build_seed_record(const PublicationRecord& pr, const Corpus& corpus) {
    SeedRecord seed;
    seed.origin = pr;
    seed.ids = pr.ids;

    std::unordered_map<std::string, std::vector<std::string>> by_ref_key;
    for (const auto& [id, p] : corpus.publications)
        by_ref_key[ref_key_of(p)].push_back(id);

    for (const auto& id : pr.ids) {
        const Publication* p = corpus.find(id);
        if (!p) throw UnknownIdError(id);
        for (const auto& raw_ref : p->references) {
            RefKey key;
            try {
                key = normalize_reference(raw_ref);
            } catch (const EmptyAfterNormalizationError&) {
                ++seed.unresolved_references;
                continue;
            }
            auto it = by_ref_key.find(key);
            if (it == by_ref_key.end()) {
                ++seed.unresolved_references;
                continue;
            }
            for (const auto& cited_id : it->second) seed.ids.insert(cited_id);
        }
    }
    return seed;
}

FieldFrequencyTable field_frequency_table(const SeedRecord& seed, const Corpus& corpus,
                                          Field field, const StopWordList& stop) {
    FieldFrequencyTable table;
    table.field = field;
    for (const auto& id : seed.ids) {
        const Publication* p = corpus.find(id);
        if (!p) throw UnknownIdError(id);
        FieldValues fv = extract_field_values(*p, stop);
        for (const auto& value : field_of(fv, field)) ++table.counts[value];
    }
    return table;
}

namespace {

// Coverage target: "at least" threshold * seed_size publications. The
// epsilon absorbs binary-fraction noise (0.8 * 5 must give 4, not 5).
std::size_t coverage_target(double threshold, std::size_t seed_size) {
    double raw = threshold * static_cast<double>(seed_size);
    return static_cast<std::size_t>(std::ceil(raw - 1e-9));
}

std::vector<std::pair<std::string, std::size_t>> ordered_values(
    const FieldFrequencyTable& table) {
    std::vector<std::pair<std::string, std::size_t>> values(table.counts.begin(),
                                                            table.counts.end());
    std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return values;
}

}  // namespace

std::vector<std::pair<std::string, std::size_t>> select_key_values_ordered(
    const FieldFrequencyTable& table, const SeedRecord& seed, const Corpus& corpus,
    double threshold, const StopWordList& stop) {
    // Membership lists per value, for coverage accounting.
    std::unordered_map<std::string, std::vector<const std::string*>> members;
    for (const auto& id : seed.ids) {
        const Publication* p = corpus.find(id);
        if (!p) throw UnknownIdError(id);
        FieldValues fv = extract_field_values(*p, stop);
        for (const auto& value : field_of(fv, table.field))
            members[value].push_back(&id);
    }

    const std::size_t target = coverage_target(threshold, seed.ids.size());
    std::vector<std::pair<std::string, std::size_t>> selected;
    if (target == 0) return selected;
    std::set<const std::string*> covered;
    for (const auto& [value, count] : ordered_values(table)) {
        if (covered.size() >= target) break;
        selected.emplace_back(value, count);
        for (const std::string* id : members[value]) covered.insert(id);
    }
    return selected;
}

std::set<std::string> select_key_values(const FieldFrequencyTable& table,
                                        const SeedRecord& seed, const Corpus& corpus,
                                        double threshold, const StopWordList& stop) {
    std::set<std::string> keys;
    for (const auto& [value, count] :
         select_key_values_ordered(table, seed, corpus, threshold, stop))
        keys.insert(value);
    return keys;
}

KeyValueProfile build_profile(const SeedRecord& seed, const Corpus& corpus,
                              double threshold, const StopWordList& stop) {
    KeyValueProfile profile;
    profile.threshold = threshold;
    profile.seed_size = seed.ids.size();
    for (Field field : kAllFields) {
        auto table = field_frequency_table(seed, corpus, field, stop);
        auto keys = select_key_values(table, seed, corpus, threshold, stop);
        switch (field) {
            case Field::kSource: profile.key_sources = std::move(keys); break;
            case Field::kTitleWord: profile.key_title_words = std::move(keys); break;
            case Field::kAuthor: profile.key_authors = std::move(keys); break;
            case Field::kReference: profile.key_references = std::move(keys); break;
        }
    }
    return profile;
}

int match_count(const FieldValues& fv, const KeyValueProfile& profile) {
    int n = 0;
    for (Field field : kAllFields) {
        const auto& values = field_of(fv, field);
        const auto& keys = profile.keys_of(field);
        bool hit = std::any_of(values.begin(), values.end(), [&](const auto& v) {
            return keys.count(v) != 0;
        });
        if (hit) ++n;
    }
    return n;
}

SpecialtyApproximation build_specialty_approximation(const Corpus& corpus,
                                                     const KeyValueProfile& profile,
                                                     int min_fields,
                                                     const StopWordList& stop,
                                                     unsigned n_threads) {
    if (min_fields < 1 || min_fields > 4)
        throw PipelineError("min_fields must be in [1, 4]");

    SpecialtyApproximation sa;
    sa.profile = profile;
    sa.min_fields = min_fields;

    std::vector<const Publication*> pubs;
    pubs.reserve(corpus.size());
    for (const auto& [id, p] : corpus.publications) pubs.push_back(&p);

    auto matches = [&](const Publication& p) {
        return match_count(extract_field_values(p, stop), profile) >= min_fields;
    };

    if (n_threads <= 1 || pubs.size() < 2) {
        for (const Publication* p : pubs)
            if (matches(*p)) sa.ids.insert(p->id);
        return sa;
    }

    const std::size_t chunks = std::min<std::size_t>(n_threads, pubs.size());
    std::vector<std::vector<std::string>> partial(chunks);
    std::vector<std::thread> workers;
    for (std::size_t c = 0; c < chunks; ++c) {
        workers.emplace_back([&, c] {
            std::size_t lo = pubs.size() * c / chunks;
            std::size_t hi = pubs.size() * (c + 1) / chunks;
            for (std::size_t i = lo; i < hi; ++i)
                if (matches(*pubs[i])) partial[c].push_back(pubs[i]->id);
        });
    }
    for (auto& w : workers) w.join();
    for (const auto& part : partial) sa.ids.insert(part.begin(), part.end());
    return sa;
}

KeyFigures key_figures(const std::string& label, const std::string& domain_label,
                       const PublicationRecord& pr, const SeedRecord& sr,
                       const SpecialtyApproximation& sa) {
    if (sr.ids.size() < pr.ids.size())
        throw InvariantViolationError("seed record smaller than publication record");
    KeyFigures kf;
    kf.applicant_label = label;
    kf.domain_label = domain_label;
    kf.pr_count = pr.ids.size();
    kf.sr_count = sr.ids.size();
    kf.sa_count = sa.ids.size();
    return kf;
}

std::string key_figures_csv_header() { return "applicant,domain,pr,sr,sa"; }

std::string key_figures_csv_row(const KeyFigures& kf) {
    std::ostringstream os;
    os << kf.applicant_label << ',' << kf.domain_label << ',' << kf.pr_count << ','
       << kf.sr_count << ',' << kf.sa_count;
    return os.str();
}

std::string render_profile(const KeyValueProfile& profile, const SeedRecord& seed,
                           const Corpus& corpus, const StopWordList& stop) {
    std::ostringstream os;
    os << "coverage_threshold " << profile.threshold << "\n";
    os << "seed_size " << profile.seed_size << "\n";
    for (Field field : kAllFields) {
        auto table = field_frequency_table(seed, corpus, field, stop);
        auto ordered =
            select_key_values_ordered(table, seed, corpus, profile.threshold, stop);
        os << "[" << field_name(field) << "] " << ordered.size() << " key values\n";
        for (const auto& [value, count] : ordered)
            os << "  " << value << " (" << count << ")\n";
    }
    return os.str();
}

}  // namespace biblio

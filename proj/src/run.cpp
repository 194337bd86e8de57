#include "biblio/run.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "biblio/reviewer.hpp"

namespace biblio {

namespace fs = std::filesystem;
using nlohmann::json;

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PipelineError("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw PipelineError("cannot write file: " + path.string());
    out << content;
}

std::string hex64(std::uint64_t v) {
    static const char* kDigits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = kDigits[v & 0xF];
        v >>= 4;
    }
    return s;
}

}  // namespace

RunArtifacts run_pipeline(const RunConfig& config) {
    std::vector<Corpus> parts;
    std::uint64_t corpus_checksum = 0xcbf29ce484222325ULL;
    for (const auto& path : config.corpus_paths) {
        std::string bytes = read_file(path);
        corpus_checksum ^= fnv1a64(bytes);
        Corpus part = parse_corpus(bytes, config.format);
        part.provenance = path;
        parts.push_back(std::move(part));
    }
    Corpus corpus = merge_corpora(parts);
    if (config.period)
        corpus = filter_by_period(corpus, config.period->first, config.period->second);

    StopWordList stop = config.stopword_path
                            ? parse_stop_words(read_file(*config.stopword_path))
                            : default_stop_words();

    PublicationRecord pr =
        build_publication_record(corpus, config.applicant, config.applicant_label);
    SeedRecord seed = build_seed_record(pr, corpus);
    KeyValueProfile profile =
        build_profile(seed, corpus, config.coverage_threshold, stop);
    SpecialtyApproximation sa = build_specialty_approximation(
        corpus, profile, config.min_fields, stop, config.n_threads);
    KeyFigures kf =
        key_figures(config.applicant_label, config.domain_label, pr, seed, sa);

    fs::path out_dir(config.output_dir);
    fs::create_directories(out_dir);

    RunArtifacts artifacts;
    auto emit = [&](const std::string& name, const std::string& content) {
        write_file(out_dir / name, content);
        artifacts.paths.push_back(name);
    };

    emit("profile.txt", render_profile(profile, seed, corpus, stop));

    {
        std::string ids;
        for (const auto& id : sa.ids) ids += id + "\n";
        emit("approximation_ids.txt", ids);
    }
    {
        std::string ids;
        for (const auto& id : seed.ids) ids += id + "\n";
        emit("seed_ids.txt", ids);
    }
    emit("keyfigures.csv", key_figures_csv_header() + "\n" + key_figures_csv_row(kf) +
                               "\n");

    if (config.exclusion_path) {
        ExclusionData ex = parse_exclusion_data(read_file(*config.exclusion_path));
        auto derived = coauthors_of(pr, corpus, ex.applicant_authors);
        ex.coauthors.insert(derived.begin(), derived.end());

        auto ranked = rank_authors(sa, corpus);
        auto candidates = apply_exclusions(ranked, ex, corpus);
        SuggestionReport report =
            suggest_reviewers(candidates, config.n_min, config.n_max);

        std::string text = render_suggestions_text(report);
        if (!ex.applicant_suggested.empty()) {
            auto overlap = overlap_report(ex.applicant_suggested, sa, corpus);
            text += "applicant suggestions in approximation: " +
                    render_overlap(overlap) + "\n";
        }
        emit("suggestions.txt", text);
        emit("suggestions.csv", render_suggestions_csv(report));
    }

    json manifest;
    // output_dir and threads are execution knobs with no effect on the
    // results; drop them so artifacts are byte-identical across runs.
    std::string cfg_echo;
    std::istringstream cfg_lines(dump_config(config));
    for (std::string line; std::getline(cfg_lines, line);) {
        if (line.rfind("output_dir = ", 0) == 0) continue;
        if (line.rfind("threads = ", 0) == 0) continue;
        cfg_echo += line + "\n";
    }
    manifest["config"] = cfg_echo;
    manifest["corpus_checksum"] = hex64(corpus_checksum);
    manifest["corpus_size"] = corpus.size();
    manifest["artifacts"] = artifacts.paths;
    write_file(out_dir / "manifest.json", manifest.dump(2) + "\n");
    artifacts.paths.push_back("manifest.json");

    return artifacts;
}

}  // namespace biblio

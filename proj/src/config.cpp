#include "biblio/config.hpp"

#include <sstream>

namespace biblio {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream iss(s);
    std::string item;
    while (std::getline(iss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        double d = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return d;
    } catch (...) {
        throw ConfigError(key, "not a number: " + value);
    }
}

long parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        long v = std::stol(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (...) {
        throw ConfigError(key, "not an integer: " + value);
    }
}

}  // namespace

RunConfig load_config(const std::string& content) {
    RunConfig cfg;
    bool have_applicant_ids = false;
    bool have_applicant_author = false;

    std::istringstream iss(content);
    std::string line;
    while (std::getline(iss, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(line, "expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(line, "empty key");

        if (key == "corpus") {
            for (auto& p : split_csv(value)) cfg.corpus_paths.push_back(p);
        } else if (key == "format") {
            try {
                cfg.format = parse_format(value);
            } catch (const CorpusError&) {
                throw ConfigError("format", value);
            }
        } else if (key == "period") {
            auto dash = value.find('-');
            if (dash == std::string::npos) throw ConfigError("period", value);
            int a = static_cast<int>(parse_int("period", trim(value.substr(0, dash))));
            int b = static_cast<int>(parse_int("period", trim(value.substr(dash + 1))));
            if (a > b) throw ConfigError("period", "start year after end year");
            cfg.period = {a, b};
        } else if (key == "coverage_threshold") {
            cfg.coverage_threshold = parse_double(key, value);
        } else if (key == "min_fields") {
            cfg.min_fields = static_cast<int>(parse_int(key, value));
        } else if (key == "n_min") {
            cfg.n_min = static_cast<std::size_t>(parse_int(key, value));
        } else if (key == "n_max") {
            cfg.n_max = static_cast<std::size_t>(parse_int(key, value));
        } else if (key == "stopwords") {
            cfg.stopword_path = value;
        } else if (key == "applicant_ids") {
            cfg.applicant = IdListSelector{split_csv(value)};
            have_applicant_ids = true;
        } else if (key == "applicant_author") {
            cfg.applicant = AuthorSelector{normalize_author(value)};
            have_applicant_author = true;
        } else if (key == "applicant_label") {
            cfg.applicant_label = value;
        } else if (key == "applicant_domain") {
            cfg.domain_label = value;
        } else if (key == "exclusions") {
            cfg.exclusion_path = value;
        } else if (key == "output_dir") {
            cfg.output_dir = value;
        } else if (key == "threads") {
            long t = parse_int(key, value);
            if (t < 1) throw ConfigError("threads", "must be >= 1");
            cfg.n_threads = static_cast<unsigned>(t);
        } else {
            throw ConfigError(key, "unknown key");
        }
    }

    if (cfg.corpus_paths.empty()) throw ConfigError("corpus", "no corpus file given");
    if (have_applicant_ids && have_applicant_author)
        throw ConfigError("applicant_author",
                          "applicant_ids and applicant_author are exclusive");
    if (!have_applicant_ids && !have_applicant_author)
        throw ConfigError("applicant_ids", "an applicant selector is required");
    if (have_applicant_ids && std::get<IdListSelector>(cfg.applicant).ids.empty())
        throw ConfigError("applicant_ids", "empty id list");
    if (cfg.coverage_threshold < 0.0 || cfg.coverage_threshold > 1.0)
        throw ConfigError("coverage_threshold", "must be in [0, 1]");
    if (cfg.min_fields < 1 || cfg.min_fields > 4)
        throw ConfigError("min_fields", "must be in [1, 4]");
    if (cfg.n_min < 1 || cfg.n_min > cfg.n_max)
        throw ConfigError("n_min", "must satisfy 1 <= n_min <= n_max");
    return cfg;
}

std::string dump_config(const RunConfig& cfg) {
    std::ostringstream os;
    for (const auto& p : cfg.corpus_paths) os << "corpus = " << p << "\n";
    os << "format = " << format_name(cfg.format) << "\n";
    if (cfg.period)
        os << "period = " << cfg.period->first << "-" << cfg.period->second << "\n";
    os << "coverage_threshold = " << cfg.coverage_threshold << "\n";
    os << "min_fields = " << cfg.min_fields << "\n";
    os << "n_min = " << cfg.n_min << "\n";
    os << "n_max = " << cfg.n_max << "\n";
    if (cfg.stopword_path) os << "stopwords = " << *cfg.stopword_path << "\n";
    if (const auto* ids = std::get_if<IdListSelector>(&cfg.applicant)) {
        os << "applicant_ids = ";
        for (std::size_t i = 0; i < ids->ids.size(); ++i)
            os << (i ? "," : "") << ids->ids[i];
        os << "\n";
    } else {
        os << "applicant_author = " << std::get<AuthorSelector>(cfg.applicant).key
           << "\n";
    }
    os << "applicant_label = " << cfg.applicant_label << "\n";
    if (!cfg.domain_label.empty())
        os << "applicant_domain = " << cfg.domain_label << "\n";
    if (cfg.exclusion_path) os << "exclusions = " << *cfg.exclusion_path << "\n";
    os << "output_dir = " << cfg.output_dir << "\n";
    os << "threads = " << cfg.n_threads << "\n";
    return os.str();
}

bool operator==(const RunConfig& a, const RunConfig& b) {
    auto selector_eq = [&] {
        if (a.applicant.index() != b.applicant.index()) return false;
        if (const auto* ia = std::get_if<IdListSelector>(&a.applicant))
            return ia->ids == std::get<IdListSelector>(b.applicant).ids;
        return std::get<AuthorSelector>(a.applicant).key ==
               std::get<AuthorSelector>(b.applicant).key;
    };
    return a.corpus_paths == b.corpus_paths && a.format == b.format &&
           a.period == b.period && a.coverage_threshold == b.coverage_threshold &&
           a.min_fields == b.min_fields && a.n_min == b.n_min &&
           a.n_max == b.n_max && a.stopword_path == b.stopword_path &&
           selector_eq() && a.applicant_label == b.applicant_label &&
           a.domain_label == b.domain_label &&
           a.exclusion_path == b.exclusion_path &&
           a.output_dir == b.output_dir && a.n_threads == b.n_threads;
}

}  // namespace biblio

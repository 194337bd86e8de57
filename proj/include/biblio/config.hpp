#ifndef BIBLIO_CONFIG_HPP
#define BIBLIO_CONFIG_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biblio/corpus_io.hpp"
#include "biblio/pipeline.hpp"

namespace biblio {

class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& key, const std::string& detail = "")
        : std::runtime_error("config error: " + key +
                             (detail.empty() ? "" : " (" + detail + ")")),
          key_(key) {}
    const std::string& key() const { return key_; }

  private:
    std::string key_;
};

struct RunConfig {
    std::vector<std::string> corpus_paths;
    CorpusFormat format = CorpusFormat::kJsonl;
    std::optional<std::pair<int, int>> period;
    double coverage_threshold = 0.5;
    int min_fields = 3;
    std::size_t n_min = 5;
    std::size_t n_max = 7;
    std::optional<std::string> stopword_path;
    ApplicantSelector applicant = IdListSelector{};
    std::string applicant_label = "A_1";
    std::string domain_label;
    std::optional<std::string> exclusion_path;
    std::string output_dir = ".";
    unsigned n_threads = 1;
};

// "key = value" text format; see README for the key list.
RunConfig load_config(const std::string& content);
std::string dump_config(const RunConfig& config);

bool operator==(const RunConfig& a, const RunConfig& b);

}  // namespace biblio

#endif  // BIBLIO_CONFIG_HPP

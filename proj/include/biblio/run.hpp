#ifndef BIBLIO_RUN_HPP
#define BIBLIO_RUN_HPP

#include <string>
#include <vector>

#include "biblio/config.hpp"

namespace biblio {

struct RunArtifacts {
    std::vector<std::string> paths;  // files written, relative to output_dir
};

// Loads corpora, runs phases 1-3, writes profile dump, approximation id
// list, key-figures CSV, suggestion report (when exclusion data is
// present) and a run manifest. Throws PipelineError / CorpusError on
// failure; ConfigError for configuration problems.
RunArtifacts run_pipeline(const RunConfig& config);

// FNV-1a 64-bit, used for the manifest's corpus checksum.
std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace biblio

#endif  // BIBLIO_RUN_HPP

#ifndef BIBLIO_SYNTH_HPP
#define BIBLIO_SYNTH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "biblio/publication.hpp"

namespace biblio {

// splitmix64: portable 64-bit generator, byte-stable across platforms.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() { return (next() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi] inclusive.
    std::uint64_t next_in(std::uint64_t lo, std::uint64_t hi);

  private:
    std::uint64_t state_;
};

// Inverse-CDF sampler over {1..support_max} with P(k) proportional to
// k^(-exponent). CDF built once, draws are a binary search.
class PowerLawSampler {
  public:
    PowerLawSampler(double exponent, std::uint64_t support_max);

    std::uint64_t sample(SplitMix64& rng) const;

  private:
    std::vector<double> cdf_;
};

std::uint64_t sample_power_law(SplitMix64& rng, double exponent,
                               std::uint64_t support_max);

struct SynthParams {
    std::size_t n_publications = 100;
    std::size_t n_authors = 50;
    double lotka_exponent = 2.0;
    double zipf_exponent = 1.0;
    std::size_t vocabulary_size = 200;
    std::size_t n_sources = 20;
    double source_skew = 1.0;
    std::pair<std::size_t, std::size_t> refs_per_pub = {0, 5};
    std::pair<std::size_t, std::size_t> authors_per_pub = {1, 4};
    std::pair<int, int> year_range = {2014, 2017};
    std::size_t title_words_per_pub = 6;
    std::uint64_t rng_seed = 1;
};

class InfeasibleParamsError : public std::runtime_error {
  public:
    explicit InfeasibleParamsError(const std::string& what)
        : std::runtime_error(what) {}
};

void validate_params(const SynthParams& params);

// Deterministic synthetic corpus: Lotka-distributed author productivity,
// Zipf title words, skewed sources, references to earlier publications.
Corpus generate_corpus(const SynthParams& params);

}  // namespace biblio

#endif  // BIBLIO_SYNTH_HPP

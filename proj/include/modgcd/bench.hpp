#ifndef MODGCD_BENCH_HPP
#define MODGCD_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modgcd/gcdalgs.hpp"

namespace modgcd {

struct PolyPair {
    IntPoly f;
    IntPoly g;
};

struct Corpus {
    std::string name;
    std::optional<std::uint64_t> seed;
    std::vector<PolyPair> pairs;
};

/// f = d*f1, g = d*g1 with random d, f1, g1 of the given degrees and
/// coefficients in [-coeff_bound, coeff_bound] (nonzero leading terms).
struct ConstructedSpec {
    std::size_t d_deg = 2;
    std::size_t cofactor_deg = 3;
    long coeff_bound = 10;
    std::size_t count = 10;
    std::uint64_t seed = 1;
};

Corpus knuth_corpus();
Corpus constructed_corpus(const ConstructedSpec& spec);

/// "knuth" or "constructed(d_deg, cofactor_deg, coeff_bound, count, seed)".
/// Throws std::invalid_argument for anything else.
Corpus make_corpus(std::string_view spec);

enum class BenchAlgorithm { big_prime, aux, multi_aux, swell };

std::string_view to_string(BenchAlgorithm a);
std::optional<BenchAlgorithm> bench_algorithm_from_string(std::string_view name);

struct BenchOptions {
    std::vector<BenchAlgorithm> algorithms{BenchAlgorithm::big_prime, BenchAlgorithm::aux,
                                           BenchAlgorithm::multi_aux, BenchAlgorithm::swell};
    std::optional<Int> aux_prime;  ///< forwarded to gcd_aux_prime
    bool timing = false;
};

struct BenchRow {
    std::size_t pair_index = 0;
    BenchAlgorithm algorithm = BenchAlgorithm::big_prime;
    Degree result_degree;
    std::size_t aux_primes = 0;
    std::size_t main_primes = 0;
    std::optional<Int> largest_prime;
    /// Modular rows: bit length of the largest modulus. Swell rows: largest
    /// numerator/denominator bit length in the rational remainder sequence.
    std::size_t max_bits = 0;
    bool agrees_with_oracle = true;
    std::optional<double> micros;
};

struct BenchSummary {
    BenchAlgorithm algorithm;
    std::size_t median_aux_primes;
    std::size_t median_main_primes;
    std::size_t median_max_bits;
    std::size_t disagreements;
};

struct BenchReport {
    std::string corpus;
    std::optional<std::uint64_t> seed;
    std::vector<BenchRow> rows;  ///< ordered by pair index, then algorithm
    std::vector<BenchSummary> summary;
};

/// Pairs are evaluated concurrently; the report order is deterministic.
BenchReport run_corpus(const Corpus& corpus, const BenchOptions& options = {});

std::string to_markdown(const BenchReport& report);
std::string to_json(const BenchReport& report);

}  // namespace modgcd

#endif  // MODGCD_BENCH_HPP

#ifndef MODGCD_GCDALGS_HPP
#define MODGCD_GCDALGS_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "modgcd/bounds.hpp"
#include "modgcd/polyz.hpp"

namespace modgcd {

enum class PrimeRole { auxiliary, main };

enum class AttemptAction {
    accepted,              ///< image lifted to the returned gcd
    rejected_by_d,         ///< deg e_p >= D, reconstruction skipped
    rejected_by_division,  ///< lifted candidate failed to divide an input
    rejected_by_degree,    ///< deg e_p differs from the degree found by auxiliary primes
    coprime_witness,       ///< modular gcd of degree 0 at an auxiliary prime
    degree_estimate,       ///< auxiliary prime that only contributed a degree
    skipped_collapse,      ///< an input vanished mod the prime; not counted
};

std::string_view to_string(PrimeRole role);
std::string_view to_string(AttemptAction action);

struct PrimeAttempt {
    Int prime;
    PrimeRole role;
    Degree e_degree;
    AttemptAction action;

    friend bool operator==(const PrimeAttempt&, const PrimeAttempt&) = default;
};

/// Audit record of one algorithm run. Primes within a role strictly increase
/// and at most one attempt is accepted.
struct GcdTrace {
    std::vector<PrimeAttempt> attempts;
    std::vector<std::size_t> d_cutoff_history;
    std::optional<BoundReport> bounds_used;  ///< empty when an input is constant
    std::size_t total_main_primes = 0;

    std::size_t count(AttemptAction action) const;
    std::size_t count(PrimeRole role) const;
    std::optional<Int> largest_prime() const;
    std::optional<Int> first_main_prime() const;

    friend bool operator==(const GcdTrace&, const GcdTrace&) = default;
};

struct GcdResult {
    IntPoly gcd;
    GcdTrace trace;
};

struct CoprimeResult {
    bool coprime = false;
    Int content_gcd;  ///< gcd of the input contents; != 1 means decided without primes
    GcdTrace trace;
};

struct SwellStep {
    std::size_t step;
    Degree degree;
    std::size_t max_bits;

    friend bool operator==(const SwellStep&, const SwellStep&) = default;
};

struct SwellProfile {
    std::vector<SwellStep> steps;

    std::size_t max_bits() const;
};

// All gcd routines below return the gcd with positive leading coefficient and
// throw std::domain_error when an input is the zero polynomial. If an input
// is a nonzero constant they return the gcd of the contents without doing any
// modular work.

/// Big prime modular gcd with the degree cutoff D: main primes p > 2*N_{f,g},
/// candidates verified by exact division.
GcdResult gcd_big_prime(const IntPoly& f, const IntPoly& g);

/// Coprimality via at most k+1 small primes not dividing w.
CoprimeResult coprime_detect(const IntPoly& f, const IntPoly& g);

/// One auxiliary prime q (default: the smallest prime not dividing w) gives
/// s = deg e_q, and main primes then only need p > 2*M_{q,f,g}.
/// An explicit aux_prime must be a prime not dividing w.
GcdResult gcd_aux_prime(const IntPoly& f, const IntPoly& g,
                        const std::optional<Int>& aux_prime = std::nullopt);

/// Up to k+1 auxiliary primes pin down s(f,g) = deg gcd; a single main prime
/// p > 2*M_{f,g} with deg e_p = s(f,g) then yields the gcd.
GcdResult gcd_multi_aux(const IntPoly& f, const IntPoly& g);

/// Primitive polynomial remainder sequence over Z[x]. Shares no code path
/// with the modular algorithms.
IntPoly gcd_oracle(const IntPoly& f, const IntPoly& g);

/// Naive Euclid over Q[x], recording every remainder's degree and the largest
/// numerator/denominator bit length. Requires deg f >= deg g.
SwellProfile swell_profile(const IntPoly& f, const IntPoly& g);

}  // namespace modgcd

#endif  // MODGCD_GCDALGS_HPP

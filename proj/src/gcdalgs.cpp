#include "modgcd/gcdalgs.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "modgcd/modpoly.hpp"
#include "modgcd/reconstruct.hpp"

namespace modgcd {

std::string_view to_string(PrimeRole role) {
    switch (role) {
    case PrimeRole::auxiliary: return "auxiliary";
    case PrimeRole::main: return "main";
    }
    return "?";
}

std::string_view to_string(AttemptAction action) {
    switch (action) {
    case AttemptAction::accepted: return "accepted";
    case AttemptAction::rejected_by_d: return "rejected-by-D";
    case AttemptAction::rejected_by_division: return "rejected-by-division";
    case AttemptAction::rejected_by_degree: return "rejected-by-degree";
    case AttemptAction::coprime_witness: return "coprime-witness";
    case AttemptAction::degree_estimate: return "degree-estimate";
    case AttemptAction::skipped_collapse: return "skipped-collapse";
    }
    return "?";
}

std::size_t GcdTrace::count(AttemptAction action) const {
    return std::count_if(attempts.begin(), attempts.end(),
                         [&](const PrimeAttempt& a) { return a.action == action; });
}

std::size_t GcdTrace::count(PrimeRole role) const {
    return std::count_if(attempts.begin(), attempts.end(),
                         [&](const PrimeAttempt& a) { return a.role == role; });
}

std::optional<Int> GcdTrace::largest_prime() const {
    std::optional<Int> best;
    for (const auto& a : attempts)
        if (!best || a.prime > *best)
            best = a.prime;
    return best;
}

std::optional<Int> GcdTrace::first_main_prime() const {
    for (const auto& a : attempts)
        if (a.role == PrimeRole::main)
            return a.prime;
    return std::nullopt;
}

std::size_t SwellProfile::max_bits() const {
    std::size_t m = 0;
    for (const auto& s : steps)
        m = std::max(m, s.max_bits);
    return m;
}

namespace {

// Inputs split into r = gcd of contents and primitive parts with positive
// leading coefficients.
struct Primitive {
    Int r;
    IntPoly f;
    IntPoly g;
    Int w;  // gcd(lc f, lc g)

    bool has_constant() const { return *f.degree() == 0 || *g.degree() == 0; }
    std::size_t min_degree() const { return std::min(*f.degree(), *g.degree()); }
};

Primitive split(const IntPoly& f, const IntPoly& g, const char* who) {
    if (f.is_zero() || g.is_zero())
        throw std::domain_error(std::string(who) + ": zero polynomial");
    Primitive p;
    p.r = int_gcd(content(f), content(g));
    p.f = primitive_part(f);
    p.g = primitive_part(g);
    p.w = int_gcd(leading_coeff(p.f), leading_coeff(p.g));
    return p;
}

struct Image {
    ModPoly e;
    bool collapsed;
};

Image modular_gcd(const Primitive& in, const Int& p) {
    ModPoly fp = reduce_poly(in.f, p);
    ModPoly gp = reduce_poly(in.g, p);
    if (fp.is_zero() || gp.is_zero())
        return {ModPoly(p), true};
    return {euclid_gcd_mod(fp, gp), false};
}

// pp of the symmetric lift of t*e with lc(t*e) = w; e is monic so t = w.
IntPoly lift_fold(const ModPoly& e, const Int& w) {
    return primitive_part(reconstruct_poly(scale_mod(e, w)));
}

std::size_t retry_cap(const GcdTrace& trace) { return 10 * (trace.bounds_used->k + 1); }

// Main-prime loop shared by the big prime and the single auxiliary prime
// variants: primes above `threshold`, cutoff D, verification by division.
IntPoly main_prime_loop(const Primitive& in, const Int& threshold, GcdTrace& trace) {
    std::size_t cutoff = in.min_degree() + 1;
    trace.d_cutoff_history.push_back(cutoff);
    const std::size_t cap = retry_cap(trace);
    Int p = threshold;
    for (;;) {
        p = next_prime(p);
        if (++trace.total_main_primes > cap)
            throw std::logic_error("main prime retry cap exceeded");
        const Image img = modular_gcd(in, p);
        if (img.collapsed) {
            trace.attempts.push_back({p, PrimeRole::main, std::nullopt, AttemptAction::skipped_collapse});
            continue;
        }
        const std::size_t deg = *img.e.degree();
        if (cutoff <= deg) {
            trace.attempts.push_back({p, PrimeRole::main, deg, AttemptAction::rejected_by_d});
            continue;
        }
        IntPoly d = lift_fold(img.e, in.w);
        if (divides(d, in.f) && divides(d, in.g)) {
            trace.attempts.push_back({p, PrimeRole::main, deg, AttemptAction::accepted});
            return d;
        }
        trace.attempts.push_back({p, PrimeRole::main, deg, AttemptAction::rejected_by_division});
        cutoff = deg;
        trace.d_cutoff_history.push_back(cutoff);
    }
}

}  // namespace

GcdResult gcd_big_prime(const IntPoly& f, const IntPoly& g) {
    const Primitive in = split(f, g, "gcd_big_prime");
    GcdResult out;
    if (in.has_constant()) {
        out.gcd = IntPoly::constant(in.r);
        return out;
    }
    out.trace.bounds_used = full_report(in.f, in.g);
    const IntPoly d = main_prime_loop(in, 2 * out.trace.bounds_used->nfg, out.trace);
    out.gcd = in.r * d;
    return out;
}

CoprimeResult coprime_detect(const IntPoly& f, const IntPoly& g) {
    const Primitive in = split(f, g, "coprime_detect");
    CoprimeResult out;
    out.content_gcd = in.r;
    if (in.r != 1) {
        out.coprime = false;
        return out;
    }
    if (in.has_constant()) {
        out.coprime = true;
        return out;
    }
    out.trace.bounds_used = full_report(in.f, in.g);
    const std::size_t budget = out.trace.bounds_used->k + 1;
    Int q = 1;
    for (std::size_t used = 0; used < budget;) {
        q = next_prime_coprime(q, in.w);
        const Image img = modular_gcd(in, q);
        if (img.collapsed) {
            out.trace.attempts.push_back({q, PrimeRole::auxiliary, std::nullopt, AttemptAction::skipped_collapse});
            continue;
        }
        ++used;
        const std::size_t deg = *img.e.degree();
        if (deg == 0) {
            out.trace.attempts.push_back({q, PrimeRole::auxiliary, deg, AttemptAction::coprime_witness});
            out.coprime = true;
            return out;
        }
        out.trace.attempts.push_back({q, PrimeRole::auxiliary, deg, AttemptAction::degree_estimate});
    }
    out.coprime = false;
    return out;
}

GcdResult gcd_aux_prime(const IntPoly& f, const IntPoly& g, const std::optional<Int>& aux_prime) {
    const Primitive in = split(f, g, "gcd_aux_prime");
    GcdResult out;
    if (in.has_constant()) {
        out.gcd = IntPoly::constant(in.r);
        return out;
    }
    if (aux_prime && (!is_prime(*aux_prime) ||
                      mpz_divisible_p(in.w.get_mpz_t(), aux_prime->get_mpz_t())))
        throw std::domain_error("gcd_aux_prime: auxiliary prime must be a prime not dividing gcd(lc f, lc g)");

    out.trace.bounds_used = full_report(in.f, in.g);
    Int q = aux_prime ? *aux_prime : next_prime_coprime(1, in.w);
    Image img = modular_gcd(in, q);
    while (img.collapsed) {
        if (aux_prime)
            throw std::domain_error("gcd_aux_prime: an input vanishes modulo the auxiliary prime");
        out.trace.attempts.push_back({q, PrimeRole::auxiliary, std::nullopt, AttemptAction::skipped_collapse});
        q = next_prime_coprime(q, in.w);
        img = modular_gcd(in, q);
    }
    const std::size_t s = *img.e.degree();
    out.trace.attempts.push_back({q, PrimeRole::auxiliary, s, AttemptAction::degree_estimate});

    BoundReport& bounds = *out.trace.bounds_used;
    bounds.s_deg = s;
    bounds.m_bound = bound_aux(in.f, in.g, s);
    const IntPoly d = main_prime_loop(in, 2 * *bounds.m_bound, out.trace);
    out.gcd = in.r * d;
    return out;
}

GcdResult gcd_multi_aux(const IntPoly& f, const IntPoly& g) {
    const Primitive in = split(f, g, "gcd_multi_aux");
    GcdResult out;
    if (in.has_constant()) {
        out.gcd = IntPoly::constant(in.r);
        return out;
    }
    out.trace.bounds_used = full_report(in.f, in.g);
    BoundReport& bounds = *out.trace.bounds_used;

    std::size_t s = in.min_degree();
    const std::size_t budget = bounds.k + 1;
    Int q = 1;
    for (std::size_t used = 0; used < budget;) {
        q = next_prime_coprime(q, in.w);
        const Image img = modular_gcd(in, q);
        if (img.collapsed) {
            out.trace.attempts.push_back({q, PrimeRole::auxiliary, std::nullopt, AttemptAction::skipped_collapse});
            continue;
        }
        ++used;
        const std::size_t deg = *img.e.degree();
        if (deg <= s)
            s = deg;
        if (deg == 0) {
            out.trace.attempts.push_back({q, PrimeRole::auxiliary, deg, AttemptAction::coprime_witness});
            bounds.s_deg = 0;
            out.gcd = IntPoly::constant(in.r);
            return out;
        }
        out.trace.attempts.push_back({q, PrimeRole::auxiliary, deg, AttemptAction::degree_estimate});
    }

    bounds.s_deg = s;
    bounds.m_bound = bound_aux(in.f, in.g, s);
    const std::size_t cap = retry_cap(out.trace);
    Int p = 2 * *bounds.m_bound;
    for (;;) {
        p = next_prime(p);
        if (++out.trace.total_main_primes > cap)
            throw std::logic_error("main prime retry cap exceeded");
        const Image img = modular_gcd(in, p);
        if (img.collapsed) {
            out.trace.attempts.push_back({p, PrimeRole::main, std::nullopt, AttemptAction::skipped_collapse});
            continue;
        }
        const std::size_t deg = *img.e.degree();
        if (deg != s) {
            out.trace.attempts.push_back({p, PrimeRole::main, deg, AttemptAction::rejected_by_degree});
            continue;
        }
        IntPoly d = lift_fold(img.e, in.w);
        if (!divides(d, in.f) || !divides(d, in.g))
            throw std::logic_error("gcd_multi_aux: lifted image of the exact degree does not divide the inputs");
        out.trace.attempts.push_back({p, PrimeRole::main, deg, AttemptAction::accepted});
        out.gcd = in.r * d;
        return out;
    }
}

IntPoly gcd_oracle(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::domain_error("gcd_oracle: zero polynomial");
    const Int r = int_gcd(content(f), content(g));
    IntPoly a = primitive_part(f);
    IntPoly b = primitive_part(g);
    if (*a.degree() < *b.degree())
        std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly rem = pseudo_remainder(a, b);
        a = std::move(b);
        b = rem.is_zero() ? std::move(rem) : primitive_part(rem);
    }
    return r * primitive_part(a);
}

namespace {

using RatPoly = std::vector<mpq_class>;

void trim(RatPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0)
        p.pop_back();
}

RatPoly rational_remainder(RatPoly a, const RatPoly& b) {
    const std::size_t m = b.size() - 1;
    while (a.size() > m) {
        const mpq_class q = a.back() / b.back();
        const std::size_t shift = a.size() - 1 - m;
        for (std::size_t j = 0; j <= m; ++j)
            a[shift + j] -= q * b[j];
        a.pop_back();
        trim(a);
    }
    trim(a);
    return a;
}

std::size_t rat_bits(const RatPoly& p) {
    std::size_t m = 0;
    for (const auto& c : p)
        m = std::max({m, bit_length(c.get_num()), bit_length(c.get_den())});
    return m;
}

}  // namespace

SwellProfile swell_profile(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::domain_error("swell_profile: zero polynomial");
    if (*f.degree() < *g.degree())
        throw std::domain_error("swell_profile: requires deg f >= deg g");
    RatPoly a(f.coeffs().begin(), f.coeffs().end());
    RatPoly b(g.coeffs().begin(), g.coeffs().end());
    SwellProfile profile;
    for (std::size_t step = 1;; ++step) {
        RatPoly rem = rational_remainder(a, b);
        const Degree deg = rem.empty() ? Degree{} : Degree{rem.size() - 1};
        profile.steps.push_back({step, deg, rat_bits(rem)});
        if (!deg || *deg == 0)
            return profile;
        a = std::move(b);
        b = std::move(rem);
    }
}

}  // namespace modgcd

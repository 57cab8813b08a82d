#include "modgcd/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <random>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "modgcd/parser.hpp"

namespace modgcd {

Corpus knuth_corpus() {
    return {"knuth", std::nullopt,
            {{parse_poly("x^8+x^6-3x^4-3x^3+8x^2+2x-5"), parse_poly("3x^6+5x^4-4x^2-9x+21")}}};
}

namespace {

IntPoly random_poly(std::mt19937_64& rng, std::size_t deg, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    std::vector<Int> c(deg + 1);
    for (auto& x : c)
        x = dist(rng);
    while (sgn(c.back()) == 0)
        c.back() = dist(rng);
    return IntPoly(std::move(c));
}

}  // namespace

Corpus constructed_corpus(const ConstructedSpec& spec) {
    if (spec.coeff_bound < 1)
        throw std::invalid_argument("constructed corpus: coeff_bound must be positive");
    std::mt19937_64 rng(spec.seed);
    Corpus c;
    std::ostringstream name;
    name << "constructed(" << spec.d_deg << "," << spec.cofactor_deg << "," << spec.coeff_bound
         << "," << spec.count << "," << spec.seed << ")";
    c.name = name.str();
    c.seed = spec.seed;
    for (std::size_t i = 0; i < spec.count; ++i) {
        const IntPoly d = random_poly(rng, spec.d_deg, spec.coeff_bound);
        const IntPoly f1 = random_poly(rng, spec.cofactor_deg, spec.coeff_bound);
        const IntPoly g1 = random_poly(rng, spec.cofactor_deg, spec.coeff_bound);
        c.pairs.push_back({d * f1, d * g1});
    }
    return c;
}

Corpus make_corpus(std::string_view spec) {
    const std::string s(spec);
    if (s == "knuth")
        return knuth_corpus();
    static const std::regex constructed(
        R"(\s*constructed\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
    std::smatch m;
    if (std::regex_match(s, m, constructed)) {
        ConstructedSpec cs;
        cs.d_deg = std::stoul(m[1]);
        cs.cofactor_deg = std::stoul(m[2]);
        cs.coeff_bound = std::stol(m[3]);
        cs.count = std::stoul(m[4]);
        cs.seed = std::stoull(m[5]);
        return constructed_corpus(cs);
    }
    throw std::invalid_argument("unknown corpus '" + s + "'");
}

std::string_view to_string(BenchAlgorithm a) {
    switch (a) {
    case BenchAlgorithm::big_prime: return "big-prime";
    case BenchAlgorithm::aux: return "aux";
    case BenchAlgorithm::multi_aux: return "multi-aux";
    case BenchAlgorithm::swell: return "swell";
    }
    return "?";
}

std::optional<BenchAlgorithm> bench_algorithm_from_string(std::string_view name) {
    for (auto a : {BenchAlgorithm::big_prime, BenchAlgorithm::aux, BenchAlgorithm::multi_aux,
                   BenchAlgorithm::swell})
        if (to_string(a) == name)
            return a;
    return std::nullopt;
}

namespace {

BenchRow run_one(const PolyPair& pair, std::size_t index, BenchAlgorithm algorithm,
                 const BenchOptions& options, const IntPoly& expected) {
    BenchRow row;
    row.pair_index = index;
    row.algorithm = algorithm;
    const auto start = std::chrono::steady_clock::now();
    if (algorithm == BenchAlgorithm::swell) {
        const bool swap = *pair.f.degree() < *pair.g.degree();
        const IntPoly& a = swap ? pair.g : pair.f;
        const IntPoly& b = swap ? pair.f : pair.g;
        const SwellProfile profile = swell_profile(a, b);
        // Degree of the last nonzero remainder (or of b if it divides a).
        Degree last = b.degree();
        for (const auto& s : profile.steps)
            if (s.degree)
                last = s.degree;
        row.result_degree = last;
        row.max_bits = profile.max_bits();
        row.agrees_with_oracle = last == expected.degree();
    } else {
        GcdResult r = algorithm == BenchAlgorithm::big_prime ? gcd_big_prime(pair.f, pair.g)
                      : algorithm == BenchAlgorithm::aux     ? gcd_aux_prime(pair.f, pair.g, options.aux_prime)
                                                             : gcd_multi_aux(pair.f, pair.g);
        row.result_degree = r.gcd.degree();
        row.aux_primes = r.trace.count(PrimeRole::auxiliary);
        row.main_primes = r.trace.count(PrimeRole::main);
        row.largest_prime = r.trace.largest_prime();
        row.max_bits = row.largest_prime ? bit_length(*row.largest_prime) : 0;
        row.agrees_with_oracle = r.gcd == expected;
    }
    if (options.timing)
        row.micros = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start)
                         .count();
    return row;
}

std::vector<BenchRow> run_pair(const PolyPair& pair, std::size_t index, const BenchOptions& options) {
    const IntPoly expected = gcd_oracle(pair.f, pair.g);
    std::vector<BenchRow> rows;
    for (auto a : options.algorithms)
        rows.push_back(run_one(pair, index, a, options, expected));
    return rows;
}

std::size_t lower_median(std::vector<std::size_t> v) {
    if (v.empty())
        return 0;
    std::sort(v.begin(), v.end());
    return v[(v.size() - 1) / 2];
}

}  // namespace

BenchReport run_corpus(const Corpus& corpus, const BenchOptions& options) {
    BenchReport report;
    report.corpus = corpus.name;
    report.seed = corpus.seed;
    const std::size_t n = corpus.pairs.size();
    std::vector<std::vector<BenchRow>> per_pair(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++)
            per_pair[i] = run_pair(corpus.pairs[i], i, options);
    };
    const std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
    std::vector<std::future<void>> pool;
    for (std::size_t t = 0; t < std::min(threads, n); ++t)
        pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool)
        f.get();
    for (auto& rows : per_pair)
        for (auto& row : rows)
            report.rows.push_back(std::move(row));

    for (auto a : options.algorithms) {
        std::vector<std::size_t> aux, main, bits;
        std::size_t bad = 0;
        for (const auto& r : report.rows) {
            if (r.algorithm != a)
                continue;
            aux.push_back(r.aux_primes);
            main.push_back(r.main_primes);
            bits.push_back(r.max_bits);
            bad += r.agrees_with_oracle ? 0 : 1;
        }
        report.summary.push_back({a, lower_median(aux), lower_median(main), lower_median(bits), bad});
    }
    return report;
}

namespace {

std::string degree_str(const Degree& d) { return d ? std::to_string(*d) : std::string("-"); }

}  // namespace

std::string to_markdown(const BenchReport& report) {
    std::ostringstream out;
    out << "# corpus: " << report.corpus << "\n";
    if (report.seed)
        out << "seed: " << *report.seed << "\n";
    const bool timing = std::any_of(report.rows.begin(), report.rows.end(),
                                    [](const BenchRow& r) { return r.micros.has_value(); });
    out << "\n| pair | algorithm | gcd degree | aux primes | main primes | largest prime | max bits | agrees |"
        << (timing ? " time (us) |" : "") << "\n";
    out << "|---|---|---|---|---|---|---|---|" << (timing ? "---|" : "") << "\n";
    for (const auto& r : report.rows) {
        out << "| " << r.pair_index << " | " << to_string(r.algorithm) << " | " << degree_str(r.result_degree)
            << " | " << r.aux_primes << " | " << r.main_primes << " | "
            << (r.largest_prime ? r.largest_prime->get_str() : std::string("-")) << " | " << r.max_bits
            << " | " << (r.agrees_with_oracle ? "yes" : "NO") << " |";
        if (timing)
            out << " " << static_cast<long long>(r.micros.value_or(0.0)) << " |";
        out << "\n";
    }
    out << "\n| algorithm | median aux primes | median main primes | median max bits | disagreements |\n"
        << "|---|---|---|---|---|\n";
    for (const auto& s : report.summary)
        out << "| " << to_string(s.algorithm) << " | " << s.median_aux_primes << " | " << s.median_main_primes
            << " | " << s.median_max_bits << " | " << s.disagreements << " |\n";
    return out.str();
}

std::string to_json(const BenchReport& report) {
    using nlohmann::json;
    json j;
    j["corpus"] = report.corpus;
    j["seed"] = report.seed ? json(*report.seed) : json(nullptr);
    j["rows"] = json::array();
    for (const auto& r : report.rows) {
        json row{{"pair", r.pair_index},
                 {"algorithm", std::string(to_string(r.algorithm))},
                 {"result_degree", r.result_degree ? json(*r.result_degree) : json(nullptr)},
                 {"aux_primes", r.aux_primes},
                 {"main_primes", r.main_primes},
                 {"largest_prime", r.largest_prime ? json(r.largest_prime->get_str()) : json(nullptr)},
                 {"max_bits", r.max_bits},
                 {"agrees_with_oracle", r.agrees_with_oracle}};
        if (r.micros)
            row["micros"] = *r.micros;
        j["rows"].push_back(std::move(row));
    }
    j["summary"] = json::array();
    for (const auto& s : report.summary)
        j["summary"].push_back({{"algorithm", std::string(to_string(s.algorithm))},
                                {"median_aux_primes", s.median_aux_primes},
                                {"median_main_primes", s.median_main_primes},
                                {"median_max_bits", s.median_max_bits},
                                {"disagreements", s.disagreements}});
    return j.dump(2) + "\n";
}

}  // namespace modgcd

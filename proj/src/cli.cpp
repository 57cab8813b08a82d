#include "modgcd/cli.hpp"

#include <cctype>
#include <iomanip>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "modgcd/bench.hpp"
#include "modgcd/bounds.hpp"
#include "modgcd/gcdalgs.hpp"
#include "modgcd/modpoly.hpp"
#include "modgcd/parser.hpp"
#include "modgcd/sylvester.hpp"

namespace modgcd {

namespace {

using nlohmann::json;

json degree_json(const Degree& d) { return d ? json(*d) : json(nullptr); }

json bounds_json(const std::optional<BoundReport>& b) {
    if (!b)
        return nullptr;
    return {{"nf", b->nf.get_str()},
            {"ng", b->ng.get_str()},
            {"nfg", b->nfg.get_str()},
            {"afg", b->afg.get_str()},
            {"k", b->k},
            {"m", b->m_bound ? json(b->m_bound->get_str()) : json(nullptr)}};
}

json trace_json(const GcdTrace& t) {
    json arr = json::array();
    for (const auto& a : t.attempts)
        arr.push_back({{"prime", a.prime.get_str()},
                       {"role", std::string(to_string(a.role))},
                       {"e_degree", degree_json(a.e_degree)},
                       {"action", std::string(to_string(a.action))}});
    return arr;
}

void print_trace(std::ostream& out, const GcdTrace& t) {
    for (const auto& a : t.attempts)
        out << "prime=" << a.prime.get_str() << " role=" << to_string(a.role)
            << " e_degree=" << (a.e_degree ? std::to_string(*a.e_degree) : std::string("none"))
            << " action=" << to_string(a.action) << "\n";
}

class PolyReader {
public:
    explicit PolyReader(std::istream& in) : in_(in) {}

    IntPoly operator()(const std::string& arg) {
        if (arg != "-")
            return parse_poly(arg);
        std::string line;
        if (!std::getline(in_, line))
            throw ParseError("no polynomial on standard input", 0);
        return parse_poly(line);
    }

private:
    std::istream& in_;
};

struct Options {
    std::string f_text;
    std::string g_text;
    std::string algorithm = "multi-aux";
    bool trace = false;
    bool json_out = false;
    std::string aux_prime;
    std::string corpus;
    std::vector<std::string> bench_algorithms;
    bool timing = false;
};

std::optional<Int> parse_prime_arg(const std::string& text) {
    if (text.empty())
        return std::nullopt;
    Int q;
    if (q.set_str(text, 10) != 0)
        throw ParseError("'" + text + "' is not an integer", 0);
    if (!is_prime(q))
        throw std::domain_error(text + " is not a prime");
    return q;
}

int cmd_gcd(const Options& o, PolyReader& read, std::ostream& out) {
    const IntPoly f = read(o.f_text);
    const IntPoly g = read(o.g_text);
    GcdResult r;
    if (o.algorithm == "big-prime")
        r = gcd_big_prime(f, g);
    else if (o.algorithm == "aux")
        r = gcd_aux_prime(f, g, parse_prime_arg(o.aux_prime));
    else if (o.algorithm == "multi-aux")
        r = gcd_multi_aux(f, g);
    else
        r.gcd = gcd_oracle(f, g);

    if (o.json_out) {
        json j{{"result", format_poly(r.gcd)},
               {"algorithm", o.algorithm},
               {"trace", trace_json(r.trace)},
               {"bounds", bounds_json(r.trace.bounds_used)}};
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << format_poly(r.gcd) << "\n";
    if (o.trace)
        print_trace(out, r.trace);
    return kExitOk;
}

int cmd_coprime(const Options& o, PolyReader& read, std::ostream& out) {
    const IntPoly f = read(o.f_text);
    const IntPoly g = read(o.g_text);
    const CoprimeResult r = coprime_detect(f, g);
    std::optional<Int> witness;
    for (const auto& a : r.trace.attempts)
        if (a.action == AttemptAction::coprime_witness)
            witness = a.prime;
    const std::size_t tried = r.trace.attempts.size() - r.trace.count(AttemptAction::skipped_collapse);

    if (o.json_out) {
        json j{{"result", r.coprime ? "coprime" : "not coprime"},
               {"algorithm", "coprime"},
               {"trace", trace_json(r.trace)},
               {"bounds", bounds_json(r.trace.bounds_used)},
               {"content_gcd", r.content_gcd.get_str()},
               {"witness", witness ? json(witness->get_str()) : json(nullptr)},
               {"primes_tried", tried}};
        out << j.dump(2) << "\n";
    } else {
        out << (r.coprime ? "coprime" : "not coprime") << "\n";
        if (witness)
            out << "witness prime: " << witness->get_str() << "\n";
        else if (r.content_gcd != 1)
            out << "content gcd: " << r.content_gcd.get_str() << "\n";
        else if (!r.coprime)
            out << "exhausted " << tried << " primes\n";
    }
    return r.coprime ? kExitOk : kExitNotCoprime;
}

int cmd_bounds(const Options& o, PolyReader& read, std::ostream& out) {
    const IntPoly f = read(o.f_text);
    const IntPoly g = read(o.g_text);
    BoundReport b = full_report(f, g);
    if (const auto q = parse_prime_arg(o.aux_prime)) {
        const ModPoly fq = reduce_poly(f, *q);
        const ModPoly gq = reduce_poly(g, *q);
        if (fq.is_zero() && gq.is_zero())
            throw std::domain_error("both polynomials vanish modulo " + q->get_str());
        b.s_deg = *euclid_gcd_mod(fq, gq).degree();
        b.m_bound = bound_aux(f, g, *b.s_deg);
    }
    if (o.json_out) {
        json j{{"bounds", bounds_json(b)}};
        j["bounds"]["s"] = b.s_deg ? json(*b.s_deg) : json(nullptr);
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << "N_f   = " << b.nf.get_str() << "\n"
        << "N_g   = " << b.ng.get_str() << "\n"
        << "N_fg  = " << b.nfg.get_str() << "\n"
        << "A_fg  = " << b.afg.get_str() << "\n"
        << "k     = " << b.k << "\n";
    if (b.s_deg)
        out << "s     = " << *b.s_deg << "\n"
            << "M     = " << b.m_bound->get_str() << "\n";
    return kExitOk;
}

int cmd_resultant(const Options& o, PolyReader& read, std::ostream& out) {
    const IntPoly f = read(o.f_text);
    const IntPoly g = read(o.g_text);
    out << resultant(f, g).get_str() << "\n";
    return kExitOk;
}

int cmd_swell(const Options& o, PolyReader& read, std::ostream& out) {
    IntPoly f = read(o.f_text);
    IntPoly g = read(o.g_text);
    if (!f.is_zero() && !g.is_zero() && *f.degree() < *g.degree())
        std::swap(f, g);
    const SwellProfile p = swell_profile(f, g);
    out << std::setw(4) << "step" << std::setw(8) << "degree" << std::setw(10) << "max_bits" << "\n";
    for (const auto& s : p.steps)
        out << std::setw(4) << s.step << std::setw(8)
            << (s.degree ? std::to_string(*s.degree) : std::string("zero")) << std::setw(10) << s.max_bits
            << "\n";
    return kExitOk;
}

int cmd_bench(const Options& o, std::ostream& out) {
    const Corpus corpus = make_corpus(o.corpus);
    BenchOptions opts;
    if (!o.bench_algorithms.empty()) {
        opts.algorithms.clear();
        for (const auto& name : o.bench_algorithms) {
            const auto a = bench_algorithm_from_string(name);
            if (!a)
                throw std::invalid_argument("unknown bench algorithm '" + name + "'");
            opts.algorithms.push_back(*a);
        }
    }
    opts.aux_prime = parse_prime_arg(o.aux_prime);
    opts.timing = o.timing;
    const BenchReport report = run_corpus(corpus, opts);
    out << (o.json_out ? to_json(report) : to_markdown(report));
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Modular gcd of integer polynomials", "modgcd"};
    app.require_subcommand(1);
    Options o;

    auto add_pair = [&](CLI::App* sub) {
        sub->add_option("f", o.f_text, "first polynomial ('-' reads stdin)")->required();
        sub->add_option("g", o.g_text, "second polynomial ('-' reads stdin)")->required();
    };

    auto* gcd = app.add_subcommand("gcd", "greatest common divisor");
    add_pair(gcd);
    gcd->add_option("--algorithm", o.algorithm, "big-prime | aux | multi-aux | oracle")
        ->check(CLI::IsMember({"big-prime", "aux", "multi-aux", "oracle"}));
    gcd->add_option("--aux-prime", o.aux_prime, "auxiliary prime for --algorithm aux");
    gcd->add_flag("--trace", o.trace, "print one line per prime attempt");
    gcd->add_flag("--json", o.json_out, "machine-readable output");

    auto* coprime = app.add_subcommand("coprime", "coprimality test with small primes");
    add_pair(coprime);
    coprime->add_flag("--json", o.json_out, "machine-readable output");

    auto* bounds = app.add_subcommand("bounds", "coefficient and resultant bounds");
    add_pair(bounds);
    bounds->add_option("--aux", o.aux_prime, "auxiliary prime q for s(q,f,g) and M_{q,f,g}");
    bounds->add_flag("--json", o.json_out, "machine-readable output");

    auto* res = app.add_subcommand("resultant", "exact Sylvester resultant");
    add_pair(res);

    auto* swell = app.add_subcommand("swell", "coefficient growth of naive rational Euclid");
    add_pair(swell);

    auto* bench = app.add_subcommand("bench", "compare algorithms over a corpus");
    bench->add_option("corpus", o.corpus, "knuth | constructed(d_deg,cofactor_deg,coeff_bound,count,seed)")
        ->required();
    bench->add_option("--algorithm", o.bench_algorithms, "big-prime | aux | multi-aux | swell (repeatable)");
    bench->add_option("--aux-prime", o.aux_prime, "auxiliary prime for the aux algorithm");
    bench->add_flag("--json", o.json_out, "JSON report instead of markdown");
    bench->add_flag("--timing", o.timing, "include wall-clock timings");

    // Polynomials such as "-x^2+1" would otherwise be read as short options;
    // a leading space keeps them positional and is ignored by the parser.
    std::vector<std::string> reversed;
    for (auto it = args.rbegin(); it != args.rend(); ++it) {
        const std::string& a = *it;
        const bool poly_like = a.size() >= 2 && a[0] == '-' &&
                               (std::isdigit(static_cast<unsigned char>(a[1])) || a[1] == 'x' || a[1] == ' ');
        reversed.push_back(poly_like ? " " + a : a);
    }
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    PolyReader reader(in);
    try {
        if (gcd->parsed())
            return cmd_gcd(o, reader, out);
        if (coprime->parsed())
            return cmd_coprime(o, reader, out);
        if (bounds->parsed())
            return cmd_bounds(o, reader, out);
        if (res->parsed())
            return cmd_resultant(o, reader, out);
        if (swell->parsed())
            return cmd_swell(o, reader, out);
        return cmd_bench(o, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitDomain;
    }
}

}  // namespace modgcd

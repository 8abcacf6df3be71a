// doldkit command-line front end.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or
// configuration error.

#include "doldkit/conjecture.hpp"
#include "doldkit/parallel.hpp"
#include "doldkit/pisano.hpp"
#include "doldkit/realize.hpp"
#include "doldkit/report.hpp"
#include "doldkit/sequences.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace doldkit;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    std::string spec_text;
    std::string format_text = "human";
    OutputFormat format = OutputFormat::human;
    unsigned workers = 1;
    std::string cache_path;
    std::uint64_t max_n = 0;
    std::uint64_t exact_bound = 50;
    std::uint64_t exact_cutoff = kDefaultExactIndexCutoff;
    std::string certificate = "exact";
    std::uint64_t max_m = 0;
    std::uint64_t prime = 0;
    unsigned exponent = 1;
    unsigned max_exponent = 3;
    bool verify = false;
    std::uint64_t max_p = 0;
    std::uint64_t prime_bound = 0;
    std::string p_range;
    std::string q_range;
    std::uint64_t sign_bound = 10;
};

int emit(const std::string& text, bool ok)
{
    std::cout << text;
    std::cout.flush();
    return ok ? kExitPass : kExitFail;
}

ScanOptions scan_options(const RunConfig& cfg)
{
    return {cfg.workers, cfg.exact_bound, cfg.exact_cutoff};
}

int cmd_dold(const RunConfig& cfg)
{
    const auto report = dold_scan(SequenceSpec::parse(cfg.spec_text), cfg.max_n, scan_options(cfg));
    if (const DoldRow* f = report.first_failure())
        std::cerr << "first failure: n = " << f->n << ", residue " << f->residue << ", denominator " << f->denominator
                  << "\n";
    return emit(render(report, cfg.format), report.all_pass());
}

int cmd_sign(const RunConfig& cfg)
{
    const SequenceSpec spec = SequenceSpec::parse(cfg.spec_text);
    if (cfg.certificate == "growth") {
        const GrowthListing listing{spec, growth_certificate(spec, cfg.max_n, cfg.exact_cutoff)};
        if (!listing.result.pass)
            std::cerr << "growth hypothesis fails at n = " << *listing.result.first_failure << " ("
                      << listing.result.reason << ")\n";
        return emit(render(listing, cfg.format), listing.result.pass);
    }
    const auto report = sign_check_exact(spec, cfg.max_n, scan_options(cfg));
    if (const SignRow* neg = report.first_negative())
        std::cerr << "first negative value at n = " << neg->n << "\n";
    return emit(render(report, cfg.format), report.all_non_negative());
}

int cmd_orbits(const RunConfig& cfg)
{
    const auto report = orbit_counts(SequenceSpec::parse(cfg.spec_text), cfg.max_n, scan_options(cfg));
    for (const auto& row : report.rows) {
        if (!row.count.is_integer() || row.count.numerator() < 0) {
            std::cerr << "first non-realizable orbit count: O(" << row.n << ") = " << row.count.str() << "\n";
            break;
        }
    }
    return emit(render(report, cfg.format), report.all_realizable());
}

int cmd_pisano(const RunConfig& cfg)
{
    if (cfg.prime != 0) {
        const PrimePowerListing listing{pisano_prime_power(cfg.prime, cfg.exponent, cfg.verify),
                                        wall_exponent_t(cfg.prime, cfg.max_exponent), cfg.max_exponent};
        return emit(render(listing, cfg.format), true);
    }
    PeriodCache cache;
    const bool use_cache = !cfg.cache_path.empty();
    if (use_cache && std::filesystem::exists(cfg.cache_path)) cache = PeriodCache::load(cfg.cache_path);

    std::vector<std::uint64_t> moduli;
    for (std::uint64_t m = 2; m <= cfg.max_m; ++m) moduli.push_back(m);
    PisanoListing listing;
    listing.verified = cfg.verify;
    listing.records = parallel_map<PisanoRecord>(moduli.size(), cfg.workers, [&](std::size_t i) {
        if (auto hit = cache.find(moduli[i])) return *hit;
        return pisano_general(moduli[i]);
    });
    bool ok = true;
    if (cfg.verify) {
        for (const auto& rec : listing.records) {
            const auto brute = pisano_bruteforce(rec.modulus).period;
            if (brute != rec.period) {
                std::cerr << "period mismatch at m = " << rec.modulus << ": " << rec.period << " vs brute force "
                          << brute << "\n";
                ok = false;
            }
        }
    }
    if (use_cache) {
        for (const auto& rec : listing.records) cache.insert(rec);
        cache.save(cfg.cache_path);
    }
    return emit(render(listing, cfg.format), ok);
}

int cmd_wall_verify(const RunConfig& cfg)
{
    const auto result = verify_wall(cfg.max_p, cfg.max_exponent);
    for (const auto& e : result.exceptions)
        std::cerr << "exception: " << e.property << " at p = " << e.prime << " (" << e.detail << ")\n";
    return emit(render(result, cfg.format), result.clean());
}

int cmd_denominators(const RunConfig& cfg)
{
    const SequenceSpec spec = SequenceSpec::parse(cfg.spec_text);
    const WitnessListing listing{spec, cfg.prime_bound, denominator_prime_witnesses(spec, cfg.prime_bound, cfg.workers)};
    if (!listing.witnesses.empty())
        std::cerr << listing.witnesses.size() << " denominator prime(s) found; first p = "
                  << listing.witnesses.front().prime << "\n";
    return emit(render(listing, cfg.format), listing.witnesses.empty());
}

int cmd_conjecture(const RunConfig& cfg)
{
    const auto report = conjecture_scan(IntRange::parse(cfg.p_range), IntRange::parse(cfg.q_range), cfg.max_n,
                                        {cfg.workers, cfg.sign_bound});
    for (const auto& c : report.cells) {
        if (c.status == CellStatus::fail) {
            std::cerr << "first fail cell: P = " << c.P << ", Q = " << c.Q << ", n = " << *c.first_failure << "\n";
            break;
        }
    }
    return emit(render(report, cfg.format), report.fail_count() == 0);
}

int cmd_oracle_golden(const RunConfig& cfg)
{
    if (cfg.max_n > kGoldenEnumerationBound)
        throw std::invalid_argument("--max-n must be at most " + std::to_string(kGoldenEnumerationBound));
    GoldenListing listing;
    for (std::uint64_t n = 1; n <= cfg.max_n; ++n) {
        listing.rows.push_back(golden_mean_fix_count(n));
        listing.lucas.push_back(lucas_companion(n));
    }
    return emit(render(listing, cfg.format), listing.all_match());
}

// CLI11 reads "-10..10" as an option name; glue such values to their flag.
std::vector<std::string> normalize_args(int argc, char** argv)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if ((a == "--p-range" || a == "--q-range") && i + 1 < argc && argv[i + 1][0] == '-') {
            args.push_back(a + "=" + argv[++i]);
            continue;
        }
        args.push_back(a);
    }
    return args;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Realizability analysis of integer sequences as periodic-point counts"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    cfg.workers = default_workers();

    app.add_option("--format", cfg.format_text, "Output format: human, structured or csv")
        ->check(CLI::IsMember({"human", "structured", "json", "csv"}));
    app.add_option("--workers", cfg.workers, "Worker threads (default $DOLDKIT_WORKERS or 1)")
        ->check(CLI::Range(1u, 1024u));
    app.add_option("--cache", cfg.cache_path, "Pisano period cache file");
    app.add_option("--exact-cutoff", cfg.exact_cutoff, "Largest sequence index evaluated exactly");

    auto* dold = app.add_subcommand("dold", "Dold congruence scan, modular");
    dold->add_option("spec", cfg.spec_text, "Sequence spec, e.g. 5*fib^2")->required();
    dold->add_option("--max-n", cfg.max_n)->required()->check(CLI::PositiveNumber);
    dold->add_option("--exact-bound", cfg.exact_bound, "Cross-check rows n <= bound exactly");

    auto* sign = app.add_subcommand("sign", "Sign condition");
    sign->add_option("spec", cfg.spec_text)->required();
    sign->add_option("--max-n", cfg.max_n)->required()->check(CLI::PositiveNumber);
    sign->add_option("--certificate", cfg.certificate, "exact or growth")->check(CLI::IsMember({"exact", "growth"}));

    auto* orbits = app.add_subcommand("orbits", "Exact orbit counts");
    orbits->add_option("spec", cfg.spec_text)->required();
    orbits->add_option("--max-n", cfg.max_n)->required()->check(CLI::PositiveNumber);

    auto* pisano = app.add_subcommand("pisano", "Fibonacci periods modulo m");
    auto* max_m = pisano->add_option("--max-m", cfg.max_m, "List ell(m) for m = 2..max-m")->check(CLI::Range(2ULL, 100'000'000ULL));
    auto* prime = pisano->add_option("--prime", cfg.prime, "Prime for a prime-power period");
    pisano->add_option("--exponent", cfg.exponent)->needs(prime)->check(CLI::Range(1u, 40u));
    pisano->add_option("--max-exponent", cfg.max_exponent, "Search bound for t")->check(CLI::Range(1u, 20u));
    pisano->add_flag("--verify", cfg.verify, "Cross-check against brute force");
    max_m->excludes(prime);

    auto* wall = app.add_subcommand("wall-verify", "Check the Wall divisibilities on primes");
    wall->add_option("--max-p", cfg.max_p)->required()->check(CLI::Range(2ULL, 10'000'000ULL));
    wall->add_option("--max-exponent", cfg.max_exponent)->check(CLI::Range(1u, 3u));

    auto* denominators = app.add_subcommand("denominators", "Denominator prime witnesses at prime indices");
    denominators->add_option("spec", cfg.spec_text)->required();
    denominators->add_option("--prime-bound", cfg.prime_bound)->required()->check(CLI::Range(3ULL, 100'000'000ULL));

    auto* conjecture = app.add_subcommand("conjecture", "Dold scan of D*U_{n^2}(P,Q) over a grid");
    conjecture->add_option("--p-range", cfg.p_range, "a..b")->required();
    conjecture->add_option("--q-range", cfg.q_range, "a..b")->required();
    conjecture->add_option("--max-n", cfg.max_n)->required()->check(CLI::PositiveNumber);
    conjecture->add_option("--sign-bound", cfg.sign_bound, "Informational exact sign check bound (0 = off)");

    auto* golden = app.add_subcommand("oracle-golden", "Golden mean shift: enumeration vs trace vs Lucas");
    golden->add_option("--max-n", cfg.max_n)->required()->check(CLI::PositiveNumber);

    auto args = normalize_args(argc, argv);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }
    cfg.format = *parse_output_format(cfg.format_text);
    if (pisano->parsed() && cfg.max_m == 0 && cfg.prime == 0) {
        std::cerr << "error: pisano needs --max-m or --prime\n";
        return kExitUsage;
    }

    try {
        if (dold->parsed()) return cmd_dold(cfg);
        if (sign->parsed()) return cmd_sign(cfg);
        if (orbits->parsed()) return cmd_orbits(cfg);
        if (pisano->parsed()) return cmd_pisano(cfg);
        if (wall->parsed()) return cmd_wall_verify(cfg);
        if (denominators->parsed()) return cmd_denominators(cfg);
        if (conjecture->parsed()) return cmd_conjecture(cfg);
        if (golden->parsed()) return cmd_oracle_golden(cfg);
    } catch (const SpecSyntaxError& e) {
        std::cerr << "error: " << e.annotated() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::range_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}

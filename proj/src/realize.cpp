#include "doldkit/realize.hpp"
#include "doldkit/parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

namespace doldkit {

unsigned default_workers()
{
    if (const char* env = std::getenv("DOLDKIT_WORKERS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    }
    return 1;
}

ExactRational orbit_count(const SequenceSpec& spec, std::uint64_t n, std::uint64_t exact_cutoff)
{
    const BigInt sum = mobius_convolve([&](std::uint64_t d) { return spec_eval(spec, d, exact_cutoff); }, n);
    return reduce_fraction(sum, big_from_u64(n));
}

bool OrbitReport::all_realizable() const
{
    return std::all_of(rows.begin(), rows.end(),
                       [](const OrbitRow& r) { return r.count.is_integer() && r.count.numerator() >= 0; });
}

OrbitReport orbit_counts(const SequenceSpec& spec, std::uint64_t max_n, const ScanOptions& options)
{
    if (max_n == 0) throw std::invalid_argument("orbit_counts: max_n must be at least 1");
    if (spec.index_of(max_n) > options.exact_cutoff)
        throw ExactRangeError("orbit_counts: index " + index_to_string(spec.index_of(max_n)) +
                              " exceeds the exact cutoff");
    const std::vector<BigInt> values = parallel_map<BigInt>(
        max_n, options.workers, [&](std::size_t i) { return spec_eval(spec, i + 1, options.exact_cutoff); });
    OrbitReport report{spec, max_n, {}};
    report.rows = parallel_map<OrbitRow>(max_n, options.workers, [&](std::size_t i) {
        const std::uint64_t n = i + 1;
        const BigInt sum = mobius_convolve([&](std::uint64_t d) { return values[d - 1]; }, n);
        return OrbitRow{n, reduce_fraction(sum, big_from_u64(n))};
    });
    return report;
}

std::uint64_t dold_residue(const SequenceSpec& spec, std::uint64_t n)
{
    return mobius_convolve([&](std::uint64_t d, std::uint64_t m) { return spec_eval_mod(spec, d, m); }, n, n);
}

std::uint64_t dold_denominator(const SequenceSpec& spec, std::uint64_t n)
{
    return n / std::gcd(n, dold_residue(spec, n));
}

std::size_t DoldReport::pass_count() const
{
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const DoldRow& r) { return r.pass; }));
}

const DoldRow* DoldReport::first_failure() const
{
    for (const auto& r : rows)
        if (!r.pass) return &r;
    return nullptr;
}

std::vector<std::uint64_t> DoldReport::denominator_primes() const
{
    std::vector<std::uint64_t> primes;
    for (const auto& r : rows) {
        if (r.denominator == 1) continue;
        for (const auto& e : factorize(r.denominator).entries) primes.push_back(e.prime);
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return primes;
}

DoldReport dold_scan(const SequenceSpec& spec, std::uint64_t max_n, const ScanOptions& options)
{
    if (max_n == 0) throw std::invalid_argument("dold_scan: max_n must be at least 1");
    DoldReport report{spec, max_n, {}};
    report.rows = parallel_map<DoldRow>(max_n, options.workers, [&](std::size_t i) {
        const std::uint64_t n = i + 1;
        DoldRow row{n, dold_residue(spec, n), 0, false, false};
        row.denominator = n / std::gcd(n, row.residue);
        row.pass = row.residue == 0;
        if (n <= options.exact_bound && spec.index_of(n) <= options.exact_cutoff) {
            const BigInt exact =
                mobius_convolve([&](std::uint64_t d) { return spec_eval(spec, d, options.exact_cutoff); }, n);
            if (mod_u64(exact, n) != row.residue)
                throw std::logic_error("dold_scan: modular and exact residues disagree for " + spec.str() +
                                       " at n = " + std::to_string(n));
            row.exact_checked = true;
        }
        return row;
    });
    return report;
}

bool SignReport::all_non_negative() const { return first_negative() == nullptr; }

const SignRow* SignReport::first_negative() const
{
    for (const auto& r : rows)
        if (!r.non_negative) return &r;
    return nullptr;
}

SignReport sign_check_exact(const SequenceSpec& spec, std::uint64_t max_n, const ScanOptions& options)
{
    if (max_n == 0) throw std::invalid_argument("sign_check_exact: max_n must be at least 1");
    if (spec.index_of(max_n) > options.exact_cutoff)
        throw ExactRangeError("sign_check_exact: index " + index_to_string(spec.index_of(max_n)) +
                              " exceeds the exact cutoff");
    const std::vector<BigInt> values = parallel_map<BigInt>(
        max_n, options.workers, [&](std::size_t i) { return spec_eval(spec, i + 1, options.exact_cutoff); });
    SignReport report{spec, max_n, {}, SignCertificate::exact};
    report.rows = parallel_map<SignRow>(max_n, options.workers, [&](std::size_t i) {
        const std::uint64_t n = i + 1;
        BigInt v = mobius_convolve([&](std::uint64_t d) { return values[d - 1]; }, n);
        const bool ok = v >= 0;
        return SignRow{n, std::move(v), ok};
    });
    return report;
}

GrowthResult growth_certificate(const ExactEvaluator& values, std::uint64_t max_n)
{
    GrowthResult result;
    result.max_n = max_n;
    if (max_n == 0) return result;
    std::vector<BigInt> a(2 * max_n + 1);
    for (std::uint64_t n = 1; n <= 2 * max_n; ++n) a[n] = values(n);
    auto fail = [&](std::uint64_t n, std::string why) {
        result.pass = false;
        result.first_failure = n;
        result.reason = std::move(why);
        return result;
    };
    for (std::uint64_t n = 1; n <= 2 * max_n; ++n) {
        if (a[n] < 0) return fail(n, "negative value");
        if (n > 1) {
            ++result.exact_comparisons;
            if (a[n] < a[n - 1]) return fail(n, "not non-decreasing");
        }
        if (n <= max_n) {
            ++result.exact_comparisons;
            if (a[2 * n] < big_from_u64(n) * a[n]) return fail(n, "A_2n < n A_n");
        }
    }
    return result;
}

namespace {

constexpr double kLnGolden = 0.48121182505960344749775891342436842313518433438566;
constexpr double kHalfLn5 = 0.80471895621705018730037966661309381976280067713425;
constexpr Index kSmallIndex = 4096;

struct LnEnclosure {
    double lo;
    double hi;
};

LnEnclosure ln_of(const BigInt& v)
{
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    const double ln = std::log(mant) + static_cast<double>(exp) * std::log(2.0);
    const double margin = 1e-12 * std::abs(ln) + 1e-12;
    return {ln - margin, ln + margin};
}

// Encloses ln(c * Base_k) for the fib / lucasV bases from the closed form
// Base_k = (alpha^k -+ beta^k) / sqrt5 or alpha^k + beta^k, where the beta
// term contributes ln(1 +- alpha^{-2k}), bounded by 2 alpha^{-2k} in size.
class SpecMagnitudes {
public:
    SpecMagnitudes(const SequenceSpec& spec, std::uint64_t exact_cutoff) : spec_(spec), cutoff_(exact_cutoff)
    {
        analytic_ = (spec.base() == BaseKind::fibonacci || spec.base() == BaseKind::lucas_companion) &&
                    spec.multiplier() > 0;
    }

    bool small(std::uint64_t n) const { return spec_.index_of(n) <= kSmallIndex; }

    const BigInt& exact(std::uint64_t n)
    {
        auto it = exact_.find(n);
        if (it == exact_.end()) it = exact_.emplace(n, spec_eval(spec_, n, cutoff_)).first;
        return it->second;
    }

    LnEnclosure enclose(std::uint64_t n)
    {
        if (small(n) || !analytic_) return ln_of(exact(n));
        const double k = static_cast<double>(spec_.index_of(n));
        double centre = k * kLnGolden + std::log(static_cast<double>(spec_.multiplier()));
        if (spec_.base() == BaseKind::fibonacci) centre -= kHalfLn5;
        const double tail = 2.0 * std::exp(-2.0 * k * kLnGolden);
        const double margin = tail + 1e-12 * std::abs(centre) + 1e-9;
        return {centre - margin, centre + margin};
    }

    /// A_lhs >= scale * A_rhs.
    bool ge(std::uint64_t lhs, std::uint64_t scale, std::uint64_t rhs, GrowthResult& stats)
    {
        if (analytic_ && !(small(lhs) && small(rhs))) {
            const LnEnclosure l = enclose(lhs);
            LnEnclosure r = enclose(rhs);
            const double ls = std::log(static_cast<double>(scale));
            r.lo += ls - 1e-12;
            r.hi += ls + 1e-12;
            if (l.lo > r.hi) {
                ++stats.bounded_comparisons;
                return true;
            }
            if (l.hi < r.lo) {
                ++stats.bounded_comparisons;
                return false;
            }
        }
        ++stats.exact_comparisons;
        return exact(lhs) >= big_from_u64(scale) * exact(rhs);
    }

private:
    const SequenceSpec& spec_;
    std::uint64_t cutoff_;
    bool analytic_ = false;
    std::map<std::uint64_t, BigInt> exact_;
};

} // namespace

GrowthResult growth_certificate(const SequenceSpec& spec, std::uint64_t max_n, std::uint64_t exact_cutoff)
{
    if (spec.multiplier() == 0) {
        GrowthResult zero;
        zero.max_n = max_n;
        return zero;
    }
    const bool analytic = (spec.base() == BaseKind::fibonacci || spec.base() == BaseKind::lucas_companion) &&
                          spec.multiplier() > 0;
    if (!analytic)
        return growth_certificate([&](std::uint64_t n) { return spec_eval(spec, n, exact_cutoff); }, max_n);

    // Every term is positive here: c > 0 and F_k, L_k > 0 for k >= 1.
    GrowthResult result;
    result.max_n = max_n;
    spec.index_of(2 * max_n); // loud on overflow before any work
    SpecMagnitudes mag(spec, exact_cutoff);
    for (std::uint64_t n = 1; n <= 2 * max_n; ++n) {
        if (n > 1 && !mag.ge(n, 1, n - 1, result)) {
            result.pass = false;
            result.first_failure = n;
            result.reason = "not non-decreasing";
            return result;
        }
        if (n <= max_n && !mag.ge(2 * n, n, n, result)) {
            result.pass = false;
            result.first_failure = n;
            result.reason = "A_2n < n A_n";
            return result;
        }
    }
    return result;
}

std::vector<DenominatorWitness> denominator_prime_witnesses(const SequenceSpec& spec, std::uint64_t prime_bound,
                                                            unsigned workers)
{
    std::vector<std::uint64_t> candidates;
    for (std::uint64_t p : primes_up_to(prime_bound)) {
        if (p % 5 == 2 || p % 5 == 3) {
            if (p != 2) candidates.push_back(p);
        }
    }
    const auto found = parallel_map<std::optional<DenominatorWitness>>(
        candidates.size(), workers, [&](std::size_t i) -> std::optional<DenominatorWitness> {
            const std::uint64_t p = candidates[i];
            const std::uint64_t residue = dold_residue(spec, p);
            if (p / std::gcd(p, residue) != p) return std::nullopt;
            return DenominatorWitness{p, p, residue, spec};
        });
    std::vector<DenominatorWitness> out;
    for (const auto& w : found)
        if (w) out.push_back(*w);
    return out;
}

GoldenMeanCount golden_mean_fix_count(std::uint64_t n, std::uint64_t enumeration_bound)
{
    if (n == 0) throw std::invalid_argument("golden_mean_fix_count: n must be at least 1");
    if (n > enumeration_bound || n > 63)
        throw std::invalid_argument("golden_mean_fix_count: n = " + std::to_string(n) +
                                    " exceeds the enumeration bound " + std::to_string(enumeration_bound));
    GoldenMeanCount out{n, 0, 0};
    const std::uint64_t top = std::uint64_t{1} << (n - 1);
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
        const std::uint64_t rotated = (w >> 1) | ((w & 1) ? top : 0);
        if ((w & rotated) == 0) ++out.enumeration;
    }
    std::array<std::uint64_t, 4> m{1, 1, 1, 0}, r{1, 0, 0, 1};
    for (std::uint64_t i = 0; i < n; ++i) {
        r = {r[0] * m[0] + r[1] * m[2], r[0] * m[1] + r[1] * m[3], r[2] * m[0] + r[3] * m[2],
             r[2] * m[1] + r[3] * m[3]};
    }
    out.trace = r[0] + r[3];
    return out;
}

BigInt orbits_to_fix(const ExactEvaluator& orbit_counts, std::uint64_t n)
{
    BigInt sum = 0;
    for (std::uint64_t d : divisors(n)) sum += big_from_u64(d) * orbit_counts(d);
    return sum;
}

} // namespace doldkit

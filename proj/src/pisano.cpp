#include "doldkit/pisano.hpp"
#include "doldkit/arith.hpp"
#include "doldkit/sequences.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace doldkit {

namespace {

constexpr std::uint64_t kVerifyLimit = 1'000'000;

void require_prime(std::uint64_t p, const char* where)
{
    if (!is_prime(p)) throw std::invalid_argument(std::string(where) + ": " + std::to_string(p) + " is not prime");
}

} // namespace

std::string_view to_string(PeriodMethod m)
{
    switch (m) {
    case PeriodMethod::brute_force: return "brute-force";
    case PeriodMethod::wall_guided: return "wall-guided";
    case PeriodMethod::crt_combined: return "crt-combined";
    }
    return "?";
}

std::optional<PeriodMethod> parse_period_method(std::string_view text)
{
    for (auto m : {PeriodMethod::brute_force, PeriodMethod::wall_guided, PeriodMethod::crt_combined})
        if (to_string(m) == text) return m;
    return std::nullopt;
}

bool is_fibonacci_period(std::uint64_t d, std::uint64_t m)
{
    if (d == 0) return false;
    const auto [a, b] = fib_pair_mod(Index{d} + 1, m);
    return a == 1 % m && b == 1 % m;
}

PisanoRecord pisano_bruteforce(std::uint64_t m)
{
    if (m == 0) throw std::invalid_argument("pisano_bruteforce: modulus must be positive");
    const std::uint64_t one = 1 % m;
    std::uint64_t a = one, b = one; // (F_1, F_2)
    std::uint64_t d = 0;
    do {
        const std::uint64_t c = a + b >= m ? a + b - m : a + b;
        a = b;
        b = c;
        ++d;
    } while (a != one || b != one);
    return {m, d, PeriodMethod::brute_force};
}

std::uint64_t wall_bound(std::uint64_t p)
{
    if (p == 2) return 3;
    if (p == 5) return 5 * 24; // 5 divides the discriminant; ell(5) = 20 does not divide 24
    switch (p % 10) {
    case 1:
    case 9: return p - 1;
    case 3:
    case 7: return 2 * (p + 1);
    default: throw std::invalid_argument("wall_bound: " + std::to_string(p) + " is not prime");
    }
}

PisanoRecord pisano_prime(std::uint64_t p)
{
    require_prime(p, "pisano_prime");
    for (std::uint64_t d : divisors(wall_bound(p))) {
        if (is_fibonacci_period(d, p)) return {p, d, PeriodMethod::wall_guided};
    }
    throw std::logic_error("pisano_prime: no period among divisors of the Wall bound for " + std::to_string(p));
}

PrimePowerPeriod pisano_prime_power(std::uint64_t p, unsigned n, bool verify)
{
    require_prime(p, "pisano_prime_power");
    if (n == 0) throw std::invalid_argument("pisano_prime_power: exponent must be at least 1");
    const std::uint64_t modulus = checked_pow_u64(p, n);
    const std::uint64_t base = pisano_prime(p).period;
    // ell(p^n) = p^s ell(p) for some 0 <= s < n, and every period is a
    // multiple of the least one, so the first s that works is minimal.
    std::uint64_t candidate = base;
    PrimePowerPeriod out{p, n, 0, 0};
    for (unsigned s = 0;; ++s) {
        if (is_fibonacci_period(candidate, modulus)) {
            out.period = candidate;
            out.s = s;
            break;
        }
        if (s + 1 >= n) throw std::logic_error("pisano_prime_power: no period of the form p^s ell(p)");
        candidate = static_cast<std::uint64_t>(checked_pow_u64(p, s + 1)) * base;
    }
    if (verify && modulus <= kVerifyLimit) {
        const auto brute = pisano_bruteforce(modulus).period;
        if (brute != out.period)
            throw std::logic_error("pisano_prime_power: mismatch with brute force at " + std::to_string(modulus));
    }
    return out;
}

unsigned wall_exponent_t(std::uint64_t p, unsigned max_exponent)
{
    require_prime(p, "wall_exponent_t");
    const std::uint64_t base = pisano_prime(p).period;
    unsigned t = 1;
    for (unsigned e = 2; e <= max_exponent; ++e) {
        if (pisano_prime_power(p, e).period != base) break;
        t = e;
    }
    return t;
}

PisanoRecord pisano_general(std::uint64_t m)
{
    if (m == 0) throw std::invalid_argument("pisano_general: modulus must be positive");
    if (m == 1) return {1, 1, PeriodMethod::brute_force};
    const Factorization f = factorize(m);
    if (f.entries.size() == 1) {
        const auto& e = f.entries.front();
        return {m, pisano_prime_power(e.prime, e.exponent).period, PeriodMethod::wall_guided};
    }
    std::uint64_t period = 1;
    for (const auto& e : f.entries) period = lcm_u64(period, pisano_prime_power(e.prime, e.exponent).period);
    return {m, period, PeriodMethod::crt_combined};
}

std::size_t WallVerification::exceptions_for(std::string_view property) const
{
    return static_cast<std::size_t>(std::count_if(exceptions.begin(), exceptions.end(),
                                                  [&](const WallException& e) { return e.property == property; }));
}

WallVerification verify_wall(std::uint64_t max_p, unsigned max_exponent)
{
    WallVerification out;
    out.max_p = max_p;
    out.max_exponent = max_exponent;
    auto record = [&](std::string_view prop, std::uint64_t p, unsigned e, std::string detail) {
        out.exceptions.push_back({std::string(prop), p, e, std::move(detail)});
    };
    for (std::uint64_t p : primes_up_to(max_p)) {
        const std::uint64_t period = pisano_prime(p).period;
        const std::uint64_t brute = pisano_bruteforce(p).period;
        if (brute != period)
            record(kPropBruteForce, p, 1, "brute force " + std::to_string(brute) + " vs " + std::to_string(period));
        const std::string ell = "ell(" + std::to_string(p) + ") = " + std::to_string(period);
        if ((p % 10 == 1 || p % 10 == 9) && (p - 1) % period != 0) record(kPropDividesPMinus1, p, 1, ell);
        if ((p % 10 == 3 || p % 10 == 7) && (2 * (p + 1)) % period != 0) record(kPropDividesTwoPPlus1, p, 1, ell);
        if ((p * p - 1) % period != 0)
            record(kPropDividesPSquaredMinus1, p, 1, ell + " does not divide " + std::to_string(p * p - 1));

        unsigned t = 1;
        std::uint64_t previous = period;
        for (unsigned e = 1; e <= max_exponent; ++e) {
            const auto pp = e == 1 ? PrimePowerPeriod{p, 1, period, 0} : pisano_prime_power(p, e);
            if (pp.period < previous) record(kPropMonotone, p, e, "ell(p^e) decreased");
            if (e > 1 && pp.period == period && t == e - 1) t = e;
            previous = pp.period;
            const unsigned __int128 bound = static_cast<unsigned __int128>(checked_pow_u64(p, e)) * (p * p - 1);
            if (bound % pp.period != 0)
                record(kPropPrimePowerDivides, p, e, "ell = " + std::to_string(pp.period));
        }
        out.primes.push_back({p, period, t});
    }
    return out;
}

PeriodCache PeriodCache::parse(std::string_view text)
{
    PeriodCache cache;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    std::uint64_t last = 0;
    auto bad = [&](const std::string& why) {
        throw std::runtime_error("period cache line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) bad("empty line");
        const auto t1 = line.find('\t');
        const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
        if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos) bad("expected three tab-separated fields");
        PisanoRecord rec{};
        try {
            std::size_t used = 0;
            rec.modulus = std::stoull(line.substr(0, t1), &used);
            if (used != t1) bad("malformed modulus");
            const std::string period = line.substr(t1 + 1, t2 - t1 - 1);
            rec.period = std::stoull(period, &used);
            if (used != period.size()) bad("malformed period");
        } catch (const std::logic_error&) {
            bad("malformed number");
        }
        const auto method = parse_period_method(std::string_view(line).substr(t2 + 1));
        if (!method) bad("unknown method");
        rec.method = *method;
        if (rec.modulus == 0 || rec.period == 0) bad("zero field");
        if (!cache.records_.empty() && rec.modulus <= last) bad("moduli not strictly ascending");
        last = rec.modulus;
        cache.records_.emplace(rec.modulus, rec);
    }
    std::size_t i = 0;
    for (const auto& [m, rec] : cache.records_) {
        if (i++ % 100 != 0) continue;
        if (pisano_bruteforce(m).period != rec.period)
            throw std::runtime_error("period cache: wrong period recorded for modulus " + std::to_string(m));
    }
    return cache;
}

PeriodCache PeriodCache::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open period cache " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string PeriodCache::serialize() const
{
    std::string out;
    for (const auto& [m, rec] : records_) {
        out += std::to_string(m) + '\t' + std::to_string(rec.period) + '\t' + std::string(to_string(rec.method)) + '\n';
    }
    return out;
}

void PeriodCache::save(const std::filesystem::path& path) const
{
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write period cache " + path.string());
    out << serialize();
}

std::optional<PisanoRecord> PeriodCache::find(std::uint64_t modulus) const
{
    const auto it = records_.find(modulus);
    if (it == records_.end()) return std::nullopt;
    return it->second;
}

void PeriodCache::insert(const PisanoRecord& rec) { records_.insert_or_assign(rec.modulus, rec); }

} // namespace doldkit

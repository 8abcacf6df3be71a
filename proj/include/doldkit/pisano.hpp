#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace doldkit {

enum class PeriodMethod { brute_force, wall_guided, crt_combined };

std::string_view to_string(PeriodMethod m);
std::optional<PeriodMethod> parse_period_method(std::string_view text);

/// Least period of the Fibonacci sequence modulo `modulus`.
struct PisanoRecord {
    std::uint64_t modulus;
    std::uint64_t period;
    PeriodMethod method;

    friend bool operator==(const PisanoRecord&, const PisanoRecord&) = default;
};

/// ell(p^n) = p^s ell(p).
struct PrimePowerPeriod {
    std::uint64_t prime;
    unsigned exponent;
    std::uint64_t period;
    unsigned s;
};

/// True iff d is a period of F mod m, i.e. (F_{d+1}, F_{d+2}) == (1, 1) mod m.
/// F mod m is purely periodic, so this pair-return test is equivalent to
/// F_{n+d} == F_n for all n.
bool is_fibonacci_period(std::uint64_t d, std::uint64_t m);

PisanoRecord pisano_bruteforce(std::uint64_t m);

/// Period of a prime, searched over the divisors of the Wall bound:
/// p-1 when p = +-1 (mod 10), 2(p+1) when p = +-3 (mod 10), p^2-1 for p = 2
/// and p(p^2-1) for p = 5. The smallest qualifying divisor is returned.
PisanoRecord pisano_prime(std::uint64_t p);

/// Divisor bound used by pisano_prime for p.
std::uint64_t wall_bound(std::uint64_t p);

/// With `verify`, the result is cross-checked against brute force whenever
/// p^n <= 10^6 (throws std::logic_error on disagreement).
PrimePowerPeriod pisano_prime_power(std::uint64_t p, unsigned n, bool verify = false);

/// Largest t <= max_exponent with ell(p^t) = ell(p), computed.
unsigned wall_exponent_t(std::uint64_t p, unsigned max_exponent = 3);

/// lcm of the prime-power periods of m.
PisanoRecord pisano_general(std::uint64_t m);

struct WallPrimeRow {
    std::uint64_t prime;
    std::uint64_t period;
    /// Largest t <= max_exponent with ell(p^t) = ell(p).
    unsigned t;
};

struct WallException {
    std::string property;
    std::uint64_t prime;
    unsigned exponent;
    std::string detail;
};

/// Checks, for every prime p <= max_p: brute force agrees with the
/// Wall-guided search; ell(p) | p-1 (p = +-1 mod 10); ell(p) | 2(p+1)
/// (p = +-3 mod 10); ell(p) | p^2-1; ell(p^e) <= ell(p^{e+1}) and
/// ell(p^e) | p^e(p^2-1) for e <= max_exponent. Every violation is recorded.
struct WallVerification {
    std::uint64_t max_p = 0;
    unsigned max_exponent = 3;
    std::vector<WallPrimeRow> primes;
    std::vector<WallException> exceptions;

    bool clean() const { return exceptions.empty(); }
    std::size_t exceptions_for(std::string_view property) const;
};

inline constexpr std::string_view kPropBruteForce = "bruteforce-agrees";
inline constexpr std::string_view kPropDividesPMinus1 = "period-divides-p-1";
inline constexpr std::string_view kPropDividesTwoPPlus1 = "period-divides-2(p+1)";
inline constexpr std::string_view kPropDividesPSquaredMinus1 = "period-divides-p^2-1";
inline constexpr std::string_view kPropMonotone = "prime-power-periods-non-decreasing";
inline constexpr std::string_view kPropPrimePowerDivides = "prime-power-period-divides-p^e(p^2-1)";

WallVerification verify_wall(std::uint64_t max_p, unsigned max_exponent = 3);

/// Known periods, read from / written to the text cache format
/// `modulus<TAB>period<TAB>method`, one per line, ascending, no duplicates.
class PeriodCache {
public:
    PeriodCache() = default;

    /// Parses and validates; every 100th entry (and at least one) is
    /// re-derived by brute force. Throws std::runtime_error on any defect.
    static PeriodCache load(const std::filesystem::path& path);
    static PeriodCache parse(std::string_view text);

    void save(const std::filesystem::path& path) const;
    std::string serialize() const;

    std::optional<PisanoRecord> find(std::uint64_t modulus) const;
    void insert(const PisanoRecord& rec);
    std::size_t size() const { return records_.size(); }

private:
    std::map<std::uint64_t, PisanoRecord> records_;
};

} // namespace doldkit

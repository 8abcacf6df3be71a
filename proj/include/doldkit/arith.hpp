#pragma once

#include "doldkit/bigint.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace doldkit {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Complete prime factorization, ascending by prime.
struct Factorization {
    std::vector<PrimePower> entries;

    std::uint64_t value() const;
    std::size_t divisor_count() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Reduced fraction with positive denominator.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(BigInt numerator, BigInt denominator);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    /// "a/b" form, always with the denominator (e.g. "75024/1").
    std::string str() const;

    friend bool operator==(const ExactRational&, const ExactRational&) = default;

private:
    BigInt num_{0};
    BigInt den_{1};
};

ExactRational reduce_fraction(const BigInt& numerator, const BigInt& denominator);

/// Deterministic primality for all 64-bit inputs (Miller-Rabin with a fixed
/// base set that is exact below 2^64).
bool is_prime(std::uint64_t n);

/// Trial division up to 10^6, then Pollard rho (Brent) on the cofactor.
Factorization factorize(std::uint64_t n);

int mobius(std::uint64_t n);
int mobius(const Factorization& f);

std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(const Factorization& f);

/// Legendre symbol (a/p) by Euler's criterion, p an odd prime.
int legendre(std::int64_t a, std::uint64_t p);

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Checked 64-bit power; throws IndexOverflow if the result exceeds 2^64-1.
std::uint64_t checked_pow_u64(std::uint64_t base, unsigned exp);

using ExactEvaluator = std::function<BigInt(std::uint64_t)>;
using ModularEvaluator = std::function<std::uint64_t(std::uint64_t index, std::uint64_t modulus)>;

/// (mu * U)_n = sum over d | n of mu(n/d) U_d, exactly.
BigInt mobius_convolve(const ExactEvaluator& u, std::uint64_t n);

/// (mu * U)_n reduced into {0, ..., modulus-1}. The evaluator is only ever
/// asked for U_d mod modulus, so huge terms are never materialized.
std::uint64_t mobius_convolve(const ModularEvaluator& u, std::uint64_t n, std::uint64_t modulus);

} // namespace doldkit

#include "doldkit/congruences.hpp"
#include "doldkit/arith.hpp"
#include "doldkit/modular.hpp"
#include "doldkit/sequences.hpp"

#include <stdexcept>

namespace doldkit {

namespace {

void require_prime(std::uint64_t p)
{
    if (!is_prime(p)) throw std::invalid_argument("congruence check: " + std::to_string(p) + " is not prime");
}

Index checked_index(Index a, Index b)
{
    if (a != 0 && b > kMaxIndex / a) throw IndexOverflow("congruence check: index out of range");
    return a * b;
}

Index power_index(std::uint64_t p, unsigned e)
{
    Index r = 1;
    for (unsigned i = 0; i < e; ++i) r = checked_index(r, p);
    return r;
}

CongruenceCheck make(std::uint64_t m, std::uint64_t lhs, std::uint64_t rhs) { return {lhs == rhs, m, lhs, rhs}; }

} // namespace

CongruenceCheck lucas_prime_check(std::uint64_t p)
{
    require_prime(p);
    return make(p, lucas_companion_mod(p, p), 1 % p);
}

CongruenceCheck desmond_check(std::uint64_t p, std::uint64_t n)
{
    require_prime(p);
    const std::uint64_t lhs = fib_mod(checked_index(n, p), p);
    const std::uint64_t rhs = mod::mul(fib_mod(n, p), fib_mod(p, p), p);
    return make(p, lhs, rhs);
}

CongruenceCheck five_fib_square_check(std::uint64_t p, std::uint64_t n)
{
    require_prime(p);
    const std::uint64_t five = 5 % p;
    const std::uint64_t lhs = mod::mul(five, fib_mod(checked_index(n, power_index(p, 2)), p), p);
    const std::uint64_t rhs = mod::mul(five, fib_mod(n, p), p);
    return make(p, lhs, rhs);
}

CongruenceCheck offset_check(std::uint64_t p, unsigned k, std::uint64_t c)
{
    require_prime(p);
    if (k < 2) throw std::invalid_argument("offset_check: k must be at least 2");
    const std::uint64_t m = checked_pow_u64(p, k);
    return make(m, fib_mod(power_index(p, 2 * k) + c, m), fib_mod(power_index(p, 2 * (k - 1)) + c, m));
}

CongruenceCheck two_power_offset_check(unsigned k, std::uint64_t c)
{
    if (k < 3) throw std::invalid_argument("two_power_offset_check: k must be at least 3");
    const std::uint64_t m = checked_pow_u64(2, k + 1);
    return make(m, fib_mod(power_index(2, 2 * k) + c, m), fib_mod(power_index(2, 2 * (k - 1)) + c, m));
}

CongruenceCheck lemma34_check(std::uint64_t p, unsigned k, std::uint64_t n)
{
    require_prime(p);
    if (k < 1) throw std::invalid_argument("lemma34_check: k must be at least 1");
    const std::uint64_t m = checked_pow_u64(p, k);
    const std::uint64_t five = 5 % m;
    const std::uint64_t lhs = mod::mul(five, fib_mod(checked_index(n, power_index(p, 2 * k)), m), m);
    const std::uint64_t rhs = mod::mul(five, fib_mod(checked_index(n, power_index(p, 2 * (k - 1))), m), m);
    return make(m, lhs, rhs);
}

} // namespace doldkit

#pragma once

#include <cstdint>

// Runnable forms of the Fibonacci congruences behind the realizability of
// 5 F_{n^2}. Each check evaluates both sides with fib_mod at the stated
// modulus; nothing is assumed.

namespace doldkit {

struct CongruenceCheck {
    bool pass;
    std::uint64_t modulus;
    std::uint64_t lhs;
    std::uint64_t rhs;
};

/// L_p == 1 (mod p).
CongruenceCheck lucas_prime_check(std::uint64_t p);

/// F_{np} == F_n F_p (mod p).
CongruenceCheck desmond_check(std::uint64_t p, std::uint64_t n);

/// 5 F_{np^2} == 5 F_n (mod p).
CongruenceCheck five_fib_square_check(std::uint64_t p, std::uint64_t n);

/// F_{p^{2k} + c} == F_{p^{2(k-1)} + c} (mod p^k), k >= 2.
CongruenceCheck offset_check(std::uint64_t p, unsigned k, std::uint64_t c);

/// F_{2^{2k} + c} == F_{2^{2(k-1)} + c} (mod 2^{k+1}), k >= 3.
CongruenceCheck two_power_offset_check(unsigned k, std::uint64_t c);

/// 5 F_{n p^{2k}} == 5 F_{n p^{2(k-1)}} (mod p^k), k >= 1.
CongruenceCheck lemma34_check(std::uint64_t p, unsigned k, std::uint64_t n);

} // namespace doldkit

#pragma once

#include <cstdint>

// Residue arithmetic on 64-bit moduli. All results are normalized into
// {0, ..., m-1}; inputs must already be reduced.

namespace doldkit::mod {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 mul(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

constexpr u64 add(u64 a, u64 b, u64 m)
{
    u64 r = a + b;
    if (r < a || r >= m) r -= m;
    return r;
}

constexpr u64 sub(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

constexpr u64 neg(u64 a, u64 m) { return a == 0 ? 0 : m - a; }

constexpr u64 pow(u64 base, u128 e, u64 m)
{
    u64 r = 1 % m;
    base %= m;
    while (e > 0) {
        if (e & 1) r = mul(r, base, m);
        base = mul(base, base, m);
        e >>= 1;
    }
    return r;
}

/// Reduce a signed value into {0, ..., m-1}.
constexpr u64 from_signed(std::int64_t v, u64 m)
{
    if (v >= 0) return static_cast<u64>(v) % m;
    u64 mag = static_cast<u64>(-(v + 1)) + 1;
    return neg(mag % m, m);
}

} // namespace doldkit::mod

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace doldkit {

/// Arbitrary-precision signed integer (GMP backed).
using BigInt = mpz_class;

/// Index type for sampled sequence terms such as F_{n^j}. Large enough that
/// every index produced by the scans fits with room to spare.
using Index = unsigned __int128;

inline constexpr Index kMaxIndex = ~Index{0} >> 1;

class IndexOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

std::string index_to_string(Index v);

inline BigInt big_from_u64(std::uint64_t v)
{
    BigInt r;
    mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return r;
}

inline BigInt big_from_i64(std::int64_t v)
{
    if (v >= 0) return big_from_u64(static_cast<std::uint64_t>(v));
    // avoid negating INT64_MIN in signed arithmetic
    BigInt r = big_from_u64(static_cast<std::uint64_t>(-(v + 1)) + 1);
    return -r;
}

/// Value of `v` modulo `m`, in {0, ..., m-1}.
inline std::uint64_t mod_u64(const BigInt& v, std::uint64_t m)
{
    BigInt r;
    BigInt mm = big_from_u64(m);
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mm.get_mpz_t());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, r.get_mpz_t());
    return out;
}

} // namespace doldkit

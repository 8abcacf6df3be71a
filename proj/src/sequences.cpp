#include "doldkit/sequences.hpp"
#include "doldkit/modular.hpp"

#include <array>
#include <bit>

namespace doldkit {

namespace {

int top_bit(Index n)
{
    const auto hi = static_cast<std::uint64_t>(n >> 64);
    if (hi != 0) return 127 - std::countl_zero(hi);
    return 63 - std::countl_zero(static_cast<std::uint64_t>(n));
}

using Mat = std::array<BigInt, 4>; // row-major 2x2
using ModMat = std::array<std::uint64_t, 4>;

Mat mat_mul(const Mat& a, const Mat& b)
{
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

ModMat mat_mul(const ModMat& a, const ModMat& b, std::uint64_t m)
{
    auto dot = [m](std::uint64_t x, std::uint64_t y, std::uint64_t z, std::uint64_t w) {
        return mod::add(mod::mul(x, y, m), mod::mul(z, w, m), m);
    };
    return {dot(a[0], b[0], a[1], b[2]), dot(a[0], b[1], a[1], b[3]),
            dot(a[2], b[0], a[3], b[2]), dot(a[2], b[1], a[3], b[3])};
}

// [[P, -Q], [1, 0]]^n = [[U_{n+1}, -Q U_n], [U_n, -Q U_{n-1}]]
Mat companion_power(const LucasParams& params, std::uint64_t n)
{
    Mat result{BigInt(1), BigInt(0), BigInt(0), BigInt(1)};
    Mat base{big_from_i64(params.P()), -big_from_i64(params.Q()), BigInt(1), BigInt(0)};
    while (n > 0) {
        if (n & 1) result = mat_mul(result, base);
        n >>= 1;
        if (n > 0) base = mat_mul(base, base);
    }
    return result;
}

ModMat companion_power_mod(const LucasParams& params, Index n, std::uint64_t m)
{
    ModMat result{1 % m, 0, 0, 1 % m};
    ModMat base{mod::from_signed(params.P(), m), mod::neg(mod::from_signed(params.Q(), m), m), 1 % m, 0};
    while (n > 0) {
        if (n & 1) result = mat_mul(result, base, m);
        n >>= 1;
        if (n > 0) base = mat_mul(base, base, m);
    }
    return result;
}

void require_modulus(std::uint64_t m)
{
    if (m == 0) throw std::invalid_argument("modulus must be positive");
}

} // namespace

BigInt LucasParams::discriminant() const
{
    const BigInt p = big_from_i64(p_);
    return p * p - 4 * big_from_i64(q_);
}

BigInt fib(std::uint64_t n)
{
    BigInt a = 0, b = 1; // F_k, F_{k+1}
    if (n == 0) return a;
    BigInt t;
    for (int bit = top_bit(n); bit >= 0; --bit) {
        // doubling: F_{2k} = F_k (2F_{k+1} - F_k), F_{2k+1} = F_k^2 + F_{k+1}^2
        t = 2 * b - a;
        t *= a;
        b = a * a + b * b;
        a = std::move(t);
        if ((n >> bit) & 1) {
            a += b;
            std::swap(a, b);
        }
    }
    return a;
}

std::pair<std::uint64_t, std::uint64_t> fib_pair_mod(Index n, std::uint64_t m)
{
    require_modulus(m);
    std::uint64_t a = 0, b = 1 % m;
    if (n == 0) return {a, b};
    for (int bit = top_bit(n); bit >= 0; --bit) {
        const std::uint64_t c = mod::mul(a, mod::sub(mod::add(b, b, m), a, m), m);
        const std::uint64_t d = mod::add(mod::mul(a, a, m), mod::mul(b, b, m), m);
        if ((n >> bit) & 1) {
            a = d;
            b = mod::add(c, d, m);
        } else {
            a = c;
            b = d;
        }
    }
    return {a, b};
}

std::uint64_t fib_mod(Index n, std::uint64_t m) { return fib_pair_mod(n, m).first; }

BigInt lucas_companion(std::uint64_t n)
{
    if (n == 0) return 2;
    // L_n = F_{n-1} + F_{n+1} = 2 F_{n+1} - F_n
    BigInt fn = fib(n);
    BigInt fn1 = fib(n - 1);
    return 2 * (fn + fn1) - fn;
}

std::uint64_t lucas_companion_mod(Index n, std::uint64_t m)
{
    const auto [fn, fn1] = fib_pair_mod(n, m);
    return mod::sub(mod::add(fn1, fn1, m), fn, m);
}

BigInt lucasU(const LucasParams& params, std::uint64_t n) { return companion_power(params, n)[2]; }

BigInt lucasV(const LucasParams& params, std::uint64_t n)
{
    const Mat mp = companion_power(params, n);
    return 2 * mp[0] - big_from_i64(params.P()) * mp[2];
}

std::uint64_t lucasU_mod(const LucasParams& params, Index n, std::uint64_t m)
{
    require_modulus(m);
    return companion_power_mod(params, n, m)[2];
}

std::uint64_t lucasV_mod(const LucasParams& params, Index n, std::uint64_t m)
{
    require_modulus(m);
    const ModMat mp = companion_power_mod(params, n, m);
    return mod::sub(mod::add(mp[0], mp[0], m), mod::mul(mod::from_signed(params.P(), m), mp[2], m), m);
}

BigInt spec_eval(const SequenceSpec& spec, std::uint64_t n, std::uint64_t exact_cutoff)
{
    if (n == 0) throw std::invalid_argument("spec_eval: n must be positive");
    const Index k = spec.index_of(n);
    if (k > exact_cutoff)
        throw ExactRangeError("spec_eval: index " + index_to_string(k) + " of " + spec.str() +
                              " exceeds the exact cutoff " + std::to_string(exact_cutoff));
    return big_from_i64(spec.multiplier()) * spec.base_at(static_cast<std::uint64_t>(k), exact_cutoff);
}

std::uint64_t spec_eval_mod(const SequenceSpec& spec, std::uint64_t n, std::uint64_t m)
{
    require_modulus(m);
    if (n == 0) throw std::invalid_argument("spec_eval_mod: n must be positive");
    const Index k = spec.index_of(n);
    return mod::mul(mod::from_signed(spec.multiplier(), m), spec.base_at_mod(k, m), m);
}

} // namespace doldkit

#include "doldkit/arith.hpp"
#include "doldkit/modular.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace doldkit {

namespace {

constexpr std::uint64_t kTrialLimit = 1'000'000;

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s)
{
    a %= n;
    if (a == 0) return false;
    std::uint64_t x = mod::pow(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned r = 1; r < s; ++r) {
        x = mod::mul(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

std::uint64_t pollard_brent(std::uint64_t n)
{
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t x) { return mod::add(mod::mul(x, x, n), c, n); };
        std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
        std::uint64_t r = 1;
        constexpr std::uint64_t block = 128;
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            std::uint64_t k = 0;
            do {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(block, r - k); ++i) {
                    y = f(y);
                    q = mod::mul(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += block;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_rec(std::uint64_t n, std::vector<std::uint64_t>& out)
{
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    std::uint64_t d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

void require_positive(std::uint64_t n, const char* what)
{
    if (n == 0) throw std::invalid_argument(std::string(what) + ": argument must be positive");
}

} // namespace

std::string index_to_string(Index v)
{
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

std::uint64_t Factorization::value() const
{
    std::uint64_t v = 1;
    for (const auto& e : entries) v *= checked_pow_u64(e.prime, e.exponent);
    return v;
}

std::size_t Factorization::divisor_count() const
{
    std::size_t c = 1;
    for (const auto& e : entries) c *= e.exponent + 1;
    return c;
}

ExactRational::ExactRational(BigInt numerator, BigInt denominator)
{
    if (denominator == 0) throw std::invalid_argument("reduce_fraction: zero denominator");
    BigInt g;
    mpz_gcd(g.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
    if (g != 0) {
        mpz_divexact(numerator.get_mpz_t(), numerator.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(denominator.get_mpz_t(), denominator.get_mpz_t(), g.get_mpz_t());
    }
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    num_ = std::move(numerator);
    den_ = std::move(denominator);
}

std::string ExactRational::str() const { return to_string(num_) + "/" + to_string(den_); }

ExactRational reduce_fraction(const BigInt& numerator, const BigInt& denominator)
{
    return ExactRational(numerator, denominator);
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

Factorization factorize(std::uint64_t n)
{
    if (n < 2) throw std::invalid_argument("factorize: n must be at least 2");
    Factorization f;
    auto take = [&](std::uint64_t p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) f.entries.push_back({p, e});
    };
    take(2);
    for (std::uint64_t p = 3; p <= kTrialLimit && p * p <= n; p += 2) take(p);
    if (n > 1) {
        if (is_prime(n)) {
            f.entries.push_back({n, 1});
        } else {
            // all prime factors exceed the trial limit here
            std::vector<std::uint64_t> rest;
            factor_rec(n, rest);
            std::sort(rest.begin(), rest.end());
            for (std::uint64_t p : rest) {
                if (!f.entries.empty() && f.entries.back().prime == p)
                    ++f.entries.back().exponent;
                else
                    f.entries.push_back({p, 1});
            }
        }
    }
    return f;
}

int mobius(const Factorization& f)
{
    int sign = 1;
    for (const auto& e : f.entries) {
        if (e.exponent > 1) return 0;
        sign = -sign;
    }
    return sign;
}

int mobius(std::uint64_t n)
{
    require_positive(n, "mobius");
    if (n == 1) return 1;
    return mobius(factorize(n));
}

std::vector<std::uint64_t> divisors(const Factorization& f)
{
    std::vector<std::uint64_t> out{1};
    for (const auto& e : f.entries) {
        const std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (unsigned k = 1; k <= e.exponent; ++k) {
            pk *= e.prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    require_positive(n, "divisors");
    if (n == 1) return {1};
    return divisors(factorize(n));
}

int legendre(std::int64_t a, std::uint64_t p)
{
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("legendre: p must be an odd prime");
    const std::uint64_t r = mod::pow(mod::from_signed(a, p), (p - 1) / 2, p);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound)
{
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b)
{
    if (a == 0 || b == 0) return 0;
    const std::uint64_t g = std::gcd(a, b);
    const unsigned __int128 r = static_cast<unsigned __int128>(a / g) * b;
    if (r > ~std::uint64_t{0}) throw IndexOverflow("lcm exceeds 64 bits");
    return static_cast<std::uint64_t>(r);
}

std::uint64_t checked_pow_u64(std::uint64_t base, unsigned exp)
{
    unsigned __int128 r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        r *= base;
        if (r > ~std::uint64_t{0}) throw IndexOverflow("power exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

BigInt mobius_convolve(const ExactEvaluator& u, std::uint64_t n)
{
    require_positive(n, "mobius_convolve");
    if (n == 1) return u(1);
    const Factorization f = factorize(n);
    BigInt sum = 0;
    for (std::uint64_t d : divisors(f)) {
        const int mu = mobius(n / d);
        if (mu == 0) continue;
        if (mu > 0)
            sum += u(d);
        else
            sum -= u(d);
    }
    return sum;
}

std::uint64_t mobius_convolve(const ModularEvaluator& u, std::uint64_t n, std::uint64_t modulus)
{
    require_positive(n, "mobius_convolve");
    if (modulus == 0) throw std::invalid_argument("mobius_convolve: modulus must be positive");
    if (n == 1) return u(1, modulus) % modulus;
    const Factorization f = factorize(n);
    std::uint64_t sum = 0;
    for (std::uint64_t d : divisors(f)) {
        const int mu = mobius(n / d);
        if (mu == 0) continue;
        const std::uint64_t term = u(d, modulus) % modulus;
        sum = mu > 0 ? mod::add(sum, term, modulus) : mod::sub(sum, term, modulus);
    }
    return sum;
}

} // namespace doldkit

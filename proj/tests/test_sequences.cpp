#include "doldkit/arith.hpp"
#include "doldkit/sequences.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace doldkit;

TEST(Fib, Examples)
{
    EXPECT_EQ(fib(0), 0);
    EXPECT_EQ(fib(1), 1);
    EXPECT_EQ(fib(2), 1);
    EXPECT_EQ(fib(10), 55);
    EXPECT_EQ(fib(25), 75025);
}

TEST(Fib, DoublingMatchesRecurrence)
{
    const auto f = oracle::fib_table(5000);
    for (std::uint64_t n = 0; n <= 5000; ++n) ASSERT_EQ(fib(n), f[n]) << n;
}

TEST(Fib, AdditionLaw)
{
    // F_{r+s} = F_r L_s + (-1)^{s+1} F_{r-s}
    for (std::uint64_t r = 1; r <= 300; ++r)
        for (std::uint64_t s = 1; s <= r; ++s) {
            const BigInt sign = (s % 2 == 1) ? 1 : -1;
            ASSERT_EQ(fib(r + s), fib(r) * lucas_companion(s) + sign * fib(r - s)) << r << "," << s;
        }
}

TEST(FibMod, Examples)
{
    EXPECT_EQ(fib_mod(25, 5), 0u);
    EXPECT_EQ(fib_mod(7, 7), 6u);
    for (std::uint64_t n : {0, 1, 17, 1000}) EXPECT_EQ(fib_mod(n, 1), 0u);
    EXPECT_THROW(fib_mod(3, 0), std::invalid_argument);
}

TEST(FibMod, HugeIndexAndModulus)
{
    // F_{n+ell} == F_n: ell(10^9) = 1.5 * 10^9
    const std::uint64_t m = 1'000'000'000;
    const Index n = Index{1} << 100;
    EXPECT_EQ(fib_mod(n, m), fib_mod(n + 1'500'000'000, m));
    // moduli near 2^64 exercise the 128-bit products
    const std::uint64_t big = ~std::uint64_t{0} - 58; // largest prime below 2^64
    EXPECT_EQ(fib_mod(300, big), mod_u64(fib(300), big));
    const auto [a, b] = fib_pair_mod(299, big);
    EXPECT_EQ(a, mod_u64(fib(299), big));
    EXPECT_EQ(b, mod_u64(fib(300), big));
}

TEST(Lucas, Examples)
{
    EXPECT_EQ(lucas_companion(0), 2);
    EXPECT_EQ(lucas_companion(1), 1);
    EXPECT_EQ(lucas_companion(2), 3);
    EXPECT_EQ(lucas_companion(7), 29);
    EXPECT_EQ(lucas_companion_mod(7, 7), 1u);
    EXPECT_THROW(lucas_companion_mod(7, 0), std::invalid_argument);
}

TEST(Lucas, PrimeCongruence)
{
    for (std::uint64_t p : primes_up_to(10'000)) ASSERT_EQ(lucas_companion_mod(p, p), 1 % p) << p;
}

TEST(LucasPair, Examples)
{
    for (std::uint64_t n = 0; n <= 30; ++n) EXPECT_EQ(lucasU(kFibonacciParams, n), fib(n)) << n;
    EXPECT_EQ(lucasU({3, 2}, 4), 15);
    for (std::int64_t P : {-7, 0, 4})
        for (std::int64_t Q : {-3, 0, 5}) EXPECT_EQ(lucasU({P, Q}, 2), P);
    EXPECT_EQ(lucasV({1, -1}, 7), 29);
    EXPECT_EQ(lucasV({3, 2}, 0), 2);
    EXPECT_EQ(LucasParams(1, -1).discriminant(), 5);
    EXPECT_EQ(LucasParams(2, 1).discriminant(), 0);
    EXPECT_THROW(lucasU_mod({1, 1}, 3, 0), std::invalid_argument);
    EXPECT_THROW(lucasV_mod({1, 1}, 3, 0), std::invalid_argument);
}

TEST(LucasPair, MatchesIteration)
{
    for (std::int64_t P = -5; P <= 5; ++P)
        for (std::int64_t Q = -5; Q <= 5; ++Q)
            for (std::uint64_t n = 0; n <= 40; ++n) {
                ASSERT_EQ(lucasU({P, Q}, n), oracle::lucas_iterate(P, Q, n, false));
                ASSERT_EQ(lucasV({P, Q}, n), oracle::lucas_iterate(P, Q, n, true));
            }
}

TEST(LucasPair, ModularResiduesNormalized)
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 2000; ++i) {
        const std::int64_t P = static_cast<std::int64_t>(rng() % 41) - 20;
        const std::int64_t Q = static_cast<std::int64_t>(rng() % 41) - 20;
        const std::uint64_t n = rng() % 200;
        const std::uint64_t m = 1 + rng() % 100'000;
        const auto u = lucasU_mod({P, Q}, n, m);
        const auto v = lucasV_mod({P, Q}, n, m);
        ASSERT_LT(u, m);
        ASSERT_LT(v, m);
        ASSERT_EQ(u, mod_u64(oracle::lucas_iterate(P, Q, n, false), m));
        ASSERT_EQ(v, mod_u64(oracle::lucas_iterate(P, Q, n, true), m));
    }
}

TEST(SequenceSpec, ParseAndRoundTrip)
{
    const auto phi = SequenceSpec::parse("5*fib^2");
    EXPECT_EQ(phi, SequenceSpec::fibonacci(2, 5));
    EXPECT_EQ(phi.str(), "5*fib^2");
    EXPECT_EQ(SequenceSpec::parse("lucasV").base(), BaseKind::lucas_companion);
    const auto u = SequenceSpec::parse("-3*lucasU:P=-2,Q=7^3");
    EXPECT_EQ(u.base(), BaseKind::lucasU);
    EXPECT_EQ(u.params(), LucasParams(-2, 7));
    EXPECT_EQ(u.power(), 3u);
    EXPECT_EQ(u.multiplier(), -3);
    for (const char* text : {"fib", "fib^3", "5*fib^2", "lucasV", "2*lucasV^4", "lucasU:P=1,Q=-1",
                             "-20*lucasU:P=3,Q=2^2", "lucasV:P=-4,Q=9", "0*fib"}) {
        EXPECT_EQ(SequenceSpec::parse(text).str(), text);
        EXPECT_EQ(SequenceSpec::parse(SequenceSpec::parse(text).str()), SequenceSpec::parse(text));
    }
    // non-canonical forms normalize
    EXPECT_EQ(SequenceSpec::parse("1*fib^1").str(), "fib");
}

TEST(SequenceSpec, SyntaxErrorsCarryPosition)
{
    const std::pair<const char*, std::size_t> cases[] = {
        {"", 0}, {"fob", 0}, {"5*", 2}, {"fib^", 4}, {"fib^0", 4}, {"fib^2x", 5},
        {"lucasU", 6}, {"lucasU:P=1", 10}, {"lucasU:Q=1,P=1", 7}, {"05*fib", 0}, {"*fib", 0},
    };
    for (auto [text, pos] : cases) {
        try {
            SequenceSpec::parse(text);
            ADD_FAILURE() << "accepted: " << text;
        } catch (const SpecSyntaxError& e) {
            EXPECT_EQ(e.position(), pos) << text << ": " << e.what();
            EXPECT_NE(e.annotated().find('^'), std::string::npos);
        }
    }
}

TEST(SequenceSpec, Evaluation)
{
    const auto phi = SequenceSpec::fibonacci(2, 5);
    EXPECT_EQ(spec_eval(phi, 3), 170);
    EXPECT_EQ(spec_eval_mod(phi, 5, 5), 0u);
    for (std::uint64_t k = 1; k <= 50; ++k) EXPECT_EQ(spec_eval(SequenceSpec::fibonacci(), k), fib(k));
    EXPECT_EQ(spec_eval(SequenceSpec::parse("-2*lucasV"), 3), -8);
    EXPECT_EQ(spec_eval_mod(SequenceSpec::parse("-2*lucasV"), 3, 5), 2u);
}

TEST(SequenceSpec, IndexOverflowIsLoud)
{
    const auto s = SequenceSpec::fibonacci(3);
    // (2^42)^3 = 2^126 still fits the 127-bit index range, (2^43)^3 does not
    EXPECT_NO_THROW(s.index_of(std::uint64_t{1} << 42));
    EXPECT_THROW(s.index_of(std::uint64_t{1} << 43), IndexOverflow);
    EXPECT_THROW(spec_eval_mod(SequenceSpec::fibonacci(7), 1'000'000, 7), IndexOverflow);
}

TEST(SequenceSpec, ExactCutoffIsEnforced)
{
    EXPECT_THROW(spec_eval(SequenceSpec::fibonacci(2), 4000, 1'000'000), ExactRangeError);
    EXPECT_NO_THROW(spec_eval(SequenceSpec::fibonacci(2), 1000, 1'000'000));
}

TEST(SequenceSpec, RejectsZeroPower)
{
    EXPECT_THROW(SequenceSpec(BaseKind::fibonacci, kFibonacciParams, 0, 1), std::invalid_argument);
}

TEST(SequenceSpec, ModularExactCoherence)
{
    // all bases, n <= 1000 for power 1, random moduli
    const SequenceSpec specs[] = {
        SequenceSpec::fibonacci(1, 3), SequenceSpec::lucas(1, -2), SequenceSpec::lucasU({3, -5}, 1, 7),
        SequenceSpec::lucasV({-2, 3}, 1, -1)};
    std::mt19937_64 rng(17);
    for (const auto& s : specs)
        for (std::uint64_t n = 1; n <= 1000; n += 1 + rng() % 7) {
            const std::uint64_t m = 1 + rng() % 1'000'000'007ULL;
            ASSERT_EQ(spec_eval_mod(s, n, m), mod_u64(spec_eval(s, n), m)) << s.str() << " " << n;
        }
}

#include "doldkit/arith.hpp"
#include "doldkit/parallel.hpp"
#include "doldkit/realize.hpp"
#include "doldkit/sequences.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace doldkit;

namespace {

const SequenceSpec kPhi = SequenceSpec::fibonacci(2, 5);

} // namespace

TEST(OrbitCount, Examples)
{
    EXPECT_EQ(orbit_count(SequenceSpec::fibonacci(2), 5).str(), "75024/5");
    EXPECT_EQ(orbit_count(kPhi, 5).str(), "75024/1");
    EXPECT_EQ(orbit_count(SequenceSpec::lucas(), 5).str(), "2/1");
    EXPECT_THROW(orbit_count(kPhi, 0), std::invalid_argument);
}

TEST(OrbitCount, DenominatorMatchesResidue)
{
    const SequenceSpec specs[] = {SequenceSpec::fibonacci(), SequenceSpec::fibonacci(2), SequenceSpec::fibonacci(3),
                                  kPhi, SequenceSpec::lucas(), SequenceSpec::lucasU({3, 5}, 1, 2)};
    for (const auto& s : specs)
        for (std::uint64_t n = 1; n <= 100; ++n) {
            const auto oc = orbit_count(s, n);
            const auto res = dold_residue(s, n);
            ASSERT_EQ(oc.denominator(), dold_denominator(s, n)) << s.str() << " " << n;
            ASSERT_EQ(oc.denominator(), n / gcd_u64(n, res));
            ASSERT_EQ(n % dold_denominator(s, n), 0u);
        }
}

TEST(DoldScan, Examples)
{
    const auto a = dold_scan(kPhi, 30, {.workers = 1, .exact_bound = 12});
    EXPECT_TRUE(a.all_pass());
    EXPECT_EQ(a.rows.size(), 30u);
    EXPECT_TRUE(a.rows[11].exact_checked);
    EXPECT_FALSE(a.rows[12].exact_checked);

    const auto b = dold_scan(SequenceSpec::fibonacci(2), 5);
    ASSERT_EQ(b.fail_count(), 1u);
    EXPECT_EQ(b.first_failure()->n, 5u);
    EXPECT_EQ(b.first_failure()->residue, 4u);
    EXPECT_EQ(b.first_failure()->denominator, 5u);

    const auto c = dold_scan(SequenceSpec::fibonacci(), 7);
    EXPECT_TRUE(c.rows[1].pass);
    EXPECT_FALSE(c.rows[6].pass);
    EXPECT_EQ(c.rows[6].residue, 5u);
    EXPECT_THROW(dold_scan(kPhi, 0), std::invalid_argument);
}

TEST(DoldScan, RowInvariants)
{
    const auto r = dold_scan(SequenceSpec::fibonacci(), 300);
    for (const auto& row : r.rows) {
        ASSERT_EQ(row.denominator == 1, row.pass);
        ASSERT_EQ(row.n % row.denominator, 0u);
    }
    // no early abort: every n is present
    EXPECT_EQ(r.rows.back().n, 300u);
    const auto primes = r.denominator_primes();
    EXPECT_TRUE(std::is_sorted(primes.begin(), primes.end()));
    EXPECT_NE(std::find(primes.begin(), primes.end(), 7u), primes.end());
}

TEST(DoldScan, NegativeHalfFailsOnlyAtFive)
{
    const auto r = dold_scan(SequenceSpec::fibonacci(2), 5);
    for (const auto& row : r.rows) EXPECT_EQ(row.pass, row.n != 5) << row.n;
}

TEST(DoldScan, WorkersDoNotChangeRows)
{
    const auto a = dold_scan(SequenceSpec::fibonacci(3), 200, {.workers = 1});
    const auto b = dold_scan(SequenceSpec::fibonacci(3), 200, {.workers = 5});
    ASSERT_EQ(a.rows.size(), b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        EXPECT_EQ(a.rows[i].n, b.rows[i].n);
        EXPECT_EQ(a.rows[i].residue, b.rows[i].residue);
    }
}

TEST(DoldScan, RealizableSequences)
{
    EXPECT_TRUE(dold_scan(SequenceSpec::lucas(), 500).all_pass());
    EXPECT_TRUE(dold_scan(kPhi, 300).all_pass());
    EXPECT_TRUE(dold_scan(SequenceSpec::fibonacci(2, 0), 50).all_pass());
}

TEST(SignCheck, Examples)
{
    EXPECT_TRUE(sign_check_exact(kPhi, 50).all_non_negative());
    EXPECT_TRUE(sign_check_exact(SequenceSpec::lucas(), 50).all_non_negative());
    const auto neg = sign_check_exact(SequenceSpec::fibonacci(1, -1), 3);
    EXPECT_FALSE(neg.rows[0].non_negative);
    EXPECT_EQ(neg.first_negative()->n, 1u);
    const auto u = sign_check_exact(SequenceSpec::lucasU({-1, 1}, 1), 1);
    EXPECT_EQ(u.rows[0].value, 1);
    EXPECT_TRUE(u.rows[0].non_negative);
}

TEST(SignCheck, ValuesMatchOracleSum)
{
    const auto f = oracle::fib_table(40 * 40);
    const auto r = sign_check_exact(kPhi, 40);
    for (const auto& row : r.rows) {
        const auto expected = oracle::mobius_sum([&](std::uint64_t d) { return BigInt(5 * f[d * d]); }, row.n);
        ASSERT_EQ(row.value, expected) << row.n;
    }
}

TEST(Growth, Examples)
{
    EXPECT_TRUE(growth_certificate(kPhi, 200).pass);
    const auto one = growth_certificate([](std::uint64_t) { return BigInt(1); }, 10);
    EXPECT_FALSE(one.pass);
    EXPECT_EQ(one.first_failure, 2u);
    EXPECT_EQ(one.reason, "A_2n < n A_n");
    const auto fact = growth_certificate([](std::uint64_t n) -> BigInt {
        BigInt r = 1;
        for (std::uint64_t i = 2; i <= n; ++i) r *= static_cast<unsigned long>(i);
        return r;
    }, 20);
    EXPECT_TRUE(fact.pass);
}

TEST(Growth, DetectsNonMonotoneAndNegative)
{
    const auto dip = growth_certificate([](std::uint64_t n) {
        BigInt v;
        mpz_ui_pow_ui(v.get_mpz_t(), 10, n);
        return n == 7 ? BigInt(0) : v;
    }, 10);
    EXPECT_FALSE(dip.pass);
    EXPECT_EQ(dip.reason, "not non-decreasing");
    EXPECT_EQ(dip.first_failure, 7u);
    const auto neg = growth_certificate([](std::uint64_t n) { return BigInt(static_cast<long>(n) - 3); }, 10);
    EXPECT_FALSE(neg.pass);
    EXPECT_EQ(neg.reason, "negative value");
}

TEST(Growth, EnclosuresAgreeWithExact)
{
    const auto fast = growth_certificate(kPhi, 100);
    const auto slow = growth_certificate([](std::uint64_t n) { return spec_eval(kPhi, n); }, 100);
    EXPECT_EQ(fast.pass, slow.pass);
    EXPECT_TRUE(fast.pass);
    // plain F grows too slowly for A_2n >= n A_n
    const auto lin = growth_certificate(SequenceSpec::fibonacci(1), 100);
    const auto lin_exact = growth_certificate([](std::uint64_t n) { return fib(n); }, 100);
    EXPECT_EQ(lin.pass, lin_exact.pass);
    EXPECT_EQ(lin.first_failure, lin_exact.first_failure);
    EXPECT_TRUE(growth_certificate(SequenceSpec::fibonacci(2, 0), 10).pass);
    EXPECT_FALSE(growth_certificate(SequenceSpec::fibonacci(2, -5), 10).pass);
}

TEST(Growth, CertificateImpliesNonNegativeConvolution)
{
    ASSERT_TRUE(growth_certificate(kPhi, 60).pass);
    EXPECT_TRUE(sign_check_exact(kPhi, 120).all_non_negative());
}

TEST(Witnesses, Examples)
{
    const auto expect_primes = [](const std::vector<DenominatorWitness>& ws) {
        std::vector<std::uint64_t> out;
        for (const auto& w : ws) out.push_back(w.prime);
        return out;
    };
    const std::vector<std::uint64_t> want{3, 7, 13, 17, 23};
    EXPECT_EQ(expect_primes(denominator_prime_witnesses(SequenceSpec::fibonacci(), 25)), want);
    EXPECT_EQ(expect_primes(denominator_prime_witnesses(SequenceSpec::fibonacci(3), 25)), want);
    EXPECT_TRUE(denominator_prime_witnesses(SequenceSpec::lucas(), 500).empty());
    for (const auto& w : denominator_prime_witnesses(SequenceSpec::fibonacci(), 25)) {
        EXPECT_EQ(w.n, w.prime);
        // F_p == -1, so F_p - F_1 == -2 (mod p)
        EXPECT_EQ(fib_mod(w.prime, w.prime), w.prime - 1);
        EXPECT_EQ(w.residue, w.prime - 2);
        EXPECT_EQ(orbit_count(SequenceSpec::fibonacci(), w.n).denominator(), w.prime);
    }
}

TEST(Witnesses, EvenPowersHaveDenominatorFive)
{
    for (unsigned j : {2u, 4u, 6u}) EXPECT_EQ(dold_denominator(SequenceSpec::fibonacci(j), 5), 5u) << j;
}

TEST(Golden, Examples)
{
    EXPECT_EQ(golden_mean_fix_count(1).enumeration, 1u);
    EXPECT_EQ(golden_mean_fix_count(2).enumeration, 3u);
    EXPECT_EQ(golden_mean_fix_count(4).enumeration, 7u);
    EXPECT_THROW(golden_mean_fix_count(26), std::invalid_argument);
    EXPECT_THROW(golden_mean_fix_count(0), std::invalid_argument);
}

TEST(Golden, EnumerationTraceAndLucasAgree)
{
    for (std::uint64_t n = 1; n <= 20; ++n) {
        const auto g = golden_mean_fix_count(n);
        ASSERT_EQ(g.enumeration, g.trace) << n;
        ASSERT_EQ(BigInt(static_cast<unsigned long>(g.trace)), oracle::lucas_iterate(1, -1, n, true)) << n;
    }
}

TEST(OrbitsToFix, Examples)
{
    EXPECT_EQ(orbits_to_fix([](std::uint64_t) { return BigInt(1); }, 2), 3);
    const ExactEvaluator lucas_orbits = [](std::uint64_t n) { return orbit_count(SequenceSpec::lucas(), n).numerator(); };
    EXPECT_EQ(orbits_to_fix(lucas_orbits, 5), 11);
    for (std::uint64_t n = 1; n <= 30; ++n) {
        const ExactEvaluator o = [](std::uint64_t d) { return orbit_count(kPhi, d).numerator(); };
        ASSERT_EQ(orbits_to_fix(o, n), spec_eval(kPhi, n)) << n;
    }
}

TEST(OrbitsToFix, RandomRealizablePrefixesRoundTrip)
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const std::uint64_t len = 1 + rng() % 128;
        std::vector<BigInt> orbits(len + 1);
        for (std::uint64_t i = 1; i <= len; ++i) orbits[i] = static_cast<unsigned long>(rng() % 1'000'000);
        const ExactEvaluator o = [&](std::uint64_t d) { return orbits[d]; };
        std::vector<BigInt> fix(len + 1);
        for (std::uint64_t n = 1; n <= len; ++n) fix[n] = orbits_to_fix(o, n);
        const ExactEvaluator u = [&](std::uint64_t d) { return fix[d]; };
        for (std::uint64_t n = 1; n <= len; ++n) {
            const BigInt conv = mobius_convolve(u, n);
            ASSERT_EQ(mod_u64(conv, n), 0u);
            ASSERT_EQ(BigInt(conv / static_cast<unsigned long>(n)), orbits[n]);
        }
    }
}

TEST(Parallel, ExceptionsPropagateAndOrderIsKept)
{
    const auto v = parallel_map<std::uint64_t>(1000, 7, [](std::size_t i) { return std::uint64_t{i * i}; });
    for (std::size_t i = 0; i < v.size(); ++i) ASSERT_EQ(v[i], i * i);
    EXPECT_THROW(parallel_map<int>(100, 4, [](std::size_t i) -> int {
                     if (i == 42) throw std::runtime_error("boom");
                     return 0;
                 }),
                 std::runtime_error);
}

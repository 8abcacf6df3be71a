#include "doldkit/arith.hpp"
#include "doldkit/conjecture.hpp"
#include "doldkit/realize.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

using namespace doldkit;

TEST(IntRange, Parse)
{
    EXPECT_EQ(IntRange::parse("-10..10"), (IntRange{-10, 10}));
    EXPECT_EQ(IntRange::parse("5..5").size(), 1u);
    EXPECT_TRUE(IntRange::parse("3..2").empty());
    EXPECT_EQ(IntRange::parse("-3..-1").str(), "-3..-1");
    EXPECT_THROW(IntRange::parse("1-3"), std::invalid_argument);
    EXPECT_THROW(IntRange::parse("a..3"), std::invalid_argument);
    EXPECT_THROW(IntRange::parse("1..3x"), std::invalid_argument);
}

TEST(Discriminant, Classification)
{
    EXPECT_EQ(classify_discriminant(0), DiscriminantClass::zero);
    EXPECT_EQ(classify_discriminant(1), DiscriminantClass::unit);
    EXPECT_EQ(classify_discriminant(-1), DiscriminantClass::unit);
    EXPECT_EQ(classify_discriminant(5), DiscriminantClass::prime_power);
    EXPECT_EQ(classify_discriminant(-8), DiscriminantClass::prime_power);
    EXPECT_EQ(classify_discriminant(12), DiscriminantClass::other);
}

TEST(Conjecture, Examples)
{
    const auto fibcell = conjecture_check({1, -1}, 100);
    EXPECT_EQ(fibcell.status, CellStatus::pass);
    EXPECT_EQ(fibcell.discriminant, 5);
    const auto two = conjecture_check({3, 2}, 100);
    EXPECT_EQ(two.status, CellStatus::pass);
    EXPECT_EQ(two.discriminant_class, DiscriminantClass::unit);
    EXPECT_EQ(conjecture_check({2, 1}, 100).status, CellStatus::degenerate);
    EXPECT_EQ(conjecture_check({5, 6}, 50).status, CellStatus::pass);
    EXPECT_THROW(conjecture_check({1, 1}, 0), std::invalid_argument);
}

TEST(Conjecture, PowersOfTwoAgainstModExpOracle)
{
    // U_n(3,2) = 2^n - 1, so the cell is sum mu(n/d) (2^{d^2} - 1) mod n
    for (std::uint64_t n = 1; n <= 100; ++n) {
        std::int64_t acc = 0;
        for (auto d : oracle::divisors_scan(n)) {
            const std::int64_t term = (static_cast<std::int64_t>(oracle::powmod(2, d * d, n)) + static_cast<std::int64_t>(n) - 1) %
                                      static_cast<std::int64_t>(n);
            acc += oracle::mobius_trial(n / d) * term;
        }
        const std::int64_t sn = static_cast<std::int64_t>(n);
        ASSERT_EQ(((acc % sn) + sn) % sn, 0) << n;
        ASSERT_EQ(dold_residue(conjecture_spec({3, 2}), n), 0u) << n;
    }
}

TEST(Conjecture, FibonacciInstanceMatchesDoldScan)
{
    const auto scan = dold_scan(SequenceSpec::fibonacci(2, 5), 200);
    const auto spec = conjecture_spec({1, -1});
    for (const auto& row : scan.rows) ASSERT_EQ(dold_residue(spec, row.n), row.residue) << row.n;
    EXPECT_EQ(conjecture_check({1, -1}, 200).status, CellStatus::pass);
}

TEST(Conjecture, UnitDiscriminantFamilies)
{
    // U_n(+-(2k+1), k^2+k) have D = 1 and pass undilated
    for (std::int64_t k = -3; k <= 3; ++k)
        for (std::int64_t sign : {1, -1}) {
            const LucasParams params{sign * (2 * k + 1), k * k + k};
            EXPECT_EQ(params.discriminant(), 1);
            EXPECT_TRUE(dold_scan(SequenceSpec::lucasU(params), 100).all_pass()) << k << " " << sign;
        }
}

TEST(Conjecture, VSequencesAlwaysPass)
{
    for (std::int64_t P = -5; P <= 5; ++P)
        for (std::int64_t Q = -5; Q <= 5; ++Q)
            ASSERT_TRUE(dold_scan(SequenceSpec::lucasV({P, Q}), 100).all_pass()) << P << " " << Q;
}

TEST(Conjecture, UndilatedUCanFail)
{
    // without the discriminant factor the plain Fibonacci squares fail at 5
    const auto r = dold_scan(SequenceSpec::lucasU({1, -1}, 2), 10);
    EXPECT_FALSE(r.all_pass());
    EXPECT_EQ(r.first_failure()->n, 5u);
}

TEST(ConjectureScan, SmallGrid)
{
    const auto r = conjecture_scan({-2, 2}, {-2, 2}, 50);
    EXPECT_EQ(r.cells.size(), 25u);
    EXPECT_EQ(r.fail_count(), 0u);
    // row-major, P outer
    EXPECT_EQ(r.cells[0].P, -2);
    EXPECT_EQ(r.cells[0].Q, -2);
    EXPECT_EQ(r.cells[1].Q, -1);
    EXPECT_EQ(r.cells[5].P, -1);
    // D = 0 at (P,Q) = (+-2, 1) and (0, 0)
    EXPECT_EQ(r.degenerate_count(), 3u);
    // header line, then one "<label> <cells>" line per P
    std::istringstream lines(r.render_matrix());
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "P\\Q -2..2");
    std::string cells;
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        cells += line.substr(line.rfind(' ') + 1);
    }
    EXPECT_EQ(rows, 5);
    EXPECT_EQ(cells, "...0."
                     "....."
                     "..0.."
                     "....."
                     "...0.");

    std::mt19937_64 rng(9);
    for (int i = 0; i < 3; ++i) {
        const auto& cell = r.cells[rng() % r.cells.size()];
        if (cell.status == CellStatus::degenerate) continue;
        for (std::uint64_t n = 1; n <= 12; ++n)
            ASSERT_EQ(exact_conjecture_residue({cell.P, cell.Q}, n), 0u) << cell.P << " " << cell.Q << " " << n;
    }
}

TEST(ConjectureScan, EmptyAndWorkerIndependent)
{
    EXPECT_TRUE(conjecture_scan({1, 0}, {-2, 2}, 10).cells.empty());
    const auto a = conjecture_scan({-3, 3}, {-3, 3}, 40, {.workers = 1, .sign_bound = 6});
    const auto b = conjecture_scan({-3, 3}, {-3, 3}, 40, {.workers = 6, .sign_bound = 6});
    ASSERT_EQ(a.cells.size(), b.cells.size());
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        EXPECT_EQ(a.cells[i].P, b.cells[i].P);
        EXPECT_EQ(a.cells[i].Q, b.cells[i].Q);
        EXPECT_EQ(a.cells[i].status, b.cells[i].status);
        EXPECT_EQ(a.cells[i].sign_ok, b.cells[i].sign_ok);
    }
}

TEST(ConjectureScan, ExactResidueAgreesWithModular)
{
    for (std::int64_t P = -4; P <= 4; ++P)
        for (std::int64_t Q = -4; Q <= 4; ++Q)
            for (std::uint64_t n = 1; n <= 15; ++n)
                ASSERT_EQ(exact_conjecture_residue({P, Q}, n), dold_residue(conjecture_spec({P, Q}), n));
}

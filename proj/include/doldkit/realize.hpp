#pragma once

#include "doldkit/arith.hpp"
#include "doldkit/sequences.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace doldkit {

struct ScanOptions {
    unsigned workers = 1;
    /// Rows with n <= exact_bound are recomputed with exact integers and
    /// must agree with the modular residue.
    std::uint64_t exact_bound = 50;
    std::uint64_t exact_cutoff = kDefaultExactIndexCutoff;
};

/// O(n) = (1/n) sum_{d|n} mu(n/d) U_d, exactly.
ExactRational orbit_count(const SequenceSpec& spec, std::uint64_t n,
                          std::uint64_t exact_cutoff = kDefaultExactIndexCutoff);

struct OrbitRow {
    std::uint64_t n;
    ExactRational count;
};

struct OrbitReport {
    SequenceSpec spec;
    std::uint64_t max_n = 0;
    std::vector<OrbitRow> rows;

    /// True iff every count is a non-negative integer.
    bool all_realizable() const;
};

OrbitReport orbit_counts(const SequenceSpec& spec, std::uint64_t max_n, const ScanOptions& options = {});

/// (mu * U)_n mod n for the spec's sequence, never materializing big terms.
std::uint64_t dold_residue(const SequenceSpec& spec, std::uint64_t n);

/// Reduced denominator of O(n): n / gcd(n, (mu * U)_n mod n).
std::uint64_t dold_denominator(const SequenceSpec& spec, std::uint64_t n);

struct DoldRow {
    std::uint64_t n;
    std::uint64_t residue;
    std::uint64_t denominator;
    bool pass;
    bool exact_checked;
};

struct DoldReport {
    SequenceSpec spec;
    std::uint64_t max_n = 0;
    std::vector<DoldRow> rows;

    std::size_t pass_count() const;
    std::size_t fail_count() const { return rows.size() - pass_count(); }
    bool all_pass() const { return fail_count() == 0; }
    const DoldRow* first_failure() const;
    /// Sorted primes dividing some row denominator.
    std::vector<std::uint64_t> denominator_primes() const;
};

/// Every n in [1, max_n] is scanned; failures do not stop the scan.
DoldReport dold_scan(const SequenceSpec& spec, std::uint64_t max_n, const ScanOptions& options = {});

enum class SignCertificate { exact, growth_lemma };

struct SignRow {
    std::uint64_t n;
    BigInt value; // (mu * U)_n
    bool non_negative;
};

struct SignReport {
    SequenceSpec spec;
    std::uint64_t max_n = 0;
    std::vector<SignRow> rows;
    SignCertificate certificate = SignCertificate::exact;

    bool all_non_negative() const;
    const SignRow* first_negative() const;
};

SignReport sign_check_exact(const SequenceSpec& spec, std::uint64_t max_n, const ScanOptions& options = {});

/// Outcome of checking the growth-lemma hypotheses: A_n >= 0 and
/// non-decreasing on [1, 2 max_n], and A_{2n} >= n A_n for n <= max_n.
/// Passing implies (mu * A)_n >= 0 for every n <= 2 max_n.
struct GrowthResult {
    bool pass = true;
    std::uint64_t max_n = 0;
    /// First n at which a hypothesis fails; for monotonicity the failing
    /// pair is (n-1, n).
    std::optional<std::uint64_t> first_failure;
    std::string reason;
    std::size_t exact_comparisons = 0;
    std::size_t bounded_comparisons = 0;
};

GrowthResult growth_certificate(const ExactEvaluator& values, std::uint64_t max_n);

/// Same hypotheses for a spec. For fib and lucasV bases, comparisons between
/// large terms are decided by rigorous enclosures of ln(A_n) and fall back to
/// exact integers when the enclosures overlap; other bases are compared
/// exactly.
GrowthResult growth_certificate(const SequenceSpec& spec, std::uint64_t max_n,
                                std::uint64_t exact_cutoff = kDefaultExactIndexCutoff);

struct DenominatorWitness {
    std::uint64_t prime;
    std::uint64_t n;
    std::uint64_t residue;
    SequenceSpec spec;
};

/// For each odd prime p <= prime_bound with p = +-2 (mod 5), checks whether
/// the orbit count at n = p has denominator exactly p, and collects those.
std::vector<DenominatorWitness> denominator_prime_witnesses(const SequenceSpec& spec, std::uint64_t prime_bound,
                                                            unsigned workers = 1);

/// Fixed points of sigma^n for the golden mean shift, two ways.
struct GoldenMeanCount {
    std::uint64_t n;
    std::uint64_t enumeration;
    std::uint64_t trace;
};

inline constexpr std::uint64_t kGoldenEnumerationBound = 25;

/// Counts cyclic binary words of length n without two cyclically adjacent
/// 1s, and the trace of [[1,1],[1,0]]^n.
GoldenMeanCount golden_mean_fix_count(std::uint64_t n, std::uint64_t enumeration_bound = kGoldenEnumerationBound);

/// sum_{d|n} d o_d: periodic points recovered from orbit counts.
BigInt orbits_to_fix(const ExactEvaluator& orbit_counts, std::uint64_t n);

} // namespace doldkit

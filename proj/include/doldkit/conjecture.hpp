#pragma once

#include "doldkit/bigint.hpp"
#include "doldkit/sequences.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace doldkit {

/// Inclusive integer interval; empty when lo > hi.
struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = -1;

    bool empty() const { return lo > hi; }
    std::uint64_t size() const { return empty() ? 0 : static_cast<std::uint64_t>(hi - lo) + 1; }
    /// Parses "a..b", e.g. "-10..10".
    static IntRange parse(std::string_view text);
    std::string str() const;

    friend bool operator==(const IntRange&, const IntRange&) = default;
};

enum class CellStatus { pass, fail, degenerate };
enum class DiscriminantClass { zero, unit, prime_power, other };

std::string_view to_string(CellStatus s);
std::string_view to_string(DiscriminantClass c);

/// Classifies |D|: 0, 1, a prime power, or anything else.
DiscriminantClass classify_discriminant(const BigInt& d);

struct ConjectureCell {
    std::int64_t P;
    std::int64_t Q;
    BigInt discriminant;
    DiscriminantClass discriminant_class;
    CellStatus status;
    /// Set for fail cells.
    std::optional<std::uint64_t> first_failure;
    std::uint64_t residue = 0;
    /// Informational only: (mu * U)_n >= 0 for every n <= sign_bound.
    std::optional<bool> sign_ok;
};

struct ConjectureOptions {
    unsigned workers = 1;
    /// Exact sign check bound attached to each cell; 0 disables it.
    std::uint64_t sign_bound = 10;
};

struct ConjectureReport {
    IntRange p_range;
    IntRange q_range;
    std::uint64_t max_n = 0;
    std::vector<ConjectureCell> cells; // row-major: P outer, Q inner

    std::size_t fail_count() const;
    std::size_t degenerate_count() const;
    /// One row per P, one character per Q: '.' pass, 'X' fail, '0' degenerate.
    std::string render_matrix() const;
};

/// D * U_{n^2}(P, Q) as a spec; throws if D does not fit in 64 bits.
SequenceSpec conjecture_spec(const LucasParams& params);

ConjectureCell conjecture_check(const LucasParams& params, std::uint64_t max_n, std::uint64_t sign_bound = 0);

ConjectureReport conjecture_scan(IntRange p_range, IntRange q_range, std::uint64_t max_n,
                                 const ConjectureOptions& options = {});

/// Recomputes (mu * D U_{d^2})_n exactly and returns it modulo n.
std::uint64_t exact_conjecture_residue(const LucasParams& params, std::uint64_t n);

} // namespace doldkit

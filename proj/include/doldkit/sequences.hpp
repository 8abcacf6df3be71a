#pragma once

#include "doldkit/bigint.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace doldkit {

/// Parameters of the Lucas pair U_n(P,Q), V_n(P,Q):
/// x_{n+1} = P x_n - Q x_{n-1}, seeds U = (0, 1), V = (2, P).
class LucasParams {
public:
    constexpr LucasParams(std::int64_t p, std::int64_t q) : p_(p), q_(q) {}

    constexpr std::int64_t P() const { return p_; }
    constexpr std::int64_t Q() const { return q_; }
    /// P^2 - 4Q, exact.
    BigInt discriminant() const;

    friend bool operator==(const LucasParams&, const LucasParams&) = default;

private:
    std::int64_t p_;
    std::int64_t q_;
};

inline constexpr LucasParams kFibonacciParams{1, -1};

/// Largest index evaluated exactly unless overridden.
inline constexpr std::uint64_t kDefaultExactIndexCutoff = 10'000'000;

class ExactRangeError : public std::range_error {
public:
    using std::range_error::range_error;
};

BigInt fib(std::uint64_t n);
std::uint64_t fib_mod(Index n, std::uint64_t m);
/// (F_n mod m, F_{n+1} mod m) by fast doubling.
std::pair<std::uint64_t, std::uint64_t> fib_pair_mod(Index n, std::uint64_t m);

BigInt lucas_companion(std::uint64_t n);
std::uint64_t lucas_companion_mod(Index n, std::uint64_t m);

BigInt lucasU(const LucasParams& params, std::uint64_t n);
BigInt lucasV(const LucasParams& params, std::uint64_t n);
std::uint64_t lucasU_mod(const LucasParams& params, Index n, std::uint64_t m);
std::uint64_t lucasV_mod(const LucasParams& params, Index n, std::uint64_t m);

enum class BaseKind { fibonacci, lucas_companion, lucasU, lucasV };

/// c * Base_{n^j}: a base sequence sampled along the j-th powers and scaled.
///
/// Text form: `[<c>*]<base>[^<j>]` with base one of `fib`, `lucasV`,
/// `lucasU:P=<int>,Q=<int>`, `lucasV:P=<int>,Q=<int>`. `lucasV` alone is the
/// companion Lucas sequence L_n = V_n(1,-1). The multiplier is omitted when
/// 1 and the power when 1; str() always produces this canonical form.
class SequenceSpec {
public:
    SequenceSpec() = default;
    SequenceSpec(BaseKind base, LucasParams params, unsigned power, std::int64_t multiplier);

    static SequenceSpec fibonacci(unsigned power = 1, std::int64_t multiplier = 1);
    static SequenceSpec lucas(unsigned power = 1, std::int64_t multiplier = 1);
    static SequenceSpec lucasU(LucasParams params, unsigned power = 1, std::int64_t multiplier = 1);
    static SequenceSpec lucasV(LucasParams params, unsigned power = 1, std::int64_t multiplier = 1);

    static SequenceSpec parse(std::string_view text);
    std::string str() const;

    BaseKind base() const { return base_; }
    const LucasParams& params() const { return params_; }
    unsigned power() const { return power_; }
    std::int64_t multiplier() const { return multiplier_; }

    /// n^j, checked against the index range.
    Index index_of(std::uint64_t n) const;

    /// Base_k exactly / modulo m, at a raw (already time-changed) index.
    BigInt base_at(std::uint64_t k, std::uint64_t exact_cutoff = kDefaultExactIndexCutoff) const;
    std::uint64_t base_at_mod(Index k, std::uint64_t m) const;

    friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;

private:
    BaseKind base_ = BaseKind::fibonacci;
    LucasParams params_ = kFibonacciParams;
    unsigned power_ = 1;
    std::int64_t multiplier_ = 1;
};

/// Thrown by SequenceSpec::parse; position() is a 0-based offset into the text.
class SpecSyntaxError : public std::invalid_argument {
public:
    SpecSyntaxError(std::string message, std::size_t position, std::string text);
    std::size_t position() const { return position_; }
    const std::string& text() const { return text_; }
    /// Message followed by the text and a caret under the offending position.
    std::string annotated() const;

private:
    std::size_t position_;
    std::string text_;
};

BigInt spec_eval(const SequenceSpec& spec, std::uint64_t n,
                 std::uint64_t exact_cutoff = kDefaultExactIndexCutoff);
std::uint64_t spec_eval_mod(const SequenceSpec& spec, std::uint64_t n, std::uint64_t m);

} // namespace doldkit

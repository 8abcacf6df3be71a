#include "doldkit/conjecture.hpp"
#include "doldkit/arith.hpp"
#include "doldkit/parallel.hpp"
#include "doldkit/realize.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace doldkit {

IntRange IntRange::parse(std::string_view text)
{
    const auto sep = text.find("..");
    if (sep == std::string_view::npos) throw std::invalid_argument("range must look like a..b, got '" + std::string(text) + "'");
    auto number = [&](std::string_view part) {
        std::int64_t v = 0;
        const auto res = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || res.ec != std::errc{} || res.ptr != part.data() + part.size())
            throw std::invalid_argument("bad range bound '" + std::string(part) + "'");
        return v;
    };
    return {number(text.substr(0, sep)), number(text.substr(sep + 2))};
}

std::string IntRange::str() const { return std::to_string(lo) + ".." + std::to_string(hi); }

std::string_view to_string(CellStatus s)
{
    switch (s) {
    case CellStatus::pass: return "pass";
    case CellStatus::fail: return "fail";
    case CellStatus::degenerate: return "degenerate";
    }
    return "?";
}

std::string_view to_string(DiscriminantClass c)
{
    switch (c) {
    case DiscriminantClass::zero: return "zero";
    case DiscriminantClass::unit: return "unit";
    case DiscriminantClass::prime_power: return "prime-power";
    case DiscriminantClass::other: return "other";
    }
    return "?";
}

DiscriminantClass classify_discriminant(const BigInt& d)
{
    if (d == 0) return DiscriminantClass::zero;
    const BigInt mag = abs(d);
    if (mag == 1) return DiscriminantClass::unit;
    if (!mag.fits_ulong_p()) return DiscriminantClass::other;
    return factorize(mag.get_ui()).entries.size() == 1 ? DiscriminantClass::prime_power : DiscriminantClass::other;
}

std::size_t ConjectureReport::fail_count() const
{
    return static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(), [](const ConjectureCell& c) { return c.status == CellStatus::fail; }));
}

std::size_t ConjectureReport::degenerate_count() const
{
    return static_cast<std::size_t>(std::count_if(
        cells.begin(), cells.end(), [](const ConjectureCell& c) { return c.status == CellStatus::degenerate; }));
}

std::string ConjectureReport::render_matrix() const
{
    std::string out = "P\\Q " + q_range.str() + "\n";
    std::size_t i = 0;
    for (std::int64_t p = p_range.lo; !p_range.empty() && p <= p_range.hi; ++p) {
        std::string label = std::to_string(p);
        out += std::string(label.size() < 4 ? 4 - label.size() : 0, ' ') + label + " ";
        for (std::int64_t q = q_range.lo; !q_range.empty() && q <= q_range.hi; ++q) {
            switch (cells.at(i++).status) {
            case CellStatus::pass: out += '.'; break;
            case CellStatus::fail: out += 'X'; break;
            case CellStatus::degenerate: out += '0'; break;
            }
        }
        out += '\n';
    }
    return out;
}

SequenceSpec conjecture_spec(const LucasParams& params)
{
    const BigInt d = params.discriminant();
    if (!d.fits_slong_p()) throw std::overflow_error("conjecture: discriminant does not fit in 64 bits");
    return SequenceSpec::lucasU(params, 2, d.get_si());
}

ConjectureCell conjecture_check(const LucasParams& params, std::uint64_t max_n, std::uint64_t sign_bound)
{
    if (max_n == 0) throw std::invalid_argument("conjecture_check: max_n must be at least 1");
    ConjectureCell cell{params.P(), params.Q(), params.discriminant(), DiscriminantClass::zero,
                        CellStatus::pass, std::nullopt, 0, std::nullopt};
    cell.discriminant_class = classify_discriminant(cell.discriminant);
    if (cell.discriminant_class == DiscriminantClass::zero) {
        // D U_{n^2} is the zero sequence
        cell.status = CellStatus::degenerate;
        return cell;
    }
    const SequenceSpec spec = conjecture_spec(params);
    spec.index_of(max_n);
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        const std::uint64_t r = dold_residue(spec, n);
        if (r != 0) {
            cell.status = CellStatus::fail;
            cell.first_failure = n;
            cell.residue = r;
            break;
        }
    }
    if (sign_bound > 0) cell.sign_ok = sign_check_exact(spec, sign_bound).all_non_negative();
    return cell;
}

ConjectureReport conjecture_scan(IntRange p_range, IntRange q_range, std::uint64_t max_n,
                                 const ConjectureOptions& options)
{
    ConjectureReport report{p_range, q_range, max_n, {}};
    const std::uint64_t cols = q_range.size();
    const std::uint64_t total = p_range.size() * cols;
    report.cells = parallel_map<ConjectureCell>(total, options.workers, [&](std::size_t i) {
        const std::int64_t p = p_range.lo + static_cast<std::int64_t>(i / cols);
        const std::int64_t q = q_range.lo + static_cast<std::int64_t>(i % cols);
        return conjecture_check({p, q}, max_n, options.sign_bound);
    });
    return report;
}

std::uint64_t exact_conjecture_residue(const LucasParams& params, std::uint64_t n)
{
    const SequenceSpec spec = conjecture_spec(params);
    const BigInt v = mobius_convolve([&](std::uint64_t d) { return spec_eval(spec, d); }, n);
    return mod_u64(v, n);
}

} // namespace doldkit

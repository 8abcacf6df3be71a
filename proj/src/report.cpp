#include "doldkit/report.hpp"

#include <sstream>

namespace doldkit {

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string structured(const Json& j) { return j.dump(2) + "\n"; }

std::string join_u64(const std::vector<std::uint64_t>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
    return out;
}

std::string_view to_string(SignCertificate c) { return c == SignCertificate::exact ? "exact" : "growth-lemma"; }

} // namespace

std::optional<OutputFormat> parse_output_format(std::string_view text)
{
    if (text == "human") return OutputFormat::human;
    if (text == "structured" || text == "json") return OutputFormat::structured;
    if (text == "csv") return OutputFormat::csv;
    return std::nullopt;
}

bool GoldenListing::all_match() const
{
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (r.enumeration != r.trace || big_from_u64(r.trace) != lucas.at(i)) return false;
    }
    return true;
}

// ---- dold -----------------------------------------------------------------

Json to_json(const DoldReport& r)
{
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"n", row.n},
                        {"residue", row.residue},
                        {"denominator", row.denominator},
                        {"pass", row.pass},
                        {"exact_checked", row.exact_checked}});
    }
    return {{"kind", "dold"},
            {"spec", r.spec.str()},
            {"max_n", r.max_n},
            {"rows", std::move(rows)},
            {"summary",
             {{"pass_count", r.pass_count()},
              {"fail_count", r.fail_count()},
              {"denominator_primes", r.denominator_primes()}}}};
}

std::string render(const DoldReport& r, OutputFormat format)
{
    if (format == OutputFormat::structured) return structured(to_json(r));
    std::ostringstream out;
    if (format == OutputFormat::csv) {
        out << "n,residue,denominator,pass,exact_checked\n";
        for (const auto& row : r.rows)
            out << row.n << ',' << row.residue << ',' << row.denominator << ',' << (row.pass ? "true" : "false") << ','
                << (row.exact_checked ? "true" : "false") << '\n';
        return out.str();
    }
    out << "Dold scan of " << r.spec.str() << " for n = 1.." << r.max_n << "\n";
    for (const auto& row : r.rows) {
        if (row.pass) continue;
        out << "  n = " << row.n << ": residue " << row.residue << ", denominator " << row.denominator << "\n";
    }
    out << r.pass_count() << "/" << r.rows.size() << " pass";
    const auto primes = r.denominator_primes();
    if (!primes.empty()) out << "; denominator primes: " << join_u64(primes);
    out << "\n";
    return out.str();
}

// ---- sign -----------------------------------------------------------------

Json to_json(const SignReport& r)
{
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"n", row.n}, {"value", to_string(row.value)}, {"non_negative", row.non_negative}});
    const SignRow* neg = r.first_negative();
    return {{"kind", "sign"},
            {"spec", r.spec.str()},
            {"max_n", r.max_n},
            {"certificate", to_string(r.certificate)},
            {"rows", std::move(rows)},
            {"summary",
             {{"all_non_negative", r.all_non_negative()},
              {"first_negative", neg ? Json(neg->n) : Json(nullptr)}}}};
}

std::string render(const SignReport& r, OutputFormat format)
{
    if (format == OutputFormat::structured) return structured(to_json(r));
    std::ostringstream out;
    if (format == OutputFormat::csv) {
        out << "n,value,non_negative\n";
        for (const auto& row : r.rows)
            out << row.n << ',' << quoted(to_string(row.value)) << ',' << (row.non_negative ? "true" : "false") << '\n';
        return out.str();
    }
    out << "Sign check (exact) of " << r.spec.str() << " for n = 1.." << r.max_n << "\n";
    if (const SignRow* neg = r.first_negative())
        out << "first negative at n = " << neg->n << ": " << to_string(neg->value) << "\n";
    else
        out << "all " << r.rows.size() << " values non-negative\n";
    return out.str();
}

Json to_json(const GrowthListing& r)
{
    const auto& g = r.result;
    return {{"kind", "sign"},
            {"spec", r.spec.str()},
            {"max_n", g.max_n},
            {"certificate", "growth-lemma"},
            {"pass", g.pass},
            {"first_failure", g.first_failure ? Json(*g.first_failure) : Json(nullptr)},
            {"reason", g.reason},
            {"exact_comparisons", g.exact_comparisons},
            {"bounded_comparisons", g.bounded_comparisons}};
}

std::string render(const GrowthListing& r, OutputFormat format)
{
    if (format == OutputFormat::structured) return structured(to_json(r));
    const auto& g = r.result;
    std::ostringstream out;
    if (format == OutputFormat::csv) {
        out << "spec,max_n,pass,first_failure,reason\n"
            << quoted(r.spec.str()) << ',' << g.max_n << ',' << (g.pass ? "true" : "false") << ','
            << (g.first_failure ? std::to_string(*g.first_failure) : "") << ',' << quoted(g.reason) << '\n';
        return out.str();
    }
    out << "Growth certificate for " << r.spec.str() << " up to n = " << g.max_n << ": ";
    if (g.pass)
        out << "pass (non-decreasing on 1.." << 2 * g.max_n << ", A_2n >= n A_n)\n";
    else
        out << "fail at n = " << *g.first_failure << " (" << g.reason << ")\n";
    return out.str();
}

// ---- orbits ---------------------------------------------------------------

Json to_json(const OrbitReport& r)
{
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"n", row.n},
                        {"numerator", to_string(row.count.numerator())},
                        {"denominator", to_string(row.count.denominator())}});
    }
    return {{"kind", "orbits"},
            {"spec", r.spec.str()},
            {"max_n", r.max_n},
            {"rows", std::move(rows)},
            {"summary", {{"all_realizable", r.all_realizable()}}}};
}

std::string render(const OrbitReport& r, OutputFormat format)
{
    if (format == OutputFormat::structured) return structured(to_json(r));
    std::ostringstream out;
    if (format == OutputFormat::csv) {
        out << "n,numerator,denominator\n";
        for (const auto& row : r.rows)
            out << row.n << ',' << quoted(to_string(row.count.numerator())) << ','
                << quoted(to_string(row.count.denominator())) << '\n';
        return out.str();
    }
    out << "Orbit counts of " << r.spec.str() << "\n";
    for (const auto& row : r.rows) out << "  O(" << row.n << ") = " << row.count.str() << "\n";
    return out.str();
}

// ---- pisano ---------------------------------------------------------------

Json to_json(const PisanoListing& r)
{
    Json rows = Json::array();
    for (const auto& rec : r.records)
        rows.push_back({{"modulus", rec.modulus}, {"period", rec.period}, {"method", to_string(rec.method)}});
    return {{"kind", "pisano"}, {"verified", r.verified}, {"records", std::move(rows)}};
}

std::string render(const PisanoListing& r, OutputFormat format)
{
    if (format == OutputFormat::structured) return structured(to_json(r));
    std::ostringstream out;
    if (format == OutputFormat::csv) out << "modulus,period,method\n";
    for (const auto& rec : r.records) {
        if (format == OutputFormat::csv)
            out << rec.modulus << ',' << rec.period << ',' << to_string(rec.method) << '\n';
        else
            out << rec.modulus << "\xE2\x86\x92" << rec.period << "  (" << to_string(rec.method) << ")\n";
    }
    return out.str();
}

Json to_json(const PrimePowerListing& r)
{
    return {{"kind", "pisano-prime-power"},
            {"prime", r.period.prime},
            {"exponent", r.period.exponent},
            {"period", r.period.period},
            {"s", r.period.s},
            {"t", r.t},
            {"t_max_exponent", r.max_exponent}};
}

std::string render(const PrimePowerListing& r, OutputFormat format)
{
    if (format == OutputFormat::structured) return structured(to_json(r));
    std::ostringstream out;
    const auto& p = r.period;
    if (format == OutputFormat::csv) {
        out << "prime,exponent,period,s,t\n"
            << p.prime << ',' << p.exponent << ',' << p.period << ',' << p.s << ',' << r.t << '\n';
        return out.str();
    }
    out << "ell(" << p.prime << "^" << p.exponent << ") = " << p.period << " = " << p.prime << "^" << p.s
        << " * ell(" << p.prime << "); t = " << r.t << " (searched up to exponent " << r.max_exponent << ")\n";
    return out.str();
}

Json to_json(const WallVerification& r)
{
    Json primes = Json::array();
    for (const auto& row : r.primes) primes.push_back({{"prime", row.prime}, {"period", row.period}, {"t", row.t}});
    Json exceptions = Json::array();
    for (const auto& e : r.exceptions)
        exceptions.push_back(
            {{"property", e.property}, {"prime", e.prime}, {"exponent", e.exponent}, {"detail", e.detail}});
    return {{"kind", "wall-verify"},
            {"max_p", r.max_p},
            {"max_exponent", r.max_exponent},
            {"primes", std::move(primes)},
            {"exceptions", std::move(exceptions)},
            {"summary", {{"primes_checked", r.primes.size()}, {"exception_count", r.exceptions.size()}}}};
}

std::string render(const WallVerification& r, OutputFormat format)
{
    if (format == OutputFormat::structured) return structured(to_json(r));
    std::ostringstream out;
    if (format == OutputFormat::csv) {
        out << "property,prime,exponent,detail\n";
        for (const auto& e : r.exceptions)
            out << quoted(e.property) << ',' << e.prime << ',' << e.exponent << ',' << quoted(e.detail) << '\n';
        return out.str();
    }
    out << "Checked " << r.primes.size() << " primes up to " << r.max_p << " (prime powers to exponent "
        << r.max_exponent << ")\n";
    for (auto prop : {kPropBruteForce, kPropDividesPMinus1, kPropDividesTwoPPlus1, kPropDividesPSquaredMinus1,
                      kPropMonotone, kPropPrimePowerDivides})
        out << "  " << prop << ": " << r.exceptions_for(prop) << " exception(s)\n";
    for (const auto& e : r.exceptions) out << "  exception " << e.property << " at p = " << e.prime << ": " << e.detail << "\n";
    return out.str();
}

// ---- denominators ---------------------------------------------------------

Json to_json(const WitnessListing& r)
{
    Json rows = Json::array();
    for (const auto& w : r.witnesses) rows.push_back({{"prime", w.prime}, {"n", w.n}, {"residue", w.residue}});
    return {{"kind", "denominators"},
            {"spec", r.spec.str()},
            {"prime_bound", r.prime_bound},
            {"witnesses", std::move(rows)},
            {"summary", {{"witness_count", r.witnesses.size()}}}};
}

std::string render(const WitnessListing& r, OutputFormat format)
{
    if (format == OutputFormat::structured) return structured(to_json(r));
    std::ostringstream out;
    if (format == OutputFormat::csv) {
        out << "prime,n,residue\n";
        for (const auto& w : r.witnesses) out << w.prime << ',' << w.n << ',' << w.residue << '\n';
        return out.str();
    }
    out << "Denominator primes of " << r.spec.str() << " at prime indices p <= " << r.prime_bound
        << " with p = +-2 mod 5: " << r.witnesses.size() << "\n";
    for (const auto& w : r.witnesses) out << "  p = " << w.prime << ": residue " << w.residue << "\n";
    return out.str();
}

// ---- conjecture -----------------------------------------------------------

Json to_json(const ConjectureReport& r)
{
    Json cells = Json::array();
    for (const auto& c : r.cells) {
        Json cell = {{"P", c.P},
                     {"Q", c.Q},
                     {"discriminant", to_string(c.discriminant)},
                     {"discriminant_class", to_string(c.discriminant_class)},
                     {"status", to_string(c.status)}};
        if (c.first_failure) {
            cell["first_n"] = *c.first_failure;
            cell["residue"] = c.residue;
        }
        if (c.sign_ok) cell["sign_ok"] = *c.sign_ok;
        cells.push_back(std::move(cell));
    }
    return {{"kind", "conjecture"},
            {"p_range", r.p_range.str()},
            {"q_range", r.q_range.str()},
            {"max_n", r.max_n},
            {"cells", std::move(cells)},
            {"summary",
             {{"cell_count", r.cells.size()},
              {"fail_count", r.fail_count()},
              {"degenerate_count", r.degenerate_count()}}}};
}

std::string render(const ConjectureReport& r, OutputFormat format)
{
    if (format == OutputFormat::structured) return structured(to_json(r));
    std::ostringstream out;
    if (format == OutputFormat::csv) {
        out << "P,Q,discriminant,discriminant_class,status,first_n,residue,sign_ok\n";
        for (const auto& c : r.cells) {
            out << c.P << ',' << c.Q << ',' << quoted(to_string(c.discriminant)) << ',' << to_string(c.discriminant_class)
                << ',' << to_string(c.status) << ',' << (c.first_failure ? std::to_string(*c.first_failure) : "") << ','
                << (c.first_failure ? std::to_string(c.residue) : "") << ','
                << (c.sign_ok ? (*c.sign_ok ? "true" : "false") : "") << '\n';
        }
        return out.str();
    }
    out << "Dold scan of D*U_{n^2}(P,Q) for n = 1.." << r.max_n << ", P in " << r.p_range.str() << ", Q in "
        << r.q_range.str() << "\n";
    out << r.render_matrix();
    out << r.cells.size() << " cells, " << r.fail_count() << " fail, " << r.degenerate_count() << " degenerate (D = 0)\n";
    for (const auto& c : r.cells) {
        if (c.status == CellStatus::fail)
            out << "  fail at P = " << c.P << ", Q = " << c.Q << ": n = " << *c.first_failure << ", residue "
                << c.residue << "\n";
    }
    return out.str();
}

// ---- golden mean ----------------------------------------------------------

Json to_json(const GoldenListing& r)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        const auto& g = r.rows[i];
        rows.push_back({{"n", g.n}, {"enumeration", g.enumeration}, {"trace", g.trace}, {"lucas", to_string(r.lucas[i])}});
    }
    return {{"kind", "oracle-golden"}, {"rows", std::move(rows)}, {"summary", {{"all_match", r.all_match()}}}};
}

std::string render(const GoldenListing& r, OutputFormat format)
{
    if (format == OutputFormat::structured) return structured(to_json(r));
    std::ostringstream out;
    if (format == OutputFormat::csv) out << "n,enumeration,trace,lucas\n";
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        const auto& g = r.rows[i];
        if (format == OutputFormat::csv)
            out << g.n << ',' << g.enumeration << ',' << g.trace << ',' << quoted(to_string(r.lucas[i])) << '\n';
        else
            out << "n = " << g.n << ": enumeration " << g.enumeration << ", trace " << g.trace << ", L_n "
                << to_string(r.lucas[i]) << (g.enumeration == g.trace && big_from_u64(g.trace) == r.lucas[i] ? "" : "  MISMATCH")
                << "\n";
    }
    return out.str();
}

} // namespace doldkit

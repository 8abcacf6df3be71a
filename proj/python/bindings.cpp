#include "doldkit/arith.hpp"
#include "doldkit/congruences.hpp"
#include "doldkit/conjecture.hpp"
#include "doldkit/pisano.hpp"
#include "doldkit/realize.hpp"
#include "doldkit/report.hpp"
#include "doldkit/sequences.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace doldkit;

namespace {

py::object to_py(const BigInt& v)
{
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

BigInt from_py(const py::int_& v) { return BigInt(py::str(v).cast<std::string>()); }

// Reports cross the boundary as their structured documents.
template <class T>
std::string doc(const T& report)
{
    return to_json(report).dump();
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Realizability, Dold congruences and Pisano periods for Fibonacci-type sequences";

    py::register_exception<SpecSyntaxError>(m, "SpecSyntaxError", PyExc_ValueError);
    py::register_exception<IndexOverflow>(m, "IndexOverflow", PyExc_OverflowError);

    m.def("fib", [](std::uint64_t n) { return to_py(fib(n)); }, py::arg("n"));
    m.def("fib_mod", [](std::uint64_t n, std::uint64_t mod) { return fib_mod(n, mod); }, py::arg("n"), py::arg("m"));
    m.def("lucas", [](std::uint64_t n) { return to_py(lucas_companion(n)); }, py::arg("n"));
    m.def("lucas_u", [](std::int64_t P, std::int64_t Q, std::uint64_t n) { return to_py(lucasU({P, Q}, n)); },
          py::arg("P"), py::arg("Q"), py::arg("n"));
    m.def("lucas_v", [](std::int64_t P, std::int64_t Q, std::uint64_t n) { return to_py(lucasV({P, Q}, n)); },
          py::arg("P"), py::arg("Q"), py::arg("n"));

    m.def("mobius", py::overload_cast<std::uint64_t>(&mobius), py::arg("n"));
    m.def("divisors", [](std::uint64_t n) { return divisors(n); }, py::arg("n"));
    m.def("is_prime", [](std::uint64_t n) { return is_prime(n); }, py::arg("n"));
    m.def("factorize", [](std::uint64_t n) {
        std::vector<std::pair<std::uint64_t, unsigned>> out;
        for (const auto& e : factorize(n).entries) out.emplace_back(e.prime, e.exponent);
        return out;
    }, py::arg("n"));

    m.def("canonical_spec", [](const std::string& text) { return SequenceSpec::parse(text).str(); }, py::arg("spec"));
    m.def("spec_eval", [](const std::string& spec, std::uint64_t n) { return to_py(spec_eval(SequenceSpec::parse(spec), n)); },
          py::arg("spec"), py::arg("n"));
    m.def("spec_eval_mod", [](const std::string& spec, std::uint64_t n, std::uint64_t mod) {
        return spec_eval_mod(SequenceSpec::parse(spec), n, mod);
    }, py::arg("spec"), py::arg("n"), py::arg("m"));

    m.def("orbit_count", [](const std::string& spec, std::uint64_t n) {
        const auto r = orbit_count(SequenceSpec::parse(spec), n);
        return py::make_tuple(to_py(r.numerator()), to_py(r.denominator()));
    }, py::arg("spec"), py::arg("n"));
    m.def("mobius_convolve", [](const std::vector<py::int_>& values, std::uint64_t n) {
        // values[d-1] = U_d
        std::vector<BigInt> u;
        u.reserve(values.size());
        for (const auto& v : values) u.push_back(from_py(v));
        if (n == 0 || n > u.size()) throw std::invalid_argument("mobius_convolve: need U_1..U_n");
        return to_py(mobius_convolve([&](std::uint64_t d) { return u[d - 1]; }, n));
    }, py::arg("values"), py::arg("n"));

    m.def("dold_scan", [](const std::string& spec, std::uint64_t max_n, unsigned workers, std::uint64_t exact_bound) {
        py::gil_scoped_release release;
        return doc(dold_scan(SequenceSpec::parse(spec), max_n, {workers, exact_bound, kDefaultExactIndexCutoff}));
    }, py::arg("spec"), py::arg("max_n"), py::arg("workers") = 1, py::arg("exact_bound") = 50);
    m.def("sign_check", [](const std::string& spec, std::uint64_t max_n) {
        py::gil_scoped_release release;
        return doc(sign_check_exact(SequenceSpec::parse(spec), max_n));
    }, py::arg("spec"), py::arg("max_n"));
    m.def("growth_certificate", [](const std::string& spec, std::uint64_t max_n) {
        py::gil_scoped_release release;
        const auto s = SequenceSpec::parse(spec);
        return doc(GrowthListing{s, growth_certificate(s, max_n)});
    }, py::arg("spec"), py::arg("max_n"));
    m.def("orbit_counts", [](const std::string& spec, std::uint64_t max_n) {
        py::gil_scoped_release release;
        return doc(orbit_counts(SequenceSpec::parse(spec), max_n));
    }, py::arg("spec"), py::arg("max_n"));
    m.def("denominator_witnesses", [](const std::string& spec, std::uint64_t prime_bound, unsigned workers) {
        py::gil_scoped_release release;
        const auto s = SequenceSpec::parse(spec);
        return doc(WitnessListing{s, prime_bound, denominator_prime_witnesses(s, prime_bound, workers)});
    }, py::arg("spec"), py::arg("prime_bound"), py::arg("workers") = 1);
    m.def("conjecture_scan", [](const std::string& p_range, const std::string& q_range, std::uint64_t max_n,
                                unsigned workers, std::uint64_t sign_bound) {
        const auto pr = IntRange::parse(p_range);
        const auto qr = IntRange::parse(q_range);
        py::gil_scoped_release release;
        return doc(conjecture_scan(pr, qr, max_n, {workers, sign_bound}));
    }, py::arg("p_range"), py::arg("q_range"), py::arg("max_n"), py::arg("workers") = 1, py::arg("sign_bound") = 10);

    m.def("pisano", [](std::uint64_t modulus) { return pisano_general(modulus).period; }, py::arg("m"));
    m.def("pisano_bruteforce", [](std::uint64_t modulus) { return pisano_bruteforce(modulus).period; }, py::arg("m"));
    m.def("pisano_prime_power", [](std::uint64_t p, unsigned n) {
        const auto r = pisano_prime_power(p, n, true);
        return py::make_tuple(r.period, r.s);
    }, py::arg("p"), py::arg("n"));
    m.def("wall_verify", [](std::uint64_t max_p, unsigned max_exponent) {
        py::gil_scoped_release release;
        return doc(verify_wall(max_p, max_exponent));
    }, py::arg("max_p"), py::arg("max_exponent") = 3);

    m.def("golden_mean_fix_count", [](std::uint64_t n) {
        const auto g = golden_mean_fix_count(n);
        return py::make_tuple(g.enumeration, g.trace);
    }, py::arg("n"));

    m.def("lemma34_check", [](std::uint64_t p, unsigned k, std::uint64_t n) { return lemma34_check(p, k, n).pass; },
          py::arg("p"), py::arg("k"), py::arg("n"));
    m.def("desmond_check", [](std::uint64_t p, std::uint64_t n) { return desmond_check(p, n).pass; }, py::arg("p"),
          py::arg("n"));
}

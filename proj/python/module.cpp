// Python bindings for the main operations. Values cross the boundary as
// plain tuples/lists/dicts so the module has no custom types to pickle.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "euclidsail/counting.hpp"
#include "euclidsail/enumeration.hpp"
#include "euclidsail/gaussian.hpp"
#include "euclidsail/lattice.hpp"
#include "euclidsail/mat2.hpp"
#include "euclidsail/sail.hpp"
#include "euclidsail/verify.hpp"

namespace py = pybind11;
using namespace euclidsail;

namespace {

py::tuple solution_tuple(const Solution& s) { return py::make_tuple(s.a, s.b, s.c, s.d); }

py::tuple vec_tuple(const Vec2& v) { return py::make_tuple(v.x, v.y); }

py::tuple gauss_tuple(const GaussInt& g) { return py::make_tuple(g.re, g.im); }

py::dict gauss_solution_dict(const GaussSolution& s) {
    py::dict d;
    d["a"] = gauss_tuple(s.a);
    d["b"] = gauss_tuple(s.b);
    d["c"] = gauss_tuple(s.c);
    d["d"] = gauss_tuple(s.d);
    d["z"] = gauss_tuple(s.z);
    return d;
}

}  // namespace

PYBIND11_MODULE(_euclidsail, m) {
    m.doc() = "Euclid-reduced 2x2 matrices, sublattice sails and their counting theory";

    // counting
    m.def("count_reduced", &count_reduced_formula, py::arg("n"),
          "Number of Euclid-reduced matrices of determinant n (divisor-sum formula).");
    m.def("count_reduced_bruteforce", &count_reduced_bruteforce, py::arg("n"));
    m.def("count_coprime", &count_coprime_formula, py::arg("n"));
    m.def("count_coprime_bruteforce", &count_coprime_bruteforce, py::arg("n"));
    m.def("sublattice_count", &sublattice_count, py::arg("n"), "sigma(n)");
    m.def("bad_count", &bad_count_formula, py::arg("n"));
    m.def("sublattice_count_general", &sublattice_count_general, py::arg("dim"), py::arg("n"));
    m.def("q_binomial", &q_binomial, py::arg("m"), py::arg("k"), py::arg("q"));
    m.def("moebius", &moebius, py::arg("n"));
    m.def("divisors", &divisors, py::arg("n"));
    m.def(
        "sequence",
        [](const std::string& kind, int64_t n_max) {
            if (kind == "reduced") return sequence(SequenceKind::Reduced, n_max);
            if (kind == "coprime") return sequence(SequenceKind::Coprime, n_max);
            throw std::invalid_argument("kind must be 'reduced' or 'coprime'");
        },
        py::arg("kind"), py::arg("n_max"));

    // enumeration
    m.def(
        "enumerate_solutions",
        [](int64_t n) {
            py::list out;
            for (const Solution& s : enumerate_solutions(n)) out.append(solution_tuple(s));
            return out;
        },
        py::arg("n"));
    m.def(
        "enumerate_coprime",
        [](int64_t n) {
            py::list out;
            for (const Solution& s : enumerate_coprime(n)) out.append(solution_tuple(s));
            return out;
        },
        py::arg("n"));
    m.def(
        "orbits",
        [](int64_t n) {
            py::list out;
            for (const Orbit& o : orbit_decomposition(n)) {
                py::dict d;
                d["representative"] = solution_tuple(o.representative);
                d["size"] = o.size;
                py::list members;
                for (const Solution& s : o.members) members.append(solution_tuple(s));
                d["members"] = members;
                out.append(d);
            }
            return out;
        },
        py::arg("n"));

    // matrix reduction
    m.def(
        "is_euclid_reduced",
        [](int64_t a, int64_t b, int64_t c, int64_t d) {
            return is_euclid_reduced(Mat2(a, b, c, d));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"));
    m.def(
        "reduce",
        [](int64_t a, int64_t b, int64_t c, int64_t d) {
            ReductionTrace t = reduce(Mat2(a, b, c, d));
            py::list steps;
            for (const ReductionStep& st : t.steps)
                steps.append(py::make_tuple(reduction_kind_name(st.kind),
                                            py::make_tuple(st.after.a, st.after.b, st.after.c,
                                                           st.after.d)));
            py::dict out;
            out["result"] = py::make_tuple(t.result.a, t.result.b, t.result.c, t.result.d);
            out["steps"] = steps;
            return out;
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"));
    m.def(
        "all_normal_forms",
        [](int64_t a, int64_t b, int64_t c, int64_t d) {
            py::list out;
            for (const Mat2& x : all_normal_forms(Mat2(a, b, c, d)))
                out.append(py::make_tuple(x.a, x.b, x.c, x.d));
            return out;
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"));

    // lattices and sails
    m.def(
        "enumerate_sublattices",
        [](int64_t n) {
            py::list out;
            for (const Sublattice2& L : enumerate_sublattices(n))
                out.append(py::make_tuple(L.d, L.a, L.m));
            return out;
        },
        py::arg("n"));
    m.def(
        "sail",
        [](int64_t d, int64_t a, int64_t m) {
            py::list out;
            for (const Vec2& p : compute_sail(Sublattice2(d, a, m)).points)
                out.append(vec_tuple(p));
            return out;
        },
        py::arg("d"), py::arg("a"), py::arg("m"));
    m.def(
        "is_bad", [](int64_t d, int64_t a, int64_t m) { return is_bad(Sublattice2(d, a, m)); },
        py::arg("d"), py::arg("a"), py::arg("m"));
    m.def(
        "enumerate_bad",
        [](int64_t n) {
            py::list out;
            for (const Sublattice2& L : enumerate_bad(n)) out.append(py::make_tuple(L.d, L.a, L.m));
            return out;
        },
        py::arg("n"));
    m.def(
        "central_sailbasis",
        [](int64_t d, int64_t a, int64_t m) -> py::object {
            std::optional<SailBasis> sb = central_sailbasis(Sublattice2(d, a, m));
            if (!sb) return py::none();
            return py::make_tuple(vec_tuple(sb->u), vec_tuple(sb->v));
        },
        py::arg("d"), py::arg("a"), py::arg("m"));
    m.def(
        "normalized_sailbasis",
        [](int64_t d, int64_t a, int64_t m) {
            auto [u, v] = normalized_sailbasis(Sublattice2(d, a, m));
            return py::make_tuple(vec_tuple(u), vec_tuple(v));
        },
        py::arg("d"), py::arg("a"), py::arg("m"));

    // Gaussian variant
    m.def(
        "gauss_search",
        [](int64_t re, int64_t im, int64_t bound, bool canonical) {
            py::list out;
            for (const GaussSolution& s : search_solutions({re, im}, bound, canonical))
                out.append(gauss_solution_dict(s));
            return out;
        },
        py::arg("re"), py::arg("im"), py::arg("bound"), py::arg("canonical") = false);
    m.def(
        "odd_identity",
        [](int64_t m_, int64_t n) { return gauss_solution_dict(odd_identity_solution(m_, n)); },
        py::arg("m"), py::arg("n"));
    m.def(
        "even_identity",
        [](int64_t m_, int64_t n) { return gauss_solution_dict(even_identity_solution(m_, n)); },
        py::arg("m"), py::arg("n"));

    // verification
    m.def(
        "verify",
        [](int64_t n_max) {
            py::list out;
            for (const CheckResult& r : run_verification(n_max))
                out.append(py::make_tuple(r.name, r.pass, r.detail));
            return out;
        },
        py::arg("n_max"));
}

#include "heisvoa/expr.hpp"
#include "heisvoa/modes.hpp"
#include "heisvoa/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace heisvoa;

namespace {

RatMatrix to_rat_matrix(const std::vector<std::vector<std::string>>& rows) {
    RatMatrix out;
    for (const auto& row : rows) {
        RatVector r;
        for (const auto& e : row)
            r.push_back(parse_rational(e));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<std::vector<std::string>> from_rat_matrix(const RatMatrix& m) {
    std::vector<std::vector<std::string>> out;
    for (const auto& row : m) {
        std::vector<std::string> r;
        for (const auto& e : row)
            r.push_back(format_rational(e));
        out.push_back(std::move(r));
    }
    return out;
}

RatVector to_rat_vector(const std::vector<std::string>& v) {
    RatVector out;
    for (const auto& e : v)
        out.push_back(parse_rational(e));
    return out;
}

// Exposes the engine with expression strings at the boundary; all arithmetic
// stays exact on the C++ side.
class Algebra {
public:
    explicit Algebra(int rank) : algebra_(make_identity_algebra(rank)) {}
    Algebra(int rank, const std::vector<std::vector<std::string>>& gram)
        : algebra_(make_algebra(rank, to_rat_matrix(gram))) {}

    int rank() const { return algebra_.rank(); }
    std::vector<std::vector<std::string>> gram() const {
        return from_rat_matrix(algebra_.gram());
    }

    std::size_t dim(int n) const { return heisvoa::dim(algebra_, n); }

    std::vector<std::string> basis(int n) const {
        std::vector<std::string> out;
        for (const auto& m : heisvoa::basis(algebra_, n))
            out.push_back(format_monomial(m));
        return out;
    }

    std::string canonicalize(const std::string& expr) const {
        return format_state(parse_state(expr, algebra_));
    }

    std::string vertex_mode(const std::string& v, int n, const std::string& w) const {
        return format_state(heisvoa::vertex_mode(algebra_, parse_state(v, algebra_), n,
                                                 parse_state(w, algebra_)));
    }

    std::string virasoro(int n, const std::string& w) const {
        return format_state(heisvoa::virasoro(algebra_, n, parse_state(w, algebra_)));
    }

    std::string zero_mode(const std::string& v, const std::string& w) const {
        return format_state(
            heisvoa::zero_mode(algebra_, parse_state(v, algebra_), parse_state(w, algebra_)));
    }

    py::dict radical_member(const std::string& expr, int witness_bound) const {
        auto cert = heisvoa::radical_member(algebra_, parse_state(expr, algebra_),
                                            witness_bound);
        py::dict out;
        out["member"] = cert.member;
        if (cert.member) {
            out["j1"] = format_state(cert.j1);
            out["w"] = format_state(cert.w);
        }
        if (cert.witness) {
            py::dict w;
            w["weight"] = cert.witness->weight;
            w["probe"] = format_monomial(cert.witness->probe);
            w["image"] = format_state(cert.witness->image);
            out["witness"] = w;
        }
        if (!cert.note.empty())
            out["note"] = cert.note;
        return out;
    }

    py::tuple radical_decompose(const std::string& expr) const {
        auto [j1, w] = heisvoa::radical_decompose(algebra_, parse_state(expr, algebra_));
        return py::make_tuple(format_state(j1), format_state(w));
    }

    py::dict degree(const std::string& expr, int witness_bound) const {
        auto res = heisvoa::degree(algebra_, parse_state(expr, algebra_), witness_bound);
        py::dict out;
        out["degree"] = res.degree;
        out["ignored_vacuum_part"] = res.ignored_vacuum_part;
        if (res.structural_witness)
            out["structural"] = py::make_tuple(format_state(res.structural_witness->first),
                                               format_state(res.structural_witness->second));
        if (res.mode_witness)
            out["mode_witness"] = py::make_tuple(res.mode_witness->weight,
                                                 format_monomial(res.mode_witness->probe));
        return out;
    }

    bool filtration_member(const std::string& expr, int d) const {
        return heisvoa::filtration_member(algebra_, parse_state(expr, algebra_), d);
    }

    py::dict oinfinity_member(const std::string& expr) const {
        auto cert = heisvoa::oinfinity_member(algebra_, parse_state(expr, algebra_));
        py::dict out;
        out["member"] = cert.member;
        out["in_radical"] = cert.in_radical;
        if (cert.member)
            out["w"] = format_state(cert.w);
        if (!cert.member && cert.in_radical) {
            std::vector<std::string> lam;
            for (const auto& c : cert.momentum)
                lam.push_back(format_rational(c));
            out["momentum"] = lam;
            out["scalar"] = format_rational(cert.scalar);
            out["j1"] = format_state(cert.j1);
        }
        return out;
    }

    std::vector<std::string> semi_primary_decompose(const std::string& expr) const {
        std::vector<std::string> out;
        for (const auto& p : heisvoa::semi_primary_decompose(algebra_,
                                                             parse_state(expr, algebra_)))
            out.push_back(format_state(p));
        return out;
    }

    std::vector<std::string> commutant_basis(const std::vector<std::vector<std::string>>& hp,
                                             int n) const {
        std::vector<RatVector> h_prime;
        for (const auto& v : hp)
            h_prime.push_back(to_rat_vector(v));
        std::vector<std::string> out;
        for (const auto& s : heisvoa::commutant_basis(algebra_, h_prime, n))
            out.push_back(format_state(s));
        return out;
    }

    py::list verify(const std::string& suite, int max_weight, int trials,
                    std::uint64_t seed) const {
        VerifyConfig cfg;
        cfg.max_weight = max_weight;
        cfg.trials = trials;
        cfg.seed = seed;
        py::list out;
        for (const auto& r : run_suite(suite, algebra_, cfg)) {
            py::dict d;
            d["name"] = r.name;
            d["pass"] = r.pass;
            d["detail"] = r.detail;
            out.append(d);
        }
        return out;
    }

private:
    BosonAlgebra algebra_;
};

} // namespace

PYBIND11_MODULE(_heisvoa, m) {
    m.doc() = "Exact engine for rank-r free-boson vertex algebras";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Algebra>(m, "Algebra")
        .def(py::init<int>(), py::arg("rank"))
        .def(py::init<int, const std::vector<std::vector<std::string>>&>(), py::arg("rank"),
             py::arg("gram"))
        .def_property_readonly("rank", &Algebra::rank)
        .def("gram", &Algebra::gram)
        .def("dim", &Algebra::dim, py::arg("n"))
        .def("basis", &Algebra::basis, py::arg("n"))
        .def("canonicalize", &Algebra::canonicalize, py::arg("expr"))
        .def("vertex_mode", &Algebra::vertex_mode, py::arg("v"), py::arg("n"), py::arg("w"))
        .def("virasoro", &Algebra::virasoro, py::arg("n"), py::arg("w"))
        .def("zero_mode", &Algebra::zero_mode, py::arg("v"), py::arg("w"))
        .def("radical_member", &Algebra::radical_member, py::arg("expr"),
             py::arg("witness_bound") = kDefaultWitnessBound)
        .def("radical_decompose", &Algebra::radical_decompose, py::arg("expr"))
        .def("degree", &Algebra::degree, py::arg("expr"),
             py::arg("witness_bound") = kDefaultWitnessBound)
        .def("filtration_member", &Algebra::filtration_member, py::arg("expr"), py::arg("d"))
        .def("oinfinity_member", &Algebra::oinfinity_member, py::arg("expr"))
        .def("semi_primary_decompose", &Algebra::semi_primary_decompose, py::arg("expr"))
        .def("commutant_basis", &Algebra::commutant_basis, py::arg("h_prime"), py::arg("n"))
        .def("verify", &Algebra::verify, py::arg("suite") = "all", py::arg("max_weight") = 6,
             py::arg("trials") = 200, py::arg("seed") = 1);

    m.def("colored_partition_count", [](int colors, int n) {
        return colored_partition_count(colors, n).get_str();
    });
}

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symhorn/horn.hpp"
#include "symhorn/sampling.hpp"
#include "symhorn/schurhorn.hpp"
#include "symhorn/vecmaj.hpp"
#include "symhorn/williamson.hpp"

namespace py = pybind11;
using namespace symhorn;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

Matrix to_matrix(const Array& a) {
    if (a.ndim() != 2) throw DimensionError("expected a 2-d array");
    const auto rows = static_cast<std::size_t>(a.shape(0));
    const auto cols = static_cast<std::size_t>(a.shape(1));
    return Matrix(rows, cols, std::vector<double>(a.data(), a.data() + rows * cols));
}

Array to_array(const Matrix& m) {
    Array out({m.rows(), m.cols()});
    std::copy(m.data().begin(), m.data().end(), out.mutable_data());
    return out;
}

Array to_array(std::span<const double> v) {
    Array out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

PositiveVector to_positive(const Array& a) {
    if (a.ndim() != 1) throw DimensionError("expected a 1-d array");
    return PositiveVector(std::vector<double>(a.data(), a.data() + a.shape(0)));
}

std::vector<double> to_vector(const Array& a) {
    if (a.ndim() != 1) throw DimensionError("expected a 1-d array");
    return std::vector<double>(a.data(), a.data() + a.shape(0));
}

py::dict report_dict(const ConstructionReport& r) {
    py::dict d;
    d["A"] = to_array(r.a);
    d["achieved_spectrum"] = to_array(r.achieved_spectrum.values());
    d["achieved_diagonal"] = to_array(r.achieved_diagonal.values());
    d["spectrum_residual"] = r.spectrum_residual;
    d["diagonal_residual"] = r.diagonal_residual;
    d["intermediate_z"] = r.intermediate_z ? py::object(to_array(r.intermediate_z->values())) : py::none();
    d["positive_definite"] = r.positive_definite;
    return d;
}

DiagonalNotion parse_notion(const std::string& s) {
    if (s == "geometric") return DiagonalNotion::geometric;
    if (s == "arithmetic") return DiagonalNotion::arithmetic;
    if (s == "symplectic_diag") return DiagonalNotion::symplectic_diag;
    throw DomainError("unknown diagonal notion '" + s + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Symplectic eigenvalues, Williamson decompositions and symplectic Schur-Horn constructions";

    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<DefinitenessError>(m, "DefinitenessError", PyExc_ValueError);
    py::register_exception<ConstraintError>(m, "ConstraintError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

    py::class_<MajorisationVerdict>(m, "MajorisationVerdict")
        .def_readonly("holds", &MajorisationVerdict::holds)
        .def_readonly("first_violation_index", &MajorisationVerdict::first_violation_index)
        .def_readonly("lhs_partial_sum", &MajorisationVerdict::lhs_partial_sum)
        .def_readonly("rhs_partial_sum", &MajorisationVerdict::rhs_partial_sum)
        .def("__bool__", [](const MajorisationVerdict& v) { return v.holds; })
        .def("__repr__", [](const MajorisationVerdict& v) {
            return std::string("MajorisationVerdict(holds=") + (v.holds ? "True" : "False") + ")";
        });

    m.def("is_weakly_submajorized",
          [](const Array& x, const Array& y, double slack) { return is_weakly_submajorized(to_vector(x), to_vector(y), slack); },
          py::arg("x"), py::arg("y"), py::arg("slack") = 0.0);
    m.def("is_weakly_supermajorized",
          [](const Array& x, const Array& y, double slack) { return is_weakly_supermajorized(to_vector(x), to_vector(y), slack); },
          py::arg("x"), py::arg("y"), py::arg("slack") = 0.0);
    m.def("is_majorized",
          [](const Array& x, const Array& y, double slack) { return is_majorized(to_vector(x), to_vector(y), slack); },
          py::arg("x"), py::arg("y"), py::arg("slack") = 0.0);
    m.def("waterfill_intermediate",
          [](const Array& x, const Array& y) { return to_array(waterfill_intermediate(to_positive(x), to_positive(y)).values()); },
          py::arg("x"), py::arg("y"));

    m.def("symplectic_eigenvalues", [](const Array& a) { return to_array(symplectic_eigenvalues(to_matrix(a)).values()); },
          py::arg("A"));
    m.def("williamson_decomposition",
          [](const Array& a) {
              const WilliamsonDecomposition w = williamson_decomposition(to_matrix(a));
              return py::make_tuple(to_array(w.m), to_array(w.d.values()));
          },
          py::arg("A"), "Returns (M, d) with M^T A M = diag(d) (+) diag(d)");

    m.def("horn_construct",
          [](const Array& y, const Array& z) {
              const HornResult h = construct_with_spectrum_and_diagonal(to_vector(y), to_vector(z));
              return py::make_tuple(to_array(h.t), to_array(h.omega));
          },
          py::arg("y"), py::arg("z"), "Returns (T, Omega) with spectrum y and diagonal z");

    m.def("delta_s", [](const Array& a) { return to_array(delta_s(to_matrix(a)).values()); }, py::arg("A"));
    m.def("delta_c", [](const Array& a) { return to_array(delta_c(to_matrix(a)).values()); }, py::arg("A"));
    m.def("ds_of_symplectic_diagonal", [](const Array& a) { return to_array(ds_of_symplectic_diagonal(to_matrix(a)).values()); },
          py::arg("A"));
    m.def("check_forward",
          [](const Array& a, const std::string& which) { return check_forward(to_matrix(a), parse_notion(which)); },
          py::arg("A"), py::arg("which") = "geometric");

    m.def("construct_geometric",
          [](const Array& x, const Array& y) { return report_dict(construct_geometric(to_positive(x), to_positive(y))); },
          py::arg("x"), py::arg("y"));
    m.def("construct_arithmetic",
          [](const Array& x, const Array& y) { return report_dict(construct_arithmetic(to_positive(x), to_positive(y))); },
          py::arg("x"), py::arg("y"));

    m.def("sample_orbit",
          [](const Array& d, double spread, std::uint64_t seed) {
              SeededGenerator g(seed);
              return to_array(random_pd_with_symplectic_spectrum(to_positive(d), spread, g));
          },
          py::arg("d"), py::arg("spread") = 1.0, py::arg("seed") = 0);
}

// Copyright 2026 The orbitvol Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "orbitvol/eigdensity.hpp"
#include "orbitvol/ensemble.hpp"
#include "orbitvol/errors.hpp"
#include "orbitvol/exactnum.hpp"
#include "orbitvol/liegeom.hpp"
#include "orbitvol/linalg.hpp"
#include "orbitvol/twoqubit.hpp"

namespace py = pybind11;
using namespace orbitvol;

namespace {

DensityMatrix as_state(const ComplexMatrix& mat, int m, int n) {
  return DensityMatrix(mat, {m, n});
}

Subsystem as_subsystem(const std::string& keep) {
  if (keep == "A" || keep == "a") return Subsystem::A;
  if (keep == "B" || keep == "b") return Subsystem::B;
  throw InputError("keep must be 'A' or 'B'");
}

py::object as_fraction(const BigRational& q) {
  return py::module_::import("fractions").attr("Fraction")(to_string(q));
}

py::dict decision_dict(const LocalDiagDecision& d) {
  py::dict out;
  out["locally_diagonalizable"] = d.locally_diagonalizable;
  if (d.witness) {
    out["witness"] = py::make_tuple(d.witness->a_z, d.witness->b_z, d.witness->r_zz);
  } else {
    out["witness"] = py::none();
  }
  out["method"] = std::string(to_string(d.method));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Volumes of bipartite quantum state sets and unitary orbits.";

  // Translators run newest first, so the derived type is registered last.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  // exact numbers ------------------------------------------------------------

  py::class_<ExactVolume>(m, "ExactVolume")
      .def(py::init([](const std::string& coeff, int pi_power) {
             return ExactVolume(parse_rational(coeff), pi_power);
           }),
           py::arg("coeff"), py::arg("pi_power"))
      .def_property_readonly("coeff", [](const ExactVolume& v) { return as_fraction(v.coeff()); })
      .def_property_readonly("rational", [](const ExactVolume& v) { return to_string(v.coeff()); })
      .def_property_readonly("pi_power", &ExactVolume::pi_power)
      .def("approx", &ExactVolume::approx)
      .def("__float__", &ExactVolume::approx)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(py::self + py::self)
      .def(py::self == py::self)
      .def("__repr__", [](const ExactVolume& v) {
        return "ExactVolume(" + to_string(v.coeff()) + ", pi^" + std::to_string(v.pi_power()) + ")";
      });

  m.def("simplex_monomial_integral", [](const std::vector<std::uint16_t>& e) {
    return as_fraction(simplex_monomial_integral(e));
  }, py::arg("exponents"));
  m.def("poly_density", [](int rows, int cols, int max_vars) {
    const MultiPoly p = poly_density(rows, cols, {max_vars});
    py::list terms;
    for (const auto& [e, c] : p.terms()) {
      terms.append(py::make_tuple(py::tuple(py::cast(e)), py::int_(py::str(to_string(c)))));
    }
    return terms;
  }, py::arg("m"), py::arg("n"), py::arg("max_vars") = ExpansionLimits{}.max_vars,
        "Expanded density polynomial as a list of (exponents, coefficient).");
  m.def("density_integral", [](int rows, int cols, int max_vars) {
    return as_fraction(integrate_over_simplex(poly_density(rows, cols, {max_vars})));
  }, py::arg("m"), py::arg("n"), py::arg("max_vars") = ExpansionLimits{}.max_vars);

  // linear algebra -----------------------------------------------------------

  m.def("kron", &kron, py::arg("a"), py::arg("b"));
  m.def("partial_trace", [](const ComplexMatrix& rho, int rows, int cols, const std::string& keep) {
    return partial_trace(rho, {rows, cols}, as_subsystem(keep));
  }, py::arg("rho"), py::arg("m"), py::arg("n"), py::arg("keep"));
  m.def("eig_hermitian", [](const ComplexMatrix& h) {
    auto e = eig_hermitian(h);
    return py::make_tuple(e.values, e.vectors);
  }, py::arg("h"), "Eigenvalues (descending) and eigenvectors of a Hermitian matrix.");
  m.def("von_neumann_entropy", [](const ComplexMatrix& rho, int rows, int cols) {
    return von_neumann_entropy(as_state(rho, rows, cols));
  }, py::arg("rho"), py::arg("m"), py::arg("n"));
  m.def("mutual_information", [](const ComplexMatrix& rho, int rows, int cols) {
    return mutual_information(as_state(rho, rows, cols));
  }, py::arg("rho"), py::arg("m"), py::arg("n"));

  // Lie volumes and orbits ---------------------------------------------------

  m.def("hc_flag_volume_un", &hc_flag_volume_un, py::arg("n"));
  m.def("vol_un", &vol_un, py::arg("n"));
  m.def("vol_torus", &vol_torus, py::arg("n"));
  m.def("vol_tensor_flag", &vol_tensor_flag, py::arg("m"), py::arg("n"));
  m.def("vol_tensor_torus", &vol_tensor_torus, py::arg("m"), py::arg("n"));
  m.def("vol_tensor_group", &vol_tensor_group, py::arg("m"), py::arg("n"));
  m.def("symp_volume_un_orbit", [](const std::vector<double>& spectrum) {
    const auto v = symp_volume_un_orbit(spectrum);
    return py::make_tuple(v.value, v.regular);
  }, py::arg("spectrum"), "Returns (volume, regular).");
  m.def("symp_volume_lu_orbit", [](int rows, int cols, std::vector<double> grid) {
    const auto v = symp_volume_lu_orbit(EigGrid(rows, cols, std::move(grid)));
    return py::make_tuple(v.value, v.regular);
  }, py::arg("m"), py::arg("n"), py::arg("grid"), "Returns (volume, regular).");
  m.def("dim_dlu", &dim_dlu, py::arg("m"), py::arg("n"));

  // eigenvalue density and volumes -------------------------------------------

  m.def("density_unnormalized", [](int rows, int cols, std::vector<double> grid) {
    return density_unnormalized(EigGrid(rows, cols, std::move(grid)));
  }, py::arg("m"), py::arg("n"), py::arg("grid"));
  m.def("c_mn", &c_mn, py::arg("m"), py::arg("n"));
  m.def("lu_set_volume_exact", [](int rows, int cols, int max_vars) {
    return lu_set_volume_exact(rows, cols, {max_vars});
  }, py::arg("m"), py::arg("n"), py::arg("max_vars") = ExpansionLimits{}.max_vars);
  m.def("lu_set_volume_mc", [](int rows, int cols, std::int64_t samples, std::uint64_t seed,
                               int threads) {
    McEstimate e;
    {
      py::gil_scoped_release release;
      e = lu_set_volume_mc(rows, cols, samples, seed, {threads});
    }
    py::dict out;
    out["estimate"] = e.estimate;
    out["stderr"] = e.std_error;
    out["samples"] = e.samples;
    out["seed"] = e.seed;
    return out;
  }, py::arg("m"), py::arg("n"), py::arg("samples"), py::arg("seed"), py::arg("threads") = 0);
  m.def("f22", &f22, py::arg("t"));

  // two qubits ---------------------------------------------------------------

  m.def("bloch_decompose", [](const ComplexMatrix& rho) {
    const BlochForm f = bloch_decompose(as_state(rho, 2, 2));
    return py::make_tuple(f.r, f.s, f.t);
  }, py::arg("rho"), "Returns (r, s, T).");
  m.def("su2_to_so3", &su2_to_so3, py::arg("u"));
  m.def("lu_invariants", [](const ComplexMatrix& rho) {
    return lu_invariants(as_state(rho, 2, 2));
  }, py::arg("rho"));
  m.def("lu_equivalent", [](const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    return lu_equivalent(as_state(a, 2, 2), as_state(b, 2, 2), tol);
  }, py::arg("a"), py::arg("b"), py::arg("tol") = kDefaultLuTolerance);
  m.def("is_locally_diagonalizable", [](const ComplexMatrix& rho, double tol) {
    return decision_dict(is_locally_diagonalizable(as_state(rho, 2, 2), tol));
  }, py::arg("rho"), py::arg("tol") = kDefaultLuTolerance);
  m.def("xstate_eigenvalues", [](const ComplexMatrix& rho) {
    return xstate_eigenvalues(XState::from_matrix(rho));
  }, py::arg("rho"));
  m.def("diag_triple", [](const std::vector<double>& l) {
    const auto t = diag_triple(l);
    return py::make_tuple(t.a_z, t.b_z, t.r_zz);
  }, py::arg("spectrum"));
  m.def("triple_to_spectrum", [](double a_z, double b_z, double r_zz) {
    return triple_to_spectrum({a_z, b_z, r_zz});
  }, py::arg("a_z"), py::arg("b_z"), py::arg("r_zz"));

  // sampling and marginals ---------------------------------------------------

  m.def("haar_unitary", [](int n, std::uint64_t seed, std::uint64_t stream) {
    RngStream rng(seed, stream);
    return haar_unitary(n, rng);
  }, py::arg("n"), py::arg("seed"), py::arg("stream") = 0);
  m.def("random_hs_state", [](int rows, int cols, std::uint64_t seed, std::uint64_t stream) {
    RngStream rng(seed, stream);
    return random_hs_state({rows, cols}, rng).matrix();
  }, py::arg("m"), py::arg("n"), py::arg("seed"), py::arg("stream") = 0);
  m.def("sample_dirichlet", [](const std::vector<double>& alphas, std::uint64_t seed,
                               std::uint64_t stream) {
    RngStream rng(seed, stream);
    return sample_dirichlet(alphas, rng);
  }, py::arg("alphas"), py::arg("seed"), py::arg("stream") = 0);
  m.def("marginal_min_eigenvalues", [](const ComplexMatrix& rho) {
    const auto mm = marginal_min_eigenvalues(as_state(rho, 2, 2));
    return py::make_tuple(mm.lambda_a, mm.lambda_b);
  }, py::arg("rho"));
  m.def("bravyi_check", [](const std::vector<double>& l, double la, double lb) {
    return bravyi_check(l, la, lb);
  }, py::arg("spectrum"), py::arg("lambda_a"), py::arg("lambda_b"));
  m.def("weyl_basis", [](int d) { return weyl_basis(d).unitaries; }, py::arg("d"),
        "The d*d clock-and-shift unitaries, X^a Z^b at index a*d + b.");
  m.def("mix_marginals", [](const ComplexMatrix& rho, int d) {
    const auto out = mix_marginals(as_state(rho, d, d));
    return py::make_tuple(out.state.matrix(), out.v);
  }, py::arg("rho"), py::arg("d"), "Returns (V rho V^dagger, V).");
  m.def("max_mutual_information", [](const std::vector<double>& l, int d) {
    return max_mutual_information(l, d);
  }, py::arg("spectrum"), py::arg("d"));
}

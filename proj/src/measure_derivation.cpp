// Copyright 2026 The bornlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bornlab/measure_derivation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bornlab {

namespace {

// Two unit vectors spanning the plane orthogonal to n.
std::pair<Eigen::Vector3d, Eigen::Vector3d> orthogonal_plane(
    const Eigen::Vector3d& n) {
  Eigen::Index smallest = 0;
  n.cwiseAbs().minCoeff(&smallest);
  const Eigen::Vector3d u =
      n.cross(Eigen::Vector3d::Unit(smallest)).normalized();
  const Eigen::Vector3d v = n.cross(u).normalized();
  return {u, v};
}

// Unknowns x = (c, k0, k1, k2, k3).
//   f(1,  n) = 1   : 2c + k0 + n.k = 1
//   f(1, -n) = 0   : 2c + k0 - n.k = 0
//   f(-1, n) = 0   : 2c - k0 + n.k = 0
//   k parallel n   : u.k = 0, v.k = 0
Eigen::Matrix<double, 5, 1> solve_constraint_system(const Eigen::Vector3d& n) {
  const auto [u, v] = orthogonal_plane(n);
  Eigen::Matrix<double, 5, 5> a = Eigen::Matrix<double, 5, 5>::Zero();
  Eigen::Matrix<double, 5, 1> b = Eigen::Matrix<double, 5, 1>::Zero();
  a(0, 0) = 2.0;
  a(0, 1) = 1.0;
  a.block<1, 3>(0, 2) = n.transpose();
  b(0) = 1.0;
  a(1, 0) = 2.0;
  a(1, 1) = 1.0;
  a.block<1, 3>(1, 2) = -n.transpose();
  a(2, 0) = 2.0;
  a(2, 1) = -1.0;
  a.block<1, 3>(2, 2) = n.transpose();
  a.block<1, 3>(3, 2) = u.transpose();
  a.block<1, 3>(4, 2) = v.transpose();
  return a.fullPivLu().solve(b);
}

}  // namespace

double GudderFunctional::operator()(const FourVector& r) const {
  return c * euclidean_inner(r, r) + euclidean_inner(k, r);
}

bool GudderFunctional::is_derived_measure(double tol) const {
  return std::abs(c) <= tol && std::abs(k[0] - 0.5) <= tol &&
         std::abs(k.spatial().norm() - 0.5) <= tol;
}

double gudder_eval(const GudderFunctional& f, const FourVector& r) {
  return f(r);
}

Derivation derive_measure(const BlochVector& n_phi) {
  require_unit(n_phi, "derive_measure");
  DerivationTrace t;
  t.n_phi = n_phi;

  // Normalization pair: f(1, n) = 2c + k0 + n.k = 1 (unit fits once into
  // itself) and f(1, -n) = 2c + k0 - n.k = 0 (orthogonal state).
  constexpr double kSelf = 1.0;
  constexpr double kOrthogonal = 0.0;
  t.sum_constraint = 0.5 * (kSelf + kOrthogonal);
  t.dot_constraint = 0.5 * (kSelf - kOrthogonal);

  // Range step: f(1, n_psi) = sum + |k| cos(theta) must lie in [0, 1] while
  // cos(theta) sweeps [-1, 1], so |k| <= min(sum, 1 - sum). Cauchy-Schwarz
  // gives |k| >= n.k = dot. The two bounds meet, so |k| = dot and k is
  // parallel to n.
  t.range_bound = std::min(t.sum_constraint, 1.0 - t.sum_constraint);
  if (t.dot_constraint > t.range_bound + tol::kEq) {
    throw InternalError("derive_measure: range step is infeasible");
  }
  t.k_norm = t.dot_constraint;
  const Eigen::Vector3d k_spatial = t.k_norm * n_phi.coeffs();

  // Complement step: f(-1, n) = 2c - k0 + n.k = 0. Together with
  // 2c + k0 = sum this separates c from k0.
  t.c = (t.sum_constraint - t.dot_constraint) / 4.0;
  t.k0 = t.sum_constraint - 2.0 * t.c;
  t.complement_constraint = 2.0 * t.c - t.k0 + t.dot_constraint;

  GudderFunctional f{t.c, FourVector(t.k0, k_spatial)};

  const Eigen::Matrix<double, 5, 1> solved =
      solve_constraint_system(n_phi.coeffs());
  Eigen::Matrix<double, 5, 1> analytic;
  analytic << f.c, f.k[0], f.k[1], f.k[2], f.k[3];
  t.crosscheck_defect = (solved - analytic).cwiseAbs().maxCoeff();
  if (!(t.crosscheck_defect <= tol::kEq)) {
    std::ostringstream os;
    os << "derive_measure: analytic and solved constraints disagree by "
       << t.crosscheck_defect;
    throw InternalError(os.str());
  }

  return {f, t};
}

double born_probability(const BlochVector& n_phi, const BlochVector& n_psi) {
  require_unit(n_psi, "born_probability");
  return gudder_eval(derive_measure(n_phi).measure, n_psi.slice_point());
}

double measure_linear_form(const GudderFunctional& f_phi, const FourVector& r) {
  if (!f_phi.is_derived_measure()) {
    throw ContractError(
        "measure_linear_form: functional is not a derived measure "
        "(requires c = 0, k0 = 1/2, |k| = 1/2)");
  }
  const Eigen::Vector3d n_phi = 2.0 * f_phi.k.spatial();
  return 0.5 * (r.scalar() + n_phi.dot(r.spatial()));
}

double measure_trace_form(const BlochVector& n_phi, const FourVector& r) {
  const Hermitian2 p_phi = projector_from_bloch(n_phi);
  const Hermitian2 rho = pauli_compose(r);
  return (p_phi.matrix().adjoint() * rho.matrix()).trace().real();
}

}  // namespace bornlab

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

#ifndef BORNLAB_MEASURE_DERIVATION_HPP
#define BORNLAB_MEASURE_DERIVATION_HPP

#include "bornlab/pauli_algebra.hpp"

namespace bornlab {

/// f(r) = c (r.r) + k.r, the general continuous orthogonally additive
/// function on V4.
struct GudderFunctional {
  double c = 0.0;
  FourVector k;

  double operator()(const FourVector& r) const;

  /// c = 0, k0 = 1/2 and |k_spatial| = 1/2 within tol.
  bool is_derived_measure(double tol = tol::kEq) const;
};

double gudder_eval(const GudderFunctional& f, const FourVector& r);

/// Intermediate values of the constraint chain that pins (c, k) for the
/// measure anchored at n_phi.
struct DerivationTrace {
  BlochVector n_phi;
  /// 2c + k0, from f(1, n_phi) = 1 and f(1, -n_phi) = 0.
  double sum_constraint = 0.0;
  /// n_phi . k_spatial, from the same pair.
  double dot_constraint = 0.0;
  /// Upper bound on |k_spatial| forced by f(1, n_psi) in [0, 1] for all n_psi.
  double range_bound = 0.0;
  /// |k_spatial| after the range step.
  double k_norm = 0.0;
  /// 2c - k0 + n_phi.k_spatial evaluated at (-1, n_phi); zero by requirement.
  double complement_constraint = 0.0;
  double c = 0.0;
  double k0 = 0.0;
  /// max |analytic - solved| over (c, k) from the independent linear solve.
  double crosscheck_defect = 0.0;
};

struct Derivation {
  GudderFunctional measure;
  DerivationTrace trace;
};

/// Runs the constraint chain for the measure anchored at the unit vector
/// n_phi and returns c = 0, k = (1/2, n_phi / 2).
///
/// The chain is evaluated analytically, then re-derived by solving the
/// linear constraint system numerically; disagreement beyond tol::kEq
/// throws InternalError.
Derivation derive_measure(const BlochVector& n_phi);

/// f_phi(1, n_psi) = 1/2 (1 + n_phi . n_psi), evaluated through the derived
/// functional. Both vectors must be unit.
double born_probability(const BlochVector& n_phi, const BlochVector& n_psi);

/// Closed form 1/2 (r0 + n_phi . r) of a derived measure; n_phi is read off
/// as 2 k_spatial. Throws ContractError if f_phi is not a derived measure.
double measure_linear_form(const GudderFunctional& f_phi, const FourVector& r);

/// Re Tr(P_phi^dagger R) with R = pauli_compose(r).
double measure_trace_form(const BlochVector& n_phi, const FourVector& r);

}  // namespace bornlab

#endif  // BORNLAB_MEASURE_DERIVATION_HPP

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

#ifndef BORNLAB_ADDITIVITY_LAB_HPP
#define BORNLAB_ADDITIVITY_LAB_HPP

#include <cstddef>
#include <functional>
#include <string>

#include "bornlab/measure_derivation.hpp"
#include "bornlab/pauli_algebra.hpp"
#include "bornlab/random.hpp"

namespace bornlab {

using ScalarFunction = std::function<double(const FourVector&)>;

// ---------------------------------------------------------------------------
// Sampling

/// Four i.i.d. standard normal components; resamples the (measure-zero)
/// all-zero draw.
FourVector sample_four_vector(Rng& rng);

/// Uniform on the unit sphere (normalized Gaussian triple).
BlochVector sample_unit_bloch(Rng& rng);

/// (r, s) with r.s = 0 within tol::kOrth * |r||s|.
class OrthogonalPair {
 public:
  OrthogonalPair(const FourVector& r, const FourVector& s);

  const FourVector& r() const { return r_; }
  const FourVector& s() const { return s_; }

 private:
  FourVector r_;
  FourVector s_;
};

/// Gram-Schmidt remainder below this fraction of the candidate norm is
/// rejected and redrawn.
inline constexpr double kGramSchmidtRejection = 1e-6;

/// Draws r, then projects a fresh draw onto the orthogonal complement of r.
OrthogonalPair sample_orthogonal_pair(Rng& rng);
/// Same with a fixed first vector; r must be nonzero.
OrthogonalPair sample_orthogonal_pair(Rng& rng, const FourVector& r);

// ---------------------------------------------------------------------------
// Additivity checks

/// Serialized as {samples, max_defect, mean_defect, tol, pass}.
/// Defects are relative: |f(r+s) - f(r) - f(s)| / max(1, |f(r)| + |f(s)|).
struct AdditivityReport {
  std::size_t samples = 0;
  double max_defect = 0.0;
  double mean_defect = 0.0;
  double tol = 0.0;
  bool pass = false;
};

double relative_additivity_defect(const ScalarFunction& f, const FourVector& r,
                                  const FourVector& s);

/// Orthogonal additivity on n_pairs sampled orthogonal pairs.
AdditivityReport check_orthogonal_additivity(const ScalarFunction& f,
                                             std::size_t n_pairs, Rng& rng,
                                             double tol);
AdditivityReport check_orthogonal_additivity(const GudderFunctional& f,
                                             std::size_t n_pairs, Rng& rng,
                                             double tol);

/// Additivity on unconstrained pairs (linearity probe).
AdditivityReport check_full_additivity(const ScalarFunction& f,
                                       std::size_t n_pairs, Rng& rng,
                                       double tol);

// ---------------------------------------------------------------------------
// Lattice measures on qubit projectors

enum class MeasureKind { Born, OddPower, Custom };

const char* to_string(MeasureKind kind);

/// A rule assigning a number to each unit Bloch vector (i.e. to P_psi).
class LatticeMeasure {
 public:
  using Rule = std::function<double(const BlochVector&)>;

  LatticeMeasure(MeasureKind kind, Rule rule, std::string label);

  static LatticeMeasure born(const BlochVector& n_phi);
  static LatticeMeasure custom(Rule rule, std::string label = "custom");

  double operator()(const BlochVector& n_psi) const { return rule_(n_psi); }
  MeasureKind kind() const { return kind_; }
  const std::string& label() const { return label_; }

 private:
  MeasureKind kind_;
  Rule rule_;
  std::string label_;
};

/// p(n_psi) = 1/2 (1 + (n_s . n_psi)^m). Satisfies range and complement on
/// the sphere but is not the restriction of any linear functional. m must be
/// odd and >= 3.
LatticeMeasure odd_power_measure(const BlochVector& n_s, int m);

struct LatticeAxiomReport {
  std::size_t samples = 0;
  /// max over samples of max(range violation, complement defect)
  double max_defect = 0.0;
  double mean_defect = 0.0;
  double max_range_violation = 0.0;
  double max_complement_defect = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// Checks value in [0, 1] and p(n) + p(-n) = 1 on sampled unit vectors.
LatticeAxiomReport check_lattice_axioms(const LatticeMeasure& p,
                                        std::size_t n_samples, Rng& rng,
                                        double tol);

// ---------------------------------------------------------------------------
// Effects

/// Hermitian operator with both eigenvalues in [0, 1] within tol::kHerm.
class Effect {
 public:
  explicit Effect(const Hermitian2& op);
  const Hermitian2& op() const { return op_; }

 private:
  Hermitian2 op_;
};

/// Throws ValidationError unless rho is positive with unit trace.
void require_density(const Hermitian2& rho);

struct EffectAdditivityReport {
  /// Tr(rho (E1 + E2)) - Tr(rho E1) - Tr(rho E2)
  double defect = 0.0;
  /// Frobenius norm of E1 E2; nonzero means the effects are not orthogonal.
  double product_norm = 0.0;
  double tol = 0.0;
  bool pass = false;
};

EffectAdditivityReport check_effect_additivity(const Hermitian2& rho,
                                               const Effect& e1,
                                               const Effect& e2, double tol);

/// Density operator 1/2 (1 + a.sigma) with a uniform in the unit ball.
Hermitian2 sample_density(Rng& rng);
/// Effect with eigenvalues drawn uniformly from [0, max_eigenvalue].
Effect sample_effect(Rng& rng, double max_eigenvalue = 1.0);

}  // namespace bornlab

#endif  // BORNLAB_ADDITIVITY_LAB_HPP

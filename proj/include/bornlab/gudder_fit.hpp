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

#ifndef BORNLAB_GUDDER_FIT_HPP
#define BORNLAB_GUDDER_FIT_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bornlab/additivity_lab.hpp"
#include "bornlab/measure_derivation.hpp"
#include "bornlab/pauli_algebra.hpp"

namespace bornlab {

struct MeasureSample {
  FourVector r;
  double value = 0.0;
};

enum class Verdict { BornLinear, GudderQuadratic, NonGudder };

const char* to_string(Verdict v);

struct DensityExtraction {
  Hermitian2 rho;
  double trace = 0.0;
  double min_eigenvalue = 0.0;
  /// Unit trace and no negative eigenvalue beyond tol::kEq.
  bool physical = false;
};

inline constexpr double kDefaultRankTol = 1e-10;
inline constexpr double kDefaultTauC = 1e-6;
inline constexpr double kDefaultTauFit = 1e-6;

struct FitReport {
  double c_hat = 0.0;
  FourVector k_hat;
  double rms_residual = 0.0;
  double max_residual = 0.0;
  std::size_t samples = 0;
  /// Number of singular values above tol_rank * sigma_max (1..5).
  int design_rank = 0;
  double tol_rank = kDefaultRankTol;
  std::array<double, 5> singular_values{};
  /// Orthonormal basis of the unidentifiable parameter directions in
  /// (c, k0, k1, k2, k3) coordinates. Empty at full rank.
  std::vector<std::array<double, 5>> null_space;
  std::string identifiable_note;
  /// Set by classify().
  std::optional<Verdict> verdict;
  std::optional<DensityExtraction> rho_hat;
};

/// [r.r, r0, r1, r2, r3], the regression row for (c, k0, k1, k2, k3).
std::array<double, 5> build_design_row(const FourVector& r);

/// Minimum-norm least squares fit of f(r) = c r.r + k.r via SVD. Needs at
/// least five samples. On a rank-deficient support the returned parameters
/// are the pseudo-inverse solution and identifiable_note names what the
/// data actually determine.
FitReport fit_gudder(std::span<const MeasureSample> samples,
                     double tol_rank = kDefaultRankTol);

/// Assigns a verdict:
///   rms_residual > tau_fit          -> NonGudder
///   else |c_hat| <= tau_c           -> BornLinear (rho_hat extracted)
///   else                            -> GudderQuadratic
FitReport classify(FitReport fit, double tau_c = kDefaultTauC,
                   double tau_fit = kDefaultTauFit);

/// rho = 1/2 sum_mu (2 k_mu) sigma_mu, so that k.r = Tr(rho^dagger R_r).
/// Flags unphysical results instead of throwing.
DensityExtraction extract_density(const FourVector& k_hat);

// Sample generators.

std::vector<MeasureSample> sample_functional(const ScalarFunction& f,
                                             std::size_t n, Rng& rng);
/// Points (1, n) with n uniform on the sphere.
std::vector<MeasureSample> sample_functional_on_slice(const ScalarFunction& f,
                                                      std::size_t n, Rng& rng);
/// Lattice measure lifted to V4 through n -> (1, n).
std::vector<MeasureSample> sample_lattice_measure(const LatticeMeasure& p,
                                                  std::size_t n, Rng& rng);

}  // namespace bornlab

#endif  // BORNLAB_GUDDER_FIT_HPP

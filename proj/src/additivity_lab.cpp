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

#include "bornlab/additivity_lab.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace bornlab {

// ---------------------------------------------------------------------------
// Sampling

FourVector sample_four_vector(Rng& rng) {
  for (;;) {
    Eigen::Vector4d v;
    for (int i = 0; i < 4; ++i) v[i] = rng.normal();
    if (v.squaredNorm() > 0.0) return FourVector(v);
  }
}

BlochVector sample_unit_bloch(Rng& rng) {
  for (;;) {
    Eigen::Vector3d v(rng.normal(), rng.normal(), rng.normal());
    const double n = v.norm();
    if (n > 1e-8) return BlochVector(Eigen::Vector3d(v / n));
  }
}

OrthogonalPair::OrthogonalPair(const FourVector& r, const FourVector& s)
    : r_(r), s_(s) {
  const double bound = tol::kOrth * r.norm() * s.norm();
  if (std::abs(euclidean_inner(r, s)) > bound) {
    throw ValidationError("OrthogonalPair: vectors are not orthogonal");
  }
}

OrthogonalPair sample_orthogonal_pair(Rng& rng) {
  const FourVector r = sample_four_vector(rng);
  return sample_orthogonal_pair(rng, r);
}

OrthogonalPair sample_orthogonal_pair(Rng& rng, const FourVector& r) {
  const Eigen::Vector4d& rv = r.coeffs();
  const double rr = rv.squaredNorm();
  if (rr == 0.0) {
    throw ValidationError("sample_orthogonal_pair: r must be nonzero");
  }
  for (;;) {
    const Eigen::Vector4d candidate = sample_four_vector(rng).coeffs();
    Eigen::Vector4d s = candidate - (rv.dot(candidate) / rr) * rv;
    if (s.norm() < kGramSchmidtRejection * candidate.norm()) continue;
    // Second pass removes the rounding residue of the first.
    s -= (rv.dot(s) / rr) * rv;
    if (std::abs(rv.dot(s)) <= tol::kOrth * std::sqrt(rr) * s.norm()) {
      return OrthogonalPair(r, FourVector(s));
    }
  }
}

// ---------------------------------------------------------------------------
// Additivity

double relative_additivity_defect(const ScalarFunction& f, const FourVector& r,
                                  const FourVector& s) {
  const double fr = f(r);
  const double fs = f(s);
  const double scale = std::max(1.0, std::abs(fr) + std::abs(fs));
  return std::abs(f(r + s) - fr - fs) / scale;
}

namespace {

template <typename PairSource>
AdditivityReport run_additivity(const ScalarFunction& f, std::size_t n_pairs,
                                double tol, PairSource&& next_pair) {
  if (n_pairs == 0) {
    throw ValidationError("additivity check needs at least one pair");
  }
  AdditivityReport rep;
  rep.samples = n_pairs;
  rep.tol = tol;
  double sum = 0.0;
  for (std::size_t i = 0; i < n_pairs; ++i) {
    const auto [r, s] = next_pair();
    const double d = relative_additivity_defect(f, r, s);
    rep.max_defect = std::max(rep.max_defect, d);
    sum += d;
  }
  rep.mean_defect = sum / static_cast<double>(n_pairs);
  rep.pass = rep.max_defect < tol;
  return rep;
}

}  // namespace

AdditivityReport check_orthogonal_additivity(const ScalarFunction& f,
                                             std::size_t n_pairs, Rng& rng,
                                             double tol) {
  return run_additivity(f, n_pairs, tol, [&rng] {
    const OrthogonalPair p = sample_orthogonal_pair(rng);
    return std::pair{p.r(), p.s()};
  });
}

AdditivityReport check_orthogonal_additivity(const GudderFunctional& f,
                                             std::size_t n_pairs, Rng& rng,
                                             double tol) {
  return check_orthogonal_additivity(ScalarFunction(f), n_pairs, rng, tol);
}

AdditivityReport check_full_additivity(const ScalarFunction& f,
                                       std::size_t n_pairs, Rng& rng,
                                       double tol) {
  return run_additivity(f, n_pairs, tol, [&rng] {
    FourVector r = sample_four_vector(rng);
    FourVector s = sample_four_vector(rng);
    return std::pair{r, s};
  });
}

// ---------------------------------------------------------------------------
// Lattice measures

const char* to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::Born:
      return "born";
    case MeasureKind::OddPower:
      return "odd-power";
    case MeasureKind::Custom:
      return "custom";
  }
  return "unknown";
}

LatticeMeasure::LatticeMeasure(MeasureKind kind, Rule rule, std::string label)
    : kind_(kind), rule_(std::move(rule)), label_(std::move(label)) {
  if (!rule_) throw ValidationError("LatticeMeasure: empty rule");
}

LatticeMeasure LatticeMeasure::born(const BlochVector& n_phi) {
  require_unit(n_phi, "LatticeMeasure::born");
  const GudderFunctional f = derive_measure(n_phi).measure;
  return LatticeMeasure(
      MeasureKind::Born,
      [f](const BlochVector& n_psi) { return f(n_psi.slice_point()); },
      "born");
}

LatticeMeasure LatticeMeasure::custom(Rule rule, std::string label) {
  return LatticeMeasure(MeasureKind::Custom, std::move(rule), std::move(label));
}

LatticeMeasure odd_power_measure(const BlochVector& n_s, int m) {
  require_unit(n_s, "odd_power_measure");
  if (m < 3 || m % 2 == 0) {
    std::ostringstream os;
    os << "odd_power_measure: exponent must be odd and >= 3, got " << m;
    throw ValidationError(os.str());
  }
  const Eigen::Vector3d axis = n_s.coeffs();
  return LatticeMeasure(
      MeasureKind::OddPower,
      [axis, m](const BlochVector& n_psi) {
        const double x = axis.dot(n_psi.coeffs());
        return 0.5 * (1.0 + std::pow(x, m));
      },
      "odd-power(" + std::to_string(m) + ")");
}

LatticeAxiomReport check_lattice_axioms(const LatticeMeasure& p,
                                        std::size_t n_samples, Rng& rng,
                                        double tol) {
  if (n_samples == 0) {
    throw ValidationError("check_lattice_axioms: need at least one sample");
  }
  LatticeAxiomReport rep;
  rep.samples = n_samples;
  rep.tol = tol;
  double sum = 0.0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const BlochVector n = sample_unit_bloch(rng);
    const double a = p(n);
    const double b = p(-n);
    const double range = std::max({0.0, -a, a - 1.0, -b, b - 1.0});
    const double complement = std::abs(a + b - 1.0);
    rep.max_range_violation = std::max(rep.max_range_violation, range);
    rep.max_complement_defect = std::max(rep.max_complement_defect, complement);
    const double d = std::max(range, complement);
    rep.max_defect = std::max(rep.max_defect, d);
    sum += d;
  }
  rep.mean_defect = sum / static_cast<double>(n_samples);
  rep.pass = rep.max_defect < tol;
  return rep;
}

// ---------------------------------------------------------------------------
// Effects

Effect::Effect(const Hermitian2& op) : op_(op) {
  const auto ev = op_.eigenvalues();
  if (ev[0] < -tol::kHerm || ev[1] > 1.0 + tol::kHerm) {
    throw ValidationError("Effect: eigenvalues must lie in [0, 1]");
  }
}

void require_density(const Hermitian2& rho) {
  if (std::abs(rho.trace() - 1.0) > tol::kHerm) {
    throw ValidationError("density operator must have unit trace");
  }
  if (rho.eigenvalues()[0] < -tol::kHerm) {
    throw ValidationError("density operator must be positive");
  }
}

EffectAdditivityReport check_effect_additivity(const Hermitian2& rho,
                                               const Effect& e1,
                                               const Effect& e2, double tol) {
  require_density(rho);
  // The sum must itself be an effect.
  const Effect sum(e1.op() + e2.op());

  auto expectation = [&rho](const Hermitian2& e) {
    return (rho.matrix() * e.matrix()).trace().real();
  };
  EffectAdditivityReport rep;
  rep.tol = tol;
  rep.defect =
      expectation(sum.op()) - expectation(e1.op()) - expectation(e2.op());
  rep.product_norm = (e1.op().matrix() * e2.op().matrix()).norm();
  rep.pass = std::abs(rep.defect) < tol;
  return rep;
}

Hermitian2 sample_density(Rng& rng) {
  const BlochVector dir = sample_unit_bloch(rng);
  const double radius = std::cbrt(rng.uniform());
  return pauli_compose(FourVector(1.0, radius * dir.coeffs()));
}

Effect sample_effect(Rng& rng, double max_eigenvalue) {
  if (!(max_eigenvalue > 0.0 && max_eigenvalue <= 1.0)) {
    throw ValidationError("sample_effect: max_eigenvalue must be in (0, 1]");
  }
  const BlochVector axis = sample_unit_bloch(rng);
  const double lo = max_eigenvalue * rng.uniform();
  const double hi = max_eigenvalue * rng.uniform();
  // E = lo P_axis + hi P_-axis
  const Eigen::Matrix2cd m = lo * projector_from_bloch(axis).matrix() +
                             hi * projector_from_bloch(-axis).matrix();
  return Effect(Hermitian2(m));
}

}  // namespace bornlab

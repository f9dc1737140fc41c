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

#include "bornlab/gudder_fit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bornlab {

namespace {

// Null direction of the design on the slice (1, n): there r.r = 2 r0, so
// the first column equals twice the second and (c, k0) -> (c + t, k0 - 2t)
// leaves every prediction unchanged.
const Eigen::Matrix<double, 5, 1>& slice_null_direction() {
  static const Eigen::Matrix<double, 5, 1> d = [] {
    Eigen::Matrix<double, 5, 1> v;
    v << 1.0, -2.0, 0.0, 0.0, 0.0;
    return Eigen::Matrix<double, 5, 1>(v.normalized());
  }();
  return d;
}

std::string identifiability_note(const FitReport& rep) {
  std::ostringstream os;
  os.precision(17);
  if (rep.design_rank == 5) {
    os << "full rank: c, k0, k1, k2, k3 are all determined by the samples";
    return os.str();
  }
  if (rep.null_space.size() == 1) {
    Eigen::Map<const Eigen::Matrix<double, 5, 1>> null(rep.null_space[0].data());
    if (std::abs(null.dot(slice_null_direction())) > 1.0 - 1e-6) {
      os << "design rank 4: samples lie on the slice (1, n) with |n| = 1, "
            "where r.r = 2 r0; only the combination 2c + k0 = "
         << 2.0 * rep.c_hat + rep.k_hat[0]
         << " is determined, c and k0 are not separately identifiable "
            "(reported values are the minimum-norm solution); an off-slice "
            "sample such as (-1, n_phi) separates them";
      return os.str();
    }
  }
  os << "design rank " << rep.design_rank
     << ": parameter combinations along the null_space directions are not "
        "determined by the samples; reported values are the minimum-norm "
        "solution";
  return os.str();
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::BornLinear:
      return "BornLinear";
    case Verdict::GudderQuadratic:
      return "GudderQuadratic";
    case Verdict::NonGudder:
      return "NonGudder";
  }
  return "unknown";
}

std::array<double, 5> build_design_row(const FourVector& r) {
  return {euclidean_inner(r, r), r[0], r[1], r[2], r[3]};
}

FitReport fit_gudder(std::span<const MeasureSample> samples, double tol_rank) {
  if (samples.size() < 5) {
    throw ValidationError("fit_gudder: need at least 5 samples");
  }
  if (!(tol_rank > 0.0)) {
    throw ValidationError("fit_gudder: tol_rank must be positive");
  }
  const auto n = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd design(n, 5);
  Eigen::VectorXd values(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const MeasureSample& s = samples[static_cast<std::size_t>(i)];
    if (!std::isfinite(s.value)) {
      throw ValidationError("fit_gudder: sample values must be finite");
    }
    const auto row = build_design_row(s.r);
    for (int j = 0; j < 5; ++j) design(i, j) = row[static_cast<std::size_t>(j)];
    values(i) = s.value;
  }

  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sigma = svd.singularValues();

  FitReport rep;
  rep.samples = samples.size();
  rep.tol_rank = tol_rank;
  const double cutoff = tol_rank * sigma(0);
  Eigen::Matrix<double, 5, 1> x = Eigen::Matrix<double, 5, 1>::Zero();
  for (int j = 0; j < 5; ++j) {
    rep.singular_values[static_cast<std::size_t>(j)] = sigma(j);
    if (sigma(j) > cutoff) {
      ++rep.design_rank;
      x += (svd.matrixU().col(j).dot(values) / sigma(j)) * svd.matrixV().col(j);
    } else {
      std::array<double, 5> dir{};
      for (int m = 0; m < 5; ++m) {
        dir[static_cast<std::size_t>(m)] = svd.matrixV()(m, j);
      }
      rep.null_space.push_back(dir);
    }
  }

  rep.c_hat = x(0);
  rep.k_hat = FourVector(x(1), x(2), x(3), x(4));
  const Eigen::VectorXd residual = design * x - values;
  rep.rms_residual = std::sqrt(residual.squaredNorm() / static_cast<double>(n));
  rep.max_residual = residual.cwiseAbs().maxCoeff();
  rep.identifiable_note = identifiability_note(rep);
  return rep;
}

FitReport classify(FitReport fit, double tau_c, double tau_fit) {
  fit.rho_hat.reset();
  if (fit.rms_residual > tau_fit) {
    fit.verdict = Verdict::NonGudder;
  } else if (std::abs(fit.c_hat) <= tau_c) {
    fit.verdict = Verdict::BornLinear;
    fit.rho_hat = extract_density(fit.k_hat);
  } else {
    fit.verdict = Verdict::GudderQuadratic;
  }
  return fit;
}

DensityExtraction extract_density(const FourVector& k_hat) {
  DensityExtraction out;
  out.rho = pauli_compose(2.0 * k_hat);
  out.trace = out.rho.trace();
  out.min_eigenvalue = out.rho.eigenvalues()[0];
  out.physical = std::abs(out.trace - 1.0) <= tol::kEq &&
                 out.min_eigenvalue >= -tol::kEq;
  return out;
}

std::vector<MeasureSample> sample_functional(const ScalarFunction& f,
                                             std::size_t n, Rng& rng) {
  std::vector<MeasureSample> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const FourVector r = sample_four_vector(rng);
    out.push_back({r, f(r)});
  }
  return out;
}

std::vector<MeasureSample> sample_functional_on_slice(const ScalarFunction& f,
                                                      std::size_t n, Rng& rng) {
  std::vector<MeasureSample> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const FourVector r = sample_unit_bloch(rng).slice_point();
    out.push_back({r, f(r)});
  }
  return out;
}

std::vector<MeasureSample> sample_lattice_measure(const LatticeMeasure& p,
                                                  std::size_t n, Rng& rng) {
  std::vector<MeasureSample> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const BlochVector b = sample_unit_bloch(rng);
    out.push_back({b.slice_point(), p(b)});
  }
  return out;
}

}  // namespace bornlab

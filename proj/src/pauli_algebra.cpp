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

#include "bornlab/pauli_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace bornlab {

namespace {

std::array<Eigen::Matrix2cd, 4> make_pauli_basis() {
  const Complex i(0.0, 1.0);
  std::array<Eigen::Matrix2cd, 4> s;
  s[0] << 1.0, 0.0, 0.0, 1.0;
  s[1] << 0.0, 1.0, 1.0, 0.0;
  s[2] << 0.0, -i, i, 0.0;
  s[3] << 1.0, 0.0, 0.0, -1.0;
  return s;
}

bool all_finite(const Eigen::Ref<const Eigen::VectorXd>& v) {
  return v.allFinite();
}

std::string describe_norm(const char* what, double norm) {
  std::ostringstream os;
  os.precision(17);
  os << what << ": expected a unit Bloch vector, got norm " << norm;
  return os.str();
}

}  // namespace

const Eigen::Matrix2cd& pauli(int mu) {
  static const std::array<Eigen::Matrix2cd, 4> basis = make_pauli_basis();
  if (mu < 0 || mu > 3) {
    throw ValidationError("pauli index must be in [0, 3]");
  }
  return basis[static_cast<std::size_t>(mu)];
}

// ---------------------------------------------------------------------------
// FourVector / BlochVector / Ket2

FourVector::FourVector(double r0, double r1, double r2, double r3)
    : FourVector(Eigen::Vector4d(r0, r1, r2, r3)) {}

FourVector::FourVector(double r0, const Eigen::Vector3d& spatial)
    : FourVector(Eigen::Vector4d(r0, spatial[0], spatial[1], spatial[2])) {}

FourVector::FourVector(const Eigen::Vector4d& r) : r_(r) {
  if (!all_finite(r_)) {
    throw ValidationError("FourVector components must be finite");
  }
}

BlochVector::BlochVector(double x, double y, double z)
    : BlochVector(Eigen::Vector3d(x, y, z)) {}

BlochVector::BlochVector(const Eigen::Vector3d& n) : n_(n) {
  if (!all_finite(n_)) {
    throw ValidationError("BlochVector components must be finite");
  }
}

bool BlochVector::is_unit(double tol) const {
  return std::abs(norm() - 1.0) <= tol;
}

double cos_angle(const BlochVector& a, const BlochVector& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) {
    throw ValidationError("cos_angle: angle with a zero vector is undefined");
  }
  return a.dot(b) / (na * nb);
}

void require_unit(const BlochVector& n, const char* what) {
  if (!n.is_unit()) {
    throw ValidationError(describe_norm(what, n.norm()));
  }
}

Ket2::Ket2(Complex alpha, Complex beta) : alpha_(alpha), beta_(beta) {
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()) ||
      !std::isfinite(beta.real()) || !std::isfinite(beta.imag())) {
    throw ValidationError("Ket2 amplitudes must be finite");
  }
}

bool Ket2::is_normalized(double tol) const {
  return std::abs(norm_squared() - 1.0) <= tol;
}

// ---------------------------------------------------------------------------
// Hermitian2

double hermiticity_defect(const Eigen::Matrix2cd& m) {
  return std::max({std::abs(m(0, 0).imag()), std::abs(m(1, 1).imag()),
                   std::abs(m(1, 0) - std::conj(m(0, 1)))});
}

Hermitian2::Hermitian2(const Eigen::Matrix2cd& m) : m_(m) {
  if (!m_.allFinite()) {
    throw ValidationError("Hermitian2 entries must be finite");
  }
  const double defect = hermiticity_defect(m_);
  if (defect > tol::kHerm) {
    std::ostringstream os;
    os << "operator is not Hermitian (defect " << defect << ")";
    throw ValidationError(os.str());
  }
}

Hermitian2 Hermitian2::from_entries(Complex a00, Complex a01, Complex a10,
                                    Complex a11) {
  Eigen::Matrix2cd m;
  m << a00, a01, a10, a11;
  return Hermitian2(m);
}

Hermitian2 Hermitian2::identity() {
  return Hermitian2(Eigen::Matrix2cd::Identity());
}

std::array<double, 2> Hermitian2::eigenvalues() const {
  const double a = m_(0, 0).real();
  const double d = m_(1, 1).real();
  const double half_gap = std::hypot(0.5 * (a - d), std::abs(m_(0, 1)));
  const double mean = 0.5 * (a + d);
  return {mean - half_gap, mean + half_gap};
}

bool Hermitian2::is_idempotent(double tol) const {
  return (m_ * m_ - m_).cwiseAbs().maxCoeff() <= tol;
}

// ---------------------------------------------------------------------------
// Decomposition

FourVector pauli_decompose(const Eigen::Matrix2cd& op) {
  return pauli_decompose(Hermitian2(op));
}

FourVector pauli_decompose(const Hermitian2& op) {
  Eigen::Vector4d r;
  for (int mu = 0; mu < 4; ++mu) {
    const Complex t = (pauli(mu) * op.matrix()).trace();
    // Hermitian in, real out; the imaginary residue is bounded by the
    // hermiticity defect checked at construction.
    if (std::abs(t.imag()) > 2.0 * tol::kHerm) {
      throw ValidationError("pauli_decompose: trace has imaginary part");
    }
    r[mu] = t.real();
  }
  return FourVector(r);
}

Hermitian2 pauli_compose(const FourVector& r) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  for (int mu = 0; mu < 4; ++mu) {
    m += (0.5 * r[mu]) * pauli(mu);
  }
  return Hermitian2(m);
}

Hermitian2 projector_from_bloch(const BlochVector& n) {
  require_unit(n, "projector_from_bloch");
  return pauli_compose(FourVector(1.0, n.coeffs()));
}

BlochVector bloch_from_projector(const Hermitian2& p) {
  if (std::abs(p.trace() - 1.0) > tol::kHerm || !p.is_idempotent()) {
    throw ValidationError(
        "bloch_from_projector: input is not a rank-1 projector");
  }
  const FourVector r = pauli_decompose(p);
  return BlochVector(r.spatial());
}

Hermitian2 ket_to_operator(const Ket2& psi) {
  const Eigen::Vector2cd v = psi.coeffs();
  Eigen::Matrix2cd m = v * v.adjoint();
  // Diagonal entries are |amplitude|^2 exactly; drop the round-off
  // imaginary parts so the result is Hermitian by construction.
  m(0, 0) = std::norm(psi.alpha());
  m(1, 1) = std::norm(psi.beta());
  m(1, 0) = std::conj(m(0, 1));
  return Hermitian2(m);
}

Ket2 ket_from_bloch(const BlochVector& n) {
  require_unit(n, "ket_from_bloch");
  const double x = n[0];
  const double y = n[1];
  const double z = n[2];
  if (z >= 0.0) {
    const double a = std::sqrt(0.5 * (1.0 + z));
    return Ket2(a, Complex(x, y) / (2.0 * a));
  }
  const double b = std::sqrt(0.5 * (1.0 - z));
  return Ket2(Complex(x, -y) / (2.0 * b), b);
}

double overlap_probability(const Ket2& phi, const Ket2& psi) {
  if (!phi.is_normalized() || !psi.is_normalized()) {
    throw ValidationError("overlap_probability: kets must be normalized");
  }
  return std::norm(phi.coeffs().dot(psi.coeffs()));
}

double euclidean_inner(const FourVector& r, const FourVector& s) {
  return r.coeffs().dot(s.coeffs());
}

double hilbert_schmidt_inner(const Hermitian2& a, const Hermitian2& b) {
  return (a.matrix().adjoint() * b.matrix()).trace().real();
}

}  // namespace bornlab

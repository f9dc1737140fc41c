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

#ifndef BORNLAB_PAULI_ALGEBRA_HPP
#define BORNLAB_PAULI_ALGEBRA_HPP

// Correspondence between 2x2 Hermitian operators, kets, Bloch vectors and
// the real four-dimensional coefficient space V4:
//
//   A = 1/2 * sum_mu r_mu sigma_mu,     r_mu = Tr(sigma_mu A),
//
// with sigma_0 = identity and the standard Pauli matrices
//   sigma_x = [0 1; 1 0], sigma_y = [0 -i; i 0], sigma_z = [1 0; 0 -1].

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "bornlab/errors.hpp"

namespace bornlab {

using Complex = std::complex<double>;

/// Pauli matrix sigma_mu, mu in {0, 1, 2, 3}; sigma_0 is the identity.
const Eigen::Matrix2cd& pauli(int mu);

/// Element (r0, r1, r2, r3) of V4. Components are always finite.
class FourVector {
 public:
  FourVector() : r_(Eigen::Vector4d::Zero()) {}
  FourVector(double r0, double r1, double r2, double r3);
  FourVector(double r0, const Eigen::Vector3d& spatial);
  explicit FourVector(const Eigen::Vector4d& r);

  double operator[](int mu) const { return r_[mu]; }
  double scalar() const { return r_[0]; }
  Eigen::Vector3d spatial() const { return r_.tail<3>(); }
  const Eigen::Vector4d& coeffs() const { return r_; }
  std::array<double, 4> to_array() const { return {r_[0], r_[1], r_[2], r_[3]}; }

  double norm() const { return r_.norm(); }

  friend FourVector operator+(const FourVector& a, const FourVector& b) {
    return FourVector(Eigen::Vector4d(a.r_ + b.r_));
  }
  friend FourVector operator-(const FourVector& a, const FourVector& b) {
    return FourVector(Eigen::Vector4d(a.r_ - b.r_));
  }
  friend FourVector operator*(double s, const FourVector& a) {
    return FourVector(Eigen::Vector4d(s * a.r_));
  }
  friend bool operator==(const FourVector& a, const FourVector& b) {
    return a.r_ == b.r_;
  }

 private:
  Eigen::Vector4d r_;
};

/// Real 3-vector. Unit norm is only demanded by operations that build
/// projectors from it; those check it, nothing here renormalizes.
class BlochVector {
 public:
  BlochVector() : n_(Eigen::Vector3d::Zero()) {}
  BlochVector(double x, double y, double z);
  explicit BlochVector(const Eigen::Vector3d& n);

  double operator[](int i) const { return n_[i]; }
  const Eigen::Vector3d& coeffs() const { return n_; }
  std::array<double, 3> to_array() const { return {n_[0], n_[1], n_[2]}; }

  double norm() const { return n_.norm(); }
  bool is_unit(double tol = tol::kUnit) const;
  double dot(const BlochVector& other) const { return n_.dot(other.n_); }

  /// Four-vector (1, n) on the slice where lattice measures live.
  FourVector slice_point() const { return FourVector(1.0, n_); }

  BlochVector operator-() const { return BlochVector(Eigen::Vector3d(-n_)); }
  friend bool operator==(const BlochVector& a, const BlochVector& b) {
    return a.n_ == b.n_;
  }

 private:
  Eigen::Vector3d n_;
};

/// cos(theta) = a.b / (|a||b|). Throws ValidationError on a zero vector.
double cos_angle(const BlochVector& a, const BlochVector& b);

/// Throws ValidationError unless |n| = 1 within tol::kUnit.
void require_unit(const BlochVector& n, const char* what);

/// Pair of complex amplitudes (alpha, beta). Need not be normalized.
class Ket2 {
 public:
  Ket2(Complex alpha, Complex beta);

  Complex alpha() const { return alpha_; }
  Complex beta() const { return beta_; }
  double norm_squared() const { return std::norm(alpha_) + std::norm(beta_); }
  bool is_normalized(double tol = tol::kUnit) const;
  Eigen::Vector2cd coeffs() const { return {alpha_, beta_}; }

 private:
  Complex alpha_;
  Complex beta_;
};

/// 2x2 Hermitian operator. Construction validates hermiticity within
/// tol::kHerm and stores the entries as given.
class Hermitian2 {
 public:
  /// Zero operator.
  Hermitian2() : m_(Eigen::Matrix2cd::Zero()) {}
  explicit Hermitian2(const Eigen::Matrix2cd& m);
  static Hermitian2 from_entries(Complex a00, Complex a01, Complex a10,
                                 Complex a11);
  static Hermitian2 identity();

  Complex operator()(int i, int j) const { return m_(i, j); }
  const Eigen::Matrix2cd& matrix() const { return m_; }
  double trace() const { return (m_(0, 0) + m_(1, 1)).real(); }

  /// Ascending eigenvalues, closed form for the 2x2 case.
  std::array<double, 2> eigenvalues() const;
  bool is_idempotent(double tol = tol::kHerm) const;

  friend Hermitian2 operator+(const Hermitian2& a, const Hermitian2& b) {
    return Hermitian2(Eigen::Matrix2cd(a.m_ + b.m_));
  }
  friend Hermitian2 operator*(double s, const Hermitian2& a) {
    return Hermitian2(Eigen::Matrix2cd(s * a.m_));
  }

 private:
  Eigen::Matrix2cd m_;
};

/// Max deviation from hermiticity: max(|Im a00|, |Im a11|, |a10 - conj a01|).
double hermiticity_defect(const Eigen::Matrix2cd& m);

/// r_mu = Tr(sigma_mu A).
FourVector pauli_decompose(const Hermitian2& op);
/// Validating overload for raw matrices; throws ValidationError when the
/// input is not Hermitian within tol::kHerm.
FourVector pauli_decompose(const Eigen::Matrix2cd& op);

/// A = 1/2 sum_mu r_mu sigma_mu. Exact inverse of pauli_decompose.
Hermitian2 pauli_compose(const FourVector& r);

/// Rank-1 projector 1/2 (1 + n.sigma). Requires |n| = 1.
Hermitian2 projector_from_bloch(const BlochVector& n);

/// n = Tr(sigma P). Requires P idempotent with unit trace.
BlochVector bloch_from_projector(const Hermitian2& p);

/// |psi><psi|; trace equals |alpha|^2 + |beta|^2.
Hermitian2 ket_to_operator(const Ket2& psi);

/// A normalized ket whose projector is 1/2 (1 + n.sigma). The global phase
/// is chosen so that the larger of the two amplitudes is real and positive.
Ket2 ket_from_bloch(const BlochVector& n);

/// |<phi|psi>|^2 for normalized kets.
double overlap_probability(const Ket2& phi, const Ket2& psi);

/// sum_mu r_mu s_mu.
double euclidean_inner(const FourVector& r, const FourVector& s);

/// Re Tr(A^dagger B). For Hermitian inputs the imaginary part vanishes.
double hilbert_schmidt_inner(const Hermitian2& a, const Hermitian2& b);

}  // namespace bornlab

#endif  // BORNLAB_PAULI_ALGEBRA_HPP

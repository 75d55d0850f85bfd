// Copyright 2026 The Invar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "invar/report.hpp"

// Numeric layer: two-qubit density matrices, their Fano coordinates and the
// unitary actions that the invariant polynomials are checked against.
namespace invar::group {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;

inline constexpr double kMatrixTol = 1e-12;
inline constexpr double kPositivityTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;

class NumericError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// 4x4 Hermitian matrix with unit trace. Positivity is not required; see
// check_positivity().
class DensityMatrix {
 public:
  // Throws NumericError if `m` is not Hermitian or not of unit trace within
  // kMatrixTol (scaled by the matrix norm when it exceeds one).
  explicit DensityMatrix(const Matrix4c& m);

  const Matrix4c& matrix() const { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }

 private:
  Matrix4c m_;
};

struct FanoState {
  Eigen::Vector3d a = Eigen::Vector3d::Zero();
  Eigen::Vector3d b = Eigen::Vector3d::Zero();
  Eigen::Matrix3d c = Eigen::Matrix3d::Zero();

  // a1..a3, b1..b3, c11, c12, ..., c33, the order of catalog::fano_context().
  std::array<double, 15> coordinates() const;
  static FanoState from_coordinates(std::span<const double, 15> coords);
};

struct XState {
  double alpha = 0, beta = 0, gamma = 0;
  double c11 = 0, c12 = 0, c21 = 0, c22 = 0;

  // alpha, beta, gamma, c11, c12, c21, c22, the order of catalog::x_context().
  std::array<double, 7> coordinates() const;
  FanoState to_fano() const;
  // Throws NumericError unless the eight non-X Fano parameters vanish
  // within `tol`.
  static XState from_fano(const FanoState& s, double tol = kMatrixTol);
};

// Rotation coordinates x1 = c11-c22, x2 = c12+c21, x3 = alpha+beta,
// y1 = c11+c22, y2 = c12-c21, y3 = beta-alpha.
struct PlanarCoordinates {
  double x1, x2, x3, y1, y2, y3;
  static PlanarCoordinates from(const XState& s);
  XState to_state(double gamma) const;
};

// sigma_0 = identity, sigma_1..3 Pauli matrices.
const Matrix2c& pauli(int k);
Matrix4c kron(const Matrix2c& lhs, const Matrix2c& rhs);

DensityMatrix fano_to_density(const FanoState& s);
FanoState density_to_fano(const DensityMatrix& rho);

// (u1 x u2) rho (u1 x u2)^dagger. Both factors must be special unitary
// within kUnitaryTol.
DensityMatrix act_local(const DensityMatrix& rho, const Matrix2c& u1,
                        const Matrix2c& u2);
DensityMatrix conjugate(const DensityMatrix& rho, const Matrix4c& g);

// Permutation (2 4) that brings X matrices to 2x2 block-diagonal form.
const Matrix4c& permutation_pi();

// e1..e7 spanning the Lie algebra of the X-preserving subgroup.
const std::array<Matrix4c, 7>& gx_generators();
// exp(i * sum_k omega_k e_k), by scaling and squaring with Pade approximants.
Matrix4c gx_element(std::span<const double, 7> omega);

// Largest modulus among the eight entries outside the main and
// anti-diagonal.
double max_non_x_entry(const Matrix4c& m);

struct XBlocks {
  Matrix2c outer;  // [[r11, r14], [r41, r44]]
  Matrix2c inner;  // [[r33, r32], [r23, r22]]
};
// Throws NumericError if rho is not of X form within kMatrixTol.
XBlocks block_diagonalize(const DensityMatrix& rho);

struct PositivityResult {
  bool positive = false;
  std::array<double, 4> eigenvalues{};  // ascending
  // For X-form inputs: rho11 rho44 >= |rho14|^2, rho22 rho33 >= |rho23|^2
  // and a nonnegative diagonal.
  std::optional<bool> x_block_condition;
};
PositivityResult check_positivity(const DensityMatrix& rho);

// exp(i phi1 sigma3 / 2) x exp(i phi2 sigma3 / 2).
Matrix4c local_diagonal(double phi1, double phi2);

// Rotation of (x1, x2) by -(phi1 + phi2) and of (y1, y2) by (phi1 - phi2),
// counterclockwise positive. These are the signs induced by conjugation with
// local_diagonal(phi1, phi2); alpha, beta, gamma are unchanged.
XState act_so2so2(const XState& s, double phi1, double phi2);
std::string so2so2_convention();

// Random generators; callers own the engine and its seed.
Matrix2c random_su2(std::mt19937_64& rng);
DensityMatrix random_density(std::mt19937_64& rng);
XState random_x_state(std::mt19937_64& rng);
std::array<double, 7> random_angles(std::mt19937_64& rng);

// |after - before| relative to max(|before|, |after|, magnitude), where
// magnitude bounds the size of the summands that produced the values.
double relative_error(double before, double after, double magnitude = 0.0);

struct SuiteOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  double tolerance = 1e-9;
};

// Commutators of the e_k stay in their real span; the span has dimension 7.
Report verify_algebra_closure();
// The 20 catalog invariants under random local unitaries.
Report verify_local_invariance(const SuiteOptions& options);
// X-form and f1, f2, f3 under random G_X elements.
Report verify_gx_global_invariants(const SuiteOptions& options);
// f1, g1..g4 under act_so2so2 and agreement with matrix conjugation.
Report verify_so2so2(const SuiteOptions& options);

}  // namespace invar::group

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

#include "invar/group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "invar/catalog.hpp"

namespace invar::group {

namespace {

constexpr Complex kI(0.0, 1.0);

double scale_of(const Matrix4c& m) { return std::max(1.0, m.norm()); }

// X coordinates of a Fano state without checking the discarded parameters.
XState project_x(const FanoState& s) {
  return {s.a(2),    s.b(2),    s.c(2, 2), s.c(0, 0),
          s.c(0, 1), s.c(1, 0), s.c(1, 1)};
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

}  // namespace

DensityMatrix::DensityMatrix(const Matrix4c& m) : m_(m) {
  const double tol = kMatrixTol * scale_of(m);
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol) {
    throw NumericError("density matrix is not Hermitian");
  }
  if (std::abs(m.trace() - Complex(1.0)) > tol) {
    throw NumericError("density matrix does not have unit trace");
  }
}

std::array<double, 15> FanoState::coordinates() const {
  std::array<double, 15> out{};
  for (int i = 0; i < 3; ++i) {
    out[i] = a(i);
    out[3 + i] = b(i);
    for (int j = 0; j < 3; ++j) out[6 + 3 * i + j] = c(i, j);
  }
  return out;
}

FanoState FanoState::from_coordinates(std::span<const double, 15> coords) {
  FanoState s;
  for (int i = 0; i < 3; ++i) {
    s.a(i) = coords[i];
    s.b(i) = coords[3 + i];
    for (int j = 0; j < 3; ++j) s.c(i, j) = coords[6 + 3 * i + j];
  }
  return s;
}

std::array<double, 7> XState::coordinates() const {
  return {alpha, beta, gamma, c11, c12, c21, c22};
}

FanoState XState::to_fano() const {
  FanoState s;
  s.a(2) = alpha;
  s.b(2) = beta;
  s.c(2, 2) = gamma;
  s.c(0, 0) = c11;
  s.c(0, 1) = c12;
  s.c(1, 0) = c21;
  s.c(1, 1) = c22;
  return s;
}

XState XState::from_fano(const FanoState& s, double tol) {
  const double off = std::max({std::abs(s.a(0)), std::abs(s.a(1)), std::abs(s.b(0)),
                               std::abs(s.b(1)), std::abs(s.c(0, 2)), std::abs(s.c(1, 2)),
                               std::abs(s.c(2, 0)), std::abs(s.c(2, 1))});
  if (off > tol) throw NumericError("Fano state is not an X-state");
  return project_x(s);
}

PlanarCoordinates PlanarCoordinates::from(const XState& s) {
  return {s.c11 - s.c22, s.c12 + s.c21, s.alpha + s.beta,
          s.c11 + s.c22, s.c12 - s.c21, s.beta - s.alpha};
}

XState PlanarCoordinates::to_state(double gamma) const {
  XState s;
  s.alpha = (x3 - y3) / 2;
  s.beta = (x3 + y3) / 2;
  s.gamma = gamma;
  s.c11 = (x1 + y1) / 2;
  s.c22 = (y1 - x1) / 2;
  s.c12 = (x2 + y2) / 2;
  s.c21 = (x2 - y2) / 2;
  return s;
}

const Matrix2c& pauli(int k) {
  static const std::array<Matrix2c, 4> sigma = [] {
    std::array<Matrix2c, 4> s;
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, -kI, kI, 0;
    s[3] << 1, 0, 0, -1;
    return s;
  }();
  return sigma.at(static_cast<std::size_t>(k));
}

Matrix4c kron(const Matrix2c& lhs, const Matrix2c& rhs) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = lhs(i, j) * rhs;
  }
  return out;
}

DensityMatrix fano_to_density(const FanoState& s) {
  Matrix4c m = kron(pauli(0), pauli(0));
  for (int i = 0; i < 3; ++i) {
    m += s.a(i) * kron(pauli(i + 1), pauli(0));
    m += s.b(i) * kron(pauli(0), pauli(i + 1));
    for (int j = 0; j < 3; ++j) m += s.c(i, j) * kron(pauli(i + 1), pauli(j + 1));
  }
  return DensityMatrix(m / 4.0);
}

FanoState density_to_fano(const DensityMatrix& rho) {
  const auto expect = [&](const Matrix2c& l, const Matrix2c& r) {
    return (rho.matrix() * kron(l, r)).trace().real();
  };
  FanoState s;
  for (int i = 0; i < 3; ++i) {
    s.a(i) = expect(pauli(i + 1), pauli(0));
    s.b(i) = expect(pauli(0), pauli(i + 1));
    for (int j = 0; j < 3; ++j) s.c(i, j) = expect(pauli(i + 1), pauli(j + 1));
  }
  return s;
}

DensityMatrix conjugate(const DensityMatrix& rho, const Matrix4c& g) {
  Matrix4c m = g * rho.matrix() * g.adjoint();
  // Symmetrize away the rounding-level anti-Hermitian part.
  m = (m + m.adjoint()) / 2.0;
  return DensityMatrix(m);
}

DensityMatrix act_local(const DensityMatrix& rho, const Matrix2c& u1,
                        const Matrix2c& u2) {
  for (const auto* u : {&u1, &u2}) {
    if (((*u) * u->adjoint() - Matrix2c::Identity()).cwiseAbs().maxCoeff() > kUnitaryTol ||
        std::abs(u->determinant() - Complex(1.0)) > kUnitaryTol) {
      throw NumericError("local factor is not in SU(2)");
    }
  }
  return conjugate(rho, kron(u1, u2));
}

const Matrix4c& permutation_pi() {
  static const Matrix4c p = [] {
    Matrix4c m = Matrix4c::Zero();
    m(0, 0) = m(1, 3) = m(2, 2) = m(3, 1) = 1;
    return m;
  }();
  return p;
}

const std::array<Matrix4c, 7>& gx_generators() {
  static const std::array<Matrix4c, 7> e = {
      kron(pauli(3), pauli(3)),  kron(pauli(2), pauli(1)),
      kron(pauli(0), pauli(3)),  Matrix4c(-kron(pauli(2), pauli(2))),
      kron(pauli(1), pauli(2)),  kron(pauli(3), pauli(0)),
      kron(pauli(1), pauli(1)),
  };
  return e;
}

Matrix4c gx_element(std::span<const double, 7> omega) {
  Matrix4c h = Matrix4c::Zero();
  for (std::size_t k = 0; k < 7; ++k) h += omega[k] * gx_generators()[k];
  Matrix4c ih = kI * h;
  return ih.exp();
}

double max_non_x_entry(const Matrix4c& m) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j || i + j == 3) continue;
      worst = std::max(worst, std::abs(m(i, j)));
    }
  }
  return worst;
}

XBlocks block_diagonalize(const DensityMatrix& rho) {
  if (max_non_x_entry(rho.matrix()) > kMatrixTol) {
    throw NumericError("matrix is not of X form");
  }
  const Matrix4c& p = permutation_pi();
  const Matrix4c b = p * rho.matrix() * p;
  return {b.block<2, 2>(0, 0), b.block<2, 2>(2, 2)};
}

PositivityResult check_positivity(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(rho.matrix(), Eigen::EigenvaluesOnly);
  PositivityResult result;
  for (int k = 0; k < 4; ++k) result.eigenvalues[k] = solver.eigenvalues()(k);
  result.positive = result.eigenvalues[0] >= -kPositivityTol;
  if (max_non_x_entry(rho.matrix()) <= kMatrixTol) {
    const auto& m = rho.matrix();
    const double d[4] = {m(0, 0).real(), m(1, 1).real(), m(2, 2).real(), m(3, 3).real()};
    const bool diag_ok = std::all_of(std::begin(d), std::end(d),
                                     [](double v) { return v >= -kPositivityTol; });
    result.x_block_condition =
        diag_ok && d[0] * d[3] - std::norm(m(0, 3)) >= -kPositivityTol &&
        d[1] * d[2] - std::norm(m(1, 2)) >= -kPositivityTol;
  }
  return result;
}

Matrix4c local_diagonal(double phi1, double phi2) {
  const auto half_turn = [](double phi) {
    Matrix2c u = Matrix2c::Zero();
    u(0, 0) = std::exp(kI * (phi / 2));
    u(1, 1) = std::exp(-kI * (phi / 2));
    return u;
  };
  return kron(half_turn(phi1), half_turn(phi2));
}

XState act_so2so2(const XState& s, double phi1, double phi2) {
  const auto rotate = [](double& u, double& v, double angle) {
    const double c = std::cos(angle);
    const double sn = std::sin(angle);
    const double ru = c * u - sn * v;
    const double rv = sn * u + c * v;
    u = ru;
    v = rv;
  };
  auto p = PlanarCoordinates::from(s);
  rotate(p.x1, p.x2, -(phi1 + phi2));
  rotate(p.y1, p.y2, phi1 - phi2);
  return p.to_state(s.gamma);
}

std::string so2so2_convention() {
  return "(x1,x2) rotated by -(phi1+phi2), (y1,y2) rotated by +(phi1-phi2), "
         "counterclockwise positive; matches conjugation by "
         "exp(i phi1 sigma3/2) (x) exp(i phi2 sigma3/2)";
}

Matrix2c random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Complex a(normal(rng), normal(rng));
  Complex b(normal(rng), normal(rng));
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  a /= n;
  b /= n;
  Matrix2c u;
  u << a, -std::conj(b), b, std::conj(a);
  return u;
}

DensityMatrix random_density(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Matrix4c g;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  }
  Matrix4c m = g * g.adjoint();
  m /= m.trace().real();
  m = (m + m.adjoint()) / 2.0;
  return DensityMatrix(m);
}

XState random_x_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  XState s;
  s.alpha = u(rng);
  s.beta = u(rng);
  s.gamma = u(rng);
  s.c11 = u(rng);
  s.c12 = u(rng);
  s.c21 = u(rng);
  s.c22 = u(rng);
  return s;
}

std::array<double, 7> random_angles(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
  std::array<double, 7> w{};
  for (auto& x : w) x = u(rng);
  return w;
}

double relative_error(double before, double after, double magnitude) {
  const double denom = std::max({std::abs(before), std::abs(after), magnitude});
  if (denom == 0.0) return 0.0;
  return std::abs(after - before) / denom;
}

Report verify_algebra_closure() {
  Report report;
  Stopwatch sw;
  const auto& e = gx_generators();
  const auto inner = [](const Matrix4c& a, const Matrix4c& b) {
    return (a.adjoint() * b).trace().real() / 4.0;
  };
  Eigen::Matrix<double, 7, 7> gram;
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) gram(i, j) = inner(e[i], e[j]);
  }
  Eigen::FullPivLU<Eigen::Matrix<double, 7, 7>> lu(gram);
  lu.setThreshold(1e-12);
  report.add("gx span dimension 7", lu.rank() == 7,
             "rank " + std::to_string(lu.rank()), sw.elapsed_ms());

  double worst = 0.0;
  std::string worst_pair;
  int pairs = 0;
  bool all_ok = true;
  for (int i = 0; i < 7; ++i) {
    for (int j = i + 1; j < 7; ++j) {
      Stopwatch pair_sw;
      const Matrix4c comm = (e[i] * e[j] - e[j] * e[i]) / (2.0 * kI);
      Eigen::Matrix<double, 7, 1> rhs;
      for (int k = 0; k < 7; ++k) rhs(k) = inner(e[k], comm);
      const Eigen::Matrix<double, 7, 1> coeff = lu.solve(rhs);
      Matrix4c proj = Matrix4c::Zero();
      for (int k = 0; k < 7; ++k) proj += coeff(k) * e[k];
      const double residual = (comm - proj).norm();
      ++pairs;
      const bool ok = residual < 1e-12;
      all_ok = all_ok && ok;
      if (residual >= worst) {
        worst = residual;
        worst_pair = "[e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + "]";
      }
      std::ostringstream combo;
      combo.precision(3);
      bool first = true;
      for (int k = 0; k < 7; ++k) {
        if (std::abs(coeff(k)) < 1e-12) continue;
        combo << (first ? "" : " + ") << coeff(k) << "*e" << (k + 1);
        first = false;
      }
      report.add("commutator [e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) +
                     "]/2i in span",
                 ok, (first ? std::string("0") : combo.str()) + ", residual " +
                         format_double(residual),
                 pair_sw.elapsed_ms());
    }
  }
  (void)all_ok;
  (void)pairs;
  (void)worst_pair;
  return report;
}

Report verify_local_invariance(const SuiteOptions& options) {
  Stopwatch sw;
  std::mt19937_64 rng(options.seed);
  const auto& catalog = catalog::build_catalog();
  std::vector<double> worst(catalog.size(), 0.0);
  double worst_eigen = 0.0;
  for (std::size_t s = 0; s < options.samples; ++s) {
    const DensityMatrix rho = random_density(rng);
    const Matrix2c u1 = random_su2(rng);
    const Matrix2c u2 = random_su2(rng);
    const DensityMatrix moved = act_local(rho, u1, u2);
    const auto before = density_to_fano(rho).coordinates();
    const auto after = density_to_fano(moved).coordinates();
    for (std::size_t k = 0; k < catalog.size(); ++k) {
      const auto& p = catalog[k].full;
      const double vb = p.evaluate(std::span<const double>(before));
      const double va = p.evaluate(std::span<const double>(after));
      const double mag = std::max(p.evaluate_abs(std::span<const double>(before)),
                                  p.evaluate_abs(std::span<const double>(after)));
      worst[k] = std::max(worst[k], relative_error(vb, va, mag));
    }
    const auto eb = check_positivity(rho).eigenvalues;
    const auto ea = check_positivity(moved).eigenvalues;
    for (int k = 0; k < 4; ++k) worst_eigen = std::max(worst_eigen, std::abs(eb[k] - ea[k]));
  }
  Report report;
  const double per = sw.elapsed_ms() / static_cast<double>(catalog.size() + 1);
  for (std::size_t k = 0; k < catalog.size(); ++k) {
    report.add("local invariance " + catalog[k].label.name(), worst[k] <= options.tolerance,
               "max relative error " + format_double(worst[k]) + " over " +
                   std::to_string(options.samples) + " samples",
               per);
  }
  report.add("local action preserves spectrum", worst_eigen < 1e-9,
             "max eigenvalue shift " + format_double(worst_eigen), per);
  return report;
}

Report verify_gx_global_invariants(const SuiteOptions& options) {
  Stopwatch sw;
  std::mt19937_64 rng(options.seed);
  double worst_non_x = 0.0;
  double worst_gamma = 0.0;
  std::array<double, 3> worst{};
  for (std::size_t s = 0; s < options.samples; ++s) {
    const XState x = random_x_state(rng);
    const auto omega = random_angles(rng);
    const Matrix4c g = gx_element(omega);
    const DensityMatrix moved = conjugate(fano_to_density(x.to_fano()), g);
    worst_non_x = std::max(worst_non_x, max_non_x_entry(moved.matrix()));
    const XState y = project_x(density_to_fano(moved));
    const auto pb = PlanarCoordinates::from(x);
    const auto pa = PlanarCoordinates::from(y);
    const auto f2 = [](const PlanarCoordinates& p) {
      return p.x1 * p.x1 + p.x2 * p.x2 + p.x3 * p.x3;
    };
    const auto f3 = [](const PlanarCoordinates& p) {
      return p.y1 * p.y1 + p.y2 * p.y2 + p.y3 * p.y3;
    };
    worst_gamma = std::max(worst_gamma, std::abs(x.gamma - y.gamma));
    worst[0] = std::max(worst[0], relative_error(x.gamma, y.gamma));
    worst[1] = std::max(worst[1], relative_error(f2(pb), f2(pa)));
    worst[2] = std::max(worst[2], relative_error(f3(pb), f3(pa)));
  }
  Report report;
  const double per = sw.elapsed_ms() / 5.0;
  const auto n = std::to_string(options.samples) + " samples";
  report.add("gx preserves X form", worst_non_x < kMatrixTol,
             "max non-X entry " + format_double(worst_non_x) + " over " + n, per);
  report.add("gx leaves c33 unchanged", worst_gamma < 1e-10,
             "max |delta gamma| " + format_double(worst_gamma), per);
  const char* names[3] = {"f1 = c33", "f2 = x1^2+x2^2+x3^2", "f3 = y1^2+y2^2+y3^2"};
  for (int k = 0; k < 3; ++k) {
    report.add(std::string("gx invariant ") + names[k], worst[k] <= options.tolerance,
               "max relative error " + format_double(worst[k]) + " over " + n, per);
  }
  return report;
}

Report verify_so2so2(const SuiteOptions& options) {
  Stopwatch sw;
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  const auto gens = catalog::free_generators().as_array();
  std::array<double, 5> worst{};
  double worst_diagram = 0.0;
  for (std::size_t s = 0; s < options.samples; ++s) {
    const XState x = random_x_state(rng);
    const double phi1 = angle(rng);
    const double phi2 = angle(rng);
    const XState y = act_so2so2(x, phi1, phi2);
    const auto before = x.coordinates();
    const auto after = y.coordinates();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const double vb = gens[k].evaluate(std::span<const double>(before));
      const double va = gens[k].evaluate(std::span<const double>(after));
      const double mag = std::max(gens[k].evaluate_abs(std::span<const double>(before)),
                                  gens[k].evaluate_abs(std::span<const double>(after)));
      worst[k] = std::max(worst[k], relative_error(vb, va, mag));
    }
    const Matrix4c via_matrix =
        conjugate(fano_to_density(x.to_fano()), local_diagonal(phi1, phi2)).matrix();
    const Matrix4c via_coords = fano_to_density(y.to_fano()).matrix();
    worst_diagram = std::max(worst_diagram, (via_matrix - via_coords).cwiseAbs().maxCoeff());
  }
  Report report;
  const double per = sw.elapsed_ms() / 6.0;
  const auto n = std::to_string(options.samples) + " samples";
  const char* names[5] = {"f1", "g1", "g2", "g3", "g4"};
  for (std::size_t k = 0; k < gens.size(); ++k) {
    report.add(std::string("so2xso2 invariant ") + names[k], worst[k] <= options.tolerance,
               "max relative error " + format_double(worst[k]) + " over " + n, per);
  }
  report.add("so2xso2 agrees with local conjugation", worst_diagram < 1e-10,
             "max entry deviation " + format_double(worst_diagram) + "; " +
                 so2so2_convention(),
             per);
  return report;
}

}  // namespace invar::group

#include "cpsim/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cpsim::qcore {

namespace {

const Complex kI(0.0, 1.0);

void require_square(const Matrix& m, const char* name) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(name) + " must be square, got " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

}  // namespace

Matrix single_spin(Axis a) {
  Matrix m(2, 2);
  switch (a) {
    case Axis::x:
      m << 0.0, 0.5, 0.5, 0.0;
      break;
    case Axis::y:
      m << 0.0, -0.5 * kI, 0.5 * kI, 0.0;
      break;
    case Axis::z:
      m << 0.5, 0.0, 0.0, -0.5;
      break;
  }
  return m;
}

Matrix identity(int dim) { return Matrix::Identity(dim, dim); }

Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix spin_operator(int n_spins, int spin, Axis a) {
  if (n_spins < 1 || n_spins > 6) {
    throw std::invalid_argument("n_spins must lie in [1, 6], got " + std::to_string(n_spins));
  }
  if (spin < 0 || spin >= n_spins) {
    throw std::invalid_argument("spin index " + std::to_string(spin) +
                                " out of range for " + std::to_string(n_spins) + " spins");
  }
  Matrix out = Matrix::Identity(1, 1);
  for (int i = 0; i < n_spins; ++i) {
    out = tensor(out, i == spin ? single_spin(a) : identity(2));
  }
  return out;
}

Matrix raising_operator(int n_spins, int spin) {
  return spin_operator(n_spins, spin, Axis::x) + kI * spin_operator(n_spins, spin, Axis::y);
}

Unitary hermitian_exponential(const Matrix& h, double scale) {
  require_square(h, "hermitian_exponential input");
  if (!is_hermitian(h, 1e-10)) {
    throw std::invalid_argument("hermitian_exponential input is not Hermitian within 1e-10");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const Eigen::VectorXd w = es.eigenvalues();
  const Matrix& v = es.eigenvectors();
  Eigen::VectorXcd phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    phases(i) = std::exp(-kI * scale * w(i));
  }
  return v * phases.asDiagonal() * v.adjoint();
}

Unitary rotation_unitary(double theta, double phi) {
  const Matrix axis = std::cos(phi) * single_spin(Axis::x) + std::sin(phi) * single_spin(Axis::y);
  return hermitian_exponential(axis, theta);
}

double propagator_fidelity(const Unitary& v, const Unitary& u) {
  require_square(v, "propagator_fidelity first argument");
  require_square(u, "propagator_fidelity second argument");
  if (v.rows() != u.rows()) {
    throw std::invalid_argument("propagator_fidelity dimension mismatch: " +
                                std::to_string(v.rows()) + " vs " + std::to_string(u.rows()));
  }
  const double val = std::abs((v * u.adjoint()).trace()) / static_cast<double>(u.rows());
  return std::min(val, 1.0);
}

DensityMatrix evolve_state(const DensityMatrix& rho, const Unitary& u) {
  if (rho.rows() != u.rows() || rho.cols() != u.cols()) {
    throw std::invalid_argument("evolve_state dimension mismatch");
  }
  return u * rho * u.adjoint();
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const Matrix d = m * m.adjoint() - identity(static_cast<int>(m.rows()));
  return d.cwiseAbs().maxCoeff() <= tol;
}

bool is_density_matrix(const Matrix& m, double tol) {
  if (!is_hermitian(m, tol)) return false;
  if (std::abs(m.trace() - Complex(1.0, 0.0)) > tol) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  return es.eigenvalues().minCoeff() >= -tol;
}

}  // namespace cpsim::qcore

#pragma once

// Dense complex linear algebra for small spin-1/2 systems: product operators,
// matrix exponentials, propagator fidelity. Everything is a pure function on
// Eigen matrices and dimensions stay at or below 2^6, so no sparsity games.

#include <Eigen/Dense>

#include <complex>

namespace cpsim::qcore {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// Aliases rather than wrapper classes; the invariants are enforced by the
// validators below and checked at the construction sites that matter.
using Unitary = Eigen::MatrixXcd;        // U U+ = 1 within 1e-12
using DensityMatrix = Eigen::MatrixXcd;  // Hermitian, trace 1, PSD up to roundoff

// Tolerance ladder used across the library: construction invariants,
// oracle agreement, physics-level assertions.
inline constexpr double construction_tol = 1e-12;
inline constexpr double oracle_tol = 1e-10;
inline constexpr double physics_tol = 1e-8;

enum class Axis { x, y, z };

// Spin-1/2 convention: I_a = sigma_a / 2, eigenvalues +-1/2, [Ix,Iy] = i Iz.
// This one choice fixes every sign downstream.
Matrix single_spin(Axis a);

Matrix identity(int dim);

Matrix tensor(const Matrix& a, const Matrix& b);

// I_a acting on one spin of an n-spin register, identity on the rest.
// Spin 0 is the leftmost tensor factor. Supports 1 <= n_spins <= 6.
Matrix spin_operator(int n_spins, int spin, Axis a);

// I+ = Ix + i Iy on the given spin; the detection observable.
Matrix raising_operator(int n_spins, int spin);

// exp(-i * scale * H) for Hermitian H, computed by eigendecomposition.
// Rejects non-Hermitian input (checked to 1e-10).
Unitary hermitian_exponential(const Matrix& h, double scale);

// U(theta, phi) = exp[-i theta (Ix cos phi + Iy sin phi)] on one spin.
// Anchors: (pi, 0) -> [[0,-i],[-i,0]]; (pi/2, pi/2) -> pseudo-Hadamard
// (1/sqrt2)[[1,-1],[1,1]]. theta may be negative.
Unitary rotation_unitary(double theta, double phi);

// |Tr(V U+)| / dim. Symmetric in its arguments, invariant under a global
// phase of either, and clamped into [0, 1] against roundoff.
double propagator_fidelity(const Unitary& v, const Unitary& u);

// rho -> U rho U+.
DensityMatrix evolve_state(const DensityMatrix& rho, const Unitary& u);

bool is_hermitian(const Matrix& m, double tol = oracle_tol);
bool is_unitary(const Matrix& m, double tol = construction_tol);
bool is_density_matrix(const Matrix& m, double tol = construction_tol);

}  // namespace cpsim::qcore

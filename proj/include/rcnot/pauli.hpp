// Dense two-qubit linear algebra: Pauli operators, Kronecker products,
// Hermitian exponentials and the trace-overlap fidelity.
//
// Basis order is |00>, |01>, |10>, |11> with qubit 1 as the left (most
// significant) tensor factor.

#ifndef RCNOT_PAULI_HPP
#define RCNOT_PAULI_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string_view>

namespace rcnot {

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar>
using Matrix2 = Eigen::Matrix<std::complex<Scalar>, 2, 2>;

template <typename Scalar>
using Matrix4 = Eigen::Matrix<std::complex<Scalar>, 4, 4>;

using Matrix2c = Matrix2<double>;
using Matrix4c = Matrix4<double>;

inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kHermitianTol = 1e-10;

enum class Pauli { I = 0, X = 1, Y = 2, Z = 3 };

inline constexpr std::array<Pauli, 4> kPaulis{Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};

inline char to_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

/// Parses a single-letter label (I, X, Y or Z). Throws std::invalid_argument otherwise.
inline Pauli parse_pauli(std::string_view label) {
  if (label.size() == 1) {
    switch (label[0]) {
      case 'I': return Pauli::I;
      case 'X': return Pauli::X;
      case 'Y': return Pauli::Y;
      case 'Z': return Pauli::Z;
      default: break;
    }
  }
  throw std::invalid_argument("invalid Pauli label '" + std::string(label) +
                              "' (expected one of I, X, Y, Z)");
}

template <typename Scalar = double>
Matrix2<Scalar> pauli(Pauli p) {
  using C = std::complex<Scalar>;
  Matrix2<Scalar> m = Matrix2<Scalar>::Zero();
  switch (p) {
    case Pauli::I: m << C(1), C(0), C(0), C(1); break;
    case Pauli::X: m << C(0), C(1), C(1), C(0); break;
    case Pauli::Y: m << C(0), C(0, -1), C(0, 1), C(0); break;
    case Pauli::Z: m << C(1), C(0), C(0), C(-1); break;
  }
  return m;
}

template <typename Scalar = double>
Matrix2<Scalar> pauli(std::string_view label) {
  return pauli<Scalar>(parse_pauli(label));
}

/// Kronecker product a (x) b; a acts on qubit 1.
template <typename Scalar>
Matrix4<Scalar> kron(const Matrix2<Scalar>& a, const Matrix2<Scalar>& b) {
  Matrix4<Scalar> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.template block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

/// sigma_a (x) sigma_b
template <typename Scalar = double>
Matrix4<Scalar> pauli_product(Pauli a, Pauli b) {
  return kron<Scalar>(pauli<Scalar>(a), pauli<Scalar>(b));
}

template <typename Derived>
typename Derived::RealScalar max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

template <typename Scalar>
bool is_hermitian(const Matrix4<Scalar>& h, Scalar tol = Scalar(kHermitianTol)) {
  return max_abs(h - h.adjoint()) <= tol;
}

template <typename Scalar>
bool is_unitary(const Matrix4<Scalar>& m, Scalar tol = Scalar(kUnitaryTol)) {
  return max_abs(m.adjoint() * m - Matrix4<Scalar>::Identity()) <= tol;
}

template <typename Scalar>
bool all_finite(const Matrix4<Scalar>& m) {
  return m.real().allFinite() && m.imag().allFinite();
}

/// A 4x4 matrix known to be unitary to within kUnitaryTol.
template <typename Scalar>
class Unitary4 {
 public:
  using MatrixType = Matrix4<Scalar>;

  Unitary4() : m_(MatrixType::Identity()) {}

  /// Throws std::invalid_argument if `m` is not unitary or has non-finite entries.
  explicit Unitary4(const MatrixType& m) : m_(m) {
    if (!all_finite(m_) || !is_unitary(m_))
      throw std::invalid_argument("matrix is not unitary within tolerance");
  }

  static Unitary4 identity() { return Unitary4(); }

  /// Wraps a matrix whose unitarity is guaranteed by construction.
  static Unitary4 trusted(const MatrixType& m) {
    Unitary4 u;
    u.m_ = m;
    return u;
  }

  const MatrixType& matrix() const { return m_; }
  std::complex<Scalar> operator()(int r, int c) const { return m_(r, c); }

  Unitary4 adjoint() const { return trusted(m_.adjoint()); }

  friend Unitary4 operator*(const Unitary4& a, const Unitary4& b) {
    return trusted(a.m_ * b.m_);
  }
  Unitary4& operator*=(const Unitary4& rhs) {
    m_ = m_ * rhs.m_;
    return *this;
  }

 private:
  MatrixType m_;
};

using Unitary4c = Unitary4<double>;

/// Eigendecomposition of a Hermitian generator, reusable for exp(i h t) at many t.
template <typename Scalar>
class HermitianPropagator {
 public:
  /// Throws std::invalid_argument if `h` is not Hermitian within kHermitianTol.
  explicit HermitianPropagator(const Matrix4<Scalar>& h) {
    if (!all_finite(h)) throw std::invalid_argument("Hamiltonian has non-finite entries");
    if (!is_hermitian(h)) throw std::invalid_argument("Hamiltonian is not Hermitian");
    const Matrix4<Scalar> sym = (h + h.adjoint()) * Scalar(0.5);
    Eigen::SelfAdjointEigenSolver<Matrix4<Scalar>> solver(sym);
    if (solver.info() != Eigen::Success)
      throw std::runtime_error("Hermitian eigendecomposition failed");
    vectors_ = solver.eigenvectors();
    values_ = solver.eigenvalues();
  }

  /// exp(i h t)
  Unitary4<Scalar> operator()(Scalar t) const {
    Eigen::Matrix<std::complex<Scalar>, 4, 1> phases;
    for (int k = 0; k < 4; ++k) phases(k) = std::polar(Scalar(1), values_(k) * t);
    return Unitary4<Scalar>::trusted(vectors_ * phases.asDiagonal() * vectors_.adjoint());
  }

  const Eigen::Matrix<Scalar, 4, 1>& eigenvalues() const { return values_; }

 private:
  Matrix4<Scalar> vectors_;
  Eigen::Matrix<Scalar, 4, 1> values_;
};

/// exp(i h t) for Hermitian h.
template <typename Scalar>
Unitary4<Scalar> expm_i(const Matrix4<Scalar>& h, Scalar t) {
  return HermitianPropagator<Scalar>(h)(t);
}

/// F = sqrt(|Tr(u_impl^dagger u_target)| / 4). Symmetric and global-phase invariant.
template <typename Scalar>
Scalar fidelity(const Unitary4<Scalar>& u_impl, const Unitary4<Scalar>& u_target) {
  const Scalar overlap = std::abs((u_impl.matrix().adjoint() * u_target.matrix()).trace());
  return std::sqrt(overlap / Scalar(4));
}

/// 1 - F, computed from the eigenphases of u_target^dagger u_impl so that
/// values far below machine epsilon stay resolvable.
template <typename Scalar>
Scalar infidelity(const Unitary4<Scalar>& u_impl, const Unitary4<Scalar>& u_target) {
  const Matrix4<Scalar> w = u_target.matrix().adjoint() * u_impl.matrix();
  Eigen::ComplexEigenSolver<Matrix4<Scalar>> solver(w, /*computeEigenvectors=*/false);
  const auto& ev = solver.eigenvalues();

  // Phases relative to the first eigenvalue, then recentred on their mean.
  std::array<Scalar, 4> phase{};
  Scalar mean = 0;
  for (int k = 0; k < 4; ++k) {
    phase[k] = std::arg(ev(k) / ev(0));
    mean += phase[k] / 4;
  }
  // a = 1 - mean(cos), b = mean(sin); |Tr|/4 = sqrt((1-a)^2 + b^2).
  Scalar a = 0, b = 0;
  for (Scalar p : phase) {
    const Scalar s = std::sin((p - mean) / 2);
    a += 2 * s * s / 4;
    b += std::sin(p - mean) / 4;
  }
  const Scalar overlap = std::sqrt((1 - a) * (1 - a) + b * b);
  const Scalar trace_deficit = (2 * a - a * a - b * b) / (1 + overlap);  // 1 - |Tr|/4
  const Scalar clamped = std::clamp(trace_deficit, Scalar(0), Scalar(1));
  return clamped / (1 + std::sqrt(1 - clamped));
}

/// min over phi of max_ij |a_ij - e^{i phi} b_ij|. Zero iff a and b agree up to
/// global phase.
template <typename Scalar>
Scalar phase_distance(const Unitary4<Scalar>& a, const Unitary4<Scalar>& b) {
  const auto cost = [&](Scalar phi) {
    return max_abs(a.matrix() - std::polar(Scalar(1), phi) * b.matrix());
  };
  constexpr Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;

  // Frobenius-optimal phase as a seed, plus a coarse scan since the max-norm
  // objective need not be unimodal.
  const std::complex<Scalar> tr = (b.matrix().adjoint() * a.matrix()).trace();
  Scalar best_phi = std::abs(tr) > 0 ? std::arg(tr) : Scalar(0);
  Scalar best = cost(best_phi);
  constexpr int kGrid = 128;
  for (int g = 0; g < kGrid; ++g) {
    const Scalar phi = two_pi * g / kGrid;
    const Scalar c = cost(phi);
    if (c < best) {
      best = c;
      best_phi = phi;
    }
  }

  // Golden-section refinement on a bracket of one grid step each side.
  const Scalar inv_golden = (std::sqrt(Scalar(5)) - 1) / 2;
  Scalar lo = best_phi - two_pi / kGrid;
  Scalar hi = best_phi + two_pi / kGrid;
  Scalar x1 = hi - inv_golden * (hi - lo);
  Scalar x2 = lo + inv_golden * (hi - lo);
  Scalar f1 = cost(x1), f2 = cost(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_golden * (hi - lo);
      f1 = cost(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_golden * (hi - lo);
      f2 = cost(x2);
    }
  }
  return std::min({best, f1, f2});
}

/// The controlled-NOT with qubit 1 as control: |10> <-> |11>.
template <typename Scalar = double>
Unitary4<Scalar> cnot() {
  Matrix4<Scalar> m = Matrix4<Scalar>::Zero();
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return Unitary4<Scalar>::trusted(m);
}

/// exp(i (theta/2) Z(x)Z), the ideal entangling primitive.
template <typename Scalar = double>
Unitary4<Scalar> zz_rotation(Scalar theta) {
  Matrix4<Scalar> m = Matrix4<Scalar>::Zero();
  const auto plus = std::polar(Scalar(1), theta / 2);
  const auto minus = std::conj(plus);
  m(0, 0) = plus;
  m(1, 1) = minus;
  m(2, 2) = minus;
  m(3, 3) = plus;
  return Unitary4<Scalar>::trusted(m);
}

}  // namespace rcnot

#endif  // RCNOT_PAULI_HPP

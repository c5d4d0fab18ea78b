// Two-qubit Hamiltonians expanded in the Pauli basis.

#ifndef RCNOT_HAMILTONIAN_HPP
#define RCNOT_HAMILTONIAN_HPP

#include "rcnot/pauli.hpp"

#include <array>
#include <cstdint>

namespace rcnot {

/// Real coefficient table J[a][b] of sigma_a (x) sigma_b, indexed by Pauli order I, X, Y, Z.
struct PauliCoeffs {
  std::array<std::array<double, 4>, 4> j{};

  double& operator()(Pauli a, Pauli b) { return j[static_cast<int>(a)][static_cast<int>(b)]; }
  double operator()(Pauli a, Pauli b) const {
    return j[static_cast<int>(a)][static_cast<int>(b)];
  }

  double zz() const { return (*this)(Pauli::Z, Pauli::Z); }
  bool all_finite() const;

  friend bool operator==(const PauliCoeffs&, const PauliCoeffs&) = default;
  friend PauliCoeffs operator+(const PauliCoeffs& a, const PauliCoeffs& b);
  friend PauliCoeffs operator*(double s, const PauliCoeffs& c);
};

/// Sum over (a, b) of c(a, b) sigma_a (x) sigma_b. Hermitian by construction.
Matrix4c build_hamiltonian(const PauliCoeffs& c);

/// J (XX + YY + ZZ)
PauliCoeffs heisenberg(double j);

/// Pure Ising coupling j ZZ.
PauliCoeffs ising_zz(double j);

struct RandomEnsembleSpec {
  double j_base = 1.0;
  double r = 0.0;
  std::uint64_t seed = 0;
};

/// heisenberg(j_base) + r * u_ab with u_ab i.i.d. uniform on [-1, 1], all 16
/// (a, b) pairs including (I, I). Draw order is row-major over (a, b).
///
/// Generator: std::mt19937_64 seeded with `spec.seed`; each draw maps the top
/// 53 bits of one output to [0, 1) and then affinely to [-1, 1]. Both steps are
/// fixed by the standard and by this code, so tables are reproducible across
/// platforms. Throws std::invalid_argument if j_base <= 0 or r < 0.
PauliCoeffs random_hamiltonian(const RandomEnsembleSpec& spec);

/// SplitMix64 finaliser; used to derive independent sub-seeds.
std::uint64_t mix64(std::uint64_t x);

/// Sub-seed for draw (a, b) of the stream rooted at `seed`; independent of
/// the order in which sub-seeds are requested.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

}  // namespace rcnot

#endif  // RCNOT_HAMILTONIAN_HPP

#include "rcnot/hamiltonian.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace rcnot {

bool PauliCoeffs::all_finite() const {
  for (const auto& row : j)
    for (double v : row)
      if (!std::isfinite(v)) return false;
  return true;
}

PauliCoeffs operator+(const PauliCoeffs& a, const PauliCoeffs& b) {
  PauliCoeffs out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out.j[r][c] = a.j[r][c] + b.j[r][c];
  return out;
}

PauliCoeffs operator*(double s, const PauliCoeffs& c) {
  PauliCoeffs out;
  for (int r = 0; r < 4; ++r)
    for (int k = 0; k < 4; ++k) out.j[r][k] = s * c.j[r][k];
  return out;
}

Matrix4c build_hamiltonian(const PauliCoeffs& c) {
  if (!c.all_finite()) throw std::invalid_argument("Pauli coefficients must be finite");
  Matrix4c h = Matrix4c::Zero();
  for (Pauli a : kPaulis)
    for (Pauli b : kPaulis)
      if (const double v = c(a, b); v != 0.0) h += v * pauli_product(a, b);
  return h;
}

PauliCoeffs heisenberg(double j) {
  PauliCoeffs c;
  c(Pauli::X, Pauli::X) = j;
  c(Pauli::Y, Pauli::Y) = j;
  c(Pauli::Z, Pauli::Z) = j;
  return c;
}

PauliCoeffs ising_zz(double j) {
  PauliCoeffs c;
  c(Pauli::Z, Pauli::Z) = j;
  return c;
}

PauliCoeffs random_hamiltonian(const RandomEnsembleSpec& spec) {
  if (!(spec.j_base > 0.0)) throw std::invalid_argument("j_base must be positive");
  if (!(spec.r >= 0.0)) throw std::invalid_argument("random amplitude r must be non-negative");

  PauliCoeffs c = heisenberg(spec.j_base);
  if (spec.r == 0.0) return c;

  std::mt19937_64 gen(spec.seed);
  for (auto& row : c.j) {
    for (double& v : row) {
      const double unit = static_cast<double>(gen() >> 11) * 0x1.0p-53;  // [0, 1)
      v += spec.r * (2.0 * unit - 1.0);
    }
  }
  return c;
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return mix64(mix64(mix64(seed) ^ a) ^ b);
}

}  // namespace rcnot

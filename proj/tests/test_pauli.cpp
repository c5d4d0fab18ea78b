#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rcnot/hamiltonian.hpp"
#include "rcnot/pauli.hpp"

#include <numbers>
#include <random>

using namespace rcnot;
using std::numbers::pi;
using C = std::complex<double>;

namespace {

Matrix4c random_hermitian(std::mt19937_64& gen, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Matrix4c a;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) a(r, c) = C(u(gen), u(gen));
  return (a + a.adjoint()) / 2.0;
}

Unitary4c random_unitary(std::mt19937_64& gen) { return expm_i(random_hermitian(gen, 2.0), 1.0); }

}  // namespace

TEST_CASE("pauli matrices") {
  Matrix2c id;
  id << 1, 0, 0, 1;
  CHECK(pauli(Pauli::I) == id);

  Matrix2c z;
  z << 1, 0, 0, -1;
  CHECK(pauli("Z") == z);

  Matrix2c y;
  y << 0, C(0, -1), C(0, 1), 0;
  CHECK(pauli(Pauli::Y) == y);

  CHECK_THROWS_AS(pauli("W"), std::invalid_argument);
  CHECK_THROWS_AS(pauli("XX"), std::invalid_argument);
}

TEST_CASE("kron follows qubit-1-left ordering") {
  const Matrix4c zz = kron<double>(pauli(Pauli::Z), pauli(Pauli::Z));
  CHECK(zz == Eigen::Vector4cd(1, -1, -1, 1).asDiagonal().toDenseMatrix());
  CHECK(kron<double>(pauli(Pauli::I), pauli(Pauli::I)) == Matrix4c::Identity());

  Matrix4c anti = Matrix4c::Zero();
  for (int i = 0; i < 4; ++i) anti(i, 3 - i) = 1;
  CHECK(kron<double>(pauli(Pauli::X), pauli(Pauli::X)) == anti);

  for (char a : {'I', 'X', 'Y', 'Z'})
    for (char b : {'I', 'X', 'Y', 'Z'}) {
      const Matrix4c lib = kron<double>(pauli(std::string_view(&a, 1)), pauli(std::string_view(&b, 1)));
      CHECK(max_abs(lib - oracle::kron(oracle::pauli(a), oracle::pauli(b))) == 0.0);
    }
}

TEST_CASE("expm_i matches closed forms and the series oracle") {
  CHECK(max_abs(expm_i(Matrix4c(Matrix4c::Zero()), 0.7).matrix() - Matrix4c::Identity()) < 1e-15);

  const Matrix4c zz = pauli_product(Pauli::Z, Pauli::Z);
  const Unitary4c u = expm_i(zz, pi / 2);
  const Matrix4c expected = Eigen::Vector4cd(C(0, 1), C(0, -1), C(0, -1), C(0, 1)).asDiagonal().toDenseMatrix();
  CHECK(max_abs(u.matrix() - expected) < 1e-14);

  const Matrix4c h = build_hamiltonian(heisenberg(1.0));
  CHECK(max_abs(expm_i(h, 0.3).matrix() - oracle::expm_i_series(h, 0.3)) < 1e-10);

  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix4c g = random_hermitian(gen, 3.0);
    const double t = std::uniform_real_distribution<double>(-2, 2)(gen);
    const Matrix4c ref = oracle::expm_i_series(g, t, 20);
    CHECK(max_abs(expm_i(g, t).matrix() - ref) < 1e-12 * std::max(1.0, max_abs(ref)));
  }
}

TEST_CASE("expm_i rejects non-Hermitian generators") {
  Matrix4c g = Matrix4c::Zero();
  g(0, 1) = 1.0;
  CHECK_THROWS_AS(expm_i(g, 1.0), std::invalid_argument);
  g(1, 0) = 1.0 + 1e-6;
  CHECK_THROWS_AS(expm_i(g, 1.0), std::invalid_argument);
}

TEST_CASE("expm_i group properties") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> ut(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix4c h = random_hermitian(gen, 2.0);
    const double t1 = ut(gen), t2 = ut(gen);
    const Unitary4c a = expm_i(h, t1);
    CHECK(is_unitary(a.matrix()));
    CHECK(max_abs((a * expm_i(h, -t1)).matrix() - Matrix4c::Identity()) < 1e-10);
    CHECK(max_abs(expm_i(h, t1 + t2).matrix() - (a * expm_i(h, t2)).matrix()) < 1e-10);
  }
}

TEST_CASE("Unitary4 enforces unitarity") {
  Matrix4c m = Matrix4c::Identity();
  CHECK_NOTHROW(Unitary4c{m});
  m(0, 0) = 1.001;
  CHECK_THROWS_AS(Unitary4c{m}, std::invalid_argument);
  m(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(Unitary4c{m}, std::invalid_argument);
}

TEST_CASE("fidelity examples") {
  std::mt19937_64 gen(5);
  const Unitary4c u = random_unitary(gen);
  CHECK(fidelity(u, u) == doctest::Approx(1.0).epsilon(1e-14));

  for (double phi : {0.3, 1.0, pi, -2.2}) {
    const Unitary4c shifted = Unitary4c::trusted(std::polar(1.0, phi) * u.matrix());
    CHECK(fidelity(shifted, u) == doctest::Approx(1.0).epsilon(1e-14));
  }

  const Unitary4c zz8 = expm_i(pauli_product(Pauli::Z, Pauli::Z), pi / 8);
  CHECK(fidelity(zz8, Unitary4c::identity()) == doctest::Approx(std::sqrt(std::cos(pi / 8))).epsilon(1e-14));
  CHECK(fidelity(zz8, Unitary4c::identity()) == doctest::Approx(0.9612).epsilon(1e-4));
}

TEST_CASE("fidelity properties over random unitaries") {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> uphase(-pi, pi);
  for (int trial = 0; trial < 100; ++trial) {
    const Unitary4c a = random_unitary(gen);
    const Unitary4c b = random_unitary(gen);
    const double f = fidelity(a, b);
    CHECK(f >= 0.0);
    CHECK(f <= 1.0 + 1e-12);
    CHECK(f == doctest::Approx(fidelity(b, a)).epsilon(1e-14));
    CHECK(f == doctest::Approx(oracle::trace_fidelity(a.matrix(), b.matrix())).epsilon(1e-14));
    const Unitary4c a2 = Unitary4c::trusted(std::polar(1.0, uphase(gen)) * a.matrix());
    const Unitary4c b2 = Unitary4c::trusted(std::polar(1.0, uphase(gen)) * b.matrix());
    CHECK(fidelity(a2, b2) == doctest::Approx(f).epsilon(1e-12));

    // fidelity == 1 exactly when the phase distance vanishes.
    CHECK(fidelity(a, a2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(phase_distance(a, a2) < 1e-8);
    CHECK(f < 1.0 - 1e-8);
    CHECK(phase_distance(a, b) > 1e-8);
  }
}

TEST_CASE("infidelity resolves values below machine epsilon") {
  const Matrix4c zz = pauli_product(Pauli::Z, Pauli::Z);
  for (double eps : {1e-1, 1e-3, 1e-5, 1e-7}) {
    const Unitary4c u = expm_i(zz, eps);
    // |Tr| / 4 = cos(eps) exactly, so 1 - F = 1 - sqrt(cos eps).
    const double c = std::cos(eps);
    const double expected = (1.0 - c) / (1.0 + std::sqrt(c));
    const double one_minus_cos = 2 * std::sin(eps / 2) * std::sin(eps / 2);
    const double precise = one_minus_cos / (1.0 + std::sqrt(1.0 - one_minus_cos));
    CHECK(infidelity(u, Unitary4c::identity()) == doctest::Approx(precise).epsilon(1e-9));
    if (eps >= 1e-3) CHECK(infidelity(u, Unitary4c::identity()) == doctest::Approx(expected).epsilon(1e-6));
  }
  std::mt19937_64 gen(2);
  for (int trial = 0; trial < 20; ++trial) {
    const Unitary4c a = random_unitary(gen);
    const Unitary4c b = random_unitary(gen);
    CHECK(infidelity(a, b) == doctest::Approx(1.0 - fidelity(a, b)).epsilon(1e-10));
  }
}

TEST_CASE("phase_distance") {
  std::mt19937_64 gen(23);
  const Unitary4c u = random_unitary(gen);
  CHECK(phase_distance(u, u) < 1e-12);
  CHECK(phase_distance(u, Unitary4c::trusted(-u.matrix())) < 1e-12);

  const Unitary4c zz = expm_i(pauli_product(Pauli::Z, Pauli::Z), pi / 2);
  const double d = phase_distance(Unitary4c::identity(), zz);
  CHECK(d >= 1.0);
  CHECK(d == doctest::Approx(oracle::phase_distance_scan(Matrix4c::Identity(), zz.matrix())).epsilon(1e-9));

  for (int trial = 0; trial < 10; ++trial) {
    const Unitary4c a = random_unitary(gen);
    const Unitary4c b = random_unitary(gen);
    CHECK(phase_distance(a, b) ==
          doctest::Approx(oracle::phase_distance_scan(a.matrix(), b.matrix())).epsilon(1e-8));
  }
}

TEST_CASE("cnot and zz_rotation helpers") {
  const Matrix4c c = cnot().matrix();
  CHECK(c(0, 0) == C(1));
  CHECK(c(1, 1) == C(1));
  CHECK(c(2, 3) == C(1));
  CHECK(c(3, 2) == C(1));
  CHECK(max_abs(zz_rotation(0.8).matrix() - expm_i(pauli_product(Pauli::Z, Pauli::Z), 0.4).matrix()) < 1e-15);
}

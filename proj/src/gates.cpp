#include "rcnot/gates.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rcnot {
namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

PulseSequence conjugate_ry2(double phi, const PulseSequence& inner) {
  if (phi == 0.0) return inner;
  PulseSequence s;
  s.push(rot(2, Pauli::Y, phi));
  s.append(inner);
  s.push(rot(2, Pauli::Y, -phi));
  return s;
}

PulseSequence as_gate(const PulseSequence& inner) {
  PulseSequence s;
  s.append_as_gate(inner);
  return s;
}

}  // namespace

Calibration Calibration::abstract_delta(double delta, double j_predicted) {
  Calibration c{j_predicted, AbstractDelta{delta}};
  c.validate();
  return c;
}

Calibration Calibration::full(const PauliCoeffs& coeffs, int isolation_k, double j_predicted,
                              Isolation isolation) {
  Calibration c{j_predicted, FullHamiltonian{coeffs, isolation_k, isolation}};
  c.validate();
  return c;
}

void Calibration::validate() const {
  if (!(j_predicted > 0.0) || !std::isfinite(j_predicted))
    throw std::invalid_argument("predicted coupling J_P must be positive");
  std::visit(Overloaded{
                 [](const AbstractDelta& d) {
                   if (!std::isfinite(d.delta)) throw std::invalid_argument("delta must be finite");
                 },
                 [](const FullHamiltonian& f) {
                   if (f.isolation_k < 1) throw std::invalid_argument("isolation_k must be >= 1");
                   if (!f.coeffs.all_finite())
                     throw std::invalid_argument("Hamiltonian coefficients must be finite");
                 },
             },
             mode);
}

Matrix4c Calibration::ambient() const {
  return std::visit(Overloaded{
                        [&](const AbstractDelta& d) {
                          return build_hamiltonian(ising_zz((1.0 + d.delta) * j_predicted));
                        },
                        [](const FullHamiltonian& f) { return build_hamiltonian(f.coeffs); },
                    },
                    mode);
}

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::Uncorrected: return "uncorrected";
    case Strategy::Comp1: return "comp1";
    case Strategy::Comp2: return "comp2";
    case Strategy::Comp3Concatenated: return "comp3";
  }
  return "?";
}

Strategy parse_strategy(std::string_view name) {
  for (Strategy s : kAllStrategies)
    if (to_string(s) == name) return s;
  throw std::invalid_argument(fmt::format(
      "unknown strategy '{}' (valid: uncorrected, comp1, comp2, comp3)", name));
}

std::vector<Strategy> parse_strategy_list(std::string_view text) {
  std::vector<Strategy> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_strategy(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

double bb1_phi(double theta) {
  if (!(std::abs(theta) <= 4.0 * kPi))
    throw std::domain_error(fmt::format("bb1_phi: |theta| = {} exceeds 4 pi", std::abs(theta)));
  return std::acos(-theta / (4.0 * kPi));
}

PulseSequence isolate_v(double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("isolation time must be >= 0");
  return PulseSequence{rot(1, Pauli::X, kPi), rot(2, Pauli::X, kPi), evolve(t / 2),
                       rot(1, Pauli::X, kPi), rot(2, Pauli::X, kPi), evolve(t / 2)};
}

PulseSequence isolate_q(double t, int k) {
  if (!(t >= 0.0)) throw std::invalid_argument("isolation time must be >= 0");
  if (k < 1) throw std::invalid_argument("isolation repetitions k must be >= 1");
  const PulseSequence v = isolate_v(t / (4.0 * k));
  PulseSequence q;
  q.push(rot(1, Pauli::Z, kPi)).push(rot(2, Pauli::Z, kPi)).append(v);
  q.push(rot(1, Pauli::Z, kPi)).append(v);
  q.push(rot(1, Pauli::Z, kPi)).push(rot(2, Pauli::Z, kPi)).append(v);
  q.push(rot(1, Pauli::Z, kPi)).append(v);
  return q.repeated(k);
}

PulseSequence isolate_heisenberg(double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("isolation time must be >= 0");
  return PulseSequence{rot(1, Pauli::Z, kPi), evolve(t), rot(1, Pauli::Z, kPi), evolve(t)};
}

double isolation_gain(Isolation iso) { return iso == Isolation::HeisenbergShortcut ? 2.0 : 1.0; }

PulseSequence zz_primitive(double theta, const Calibration& cal) {
  if (!std::isfinite(theta)) throw std::invalid_argument("theta must be finite");
  const double magnitude = std::abs(theta);
  // Nominal ZZ angle magnitude/2 = gain * J_P * t.
  const PulseSequence body = std::visit(
      Overloaded{
          [&](const AbstractDelta&) {
            return PulseSequence{evolve(magnitude / (2.0 * cal.j_predicted))};
          },
          [&](const FullHamiltonian& f) {
            const double t = magnitude / (2.0 * isolation_gain(f.isolation) * cal.j_predicted);
            return f.isolation == Isolation::Trotter ? isolate_q(t, f.isolation_k) : isolate_heisenberg(t);
          },
      },
      cal.mode);

  PulseSequence s;
  if (theta < 0.0) s.push(rot(1, Pauli::X, kPi));
  s.append_as_gate(body);
  if (theta < 0.0) s.push(rot(1, Pauli::X, kPi));
  return s;
}

PulseSequence theta_primitive(double theta, double phi, const Calibration& cal) {
  return conjugate_ry2(phi, zz_primitive(theta, cal));
}

PulseSequence comp1(double theta, const PrimitiveBuilder& prim) {
  const double phi = bb1_phi(theta);
  return prim(theta / 2, 0.0) + prim(kPi, phi) + prim(2 * kPi, 3 * phi) + prim(kPi, phi) +
         prim(theta / 2, 0.0);
}

PulseSequence comp1(double theta, const Calibration& cal) {
  cal.validate();
  return comp1(theta, [&](double a, double phi) { return theta_primitive(a, phi, cal); });
}

PulseSequence comp2(double theta, const PrimitiveBuilder& prim) {
  const double phi = bb1_phi(theta);
  const PulseSequence z2{rot(2, Pauli::Z, kPi)};
  return prim(theta / 2, 0.0) + prim(kPi, phi) + prim(kPi, 3 * phi) + z2 + prim(kPi, -3 * phi) +
         prim(kPi, -phi) + prim(theta / 2, 0.0) + z2;
}

PulseSequence comp2(double theta, const Calibration& cal) {
  cal.validate();
  return comp2(theta, [&](double a, double phi) { return theta_primitive(a, phi, cal); });
}

PulseSequence comp2_star(double theta, const Calibration& cal) {
  cal.validate();
  const PulseSequence inner = comp2(theta / 16, cal);
  PulseSequence block{rot(2, Pauli::X, kPi), rot(2, Pauli::X, kPi), rot(2, Pauli::Z, kPi)};
  block.append(inner);
  block.push(rot(2, Pauli::Z, kPi));
  block.append(inner);
  return block.repeated(8);
}

PulseSequence comp3(double theta, const Calibration& cal) {
  cal.validate();
  return comp2(theta, [&](double a, double phi) { return conjugate_ry2(phi, comp2_star(a, cal)); });
}

PulseSequence entangler(Strategy s, double theta, const Calibration& cal) {
  switch (s) {
    case Strategy::Uncorrected: cal.validate(); return theta_primitive(theta, 0.0, cal);
    case Strategy::Comp1: return comp1(theta, cal);
    case Strategy::Comp2: return comp2(theta, cal);
    case Strategy::Comp3Concatenated: return comp3(theta, cal);
  }
  throw std::invalid_argument("unknown strategy");
}

PulseSequence cnot_assembly(const PulseSequence& ent) {
  PulseSequence s{had(2), rot(1, Pauli::Z, -kPi / 2), rot(2, Pauli::Z, -kPi / 2)};
  s.append(ent);
  s.push(had(2));
  return s;
}

PulseSequence sqrt_swap_cnot(const Calibration& cal) {
  cal.validate();
  const double t = kPi / (8.0 * cal.j_predicted);
  return cnot_assembly(isolate_heisenberg(t));
}

Unitary4c assembled_target(double theta) {
  PulseSequence dressing_left{had(2), rot(1, Pauli::Z, -kPi / 2), rot(2, Pauli::Z, -kPi / 2)};
  const Matrix4c zero = Matrix4c::Zero();
  const Unitary4c left = compile(dressing_left, zero);
  const Unitary4c right = hadamard_unitary(Hadamard{2});
  return left * zz_rotation(theta) * right;
}

}  // namespace rcnot

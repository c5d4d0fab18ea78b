// Robust two-qubit gate constructions: term isolation, imperfect ZZ
// primitives, BB1-style composite corrections and CNOT assembly.
//
// Conventions
// -----------
// theta_0   = exp(i (theta/2) Z(x)Z)
// theta_phi = Ry2(phi) theta_0 Ry2(-phi)
// Single-qubit rotations are exp(+i (angle/2) sigma). With that sign the CNOT
// dressing uses Rz(-pi/2) on both qubits; see cnot_assembly().

#ifndef RCNOT_GATES_HPP
#define RCNOT_GATES_HPP

#include "rcnot/hamiltonian.hpp"
#include "rcnot/pulse.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rcnot {

/// The coupling is J_ZZ = (1 + delta) J_P and nothing else; primitives are
/// bare evolutions under that Ising Hamiltonian.
struct AbstractDelta {
  double delta = 0.0;
};

enum class Isolation {
  Trotter,             // Q_k(t): works for any Hamiltonian, exact only when all terms commute.
  HeisenbergShortcut,  // Zpi1 e^{iHt} Zpi1 e^{iHt}: exact for Heisenberg coupling.
};

/// Arbitrary ambient Hamiltonian; every ZZ primitive is realised by term isolation.
struct FullHamiltonian {
  PauliCoeffs coeffs;
  int isolation_k = 20;
  Isolation isolation = Isolation::Trotter;
};

struct Calibration {
  double j_predicted = 1.0;
  std::variant<AbstractDelta, FullHamiltonian> mode = AbstractDelta{};

  static Calibration abstract_delta(double delta, double j_predicted = 1.0);
  static Calibration full(const PauliCoeffs& coeffs, int isolation_k = 20, double j_predicted = 1.0,
                          Isolation isolation = Isolation::Trotter);

  /// Throws std::invalid_argument if j_predicted <= 0 or isolation_k < 1.
  void validate() const;

  /// The Hamiltonian that Evolve segments experience.
  Matrix4c ambient() const;
};

enum class Strategy { Uncorrected, Comp1, Comp2, Comp3Concatenated };

inline constexpr Strategy kAllStrategies[] = {Strategy::Uncorrected, Strategy::Comp1, Strategy::Comp2,
                                              Strategy::Comp3Concatenated};

std::string_view to_string(Strategy s);

/// Accepts uncorrected, comp1, comp2, comp3. Throws std::invalid_argument listing
/// the valid names otherwise.
Strategy parse_strategy(std::string_view name);
std::vector<Strategy> parse_strategy_list(std::string_view comma_separated);

/// arccos(-theta / 4pi); the BB1 phase that cancels first and second order
/// amplitude errors. Throws std::domain_error for |theta| > 4pi.
double bb1_phi(double theta);

// ---------------------------------------------------------------------------
// Term isolation

/// V_t = Xpi1 Xpi2 e^{iHt/2} Xpi1 Xpi2 e^{iHt/2}
PulseSequence isolate_v(double t);

/// Q(t) = Zpi1 Zpi2 V Zpi1 V Zpi1 Zpi2 V Zpi1 V with V = V_{t/4}; approximates
/// exp(i J_ZZ t ZZ). Q_k(t) = Q(t/k)^k. Throws std::invalid_argument if t < 0 or k < 1.
PulseSequence isolate_q(double t, int k);

/// Zpi1 e^{iHt} Zpi1 e^{iHt}; equals exp(2 i J t ZZ) exactly for H = J(XX+YY+ZZ).
PulseSequence isolate_heisenberg(double t);

/// ZZ gain of each isolation scheme: the generated ZZ angle per unit time is
/// gain * J_ZZ.
double isolation_gain(Isolation iso);

// ---------------------------------------------------------------------------
// Primitives and composite pulses

/// The calibrated attempt at theta_0, tagged as one two-qubit gate. Evolve
/// times are chosen so the nominal ZZ angle is theta/2 under J_P. Negative
/// theta is realised by Xpi1 conjugation.
PulseSequence zz_primitive(double theta, const Calibration& cal);

/// theta_phi built from one imperfect zz_primitive. phi == 0 omits the Ry pair.
PulseSequence theta_primitive(double theta, double phi, const Calibration& cal);

/// Builds theta_phi for an arbitrary inner realisation of theta_0.
using PrimitiveBuilder = std::function<PulseSequence(double theta, double phi)>;

/// (theta/2)_0 pi_phi 2pi_{3phi} pi_phi (theta/2)_0
PulseSequence comp1(double theta, const Calibration& cal);
PulseSequence comp1(double theta, const PrimitiveBuilder& prim);

/// (theta/2)_0 pi_phi pi_{3phi} Zpi2 pi_{-3phi} pi_{-phi} (theta/2)_0 Zpi2
///
/// The Zpi2 pair refocuses the second half, which is therefore written with
/// negated phases; the product equals comp1 for a pure ZZ error.
PulseSequence comp2(double theta, const Calibration& cal);
PulseSequence comp2(double theta, const PrimitiveBuilder& prim);

/// (Xpi2 Xpi2 Zpi2 comp2(theta/16) Zpi2 comp2(theta/16))^8
PulseSequence comp2_star(double theta, const Calibration& cal);

/// comp2 with every first-order primitive replaced by the comp2_star gate of
/// the same nominal angle.
PulseSequence comp3(double theta, const Calibration& cal);

/// The entangling sequence for a strategy: theta_0 (uncorrected) or one of the
/// composite pulses.
PulseSequence entangler(Strategy s, double theta, const Calibration& cal);

// ---------------------------------------------------------------------------
// CNOT

/// H2 Rz1(-pi/2) Rz2(-pi/2) [entangler] H2. With a perfect (pi/2)_0 entangler
/// this is CNOT (control qubit 1) up to global phase.
PulseSequence cnot_assembly(const PulseSequence& entangler);

/// Square-root-of-swap CNOT: the dressing above around
/// Zpi1 e^{iHt} Zpi1 e^{iHt} with J_P t = pi/8, so each evolution is a
/// sqrt(SWAP) when H = J_P(XX+YY+ZZ). Each evolution counts as one gate.
PulseSequence sqrt_swap_cnot(const Calibration& cal);

/// Ideal unitary that cnot_assembly produces for a perfect theta_0 entangler.
Unitary4c assembled_target(double theta);

}  // namespace rcnot

#endif  // RCNOT_GATES_HPP

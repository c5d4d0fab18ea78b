// Pulse-level intermediate representation: single-qubit rotations, Hadamards
// and free evolution under an ambient Hamiltonian.

#ifndef RCNOT_PULSE_HPP
#define RCNOT_PULSE_HPP

#include "rcnot/pauli.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rcnot {

/// exp(i (angle/2) sigma_axis) on one qubit.
struct Rotation {
  int qubit = 1;
  Pauli axis = Pauli::Z;
  double angle = 0.0;
  friend bool operator==(const Rotation&, const Rotation&) = default;
};

struct Hadamard {
  int qubit = 1;
  friend bool operator==(const Hadamard&, const Hadamard&) = default;
};

/// exp(i H t) under the ambient Hamiltonian. `continues_gate` marks a segment
/// that belongs to the same logical two-qubit gate as the previous Evolve.
struct Evolve {
  double time = 0.0;
  bool continues_gate = false;
  friend bool operator==(const Evolve&, const Evolve&) = default;
};

using Pulse = std::variant<Rotation, Hadamard, Evolve>;

/// Ordered pulses in product order: the first pulse is the leftmost matrix
/// factor, i.e. it acts last on a state.
class PulseSequence {
 public:
  PulseSequence() = default;
  PulseSequence(std::initializer_list<Pulse> pulses);

  /// Throws std::invalid_argument on an invalid qubit, axis, angle or time.
  PulseSequence& push(const Pulse& p);
  PulseSequence& append(const PulseSequence& other);

  /// Appends `other` with all its Evolve segments folded into one logical gate
  /// that starts at its first Evolve.
  PulseSequence& append_as_gate(const PulseSequence& other);

  PulseSequence repeated(int times) const;
  PulseSequence reversed() const;

  const std::vector<Pulse>& pulses() const { return pulses_; }
  std::size_t size() const { return pulses_.size(); }
  bool empty() const { return pulses_.empty(); }
  auto begin() const { return pulses_.begin(); }
  auto end() const { return pulses_.end(); }

  friend PulseSequence operator+(PulseSequence a, const PulseSequence& b) {
    a.append(b);
    return a;
  }
  friend bool operator==(const PulseSequence&, const PulseSequence&) = default;

 private:
  std::vector<Pulse> pulses_;
};

inline Pulse rot(int qubit, Pauli axis, double angle) { return Rotation{qubit, axis, angle}; }
inline Pulse had(int qubit) { return Hadamard{qubit}; }
inline Pulse evolve(double t, bool continues_gate = false) { return Evolve{t, continues_gate}; }

Unitary4c rotation_unitary(const Rotation& r);
Unitary4c hadamard_unitary(const Hadamard& h);

/// Product of pulse unitaries with Evolve{t} -> exp(i h t). Throws
/// std::invalid_argument for an empty sequence or non-Hermitian `h`.
Unitary4c compile(const PulseSequence& s, const Matrix4c& h);
Unitary4c compile(const PulseSequence& s, const HermitianPropagator<double>& propagator);

struct TimingModel {
  double single_qubit_ns_per_pi = 40.0;
  double hadamard_ns = 40.0;
  double two_qubit_ns_per_pi_over_8 = 1.0;

  /// Throws std::invalid_argument unless all entries are positive and finite.
  void validate() const;
};

/// Wall-clock estimate in ns. An Evolve of length t counts as a two-qubit
/// rotation by j_predicted * t.
double duration(const PulseSequence& s, const TimingModel& tm, double j_predicted = 1.0);

struct GateCounts {
  int single_qubit = 0;
  int two_qubit = 0;
  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

/// Rotations and Hadamards are single-qubit gates; each Evolve that does not
/// continue a previous gate opens a new two-qubit gate.
GateCounts gate_counts(const PulseSequence& s);

/// One pulse per line:
///
///     ROT q=<1|2> axis=<X|Y|Z> angle=<real>
///     HAD q=<1|2>
///     EVOLVE t=<real>[ cont]
///
/// Reals are written in shortest round-trip form. `parse_sequence` also
/// accepts blank lines and lines starting with '#'.
std::string serialize(const PulseSequence& s);

/// Throws std::invalid_argument naming the offending line.
PulseSequence parse_sequence(std::string_view text);

}  // namespace rcnot

#endif  // RCNOT_PULSE_HPP

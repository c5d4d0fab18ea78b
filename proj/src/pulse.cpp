#include "rcnot/pulse.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace rcnot {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_qubit(int q) {
  if (q != 1 && q != 2) throw std::invalid_argument(fmt::format("invalid qubit {}", q));
}

void validate(const Pulse& p) {
  std::visit(Overloaded{
                 [](const Rotation& r) {
                   check_qubit(r.qubit);
                   if (r.axis == Pauli::I)
                     throw std::invalid_argument("rotation axis must be X, Y or Z");
                   if (!std::isfinite(r.angle))
                     throw std::invalid_argument("rotation angle must be finite");
                 },
                 [](const Hadamard& h) { check_qubit(h.qubit); },
                 [](const Evolve& e) {
                   if (!std::isfinite(e.time) || e.time < 0.0)
                     throw std::invalid_argument("evolution time must be finite and >= 0");
                 },
             },
             p);
}

Matrix4c on_qubit(int qubit, const Matrix2c& m) {
  return qubit == 1 ? kron<double>(m, Matrix2c::Identity()) : kron<double>(Matrix2c::Identity(), m);
}

// Tiny memo for repeated angles and times; sequences reuse a handful of values.
template <typename Key>
class SmallCache {
 public:
  template <typename Make>
  const Matrix4c& get(const Key& key, Make&& make) {
    for (const auto& [k, m] : entries_)
      if (k == key) return m;
    entries_.emplace_back(key, make());
    return entries_.back().second;
  }

 private:
  std::vector<std::pair<Key, Matrix4c>> entries_;
};

}  // namespace

PulseSequence::PulseSequence(std::initializer_list<Pulse> pulses) {
  for (const auto& p : pulses) push(p);
}

PulseSequence& PulseSequence::push(const Pulse& p) {
  validate(p);
  pulses_.push_back(p);
  return *this;
}

PulseSequence& PulseSequence::append(const PulseSequence& other) {
  pulses_.insert(pulses_.end(), other.pulses_.begin(), other.pulses_.end());
  return *this;
}

PulseSequence& PulseSequence::append_as_gate(const PulseSequence& other) {
  bool first = true;
  for (Pulse p : other.pulses_) {
    if (auto* e = std::get_if<Evolve>(&p)) {
      e->continues_gate = !first;
      first = false;
    }
    pulses_.push_back(p);
  }
  return *this;
}

PulseSequence PulseSequence::repeated(int times) const {
  PulseSequence out;
  out.pulses_.reserve(pulses_.size() * static_cast<std::size_t>(std::max(times, 0)));
  for (int i = 0; i < times; ++i) out.append(*this);
  return out;
}

PulseSequence PulseSequence::reversed() const {
  PulseSequence out;
  out.pulses_.assign(pulses_.rbegin(), pulses_.rend());
  return out;
}

Unitary4c rotation_unitary(const Rotation& r) {
  const double half = r.angle / 2.0;
  const Matrix2c m = std::cos(half) * Matrix2c::Identity() +
                     std::complex<double>(0.0, std::sin(half)) * pauli(r.axis);
  return Unitary4c::trusted(on_qubit(r.qubit, m));
}

Unitary4c hadamard_unitary(const Hadamard& h) {
  const Matrix2c m = (pauli(Pauli::X) + pauli(Pauli::Z)) / std::numbers::sqrt2;
  return Unitary4c::trusted(on_qubit(h.qubit, m));
}

Unitary4c compile(const PulseSequence& s, const HermitianPropagator<double>& propagator) {
  if (s.empty()) throw std::invalid_argument("cannot compile an empty pulse sequence");

  SmallCache<std::pair<int, std::pair<int, double>>> rotations;
  SmallCache<double> evolutions;
  Matrix4c acc = Matrix4c::Identity();
  for (const auto& p : s) {
    const Matrix4c& factor = std::visit(
        Overloaded{
            [&](const Rotation& r) -> const Matrix4c& {
              const std::pair<int, std::pair<int, double>> key{r.qubit, {static_cast<int>(r.axis), r.angle}};
              return rotations.get(key, [&] { return rotation_unitary(r).matrix(); });
            },
            [&](const Hadamard& h) -> const Matrix4c& {
              const std::pair<int, std::pair<int, double>> key{h.qubit, {-1, 0.0}};
              return rotations.get(key, [&] { return hadamard_unitary(h).matrix(); });
            },
            [&](const Evolve& e) -> const Matrix4c& {
              return evolutions.get(e.time, [&] { return propagator(e.time).matrix(); });
            },
        },
        p);
    acc = acc * factor;
  }
  return Unitary4c::trusted(acc);
}

Unitary4c compile(const PulseSequence& s, const Matrix4c& h) {
  if (s.empty()) throw std::invalid_argument("cannot compile an empty pulse sequence");
  return compile(s, HermitianPropagator<double>(h));
}

void TimingModel::validate() const {
  for (double v : {single_qubit_ns_per_pi, hadamard_ns, two_qubit_ns_per_pi_over_8})
    if (!std::isfinite(v) || v <= 0.0)
      throw std::invalid_argument("timing model entries must be positive");
}

double duration(const PulseSequence& s, const TimingModel& tm, double j_predicted) {
  double ns = 0.0;
  for (const auto& p : s) {
    ns += std::visit(
        Overloaded{
            [&](const Rotation& r) { return std::abs(r.angle) / std::numbers::pi * tm.single_qubit_ns_per_pi; },
            [&](const Hadamard&) { return tm.hadamard_ns; },
            [&](const Evolve& e) {
              return std::abs(j_predicted * e.time) / (std::numbers::pi / 8.0) * tm.two_qubit_ns_per_pi_over_8;
            },
        },
        p);
  }
  return ns;
}

GateCounts gate_counts(const PulseSequence& s) {
  GateCounts c;
  for (const auto& p : s) {
    if (const auto* e = std::get_if<Evolve>(&p)) {
      if (!e->continues_gate) ++c.two_qubit;
    } else {
      ++c.single_qubit;
    }
  }
  return c;
}

std::string serialize(const PulseSequence& s) {
  std::string out;
  for (const auto& p : s) {
    std::visit(Overloaded{
                   [&](const Rotation& r) {
                     out += fmt::format("ROT q={} axis={} angle={}\n", r.qubit, to_char(r.axis), r.angle);
                   },
                   [&](const Hadamard& h) { out += fmt::format("HAD q={}\n", h.qubit); },
                   [&](const Evolve& e) {
                     out += fmt::format("EVOLVE t={}{}\n", e.time, e.continues_gate ? " cont" : "");
                   },
               },
               p);
  }
  return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

class LineParser {
 public:
  LineParser(std::size_t line_no, std::vector<std::string_view> tokens)
      : line_no_(line_no), tokens_(std::move(tokens)) {}

  [[noreturn]] void fail(std::string_view what) const {
    throw std::invalid_argument(fmt::format("pulse sequence line {}: {}", line_no_, what));
  }

  std::string_view value(std::size_t index, std::string_view key) const {
    if (index >= tokens_.size()) fail(fmt::format("missing '{}='", key));
    const auto tok = tokens_[index];
    if (tok.size() <= key.size() || tok.substr(0, key.size()) != key || tok[key.size()] != '=')
      fail(fmt::format("expected '{}=<value>', got '{}'", key, tok));
    return tok.substr(key.size() + 1);
  }

  double real(std::size_t index, std::string_view key) const {
    const auto text = value(index, key);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
      fail(fmt::format("bad number '{}'", text));
    return v;
  }

  int qubit(std::size_t index) const {
    const auto text = value(index, "q");
    if (text == "1") return 1;
    if (text == "2") return 2;
    fail(fmt::format("bad qubit '{}'", text));
  }

  void expect_count(std::size_t lo, std::size_t hi) const {
    if (tokens_.size() < lo || tokens_.size() > hi) fail("wrong number of fields");
  }

  const std::vector<std::string_view>& tokens() const { return tokens_; }

 private:
  std::size_t line_no_;
  std::vector<std::string_view> tokens_;
};

}  // namespace

PulseSequence parse_sequence(std::string_view text) {
  PulseSequence seq;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    const LineParser lp(line_no, tokens);
    const auto op = tokens.front();
    try {
      if (op == "ROT") {
        lp.expect_count(4, 4);
        const auto axis_text = lp.value(2, "axis");
        const Pauli axis = parse_pauli(axis_text);
        seq.push(Rotation{lp.qubit(1), axis, lp.real(3, "angle")});
      } else if (op == "HAD") {
        lp.expect_count(2, 2);
        seq.push(Hadamard{lp.qubit(1)});
      } else if (op == "EVOLVE") {
        lp.expect_count(2, 3);
        bool cont = false;
        if (tokens.size() == 3) {
          if (tokens[2] != "cont") lp.fail(fmt::format("unexpected '{}'", tokens[2]));
          cont = true;
        }
        seq.push(Evolve{lp.real(1, "t"), cont});
      } else {
        lp.fail(fmt::format("unknown pulse '{}'", op));
      }
    } catch (const std::invalid_argument& e) {
      const std::string_view msg = e.what();
      if (msg.starts_with("pulse sequence line")) throw;
      lp.fail(msg);
    }
  }
  return seq;
}

}  // namespace rcnot

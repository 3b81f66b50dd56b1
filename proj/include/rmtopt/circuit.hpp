#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rmtopt {

enum class GateKind { Cnot, Phase, H };

/// One gate of a CNOT + phase + H circuit.
///
/// PHASE(q, p) is R_z(pi / 2^k)^p on wire q; for the default k = 2 that is T^p.
struct Gate {
  GateKind kind = GateKind::Phase;
  std::uint32_t target = 0;   // CNOT target, or the wire of PHASE / H
  std::uint32_t control = 0;  // CNOT only
  std::uint32_t power = 0;    // PHASE only, reduced mod 2^(k+1)

  static Gate cnot(std::uint32_t control, std::uint32_t target) {
    return {GateKind::Cnot, target, control, 0};
  }
  static Gate phase(std::uint32_t wire, std::uint32_t power) {
    return {GateKind::Phase, wire, 0, power};
  }
  static Gate hadamard(std::uint32_t wire) { return {GateKind::H, wire, 0, 0}; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

inline constexpr int kMaxModulusExponent = 30;

/// Ordered gate list over named wires.
///
/// Phase powers are kept reduced modulo 2^(k+1); a phase whose power reduces
/// to zero is dropped on insertion.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::vector<std::string> wires, int k = 2);
  // Wires named x1 ... xn.
  explicit Circuit(std::size_t n, int k = 2);

  std::size_t n() const noexcept { return wires_.size(); }
  int k() const noexcept { return k_; }
  std::uint32_t modulus() const noexcept { return std::uint32_t{1} << (k_ + 1); }
  const std::vector<std::string>& wires() const noexcept { return wires_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  bool empty() const noexcept { return gates_.empty(); }

  std::optional<std::uint32_t> wire_index(std::string_view name) const;

  // Validates wire indices and control != target. Throws Error.
  void add(Gate gate);
  void add_cnot(std::uint32_t control, std::uint32_t target) { add(Gate::cnot(control, target)); }
  void add_phase(std::uint32_t wire, std::int64_t power);
  void add_h(std::uint32_t wire) { add(Gate::hadamard(wire)); }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::vector<std::string> wires_;
  int k_ = 2;
  std::vector<Gate> gates_;
};

/// A circuit holding only CNOT and PHASE gates.
class Segment {
 public:
  Segment() = default;
  // Throws Error if `circuit` contains an H gate.
  explicit Segment(Circuit circuit);

  const Circuit& circuit() const noexcept { return circuit_; }
  std::size_t n() const noexcept { return circuit_.n(); }
  int k() const noexcept { return circuit_.k(); }
  const std::vector<Gate>& gates() const noexcept { return circuit_.gates(); }

  friend bool operator==(const Segment&, const Segment&) = default;

 private:
  Circuit circuit_;
};

using CircuitPart = std::variant<Segment, Gate>;

// Maximal H-free runs and the H gates between them, in source order.
std::vector<CircuitPart> partition(const Circuit& c);

// Inverse of partition. All parts must share `wires` and `k`.
Circuit assemble(const std::vector<CircuitPart>& parts, const std::vector<std::string>& wires,
                 int k);

// Number of PHASE gates with odd power.
std::size_t t_count(const Circuit& c);
inline std::size_t t_count(const Segment& s) { return t_count(s.circuit()); }

/// Reads the line-oriented circuit format:
///
///   .v a b c        wire declaration, index order
///   .k 3            optional modulus exponent (default 2)
///   BEGIN
///   cnot a b | T a | T* a | P a | P* a | Z a | H a | Rk <p> a
///   END
///
/// `#` starts a comment line. `k_override` replaces any `.k` directive.
Circuit parse(std::string_view text, std::optional<int> k_override = std::nullopt);

// One gate per line; named T/P/Z gates are used for k = 2 where a single name
// exists, `Rk` otherwise, so that parse(emit(c)) == c.
std::string emit(const Circuit& c);

Circuit read_circuit_file(const std::filesystem::path& path,
                          std::optional<int> k_override = std::nullopt);
void write_circuit_file(const std::filesystem::path& path, const Circuit& c);

}  // namespace rmtopt

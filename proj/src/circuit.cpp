#include "rmtopt/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "rmtopt/error.hpp"

namespace rmtopt {

namespace {

void check_k(int k) {
  if (k < 0 || k > kMaxModulusExponent) {
    throw Error("modulus exponent k must be in [0, " + std::to_string(kMaxModulusExponent) +
                "], got " + std::to_string(k));
  }
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return out;
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

std::optional<std::int64_t> to_int(std::string_view s) {
  std::int64_t value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
  return value;
}

// Power of a named gate in units of pi / 2^k, if representable.
std::optional<std::int64_t> named_power(std::string_view name, int k) {
  // T = pi/4, P = pi/2, Z = pi.
  int shift = 0;
  bool dagger = false;
  if (name == "t") {
    shift = 2;
  } else if (name == "t*") {
    shift = 2;
    dagger = true;
  } else if (name == "p") {
    shift = 1;
  } else if (name == "p*") {
    shift = 1;
    dagger = true;
  } else if (name == "z") {
    shift = 0;
  } else {
    return std::nullopt;
  }
  if (k < shift) return std::nullopt;
  const std::int64_t p = std::int64_t{1} << (k - shift);
  return dagger ? -p : p;
}

bool is_multi_control(std::string_view name) {
  return name == "tof" || name == "toffoli" || name == "ccx" || name == "ccz" ||
         name == "ccnot" || name == "mct" || name == "mcx";
}

}  // namespace

Circuit::Circuit(std::vector<std::string> wires, int k) : wires_(std::move(wires)), k_(k) {
  check_k(k);
  std::unordered_set<std::string> seen;
  for (const auto& w : wires_) {
    if (!seen.insert(w).second) throw Error("duplicate wire name '" + w + "'");
  }
}

Circuit::Circuit(std::size_t n, int k) : k_(k) {
  check_k(k);
  wires_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) wires_.push_back("x" + std::to_string(i + 1));
}

std::optional<std::uint32_t> Circuit::wire_index(std::string_view name) const {
  auto it = std::find(wires_.begin(), wires_.end(), name);
  if (it == wires_.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - wires_.begin());
}

void Circuit::add(Gate gate) {
  if (gate.target >= n()) throw Error("gate references wire " + std::to_string(gate.target) +
                                      " but circuit has " + std::to_string(n()) + " wires");
  switch (gate.kind) {
    case GateKind::Cnot:
      if (gate.control >= n()) throw Error("CNOT control out of range");
      if (gate.control == gate.target) throw Error("CNOT control equals target");
      gate.power = 0;
      break;
    case GateKind::Phase:
      gate.control = 0;
      gate.power &= modulus() - 1;
      if (gate.power == 0) return;
      break;
    case GateKind::H:
      gate.control = 0;
      gate.power = 0;
      break;
  }
  gates_.push_back(gate);
}

void Circuit::add_phase(std::uint32_t wire, std::int64_t power) {
  const auto m = static_cast<std::int64_t>(modulus());
  const std::int64_t reduced = ((power % m) + m) % m;
  add(Gate::phase(wire, static_cast<std::uint32_t>(reduced)));
}

Segment::Segment(Circuit circuit) : circuit_(std::move(circuit)) {
  for (const auto& g : circuit_.gates()) {
    if (g.kind == GateKind::H) throw Error("segment may not contain H gates");
  }
}

std::vector<CircuitPart> partition(const Circuit& c) {
  std::vector<CircuitPart> parts;
  Circuit current(c.wires(), c.k());
  auto flush = [&] {
    if (!current.empty()) {
      parts.emplace_back(Segment(std::move(current)));
      current = Circuit(c.wires(), c.k());
    }
  };
  for (const auto& g : c.gates()) {
    if (g.kind == GateKind::H) {
      flush();
      parts.emplace_back(g);
    } else {
      current.add(g);
    }
  }
  flush();
  return parts;
}

Circuit assemble(const std::vector<CircuitPart>& parts, const std::vector<std::string>& wires,
                 int k) {
  Circuit out(wires, k);
  for (const auto& part : parts) {
    if (const auto* seg = std::get_if<Segment>(&part)) {
      if (seg->circuit().wires() != wires || seg->k() != k) {
        throw DimensionMismatch("segment wires or k differ from the enclosing circuit");
      }
      for (const auto& g : seg->gates()) out.add(g);
    } else {
      out.add(std::get<Gate>(part));
    }
  }
  return out;
}

std::size_t t_count(const Circuit& c) {
  return static_cast<std::size_t>(std::count_if(c.gates().begin(), c.gates().end(), [](const Gate& g) {
    return g.kind == GateKind::Phase && (g.power & 1U) != 0;
  }));
}

Circuit parse(std::string_view text, std::optional<int> k_override) {
  enum class State { Header, Body, Done };
  State state = State::Header;
  std::optional<std::vector<std::string>> wires;
  int k = 2;
  Circuit circuit;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto tokens = split_ws(raw);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    const std::string head = lower(tokens.front());
    if (state == State::Done) throw ParseError(lineno, "content after END");

    if (state == State::Header) {
      if (head == ".v") {
        if (wires) throw ParseError(lineno, "duplicate .v declaration");
        wires.emplace(tokens.begin() + 1, tokens.end());
      } else if (head == ".k") {
        if (tokens.size() != 2) throw ParseError(lineno, ".k expects one integer");
        auto value = to_int(tokens[1]);
        if (!value || *value < 0 || *value > kMaxModulusExponent) {
          throw ParseError(lineno, "invalid modulus exponent '" + tokens[1] + "'");
        }
        k = static_cast<int>(*value);
      } else if (head == "begin") {
        if (!wires) throw ParseError(lineno, "missing .v wire declaration before BEGIN");
        try {
          circuit = Circuit(*wires, k_override.value_or(k));
        } catch (const ParseError&) {
          throw;
        } catch (const Error& e) {
          throw ParseError(lineno, e.what());
        }
        state = State::Body;
      } else {
        throw ParseError(lineno, "malformed header line '" + raw + "'");
      }
      continue;
    }

    if (head == "end") {
      state = State::Done;
      continue;
    }

    auto wire = [&](const std::string& name) {
      auto idx = circuit.wire_index(name);
      if (!idx) throw ParseError(lineno, "undeclared wire '" + name + "'");
      return *idx;
    };
    auto expect_args = [&](std::size_t count) {
      if (tokens.size() != count + 1) {
        throw ParseError(lineno, "gate '" + tokens.front() + "' expects " +
                                     std::to_string(count) + " operand(s)");
      }
    };

    if (head == "cnot") {
      expect_args(2);
      const auto control = wire(tokens[1]);
      const auto target = wire(tokens[2]);
      if (control == target) throw ParseError(lineno, "CNOT control equals target");
      circuit.add_cnot(control, target);
    } else if (head == "h") {
      expect_args(1);
      circuit.add_h(wire(tokens[1]));
    } else if (head == "rk") {
      expect_args(2);
      auto power = to_int(tokens[1]);
      if (!power) throw ParseError(lineno, "invalid phase power '" + tokens[1] + "'");
      circuit.add_phase(wire(tokens[2]), *power);
    } else if (is_multi_control(head)) {
      throw ParseError(lineno, "multi-control gate '" + tokens.front() +
                                   "' is not supported; expand it to CNOT and phase gates first");
    } else if (auto power = named_power(head, circuit.k())) {
      expect_args(1);
      circuit.add_phase(wire(tokens[1]), *power);
    } else if (named_power(head, kMaxModulusExponent)) {
      throw ParseError(lineno, "gate '" + tokens.front() + "' is not expressible with k = " +
                                   std::to_string(circuit.k()) + "; use Rk");
    } else {
      throw ParseError(lineno, "unknown gate '" + tokens.front() + "'");
    }
  }

  if (state == State::Header) throw ParseError(lineno, "missing BEGIN");
  if (state == State::Body) throw ParseError(lineno, "missing END");
  return circuit;
}

std::string emit(const Circuit& c) {
  std::ostringstream out;
  out << ".v";
  for (const auto& w : c.wires()) out << ' ' << w;
  out << '\n';
  if (c.k() != 2) out << ".k " << c.k() << '\n';
  out << "BEGIN\n";
  for (const auto& g : c.gates()) {
    const auto& target = c.wires()[g.target];
    switch (g.kind) {
      case GateKind::Cnot:
        out << "cnot " << c.wires()[g.control] << ' ' << target << '\n';
        break;
      case GateKind::H:
        out << "H " << target << '\n';
        break;
      case GateKind::Phase: {
        const char* name = nullptr;
        if (c.k() == 2) {
          switch (g.power) {
            case 1: name = "T"; break;
            case 7: name = "T*"; break;
            case 2: name = "P"; break;
            case 6: name = "P*"; break;
            case 4: name = "Z"; break;
            default: break;
          }
        }
        if (name != nullptr) {
          out << name << ' ' << target << '\n';
        } else {
          out << "Rk " << g.power << ' ' << target << '\n';
        }
        break;
      }
    }
  }
  out << "END\n";
  return out.str();
}

Circuit read_circuit_file(const std::filesystem::path& path, std::optional<int> k_override) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), k_override);
}

void write_circuit_file(const std::filesystem::path& path, const Circuit& c) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << emit(c);
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace rmtopt

#pragma once

// Shared fixtures and independent oracles for the test suites. Nothing here
// calls into the code paths it is used to check (extraction, decoding, lifting).

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rmtopt/circuit.hpp"
#include "rmtopt/gf2.hpp"
#include "rmtopt/phasepoly.hpp"

namespace rmtopt::testing {

inline std::string data_path(const std::string& name) { return std::string(RMTOPT_TEST_DATA) + "/" + name; }

inline const std::vector<std::int64_t> kCczTuple = {1, 1, 7, 1, 7, 7, 1};
inline const std::vector<std::int64_t> kTwoToffoliTuple = {2, 6, 6, 1, 7, 7, 1, 3, 7, 7, 1, 0, 0, 0, 0};
inline const std::vector<std::int64_t> kTwoToffoliOptimized = {3, 7, 7, 2, 0, 0, 2, 4, 0, 0, 2, 1, 1, 1, 1};
inline const char* kTwoToffoliResidue = "000111111110000";

inline CoeffVector tuple(int n, int k, const std::vector<std::int64_t>& values) {
  return CoeffVector::from_values(n, k, values);
}

using Rng = std::mt19937_64;

inline CoeffVector random_coeffs(int n, int k, Rng& rng, double density = 1.0) {
  CoeffVector a(n, k);
  std::uniform_int_distribution<std::uint32_t> value(0, a.modulus() - 1);
  std::bernoulli_distribution keep(density);
  for (std::uint64_t y = 1; y <= a.size(); ++y) {
    if (keep(rng)) a.set(y, value(rng));
  }
  return a;
}

// Random invertible matrix from random row additions applied to the identity.
inline GF2Matrix random_invertible(std::size_t n, Rng& rng) {
  GF2Matrix m = GF2Matrix::identity(n);
  if (n < 2) return m;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t step = 0; step < 4 * n * n; ++step) {
    const auto a = pick(rng);
    const auto b = pick(rng);
    if (a != b) m.add_row(a, b);
  }
  return m;
}

inline Circuit random_cnot_phase_circuit(std::size_t n, std::size_t gates, int k, Rng& rng,
                                         double h_probability = 0.0) {
  Circuit c(n, k);
  std::uniform_int_distribution<std::uint32_t> wire(0, static_cast<std::uint32_t>(n - 1));
  std::uniform_int_distribution<std::uint32_t> power(1, c.modulus() - 1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t i = 0; i < gates; ++i) {
    const double roll = u(rng);
    if (roll < h_probability) {
      c.add_h(wire(rng));
    } else if (n >= 2 && roll < h_probability + 0.5) {
      const auto a = wire(rng);
      auto b = wire(rng);
      while (b == a) b = wire(rng);
      c.add_cnot(a, b);
    } else {
      c.add(Gate::phase(wire(rng), power(rng)));
    }
  }
  return c;
}

// Runs an H-free circuit on basis state x, returning the output state and the
// accumulated phase power modulo 2^(k+1).
inline std::pair<std::uint64_t, std::uint32_t> simulate(const Circuit& c, std::uint64_t x) {
  std::uint32_t phase = 0;
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::Cnot:
        if ((x >> g.control) & 1U) x ^= std::uint64_t{1} << g.target;
        break;
      case GateKind::Phase:
        if ((x >> g.target) & 1U) phase += g.power;
        break;
      case GateKind::H:
        throw std::logic_error("simulate() only handles H-free circuits");
    }
  }
  return {x, phase & (c.modulus() - 1)};
}

inline bool same_action(const Circuit& a, const Circuit& b) {
  if (a.n() != b.n()) return false;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << a.n()); ++x) {
    if (simulate(a, x) != simulate(b, x)) return false;
  }
  return true;
}

// Direct evaluation of P_a(x) from the values, without using the library's eval.
inline std::uint32_t naive_eval(const std::vector<std::uint32_t>& values, int k, std::uint64_t x) {
  std::uint64_t total = 0;
  for (std::uint64_t y = 1; y <= values.size(); ++y) {
    if (__builtin_popcountll(y & x) & 1) total += values[y - 1];
  }
  return static_cast<std::uint32_t>(total % (std::uint64_t{1} << (k + 1)));
}

inline bool vanishes_everywhere(const CoeffVector& a) {
  const auto values = a.values();
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << a.n()); ++x) {
    if (naive_eval(values, a.k(), x) != 0) return false;
  }
  return true;
}

// ANF coefficients by the subset-sum definition, O(3^n).
inline std::vector<int> naive_anf(const std::vector<int>& truth) {
  std::vector<int> anf(truth.size(), 0);
  for (std::uint64_t y = 0; y < truth.size(); ++y) {
    int acc = 0;
    for (std::uint64_t x = y;; x = (x - 1) & y) {
      acc ^= truth[x];
      if (x == 0) break;
    }
    anf[y] = acc;
  }
  return anf;
}

inline int anf_degree(const std::vector<int>& anf) {
  int deg = -1;
  for (std::uint64_t y = 0; y < anf.size(); ++y) {
    if (anf[y]) deg = std::max(deg, __builtin_popcountll(y));
  }
  return deg;
}

// Degree of a punctured word as a Boolean function, trying both values at 0.
// Returns the lower of the two degrees (the punctured word lies in RM(r, n)* iff
// this is <= r).
inline int punctured_degree(const BitVector& word) {
  std::vector<int> truth(word.size() + 1, 0);
  for (std::size_t i = 0; i < word.size(); ++i) truth[i + 1] = word.get(i);
  const int d0 = anf_degree(naive_anf(truth));
  truth[0] = 1;
  const int d1 = anf_degree(naive_anf(truth));
  return std::min(d0, d1);
}

// Sum of 0/1 combinations of `gens` selected by `mask`.
inline CoeffVector combine(const std::vector<CoeffVector>& gens, int n, int k, std::uint64_t mask) {
  CoeffVector acc(n, k);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if ((mask >> i) & 1U) acc = add(acc, gens[i]);
  }
  return acc;
}

inline CoeffVector random_null_phase(int n, int k, Rng& rng) {
  const auto gens = null_phase_generators(n, k);
  CoeffVector acc(n, k);
  std::bernoulli_distribution coin(0.5);
  for (const auto& g : gens) {
    if (coin(rng)) acc = add(acc, g);
  }
  return acc;
}

}  // namespace rmtopt::testing

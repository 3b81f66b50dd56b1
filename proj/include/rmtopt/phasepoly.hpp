#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rmtopt/circuit.hpp"
#include "rmtopt/gf2.hpp"

namespace rmtopt {

// Largest variable count for which dense coefficient tuples are built.
inline constexpr int kMaxPhaseVars = 28;

/// Coefficients a_y in Z_{2^(k+1)} of a phase polynomial
///
///   P(x) = sum over y != 0 of a_y * (y . x)
///
/// indexed by the label y in 1 .. 2^n - 1 with bit j-1 of the label set iff
/// x_j participates (1 <-> x1, 2 <-> x2, 3 <-> x1 + x2, 4 <-> x3, ...).
///
/// Storage is one BitVector per binary digit of the coefficients; plane j bit
/// (y - 1) is digit j of a_y.
class CoeffVector {
 public:
  CoeffVector() = default;
  CoeffVector(int n, int k);

  // values[y - 1] = a_y, reduced modulo 2^(k+1).
  static CoeffVector from_values(int n, int k, std::span<const std::int64_t> values);
  static CoeffVector from_values(int n, int k, std::initializer_list<std::int64_t> values) {
    return from_values(n, k, std::span<const std::int64_t>(values.begin(), values.size()));
  }

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::uint32_t modulus() const noexcept { return std::uint32_t{1} << (k_ + 1); }
  // Number of entries, 2^n - 1.
  std::uint64_t size() const noexcept { return (std::uint64_t{1} << n_) - 1; }

  std::uint32_t at(std::uint64_t label) const;
  void set(std::uint64_t label, std::uint32_t value);
  void accumulate(std::uint64_t label, std::int64_t delta);

  std::vector<std::uint32_t> values() const;
  const BitVector& plane(int digit) const { return planes_.at(static_cast<std::size_t>(digit)); }

  bool is_zero() const noexcept;
  // Number of odd entries.
  std::size_t t_count() const noexcept { return planes_.empty() ? 0 : planes_[0].weight(); }

  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;

 private:
  friend CoeffVector add(const CoeffVector& a, const CoeffVector& c);

  int n_ = 0;
  int k_ = 2;
  std::vector<BitVector> planes_;
};

/// The action of a {CNOT, PHASE} circuit: |x> -> e^{i pi P(x) / 2^k} |perm x>.
/// Row q of `perm` is the linear function of the inputs held by wire q at the end.
struct PhaseRep {
  CoeffVector coeffs;
  GF2Matrix perm;

  friend bool operator==(const PhaseRep&, const PhaseRep&) = default;
};

/// Coefficients b_y over the monomial basis { v^y : wt(y) <= n - 1 }, where v^y
/// is the 0/1 evaluation vector of prod_{j in y} x_j on the nonzero inputs.
/// Dense over labels 0 .. 2^n - 1; the all-ones label is never populated.
class MonomialCoeffs {
 public:
  MonomialCoeffs() = default;
  MonomialCoeffs(int n, int k);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::uint32_t modulus() const noexcept { return std::uint32_t{1} << (k_ + 1); }

  std::uint32_t at(std::uint64_t label) const { return coeffs_.at(label); }
  // Throws for the all-ones label (that monomial is not part of the basis).
  void set(std::uint64_t label, std::uint32_t value);

  // Nonzero (label, coefficient) pairs in ascending label order.
  std::vector<std::pair<std::uint64_t, std::uint32_t>> terms() const;
  bool is_zero() const noexcept;

  friend bool operator==(const MonomialCoeffs&, const MonomialCoeffs&) = default;

 private:
  int n_ = 0;
  int k_ = 2;
  std::vector<std::uint32_t> coeffs_;
};

// Sweeps the gates tracking each wire's linear state. Throws SizeLimitExceeded
// when the segment has more than kMaxPhaseVars wires.
PhaseRep extract(const Segment& s);

// P(x) for x given as an n-bit mask (bit j-1 = x_j). Direct O(2^n) sum.
std::uint32_t eval(const CoeffVector& a, std::uint64_t x);

// P(x) for every x in 0 .. 2^n - 1 via a Walsh-Hadamard transform.
std::vector<std::uint32_t> phase_table(const CoeffVector& a);

BitVector res2(const CoeffVector& a);
// Digit j of every coefficient; j must not exceed k.
BitVector shifted_res2(const CoeffVector& a, int j);

MonomialCoeffs monomial_decompose(const CoeffVector& a);
// Inverse of monomial_decompose: sum of b_y * v^y over Z_{2^(k+1)}.
CoeffVector monomial_expand(const MonomialCoeffs& b);

// Max of wt(y) - i over set digits i of b_y; nullopt stands for -infinity.
std::optional<int> effective_degree(const MonomialCoeffs& b);

// True iff P_a vanishes modulo 2^(k+1) at every input.
bool is_null_phase(const CoeffVector& a);

// Lifts a codeword of RM(n-k-2, n)* to a null phase tuple with the same
// residue. Throws NotACodeword otherwise.
CoeffVector lift(const BitVector& codeword, int n, int k);

// Componentwise sum modulo 2^(k+1).
CoeffVector add(const CoeffVector& a, const CoeffVector& c);
inline CoeffVector operator+(const CoeffVector& a, const CoeffVector& c) { return add(a, c); }

// The 0/1 evaluation vector of v^y included into Z_{2^(k+1)}.
CoeffVector monomial_vector(int n, int k, std::uint64_t label);

// Generators 2^i v^y with wt(y) - i <= n - k - 2 and wt(y) <= n - 1. Every
// null phase tuple is a unique 0/1 combination of these.
std::vector<CoeffVector> null_phase_generators(int n, int k);

}  // namespace rmtopt

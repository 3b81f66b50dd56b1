#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "rmtopt/gf2.hpp"

namespace rmtopt {

/// Binary Reed-Muller code RM(r, n), optionally punctured at the all-zero input.
///
/// Codeword position p holds the value at input x = p (full code) or x = p + 1
/// (punctured code), with bit j of x giving variable x_{j+1}. Orders r < 0
/// denote the zero code.
struct RMCode {
  int r = 0;
  int n = 0;
  bool punctured = true;

  std::size_t length() const noexcept { return (std::size_t{1} << n) - (punctured ? 1 : 0); }
  std::size_t dimension() const noexcept;
  // Minimum distance of a nonzero code, 2^(n-r) (minus one when punctured).
  std::size_t min_distance() const noexcept;

  friend bool operator==(const RMCode&, const RMCode&) = default;
};

// Throws Error on r > n or n outside [0, 30].
void validate(const RMCode& code);

struct DecodeResult {
  BitVector codeword;
  // Algebraic normal form of the codeword, length 2^n; bit y set iff the
  // monomial with label y is in the support.
  BitVector anf;
  std::size_t distance = 0;

  std::vector<std::uint64_t> support() const;
};

// Monomial labels of degree <= r in ascending order.
std::vector<std::uint64_t> monomials_up_to(int n, int r);

// 0/1 evaluation vector of the monomial with label y over all 2^n inputs.
BitVector full_monomial_vector(int n, std::uint64_t label);

// GF(2) sum of the support monomials' evaluation vectors. Repeated labels cancel.
BitVector encode(const RMCode& code, std::span<const std::uint64_t> support);

// ANF of a word of the code's length; the punctured position is restored so
// that the full monomial vanishes. Throws NotACodeword if any monomial of
// degree above r is needed.
BitVector codeword_anf(const RMCode& code, const BitVector& word);
bool is_codeword(const RMCode& code, const BitVector& word);

inline constexpr std::size_t kDefaultMaxExactDimension = 24;

// Minimum distance decoding by enumerating all 2^dimension codewords. Ties go to
// the lexicographically smallest codeword bit string.
DecodeResult decode_exact(const RMCode& code, const BitVector& received,
                          std::size_t max_dimension = kDefaultMaxExactDimension);

// Reed's majority logic decoder.
DecodeResult decode_majority(const RMCode& code, const BitVector& received);

// Hard-decision recursive decoder built on the Plotkin (u | u + v) split.
DecodeResult decode_recursive(const RMCode& code, const BitVector& received);

// Exact covering radius via breadth-first search over the syndrome space.
// Throws SizeLimitExceeded when length - dimension exceeds max_redundancy.
std::size_t covering_radius_exhaustive(const RMCode& code, std::size_t max_redundancy = 26);

}  // namespace rmtopt

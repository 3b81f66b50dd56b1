#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rmtopt {

/// Packed vector over GF(2).
///
/// Bits beyond `size()` in the last word are always zero, so word-wise
/// XOR/AND/OR of two vectors of equal length preserve the invariant.
/// Textual form is a string of '0'/'1' with position 0 first.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t length);

  static BitVector ones(std::size_t length);
  static BitVector from_string(std::string_view bits);
  static BitVector from_bits(std::span<const int> bits);

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }

  bool get(std::size_t pos) const noexcept {
    return (words_[pos / kWordBits] >> (pos % kWordBits)) & 1U;
  }
  bool operator[](std::size_t pos) const noexcept { return get(pos); }
  void set(std::size_t pos, bool value = true) noexcept {
    const Word mask = Word{1} << (pos % kWordBits);
    if (value) {
      words_[pos / kWordBits] |= mask;
    } else {
      words_[pos / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t pos) noexcept {
    words_[pos / kWordBits] ^= Word{1} << (pos % kWordBits);
  }

  std::size_t weight() const noexcept;
  bool is_zero() const noexcept;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

  // Bits [offset, offset + length).
  BitVector slice(std::size_t offset, std::size_t length) const;
  // Concatenation: this vector's bits first.
  BitVector concat(const BitVector& tail) const;

  std::span<const Word> words() const noexcept { return words_; }
  // Raw word access. Callers must leave the bits past size() cleared.
  std::span<Word> mutable_words() noexcept { return words_; }

  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

  // Bit-string order: the first differing position decides, '0' < '1'.
  static bool lex_less(const BitVector& a, const BitVector& b);

 private:
  void clear_tail() noexcept;

  std::size_t length_ = 0;
  std::vector<Word> words_;
};

std::size_t weight(const BitVector& v);

// Hamming distance. Throws DimensionMismatch on unequal lengths.
std::size_t distance(const BitVector& u, const BitVector& v);

/// Dense matrix over GF(2) with packed rows.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols);

  static GF2Matrix identity(std::size_t n);
  // Rows given as bit strings, e.g. {"10", "11"}.
  static GF2Matrix from_rows(std::span<const std::string> rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows() == cols_; }

  bool get(std::size_t r, std::size_t c) const noexcept { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) noexcept {
    rows_[r].set(c, value);
  }
  const BitVector& row(std::size_t r) const noexcept { return rows_[r]; }
  void set_row(std::size_t r, BitVector value);

  // Row `src` is added into row `dst`.
  void add_row(std::size_t src, std::size_t dst) { rows_[dst] ^= rows_[src]; }
  void swap_rows(std::size_t a, std::size_t b) noexcept { std::swap(rows_[a], rows_[b]); }

  // Row r read as an integer with column j at bit j. Requires cols() <= 64.
  std::uint64_t row_mask(std::size_t r) const;

  std::size_t rank() const;
  bool is_identity() const;

  GF2Matrix operator*(const GF2Matrix& rhs) const;
  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

  std::string to_string() const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

// Inverse over GF(2). Throws on non-square or singular input.
GF2Matrix invert(const GF2Matrix& m);

inline int popcount(std::uint64_t x) noexcept { return std::popcount(x); }
inline bool parity(std::uint64_t x) noexcept { return std::popcount(x) & 1; }

}  // namespace rmtopt

namespace rmtopt {

// Binary Moebius transform of a length-2^n truth table, in place. Maps a
// truth table to its algebraic normal form coefficients and back (the
// transform is an involution). Position x is the input whose bit j is x_{j+1}.
// Only the variables whose bits are set in `variables` are transformed.
void moebius_in_place(BitVector& table, std::uint64_t variables = ~std::uint64_t{0});

}  // namespace rmtopt

#include "rmtopt/gf2.hpp"

#include <algorithm>

#include "rmtopt/error.hpp"

namespace rmtopt {

namespace {

std::size_t words_for(std::size_t bits) {
  return (bits + BitVector::kWordBits - 1) / BitVector::kWordBits;
}

void require_same_length(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("bit vector lengths differ: " + std::to_string(a.size()) +
                            " vs " + std::to_string(b.size()));
  }
}

}  // namespace

BitVector::BitVector(std::size_t length) : length_(length), words_(words_for(length), 0) {}

BitVector BitVector::ones(std::size_t length) {
  BitVector v(length);
  std::fill(v.words_.begin(), v.words_.end(), ~Word{0});
  v.clear_tail();
  return v;
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw Error("invalid bit character '" + std::string(1, bits[i]) + "'");
    }
  }
  return v;
}

BitVector BitVector::from_bits(std::span<const int> bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] & 1) v.set(i);
  }
  return v;
}

void BitVector::clear_tail() noexcept {
  const std::size_t rem = length_ % kWordBits;
  if (rem != 0 && !words_.empty()) {
    words_.back() &= (Word{1} << rem) - 1;
  }
}

std::size_t BitVector::weight() const noexcept {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

BitVector& BitVector::operator^=(const BitVector& other) {
  require_same_length(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  require_same_length(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  require_same_length(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BitVector BitVector::slice(std::size_t offset, std::size_t length) const {
  if (offset + length > length_) throw Error("slice out of range");
  BitVector out(length);
  if (offset % kWordBits == 0) {
    const std::size_t first = offset / kWordBits;
    std::copy_n(words_.begin() + static_cast<std::ptrdiff_t>(first), out.words_.size(),
                out.words_.begin());
    out.clear_tail();
    return out;
  }
  for (std::size_t i = 0; i < length; ++i) {
    if (get(offset + i)) out.set(i);
  }
  return out;
}

BitVector BitVector::concat(const BitVector& tail) const {
  BitVector out(length_ + tail.length_);
  std::copy(words_.begin(), words_.end(), out.words_.begin());
  if (length_ % kWordBits == 0) {
    std::copy(tail.words_.begin(), tail.words_.end(),
              out.words_.begin() + static_cast<std::ptrdiff_t>(words_.size()));
    return out;
  }
  for (std::size_t i = 0; i < tail.length_; ++i) {
    if (tail.get(i)) out.set(length_ + i);
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

bool BitVector::lex_less(const BitVector& a, const BitVector& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    const Word diff = a.words_[i] ^ b.words_[i];
    if (diff != 0) {
      const Word lowest = diff & (~diff + 1);
      return (a.words_[i] & lowest) == 0;
    }
  }
  return false;
}

std::size_t weight(const BitVector& v) { return v.weight(); }

std::size_t distance(const BitVector& u, const BitVector& v) {
  require_same_length(u, v);
  std::size_t total = 0;
  const auto uw = u.words();
  const auto vw = v.words();
  for (std::size_t i = 0; i < uw.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(uw[i] ^ vw[i]));
  }
  return total;
}

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows, BitVector(cols)) {}

GF2Matrix GF2Matrix::identity(std::size_t n) {
  GF2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

GF2Matrix GF2Matrix::from_rows(std::span<const std::string> rows) {
  if (rows.empty()) return {};
  GF2Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, BitVector::from_string(rows[r]));
  return m;
}

void GF2Matrix::set_row(std::size_t r, BitVector value) {
  if (value.size() != cols_) throw DimensionMismatch("row length does not match column count");
  rows_[r] = std::move(value);
}

std::uint64_t GF2Matrix::row_mask(std::size_t r) const {
  if (cols_ > 64) throw SizeLimitExceeded("row_mask needs at most 64 columns");
  return cols_ == 0 ? 0 : rows_[r].words()[0];
}

std::size_t GF2Matrix::rank() const {
  std::vector<BitVector> tmp = rows_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < tmp.size(); ++c) {
    auto pivot = std::find_if(tmp.begin() + static_cast<std::ptrdiff_t>(rank), tmp.end(),
                              [c](const BitVector& row) { return row.get(c); });
    if (pivot == tmp.end()) continue;
    std::swap(tmp[rank], *pivot);
    for (std::size_t r = rank + 1; r < tmp.size(); ++r) {
      if (tmp[r].get(c)) tmp[r] ^= tmp[rank];
    }
    ++rank;
  }
  return rank;
}

bool GF2Matrix::is_identity() const { return is_square() && *this == identity(cols_); }

GF2Matrix GF2Matrix::operator*(const GF2Matrix& rhs) const {
  if (cols_ != rhs.rows()) throw DimensionMismatch("matrix product shape mismatch");
  GF2Matrix out(rows(), rhs.cols());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t i = 0; i < cols_; ++i) {
      if (get(r, i)) out.rows_[r] ^= rhs.rows_[i];
    }
  }
  return out;
}

std::string GF2Matrix::to_string() const {
  std::string s;
  for (const auto& row : rows_) {
    s += row.to_string();
    s += '\n';
  }
  return s;
}

GF2Matrix invert(const GF2Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("cannot invert a non-square matrix");
  const std::size_t n = m.rows();
  GF2Matrix work = m;
  GF2Matrix inv = GF2Matrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && !work.get(pivot, c)) ++pivot;
    if (pivot == n) throw SingularMatrix("matrix is singular over GF(2)");
    work.swap_rows(pivot, c);
    inv.swap_rows(pivot, c);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != c && work.get(r, c)) {
        work.add_row(c, r);
        inv.add_row(c, r);
      }
    }
  }
  return inv;
}

}  // namespace rmtopt

namespace rmtopt {

void moebius_in_place(BitVector& table, std::uint64_t variables) {
  const std::size_t len = table.size();
  if (len == 0 || (len & (len - 1)) != 0) {
    throw DimensionMismatch("Moebius transform needs a power-of-two length");
  }
  auto words = table.mutable_words();
  static constexpr BitVector::Word kLow[6] = {
      0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
      0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};
  for (unsigned s = 0; s < 6 && (std::size_t{1} << s) < len; ++s) {
    if (((variables >> s) & 1U) == 0) continue;
    for (auto& w : words) w ^= (w & kLow[s]) << (1U << s);
  }
  for (std::size_t stride = 1, var = 6; stride < words.size(); stride <<= 1, ++var) {
    if (var >= 64 || ((variables >> var) & 1U) == 0) continue;
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (j & stride) words[j] ^= words[j ^ stride];
    }
  }
}

}  // namespace rmtopt

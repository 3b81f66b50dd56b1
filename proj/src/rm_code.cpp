#include "rmtopt/rm_code.hpp"

#include <string>

#include "rmtopt/error.hpp"

namespace rmtopt {

std::size_t RMCode::dimension() const noexcept {
  if (r < 0) return 0;
  if (r >= n) return length();
  std::size_t total = 0;
  std::size_t binom = 1;
  for (int i = 0; i <= r && i <= n; ++i) {
    total += binom;
    binom = binom * static_cast<std::size_t>(n - i) / static_cast<std::size_t>(i + 1);
  }
  return total;
}

std::size_t RMCode::min_distance() const noexcept {
  const std::size_t full = std::size_t{1} << (n - (r < 0 ? 0 : r));
  return punctured ? full - 1 : full;
}

void validate(const RMCode& code) {
  if (code.n < 0 || code.n > 30) throw Error("RM variable count out of range: " + std::to_string(code.n));
  if (code.r > code.n) {
    throw Error("RM order " + std::to_string(code.r) + " exceeds n = " + std::to_string(code.n));
  }
}

std::vector<std::uint64_t> DecodeResult::support() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t y = 0; y < anf.size(); ++y) {
    if (anf.get(y)) out.push_back(y);
  }
  return out;
}

std::vector<std::uint64_t> monomials_up_to(int n, int r) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
    if (popcount(y) <= r) out.push_back(y);
  }
  return out;
}

BitVector full_monomial_vector(int n, std::uint64_t label) {
  BitVector v(std::size_t{1} << n);
  for (std::uint64_t x = 0; x < v.size(); ++x) {
    if ((x & label) == label) v.set(x);
  }
  return v;
}

BitVector encode(const RMCode& code, std::span<const std::uint64_t> support) {
  validate(code);
  BitVector table(std::size_t{1} << code.n);
  for (auto y : support) {
    if (y >= table.size()) throw Error("monomial label out of range");
    if (popcount(y) > code.r) {
      throw Error("monomial of degree " + std::to_string(popcount(y)) + " is not in RM(" +
                  std::to_string(code.r) + ", " + std::to_string(code.n) + ")");
    }
    table.flip(y);
  }
  moebius_in_place(table);
  return code.punctured ? table.slice(1, table.size() - 1) : table;
}

BitVector codeword_anf(const RMCode& code, const BitVector& word) {
  validate(code);
  if (word.size() != code.length()) {
    throw DimensionMismatch("word length " + std::to_string(word.size()) + " differs from code length " +
                            std::to_string(code.length()));
  }
  BitVector table = word;
  if (code.punctured) {
    table = BitVector(1).concat(word);
    if (code.r < code.n && word.weight() % 2 == 1) table.set(0);
  }
  moebius_in_place(table);
  for (std::uint64_t y = 0; y < table.size(); ++y) {
    if (table.get(y) && popcount(y) > code.r) {
      throw NotACodeword("word needs a degree-" + std::to_string(popcount(y)) + " monomial");
    }
  }
  return table;
}

bool is_codeword(const RMCode& code, const BitVector& word) {
  try {
    codeword_anf(code, word);
    return true;
  } catch (const NotACodeword&) {
    return false;
  }
}

std::size_t covering_radius_exhaustive(const RMCode& code, std::size_t max_redundancy) {
  validate(code);
  const std::size_t len = code.length();
  const std::size_t dim = code.dimension();
  const std::size_t redundancy = len - dim;
  if (redundancy > max_redundancy || redundancy > 30) {
    throw SizeLimitExceeded("covering radius search over 2^" + std::to_string(redundancy) +
                            " syndromes exceeds the budget");
  }

  // Row-reduce the generator matrix; the parity-check column of a pivot
  // coordinate is that pivot row restricted to the free coordinates, and a free
  // coordinate's column is a unit vector.
  std::vector<BitVector> rows;
  for (auto y : monomials_up_to(code.n, code.r)) {
    const std::uint64_t label = y;
    rows.push_back(encode(code, std::span<const std::uint64_t>(&label, 1)));
  }
  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot(len, false);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < len && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && rows[i].get(c)) rows[i] ^= rows[rank];
    }
    pivots.push_back(c);
    is_pivot[c] = true;
    ++rank;
  }

  std::vector<std::uint32_t> free_index(len, 0);
  std::uint32_t next = 0;
  for (std::size_t c = 0; c < len; ++c) {
    if (!is_pivot[c]) free_index[c] = next++;
  }
  std::vector<std::uint32_t> columns(len, 0);
  for (std::size_t c = 0; c < len; ++c) {
    if (!is_pivot[c]) columns[c] = std::uint32_t{1} << free_index[c];
  }
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    std::uint32_t col = 0;
    for (std::size_t c = 0; c < len; ++c) {
      if (!is_pivot[c] && rows[i].get(c)) col |= std::uint32_t{1} << free_index[c];
    }
    columns[pivots[i]] = col;
  }

  const std::size_t states = std::size_t{1} << redundancy;
  std::vector<std::uint8_t> dist(states, 0xFF);
  std::vector<std::uint32_t> frontier{0};
  dist[0] = 0;
  std::size_t radius = 0;
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next_frontier;
    for (auto s : frontier) {
      for (auto col : columns) {
        const std::uint32_t t = s ^ col;
        if (dist[t] == 0xFF) {
          dist[t] = static_cast<std::uint8_t>(dist[s] + 1);
          next_frontier.push_back(t);
        }
      }
    }
    if (!next_frontier.empty()) ++radius;
    frontier = std::move(next_frontier);
  }
  return radius;
}

}  // namespace rmtopt

#include <functional>
#include <string>

#include "rmtopt/error.hpp"
#include "rmtopt/rm_code.hpp"

namespace rmtopt {

namespace {

struct FullDecode {
  BitVector codeword;  // length 2^n
  BitVector anf;
};

using FullDecoder = std::function<FullDecode(const BitVector&)>;

DecodeResult zero_result(const RMCode& code, const BitVector& received) {
  return {BitVector(code.length()), BitVector(std::size_t{1} << code.n), received.weight()};
}

void check_received(const RMCode& code, const BitVector& received) {
  validate(code);
  if (received.size() != code.length()) {
    throw DimensionMismatch("received word has length " + std::to_string(received.size()) +
                            ", code length is " + std::to_string(code.length()));
  }
}

// Decodes a punctured word by trying both values at the deleted position and
// keeping the closer result (ties keep the 0 extension).
DecodeResult decode_with_puncture(const RMCode& code, const BitVector& received,
                                  const FullDecoder& full) {
  if (!code.punctured) {
    auto d = full(received);
    const auto dist = distance(d.codeword, received);
    return {std::move(d.codeword), std::move(d.anf), dist};
  }
  DecodeResult best;
  bool have = false;
  for (int bit = 0; bit < 2; ++bit) {
    BitVector head(1);
    head.set(0, bit == 1);
    auto d = full(head.concat(received));
    BitVector punct = d.codeword.slice(1, code.length());
    const auto dist = distance(punct, received);
    if (!have || dist < best.distance) {
      best = {std::move(punct), std::move(d.anf), dist};
      have = true;
    }
  }
  return best;
}

FullDecode majority_full(const BitVector& word, int r, int n) {
  const std::size_t len = std::size_t{1} << n;
  std::vector<BitVector> coord;
  for (int j = 0; j < n; ++j) coord.push_back(full_monomial_vector(n, std::uint64_t{1} << j));
  auto eval_vector = [&](std::uint64_t y) {
    BitVector v = BitVector::ones(len);
    for (int j = 0; j < n; ++j) {
      if ((y >> j) & 1U) v &= coord[static_cast<std::size_t>(j)];
    }
    return v;
  };

  BitVector work = word;
  BitVector anf(len);
  for (int d = std::min(r, n); d >= 0; --d) {
    const std::size_t votes = len >> d;
    std::vector<std::uint64_t> chosen;
    for (std::uint64_t y = 0; y < len; ++y) {
      if (popcount(y) != d) continue;
      // After transforming along y's variables, position x >= y holds the XOR
      // of `work` over the coset of the y-subcube through x.
      BitVector sums = work;
      moebius_in_place(sums, y);
      const BitVector ev = eval_vector(y);
      sums &= ev;
      if (2 * sums.weight() > votes) chosen.push_back(y);
    }
    for (auto y : chosen) {
      work ^= eval_vector(y);
      anf.set(y);
    }
  }
  BitVector codeword = anf;
  moebius_in_place(codeword);
  return {std::move(codeword), std::move(anf)};
}

BitVector recursive_full(const BitVector& word, int r, int m) {
  const std::size_t len = word.size();
  if (r < 0) return BitVector(len);
  if (r >= m) return word;
  if (r == 0) {
    return 2 * word.weight() > len ? BitVector::ones(len) : BitVector(len);
  }
  const std::size_t half = len / 2;
  const BitVector left = word.slice(0, half);
  const BitVector right = word.slice(half, half);

  const BitVector v = recursive_full(left ^ right, r - 1, m - 1);
  const BitVector right_v = right ^ v;

  // Two estimates of u: the left half and the right half with v removed.
  // Keep whichever gives the codeword (u | u + v) that agrees with more positions.
  const BitVector u_left = recursive_full(left, r, m - 1);
  const BitVector u_right = recursive_full(right_v, r, m - 1);
  const auto cost_left = distance(u_left, left) + distance(u_left, right_v);
  const auto cost_right = distance(u_right, left) + distance(u_right, right_v);
  const BitVector& u = cost_right < cost_left ? u_right : u_left;
  return u.concat(u ^ v);
}

}  // namespace

DecodeResult decode_exact(const RMCode& code, const BitVector& received, std::size_t max_dimension) {
  check_received(code, received);
  if (code.r < 0) return zero_result(code, received);
  if (code.r >= code.n) return {received, codeword_anf(code, received), 0};
  const std::size_t dim = code.dimension();
  if (dim > max_dimension) {
    throw SizeLimitExceeded("exact decoding of RM(" + std::to_string(code.r) + ", " +
                            std::to_string(code.n) + ") needs 2^" + std::to_string(dim) +
                            " codewords; the cap is 2^" + std::to_string(max_dimension));
  }
  if (dim >= 63) throw SizeLimitExceeded("code dimension too large to enumerate");

  const auto labels = monomials_up_to(code.n, code.r);
  std::vector<BitVector> generators;
  generators.reserve(labels.size());
  for (auto y : labels) generators.push_back(encode(code, std::span<const std::uint64_t>(&y, 1)));

  // Gray-code walk: step i flips generator ctz(i).
  BitVector current(code.length());
  BitVector best = current;
  std::uint64_t best_mask = 0;
  std::size_t best_dist = received.weight();
  std::uint64_t mask = 0;
  const std::uint64_t total = std::uint64_t{1} << dim;
  for (std::uint64_t i = 1; i < total; ++i) {
    const auto g = static_cast<std::size_t>(std::countr_zero(i));
    current ^= generators[g];
    mask ^= std::uint64_t{1} << g;
    const auto dist = distance(current, received);
    if (dist < best_dist || (dist == best_dist && BitVector::lex_less(current, best))) {
      best = current;
      best_mask = mask;
      best_dist = dist;
    }
  }

  BitVector anf(std::size_t{1} << code.n);
  for (std::size_t g = 0; g < labels.size(); ++g) {
    if ((best_mask >> g) & 1U) anf.set(labels[g]);
  }
  return {std::move(best), std::move(anf), best_dist};
}

DecodeResult decode_majority(const RMCode& code, const BitVector& received) {
  check_received(code, received);
  if (code.r < 0) return zero_result(code, received);
  return decode_with_puncture(code, received,
                              [&](const BitVector& w) { return majority_full(w, code.r, code.n); });
}

DecodeResult decode_recursive(const RMCode& code, const BitVector& received) {
  check_received(code, received);
  if (code.r < 0) return zero_result(code, received);
  return decode_with_puncture(code, received, [&](const BitVector& w) {
    BitVector codeword = recursive_full(w, code.r, code.n);
    BitVector anf = codeword;
    moebius_in_place(anf);
    return FullDecode{std::move(codeword), std::move(anf)};
  });
}

}  // namespace rmtopt

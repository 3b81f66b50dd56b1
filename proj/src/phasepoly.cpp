#include "rmtopt/phasepoly.hpp"

#include <algorithm>
#include <string>

#include "rmtopt/error.hpp"

namespace rmtopt {

namespace {

void check_shape(int n, int k) {
  if (n < 0 || n > kMaxPhaseVars) {
    throw SizeLimitExceeded("phase polynomial variable count must be in [0, " +
                            std::to_string(kMaxPhaseVars) + "], got " + std::to_string(n));
  }
  if (k < 0 || k > kMaxModulusExponent) {
    throw Error("modulus exponent out of range: " + std::to_string(k));
  }
}

std::uint32_t reduce(std::int64_t value, std::uint32_t modulus) {
  const auto m = static_cast<std::int64_t>(modulus);
  return static_cast<std::uint32_t>(((value % m) + m) % m);
}

// Integer Moebius transform modulo 2^(k+1): f[y] <- sum_{z subset y} (-1)^{|y|-|z|} f[z].
void int_moebius(std::vector<std::uint32_t>& f, std::uint32_t mask) {
  const std::size_t len = f.size();
  for (std::size_t s = 1; s < len; s <<= 1) {
    for (std::size_t x = 0; x < len; ++x) {
      if (x & s) f[x] = (f[x] - f[x ^ s]) & mask;
    }
  }
}

// Zeta transform modulo 2^(k+1): g[x] <- sum_{y subset x} g[y].
void int_zeta(std::vector<std::uint32_t>& g, std::uint32_t mask) {
  const std::size_t len = g.size();
  for (std::size_t s = 1; s < len; s <<= 1) {
    for (std::size_t x = 0; x < len; ++x) {
      if (x & s) g[x] = (g[x] + g[x ^ s]) & mask;
    }
  }
}

}  // namespace

CoeffVector::CoeffVector(int n, int k) : n_(n), k_(k) {
  check_shape(n, k);
  planes_.assign(static_cast<std::size_t>(k) + 1, BitVector(size()));
}

CoeffVector CoeffVector::from_values(int n, int k, std::span<const std::int64_t> values) {
  CoeffVector a(n, k);
  if (values.size() != a.size()) {
    throw DimensionMismatch("expected " + std::to_string(a.size()) + " coefficients, got " +
                            std::to_string(values.size()));
  }
  for (std::uint64_t y = 1; y <= a.size(); ++y) a.set(y, reduce(values[y - 1], a.modulus()));
  return a;
}

std::uint32_t CoeffVector::at(std::uint64_t label) const {
  if (label == 0 || label > size()) throw Error("coefficient label out of range");
  std::uint32_t v = 0;
  for (std::size_t j = 0; j < planes_.size(); ++j) {
    if (planes_[j].get(label - 1)) v |= std::uint32_t{1} << j;
  }
  return v;
}

void CoeffVector::set(std::uint64_t label, std::uint32_t value) {
  if (label == 0 || label > size()) throw Error("coefficient label out of range");
  value &= modulus() - 1;
  for (std::size_t j = 0; j < planes_.size(); ++j) planes_[j].set(label - 1, (value >> j) & 1U);
}

void CoeffVector::accumulate(std::uint64_t label, std::int64_t delta) {
  set(label, reduce(static_cast<std::int64_t>(at(label)) + delta, modulus()));
}

std::vector<std::uint32_t> CoeffVector::values() const {
  std::vector<std::uint32_t> out(size(), 0);
  for (std::size_t j = 0; j < planes_.size(); ++j) {
    const auto words = planes_[j].words();
    for (std::size_t w = 0; w < words.size(); ++w) {
      for (auto bits = words[w]; bits != 0; bits &= bits - 1) {
        out[w * BitVector::kWordBits + static_cast<std::size_t>(std::countr_zero(bits))] |=
            std::uint32_t{1} << j;
      }
    }
  }
  return out;
}

bool CoeffVector::is_zero() const noexcept {
  return std::all_of(planes_.begin(), planes_.end(), [](const BitVector& p) { return p.is_zero(); });
}

MonomialCoeffs::MonomialCoeffs(int n, int k)
    : n_(n), k_(k), coeffs_(std::size_t{1} << n, 0) {
  check_shape(n, k);
}

void MonomialCoeffs::set(std::uint64_t label, std::uint32_t value) {
  if (label >= coeffs_.size()) throw Error("monomial label out of range");
  value &= modulus() - 1;
  if (label == coeffs_.size() - 1 && value != 0) {
    throw Error("the full monomial is not a basis element");
  }
  coeffs_[label] = value;
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> MonomialCoeffs::terms() const {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t y = 0; y < coeffs_.size(); ++y) {
    if (coeffs_[y] != 0) out.emplace_back(y, coeffs_[y]);
  }
  return out;
}

bool MonomialCoeffs::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint32_t v) { return v == 0; });
}

PhaseRep extract(const Segment& s) {
  const int n = static_cast<int>(s.n());
  check_shape(n, s.k());
  std::vector<std::uint64_t> state(s.n());
  for (std::size_t q = 0; q < s.n(); ++q) state[q] = std::uint64_t{1} << q;

  PhaseRep rep{CoeffVector(n, s.k()), GF2Matrix(s.n(), s.n())};
  for (const auto& g : s.gates()) {
    switch (g.kind) {
      case GateKind::Cnot:
        state[g.target] ^= state[g.control];
        break;
      case GateKind::Phase:
        rep.coeffs.accumulate(state[g.target], g.power);
        break;
      case GateKind::H:
        throw Error("H gate inside a segment");
    }
  }
  for (std::size_t q = 0; q < s.n(); ++q) {
    for (std::size_t j = 0; j < s.n(); ++j) rep.perm.set(q, j, (state[q] >> j) & 1U);
  }
  return rep;
}

std::uint32_t eval(const CoeffVector& a, std::uint64_t x) {
  std::uint64_t total = 0;
  const auto values = a.values();
  for (std::uint64_t y = 1; y <= a.size(); ++y) {
    if (parity(y & x)) total += values[y - 1];
  }
  return static_cast<std::uint32_t>(total & (a.modulus() - 1));
}

std::vector<std::uint32_t> phase_table(const CoeffVector& a) {
  if (a.n() > 24) throw SizeLimitExceeded("phase_table supports at most 24 variables");
  const std::size_t len = std::size_t{1} << a.n();
  const auto values = a.values();
  std::vector<std::int64_t> w(len, 0);
  std::int64_t sum = 0;
  for (std::size_t y = 1; y < len; ++y) {
    w[y] = values[y - 1];
    sum += values[y - 1];
  }
  for (std::size_t s = 1; s < len; s <<= 1) {
    for (std::size_t x = 0; x < len; ++x) {
      if ((x & s) == 0) {
        const std::int64_t u = w[x];
        const std::int64_t v = w[x | s];
        w[x] = u + v;
        w[x | s] = u - v;
      }
    }
  }
  // sum_y a_y [y.x odd] = (sum_y a_y - W(x)) / 2
  std::vector<std::uint32_t> out(len);
  for (std::size_t x = 0; x < len; ++x) out[x] = reduce((sum - w[x]) / 2, a.modulus());
  return out;
}

BitVector res2(const CoeffVector& a) { return a.plane(0); }

BitVector shifted_res2(const CoeffVector& a, int j) {
  if (j < 0 || j > a.k()) {
    throw Error("shift " + std::to_string(j) + " exceeds modulus exponent " + std::to_string(a.k()));
  }
  return a.plane(j);
}

MonomialCoeffs monomial_decompose(const CoeffVector& a) {
  const int n = a.n();
  MonomialCoeffs b(n, a.k());
  if (n == 0) return b;
  const std::uint32_t mask = a.modulus() - 1;
  const std::size_t len = std::size_t{1} << n;
  const std::uint64_t full = len - 1;

  std::vector<std::uint32_t> f(len, 0);
  const auto values = a.values();
  std::copy(values.begin(), values.end(), f.begin() + 1);
  int_moebius(f, mask);

  // The value t placed at x = 0 enters every coefficient c_y with sign
  // (-1)^wt(y); pick it so the full monomial's coefficient vanishes.
  const std::uint32_t sign_full = (n % 2 == 0) ? 1 : mask;  // (-1)^n
  const std::uint32_t t = (0U - sign_full * f[full]) & mask;
  for (std::uint64_t y = 0; y < full; ++y) {
    const std::uint32_t term = (popcount(y) % 2 == 0) ? t : (0U - t) & mask;
    b.set(y, (f[y] + term) & mask);
  }
  return b;
}

CoeffVector monomial_expand(const MonomialCoeffs& b) {
  CoeffVector a(b.n(), b.k());
  if (b.n() == 0) return a;
  const std::size_t len = std::size_t{1} << b.n();
  std::vector<std::uint32_t> g(len);
  for (std::size_t y = 0; y < len; ++y) g[y] = b.at(y);
  int_zeta(g, b.modulus() - 1);
  for (std::uint64_t x = 1; x < len; ++x) a.set(x, g[x]);
  return a;
}

std::optional<int> effective_degree(const MonomialCoeffs& b) {
  std::optional<int> best;
  for (const auto& [y, coeff] : b.terms()) {
    const int deg = popcount(y) - std::countr_zero(coeff);
    if (!best || deg > *best) best = deg;
  }
  return best;
}

bool is_null_phase(const CoeffVector& a) {
  const auto deg = effective_degree(monomial_decompose(a));
  return !deg || *deg <= a.n() - a.k() - 2;
}

CoeffVector lift(const BitVector& codeword, int n, int k) {
  CoeffVector c(n, k);
  if (codeword.size() != c.size()) {
    throw DimensionMismatch("codeword length " + std::to_string(codeword.size()) +
                            " does not match 2^n - 1 = " + std::to_string(c.size()));
  }
  if (codeword.is_zero()) return c;
  const int order = n - k - 2;
  if (order < 0) throw NotACodeword("RM(" + std::to_string(order) + ", n)* is the zero code");

  // Restore the punctured position so the full monomial drops out (order < n).
  BitVector table = BitVector(1).concat(codeword);
  if (codeword.weight() % 2 == 1) table.set(0);
  moebius_in_place(table);

  const std::size_t len = table.size();
  std::vector<std::uint32_t> g(len, 0);
  for (std::size_t y = 0; y < len; ++y) {
    if (!table.get(y)) continue;
    if (popcount(y) > order) {
      throw NotACodeword("word has a degree-" + std::to_string(popcount(y)) +
                         " monomial, above the code order " + std::to_string(order));
    }
    g[y] = 1;
  }
  int_zeta(g, c.modulus() - 1);
  for (std::uint64_t x = 1; x < len; ++x) c.set(x, g[x]);
  return c;
}

CoeffVector add(const CoeffVector& a, const CoeffVector& c) {
  if (a.n() != c.n() || a.k() != c.k()) {
    throw DimensionMismatch("coefficient tuples differ in n or k");
  }
  CoeffVector out = a;
  const std::size_t words = a.planes_.empty() ? 0 : a.planes_[0].words().size();
  std::vector<BitVector::Word> carry(words, 0);
  for (std::size_t j = 0; j < out.planes_.size(); ++j) {
    auto dst = out.planes_[j].mutable_words();
    const auto rhs = c.planes_[j].words();
    for (std::size_t w = 0; w < words; ++w) {
      const auto x = dst[w];
      const auto y = rhs[w];
      dst[w] = x ^ y ^ carry[w];
      carry[w] = (x & y) | (carry[w] & (x ^ y));
    }
  }
  return out;
}

CoeffVector monomial_vector(int n, int k, std::uint64_t label) {
  CoeffVector v(n, k);
  if (label >= (std::uint64_t{1} << n)) throw Error("monomial label out of range");
  for (std::uint64_t x = 1; x <= v.size(); ++x) {
    if ((x & label) == label) v.set(x, 1);
  }
  return v;
}

std::vector<CoeffVector> null_phase_generators(int n, int k) {
  std::vector<CoeffVector> gens;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t y = 0; y < full; ++y) {
    const int wt = popcount(y);
    CoeffVector base = monomial_vector(n, k, y);
    for (int i = 0; i <= k; ++i) {
      if (wt - i <= n - k - 2) {
        CoeffVector g(n, k);
        for (std::uint64_t x = 1; x <= g.size(); ++x) {
          if (base.at(x) != 0) g.set(x, std::uint32_t{1} << i);
        }
        gens.push_back(std::move(g));
      }
    }
  }
  return gens;
}

}  // namespace rmtopt

#include "rmtopt/synth.hpp"

#include <algorithm>
#include <utility>

#include "rmtopt/error.hpp"

namespace rmtopt {

namespace {

Circuit blank(std::size_t n, std::vector<std::string> wires, int k) {
  if (wires.empty()) return Circuit(n, k);
  if (wires.size() != n) throw DimensionMismatch("wire name count does not match n");
  return Circuit(std::move(wires), k);
}

// Appends CNOTs that map the identity state to `perm`.
void append_permutation(Circuit& out, const GF2Matrix& perm) {
  if (!perm.is_square() || perm.rows() != out.n()) {
    throw DimensionMismatch("permutation shape does not match the wire count");
  }
  const std::size_t n = perm.rows();
  GF2Matrix work = perm;
  // (src, dst): row dst += row src, in the order they reduce `perm` to identity.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> ops;
  auto apply = [&](std::size_t src, std::size_t dst) {
    work.add_row(src, dst);
    ops.emplace_back(static_cast<std::uint32_t>(src), static_cast<std::uint32_t>(dst));
  };
  for (std::size_t c = 0; c < n; ++c) {
    if (!work.get(c, c)) {
      std::size_t r = c + 1;
      while (r < n && !work.get(r, c)) ++r;
      if (r == n) throw SingularMatrix("linear permutation is singular");
      apply(r, c);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r != c && work.get(r, c)) apply(c, r);
    }
  }
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) out.add_cnot(it->first, it->second);
}

}  // namespace

Segment synthesize(const PhaseRep& rep, std::vector<std::string> wires) {
  const auto n = static_cast<std::size_t>(rep.coeffs.n());
  if (rep.perm.rows() != n || rep.perm.cols() != n) {
    throw DimensionMismatch("coefficient and permutation sizes differ");
  }
  if (rep.perm.rank() != n) throw SingularMatrix("linear permutation is singular");

  Circuit out = blank(n, std::move(wires), rep.coeffs.k());
  const auto values = rep.coeffs.values();
  std::vector<std::uint32_t> fold;
  for (std::uint64_t y = 1; y <= rep.coeffs.size(); ++y) {
    const std::uint32_t power = values[y - 1];
    if (power == 0) continue;
    const auto pivot = static_cast<std::uint32_t>(std::countr_zero(y));
    fold.clear();
    for (auto rest = y & (y - 1); rest != 0; rest &= rest - 1) {
      fold.push_back(static_cast<std::uint32_t>(std::countr_zero(rest)));
    }
    for (auto w : fold) out.add_cnot(w, pivot);
    out.add(Gate::phase(pivot, power));
    for (auto it = fold.rbegin(); it != fold.rend(); ++it) out.add_cnot(*it, pivot);
  }
  append_permutation(out, rep.perm);
  return Segment(std::move(out));
}

Segment synthesize_permutation(const GF2Matrix& perm, std::vector<std::string> wires, int k) {
  if (!perm.is_square()) throw DimensionMismatch("permutation must be square");
  Circuit out = blank(perm.rows(), std::move(wires), k);
  append_permutation(out, perm);
  return Segment(std::move(out));
}

}  // namespace rmtopt

// Acceptance checks, one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "rmtopt/optimizer.hpp"
#include "rmtopt/rm_code.hpp"
#include "support.hpp"

using namespace rmtopt;
namespace t = rmtopt::testing;
using t::Rng;

namespace {

using Clock = std::chrono::steady_clock;

// Wall-clock limits in seconds.
constexpr double kLimitGoldenSeconds = 1.0;
constexpr double kLimitOptimalitySeconds = 120.0;
constexpr double kLimitMembershipSeconds = 60.0;
constexpr double kLimitDecoderSeconds = 10.0;
constexpr double kLimitFuzzSeconds = 60.0;
constexpr double kLimitCoveringSeconds = 30.0;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds) o.fail("took " + std::to_string(secs) + " s");
  if (!o.ok) ++failures;
  std::printf("[%s] %d. %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs,
              o.ok ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
}

BitVector random_codeword(const RMCode& code, Rng& rng) {
  std::vector<std::uint64_t> support;
  for (auto y : monomials_up_to(code.n, code.r)) {
    if (rng() & 1U) support.push_back(y);
  }
  return encode(code, support);
}

}  // namespace

int main() {
  criterion(1, "two-Toffoli example: extraction, residue, decoders, result", kLimitGoldenSeconds, [](Outcome& o) {
    const Segment s(read_circuit_file(t::data_path("two_toffoli.qc")));
    const auto rep = extract(s);
    o.expect(rep.coeffs == t::tuple(4, 2, t::kTwoToffoliTuple), "extracted tuple");
    const auto residue = res2(rep.coeffs);
    o.expect(residue.to_string() == t::kTwoToffoliResidue, "residue");
    const RMCode code{0, 4, true};
    for (auto fn : {decode_majority, decode_recursive}) {
      const auto r = fn(code, residue);
      o.expect(r.codeword == BitVector::ones(15) && r.distance == 7, "heuristic decoder result");
    }
    const auto ex = decode_exact(code, residue);
    o.expect(ex.codeword == BitVector::ones(15) && ex.distance == 7, "exact decoder result");
    o.expect(add(rep.coeffs, lift(ex.codeword, 4, 2)) == t::tuple(4, 2, t::kTwoToffoliOptimized), "a + c");
    const auto result = optimize_segment(s, Decoder::Exact);
    o.expect(result.stats.t_count_original == 14, "original T-count");
    o.expect(result.stats.t_count_canonical == 8, "canonical T-count");
    o.expect(result.stats.t_count_optimized == 7 && t_count(result.segment) == 7, "optimized T-count");
    o.expect(extract(result.segment).coeffs == t::tuple(4, 2, t::kTwoToffoliOptimized), "output tuple");
  });

  criterion(2, "CCZ example: extraction, evaluation, T-count 7", 0, [](Outcome& o) {
    const Segment s(read_circuit_file(t::data_path("ccz.qc")));
    const auto rep = extract(s);
    o.expect(rep.coeffs == t::tuple(3, 2, t::kCczTuple), "extracted tuple");
    o.expect(rep.perm.is_identity(), "permutation");
    for (std::uint64_t x = 0; x < 8; ++x) {
      o.expect(eval(rep.coeffs, x) == (x == 7 ? 4U : 0U), "P(x) != 4 x1 x2 x3 at x = " + std::to_string(x));
    }
    for (auto d : {Decoder::Exact, Decoder::Majority, Decoder::Recursive}) {
      o.expect(optimize_segment(s, d).stats.t_count_optimized == 7, "optimized T-count");
    }
  });

  criterion(3, "identities vanish", 0, [](Outcome& o) {
    for (const auto& a : {t::tuple(4, 2, std::vector<std::int64_t>(15, 1)), t::tuple(2, 2, {4, 4, 4})}) {
      o.expect(is_null_phase(a), "is_null_phase");
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << a.n()); ++x) {
        o.expect(eval(a, x) == 0, "eval nonzero");
      }
    }
  });

  criterion(4, "exact decoding matches brute force over all null tuples at n = 4", kLimitOptimalitySeconds,
            [](Outcome& o) {
              Rng rng(4);
              o.expect(null_phase_generators(4, 2).size() == 17, "generator count");
              int mismatches = 0;
              for (int trial = 0; trial < 200; ++trial) {
                const auto a = t::random_coeffs(4, 2, rng);
                // Diagonal circuit on all four wires for this tuple.
                Circuit c(4);
                for (std::uint64_t y = 1; y <= a.size(); ++y) {
                  if (a.at(y) == 0) continue;
                  const auto pivot = static_cast<std::uint32_t>(std::countr_zero(y));
                  for (std::uint32_t q = pivot + 1; q < 4; ++q) {
                    if ((y >> q) & 1U) c.add_cnot(q, pivot);
                  }
                  c.add_phase(pivot, a.at(y));
                  for (std::uint32_t q = pivot + 1; q < 4; ++q) {
                    if ((y >> q) & 1U) c.add_cnot(q, pivot);
                  }
                }
                const auto got = optimize_circuit(c, Decoder::Exact).stats.t_count_optimized;
                if (got != brute_force_optimum(a)) ++mismatches;
              }
              o.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
            });

  criterion(5, "null phase membership agrees with exhaustive evaluation", kLimitMembershipSeconds, [](Outcome& o) {
    Rng rng(5);
    int violations = 0;
    for (int n : {4, 5}) {
      for (int k : {1, 2, 3}) {
        const RMCode code{n - k - 2, n, true};
        for (int trial = 0; trial < 500; ++trial) {
          CoeffVector a = trial % 2 == 0 ? t::random_null_phase(n, k, rng) : t::random_coeffs(n, k, rng);
          if (trial % 4 == 2) a.accumulate(1 + rng() % a.size(), 1 + static_cast<std::int64_t>(rng() % 3));
          const bool null = is_null_phase(a);
          if (null != t::vanishes_everywhere(a)) ++violations;
          const auto residue = res2(a);
          // A residue outside the code rules out a null tuple.
          if (null && t::punctured_degree(residue) > code.r) ++violations;
        }
      }
    }
    o.expect(violations == 0, std::to_string(violations) + " violations");
  });

  criterion(6, "weights of monomial-times-linear products are 0 or 2^(n - deg)", 0, [](Outcome& o) {
    int violations = 0;
    for (int n = 1; n <= 6; ++n) {
      const std::uint64_t len = std::uint64_t{1} << n;
      for (std::uint64_t y = 0; y < len; ++y) {
        for (std::uint64_t x = 0; x < len; ++x) {
          std::vector<int> truth(len, 0);
          std::uint64_t w = 0;
          for (std::uint64_t p = 0; p < len; ++p) {
            truth[p] = ((p & y) == y) && (std::popcount(p & x) & 1);
            w += static_cast<std::uint64_t>(truth[p]);
          }
          const int deg = t::anf_degree(t::naive_anf(truth));
          const std::uint64_t expected = deg < 0 ? 0 : std::uint64_t{1} << (n - deg);
          if (w != expected) ++violations;
        }
      }
    }
    o.expect(violations == 0, std::to_string(violations) + " violations");
  });

  criterion(7, "RM(1, 4)* decoders correct up to the guaranteed error weight", kLimitDecoderSeconds, [](Outcome& o) {
    Rng rng(7);
    const RMCode code{1, 4, true};
    o.expect(code.min_distance() == 7, "minimum distance");
    int majority_failures = 0;
    int recursive_failures = 0;
    for (std::size_t w = 1; w <= 3; ++w) {
      for (int trial = 0; trial < 100; ++trial) {
        const auto cw = random_codeword(code, rng);
        auto received = cw;
        std::vector<std::size_t> pos(code.length());
        for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = i;
        std::shuffle(pos.begin(), pos.end(), rng);
        for (std::size_t i = 0; i < w; ++i) received.flip(pos[i]);
        if (decode_majority(code, received).codeword != cw) ++majority_failures;
        if (w <= 2 && decode_recursive(code, received).codeword != cw) ++recursive_failures;
      }
    }
    o.expect(majority_failures == 0, std::to_string(majority_failures) + " majority failures");
    o.expect(recursive_failures == 0, std::to_string(recursive_failures) + " recursive failures");
  });

  criterion(8, "random circuits stay equivalent and never gain T gates", kLimitFuzzSeconds, [](Outcome& o) {
    Rng rng(8);
    const Decoder decoders[] = {Decoder::Exact, Decoder::Majority, Decoder::Recursive, Decoder::None};
    int bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + rng() % 5;
      const auto c = t::random_cnot_phase_circuit(n, rng() % 101, 2, rng);
      const auto result = optimize_circuit(c, decoders[rng() % 4]);
      const auto& s = result.stats;
      const bool ok = verify_equivalent(c, result.circuit) && t::same_action(c, result.circuit) &&
                      s.t_count_optimized <= s.t_count_canonical && s.t_count_canonical <= s.t_count_original &&
                      t_count(result.circuit) == s.t_count_optimized;
      if (!ok) ++bad;
    }
    o.expect(bad == 0, std::to_string(bad) + " failing runs");
  });

  criterion(9, "covering radius of RM(0, 4)* is 7", kLimitCoveringSeconds, [](Outcome& o) {
    o.expect(covering_radius_exhaustive(RMCode{0, 4, true}) == 7, "covering radius");
  });

  std::printf("[N/A ] 10. benchmark table not reproduced\n");
  std::printf("%s: %d failing criteria\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}

#include "rmtopt/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include "rmtopt/error.hpp"
#include "rmtopt/synth.hpp"

namespace rmtopt {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

GateProfile empty_profile(int k) { return {std::vector<std::size_t>(static_cast<std::size_t>(k) + 1, 0)}; }

// Restriction of a segment to the wires it touches.
struct Restricted {
  std::vector<std::uint32_t> active;  // restricted index -> original wire
  Segment segment;
};

Restricted restrict_to_active(const Segment& s) {
  std::vector<bool> used(s.n(), false);
  for (const auto& g : s.gates()) {
    used[g.target] = true;
    if (g.kind == GateKind::Cnot) used[g.control] = true;
  }
  Restricted out;
  std::vector<std::uint32_t> remap(s.n(), 0);
  std::vector<std::string> names;
  for (std::uint32_t q = 0; q < s.n(); ++q) {
    if (used[q]) {
      remap[q] = static_cast<std::uint32_t>(out.active.size());
      out.active.push_back(q);
      names.push_back(s.circuit().wires()[q]);
    }
  }
  Circuit c(std::move(names), s.k());
  for (auto g : s.gates()) {
    g.target = remap[g.target];
    if (g.kind == GateKind::Cnot) g.control = remap[g.control];
    c.add(g);
  }
  out.segment = Segment(std::move(c));
  return out;
}

Segment expand_to(const Segment& restricted, const std::vector<std::uint32_t>& active,
                  const Circuit& original) {
  Circuit c(original.wires(), original.k());
  for (auto g : restricted.gates()) {
    g.target = active[g.target];
    if (g.kind == GateKind::Cnot) g.control = active[g.control];
    c.add(g);
  }
  return Segment(std::move(c));
}

DecodeResult run_decoder(Decoder d, const RMCode& code, const BitVector& word,
                         const OptimizeOptions& options) {
  switch (d) {
    case Decoder::Exact:
      return decode_exact(code, word, options.max_exact_dimension);
    case Decoder::Majority:
      return decode_majority(code, word);
    case Decoder::Recursive:
      return decode_recursive(code, word);
    case Decoder::None:
      break;
  }
  return {BitVector(code.length()), BitVector(std::size_t{1} << code.n), word.weight()};
}

}  // namespace

std::string_view decoder_name(Decoder d) noexcept {
  switch (d) {
    case Decoder::Exact: return "exact";
    case Decoder::Majority: return "majority";
    case Decoder::Recursive: return "recursive";
    case Decoder::None: return "none";
  }
  return "none";
}

std::optional<Decoder> parse_decoder(std::string_view name) noexcept {
  for (auto d : {Decoder::Exact, Decoder::Majority, Decoder::Recursive, Decoder::None}) {
    if (decoder_name(d) == name) return d;
  }
  return std::nullopt;
}

std::string valid_decoder_names() { return "exact, majority, recursive, none"; }

GateProfile& GateProfile::operator+=(const GateProfile& other) {
  if (counts.size() < other.counts.size()) counts.resize(other.counts.size(), 0);
  for (std::size_t l = 0; l < other.counts.size(); ++l) counts[l] += other.counts[l];
  return *this;
}

GateProfile gate_profile(const CoeffVector& a) {
  GateProfile p = empty_profile(a.k());
  for (int l = 0; l <= a.k(); ++l) {
    p.counts[static_cast<std::size_t>(l)] = shifted_res2(a, a.k() - l).weight();
  }
  return p;
}

SegmentResult optimize_segment(const Segment& s, const OptimizeOptions& options) {
  const auto start = Clock::now();
  OptimizeStats stats;
  stats.k = s.k();
  stats.decoder = options.decoder;
  stats.segments = 1;
  stats.t_count_original = t_count(s);
  stats.canonical_profile = empty_profile(s.k());
  stats.optimized_profile = empty_profile(s.k());

  Restricted r = restrict_to_active(s);
  const int m = static_cast<int>(r.active.size());
  stats.n = r.active.size();
  if (m == 0) {
    stats.millis = elapsed_ms(start);
    return {s, stats};
  }
  if (m > kMaxPhaseVars) {
    stats.warnings.push_back("segment touches " + std::to_string(m) + " wires (limit " +
                             std::to_string(kMaxPhaseVars) + "); left unchanged");
    stats.t_count_canonical = stats.t_count_optimized = stats.t_count_original;
    stats.decode_distance = stats.t_count_original;
    stats.millis = elapsed_ms(start);
    return {s, stats};
  }

  const PhaseRep rep = extract(r.segment);
  const BitVector residue = res2(rep.coeffs);
  stats.t_count_canonical = residue.weight();
  stats.canonical_profile = gate_profile(rep.coeffs);

  Decoder decoder = options.decoder;
  if (decoder == Decoder::Majority && m > options.max_majority_vars) {
    stats.warnings.push_back("majority decoding skipped: " + std::to_string(m) +
                             " active wires exceeds " + std::to_string(options.max_majority_vars));
    decoder = Decoder::None;
  } else if (decoder == Decoder::Recursive && m > options.max_recursive_vars) {
    stats.warnings.push_back("recursive decoding skipped: " + std::to_string(m) +
                             " active wires exceeds " + std::to_string(options.max_recursive_vars));
    decoder = Decoder::None;
  }

  const RMCode code{m - s.k() - 2, m, true};
  BitVector codeword = run_decoder(decoder, code, residue, options).codeword;
  if (distance(residue, codeword) > residue.weight()) codeword = BitVector(residue.size());

  const CoeffVector optimized = add(rep.coeffs, lift(codeword, m, s.k()));
  stats.decode_distance = distance(residue, codeword);
  stats.t_count_optimized = optimized.t_count();
  stats.optimized_profile = gate_profile(optimized);

  const Segment synthesized = synthesize({optimized, rep.perm}, r.segment.circuit().wires());
  stats.millis = elapsed_ms(start);
  return {expand_to(synthesized, r.active, s.circuit()), stats};
}

CircuitResult optimize_circuit(const Circuit& c, const OptimizeOptions& options) {
  const auto start = Clock::now();
  auto parts = partition(c);

  std::vector<std::size_t> seg_index;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (std::holds_alternative<Segment>(parts[i])) seg_index.push_back(i);
  }
  std::vector<std::optional<SegmentResult>> results(seg_index.size());
  std::vector<std::exception_ptr> errors(seg_index.size());

  auto work = [&](std::size_t j) {
    try {
      results[j] = optimize_segment(std::get<Segment>(parts[seg_index[j]]), options);
    } catch (...) {
      errors[j] = std::current_exception();
    }
  };

  unsigned threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency())
                                          : options.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, seg_index.size()));
  if (threads <= 1) {
    for (std::size_t j = 0; j < seg_index.size(); ++j) work(j);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t j = next++; j < seg_index.size(); j = next++) work(j);
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  OptimizeStats total;
  total.n = c.n();
  total.k = c.k();
  total.decoder = options.decoder;
  total.canonical_profile = empty_profile(c.k());
  total.optimized_profile = empty_profile(c.k());
  total.t_count_original = t_count(c);
  for (std::size_t j = 0; j < seg_index.size(); ++j) {
    const auto& st = results[j]->stats;
    total.t_count_canonical += st.t_count_canonical;
    total.t_count_optimized += st.t_count_optimized;
    total.decode_distance += st.decode_distance;
    total.canonical_profile += st.canonical_profile;
    total.optimized_profile += st.optimized_profile;
    total.warnings.insert(total.warnings.end(), st.warnings.begin(), st.warnings.end());
    parts[seg_index[j]] = std::move(results[j]->segment);
  }
  total.segments = seg_index.size();

  CircuitResult out{assemble(parts, c.wires(), c.k()), std::move(total)};
  out.stats.millis = elapsed_ms(start);
  return out;
}

namespace {

// Splits at every H: returns the H gates and the (possibly empty) segments
// before, between and after them.
std::pair<std::vector<Gate>, std::vector<Segment>> skeleton(const Circuit& c) {
  std::vector<Gate> hs;
  std::vector<Segment> segs;
  Circuit current(c.wires(), c.k());
  for (const auto& g : c.gates()) {
    if (g.kind == GateKind::H) {
      hs.push_back(g);
      segs.emplace_back(std::move(current));
      current = Circuit(c.wires(), c.k());
    } else {
      current.add(g);
    }
  }
  segs.emplace_back(std::move(current));
  return {std::move(hs), std::move(segs)};
}

}  // namespace

bool verify_equivalent(const Circuit& c1, const Circuit& c2, int max_vars) {
  if (c1.n() != c2.n() || c1.k() != c2.k()) {
    throw DimensionMismatch("circuits differ in wire count or modulus exponent");
  }
  if (static_cast<int>(c1.n()) > max_vars) {
    throw SizeLimitExceeded("exhaustive verification is limited to " + std::to_string(max_vars) +
                            " wires; circuit has " + std::to_string(c1.n()));
  }
  const auto [h1, s1] = skeleton(c1);
  const auto [h2, s2] = skeleton(c2);
  if (h1 != h2) throw Error("circuits have different H skeletons");
  for (std::size_t i = 0; i < s1.size(); ++i) {
    const PhaseRep a = extract(s1[i]);
    const PhaseRep b = extract(s2[i]);
    if (a.perm != b.perm) return false;
    if (phase_table(a.coeffs) != phase_table(b.coeffs)) return false;
  }
  return true;
}

std::size_t brute_force_optimum(const CoeffVector& a) {
  const auto gens = null_phase_generators(a.n(), a.k());
  if (gens.size() > 24) {
    throw SizeLimitExceeded("brute force over 2^" + std::to_string(gens.size()) +
                            " null phase tuples is too large");
  }
  const std::uint32_t mask = a.modulus() - 1;
  std::vector<std::vector<std::uint32_t>> g;
  for (const auto& v : gens) g.push_back(v.values());
  std::vector<std::uint32_t> cur = a.values();

  auto odd = [&] {
    return static_cast<std::size_t>(std::count_if(cur.begin(), cur.end(), [](std::uint32_t v) { return v & 1U; }));
  };
  std::size_t best = odd();
  std::uint64_t included = 0;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << g.size()); ++i) {
    const auto idx = static_cast<std::size_t>(std::countr_zero(i));
    const bool adding = ((included >> idx) & 1U) == 0;
    included ^= std::uint64_t{1} << idx;
    for (std::size_t e = 0; e < cur.size(); ++e) {
      cur[e] = (adding ? cur[e] + g[idx][e] : cur[e] - g[idx][e]) & mask;
    }
    best = std::min(best, odd());
  }
  return best;
}

}  // namespace rmtopt

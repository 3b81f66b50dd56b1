#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rmtopt/circuit.hpp"
#include "rmtopt/phasepoly.hpp"
#include "rmtopt/rm_code.hpp"

namespace rmtopt {

enum class Decoder { Exact, Majority, Recursive, None };

std::string_view decoder_name(Decoder d) noexcept;
std::optional<Decoder> parse_decoder(std::string_view name) noexcept;
// "exact, majority, recursive, none"
std::string valid_decoder_names();

struct OptimizeOptions {
  Decoder decoder = Decoder::Majority;
  std::size_t max_exact_dimension = kDefaultMaxExactDimension;
  // Above these active-wire counts decoding is skipped with a warning.
  int max_majority_vars = 20;
  int max_recursive_vars = 28;
  // Worker threads for independent segments; 0 uses the hardware concurrency.
  unsigned threads = 1;
};

/// Count of R_z(pi / 2^l) gates in the canonical circuit, indexed by l = 0 .. k.
/// For k = 2: l = 0 is Z, l = 1 is P, l = 2 is T.
struct GateProfile {
  std::vector<std::size_t> counts;

  std::size_t at(int l) const { return counts.at(static_cast<std::size_t>(l)); }
  GateProfile& operator+=(const GateProfile& other);
  friend bool operator==(const GateProfile&, const GateProfile&) = default;
};

struct OptimizeStats {
  std::size_t n = 0;  // active wires (segment) or declared wires (circuit)
  int k = 2;
  std::size_t t_count_original = 0;
  std::size_t t_count_canonical = 0;
  std::size_t t_count_optimized = 0;
  Decoder decoder = Decoder::Majority;
  std::size_t decode_distance = 0;
  double millis = 0.0;
  std::size_t segments = 0;
  GateProfile canonical_profile;
  GateProfile optimized_profile;
  std::vector<std::string> warnings;
};

struct SegmentResult {
  Segment segment;
  OptimizeStats stats;
};

struct CircuitResult {
  Circuit circuit;
  OptimizeStats stats;
};

/// Extract, decode the residue in RM(n-k-2, n)*, lift the codeword to a null
/// phase tuple, add it and resynthesize. Only wires the segment touches count
/// towards n. A decoded word farther from the residue than the zero word is
/// replaced by zero, so the T-count never grows.
///
/// Throws SizeLimitExceeded when the exact decoder's code dimension exceeds
/// `options.max_exact_dimension`.
SegmentResult optimize_segment(const Segment& s, const OptimizeOptions& options);
inline SegmentResult optimize_segment(const Segment& s, Decoder decoder) {
  return optimize_segment(s, OptimizeOptions{.decoder = decoder});
}

// Optimizes each H-free segment independently and keeps H gates in place.
CircuitResult optimize_circuit(const Circuit& c, const OptimizeOptions& options);
inline CircuitResult optimize_circuit(const Circuit& c, Decoder decoder) {
  return optimize_circuit(c, OptimizeOptions{.decoder = decoder});
}

// Segment-by-segment comparison of linear permutations and phase functions at
// every input. Both circuits need the same H gates in the same order.
// Throws SizeLimitExceeded above `max_vars` wires and Error on a skeleton mismatch.
bool verify_equivalent(const Circuit& c1, const Circuit& c2, int max_vars = 12);

GateProfile gate_profile(const CoeffVector& a);

// min over null phase tuples c of the T-count of a + c, by enumerating every
// 0/1 combination of null_phase_generators(n, k). Throws SizeLimitExceeded
// beyond 24 generators (n = 4, k = 2 has 17).
std::size_t brute_force_optimum(const CoeffVector& a);

}  // namespace rmtopt

#include "rmtopt/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <string>

#include "rmtopt/error.hpp"
#include "rmtopt/optimizer.hpp"

namespace rmtopt {

namespace {

std::filesystem::path default_output(const std::filesystem::path& input) {
  std::filesystem::path out = input;
  if (out.extension() == ".qc") out.replace_extension();
  out += ".opt.qc";
  return out;
}

unsigned thread_cap() {
  const char* env = std::getenv("RMTOPT_THREADS");
  if (env == nullptr) return 0;
  try {
    const int v = std::stoi(env);
    return v >= 0 ? static_cast<unsigned>(v) : 1U;
  } catch (const std::exception&) {
    return 1;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"T-count optimizer for CNOT + phase circuits via Reed-Muller decoding", "rm-topt"};

  std::string input;
  std::string output;
  std::string decoder_arg = "majority";
  std::optional<int> k_override;
  bool verify = false;
  bool profile = false;
  bool json = false;
  std::size_t max_exact_dim = kDefaultMaxExactDimension;
  std::optional<long long> seed;

  app.add_option("input", input, "Circuit file")->required();
  app.add_option("-o,--output", output, "Output path (default: <input>.opt.qc)");
  app.add_option("--decoder", decoder_arg, "exact | majority | recursive | none");
  app.add_option("--k", k_override, "Override the modulus exponent k");
  app.add_flag("--verify", verify, "Check the result against the input exhaustively (n <= 12)");
  app.add_flag("--profile", profile, "Print rotation counts per granularity");
  app.add_flag("--json", json, "Print statistics as one JSON object");
  app.add_option("--max-exact-dim", max_exact_dim, "Dimension cap for the exact decoder");
  app.add_option("--seed", seed, "Reserved; decoders are deterministic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "rm-topt: " << e.what() << '\n';
    return 1;
  }

  const auto decoder = parse_decoder(decoder_arg);
  if (!decoder) {
    err << "rm-topt: unknown decoder '" << decoder_arg << "' (valid: " << valid_decoder_names()
        << ")\n";
    return 1;
  }
  if (k_override && (*k_override < 0 || *k_override > kMaxModulusExponent)) {
    err << "rm-topt: --k must be in [0, " << kMaxModulusExponent << "]\n";
    return 1;
  }

  OptimizeOptions options;
  options.decoder = *decoder;
  options.max_exact_dimension = max_exact_dim;
  options.threads = thread_cap();

  const std::filesystem::path out_path = output.empty() ? default_output(input) : std::filesystem::path(output);
  CircuitResult result;
  Circuit original;
  std::optional<bool> verified;
  try {
    original = read_circuit_file(input, k_override);
    result = optimize_circuit(original, options);
    write_circuit_file(out_path, result.circuit);
    if (verify) verified = verify_equivalent(original, result.circuit);
  } catch (const Error& e) {
    err << "rm-topt: " << e.what() << '\n';
    return 1;
  }
  for (const auto& w : result.stats.warnings) err << "rm-topt: warning: " << w << '\n';

  const auto& s = result.stats;
  nlohmann::ordered_json j;
  j["n"] = s.n;
  j["k"] = s.k;
  j["decoder"] = std::string(decoder_name(s.decoder));
  j["t_original"] = s.t_count_original;
  j["t_canonical"] = s.t_count_canonical;
  j["t_optimized"] = s.t_count_optimized;
  j["decode_distance"] = s.decode_distance;
  j["millis"] = static_cast<long long>(s.millis);
  if (profile) {
    for (int l = 0; l <= s.k; ++l) {
      j["profile_canonical_l" + std::to_string(l)] = s.canonical_profile.at(l);
    }
    for (int l = 0; l <= s.k; ++l) {
      j["profile_optimized_l" + std::to_string(l)] = s.optimized_profile.at(l);
    }
  }
  if (verified) j["verified"] = *verified;

  if (json) {
    out << j.dump() << '\n';
  } else {
    for (const auto& [key, value] : j.items()) {
      out << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }

  if (verified && !*verified) {
    err << "rm-topt: verification failed: output is not equivalent to the input\n";
    return 2;
  }
  return 0;
}

}  // namespace rmtopt

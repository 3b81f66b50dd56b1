#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "rmtopt/cli.hpp"
#include "rmtopt/circuit.hpp"
#include "support.hpp"

using namespace rmtopt;
namespace fs = std::filesystem;
namespace t = rmtopt::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "rm-topt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / "rmtopt_cli_tests";
  fs::create_directories(dir);
  return dir;
}

fs::path copy_input(const std::string& name) {
  const auto dest = scratch_dir() / name;
  fs::copy_file(t::data_path(name), dest, fs::copy_options::overwrite_existing);
  return dest;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string without_millis(const std::string& stats) {
  std::istringstream in(stats);
  std::string line;
  std::string kept;
  while (std::getline(in, line)) {
    if (line.rfind("millis=", 0) != 0) kept += line + "\n";
  }
  return kept;
}

}  // namespace

TEST_CASE("two-Toffoli file with exact decoding and verification") {
  const auto input = copy_input("two_toffoli.qc");
  const auto output = scratch_dir() / "two_toffoli.exact.qc";
  const auto r = run({input.string(), "-o", output.string(), "--decoder", "exact", "--verify"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out.find("t_original=14\n") != std::string::npos);
  CHECK(r.out.find("t_optimized=7\n") != std::string::npos);
  CHECK(r.out.find("decoder=exact\n") != std::string::npos);
  CHECK(r.out.find("verified=true\n") != std::string::npos);
  const auto written = read_circuit_file(output);
  CHECK(t_count(written) == 7);
  CHECK(written.wires() == read_circuit_file(input).wires());
}

TEST_CASE("default output path") {
  const auto input = copy_input("ccz.qc");
  fs::remove(scratch_dir() / "ccz.opt.qc");
  const auto r = run({input.string()});
  CHECK(r.code == 0);
  CHECK(fs::exists(scratch_dir() / "ccz.opt.qc"));
  CHECK(r.out.find("decoder=majority\n") != std::string::npos);
}

TEST_CASE("empty circuit") {
  const auto input = copy_input("empty.qc");
  const auto output = scratch_dir() / "empty.out.qc";
  const auto r = run({input.string(), "-o", output.string(), "--verify"});
  CHECK(r.code == 0);
  CHECK(r.out.find("t_optimized=0\n") != std::string::npos);
  CHECK(read_circuit_file(output) == read_circuit_file(input));
}

TEST_CASE("bad decoder name") {
  const auto input = copy_input("ccz.qc");
  const auto r = run({input.string(), "--decoder", "bogus"});
  CHECK(r.code == 1);
  CHECK(r.err.find("exact, majority, recursive, none") != std::string::npos);
}

TEST_CASE("missing and malformed input") {
  CHECK(run({}).code == 1);
  const auto missing = run({(scratch_dir() / "does_not_exist.qc").string()});
  CHECK(missing.code == 1);
  CHECK_FALSE(missing.err.empty());

  const auto bad = scratch_dir() / "bad.qc";
  std::ofstream(bad) << ".v a\nBEGIN\ntof a\nEND\n";
  const auto r = run({bad.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("line 3") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("--decoder") != std::string::npos);
}

TEST_CASE("runs are deterministic") {
  const auto input = copy_input("two_toffoli.qc");
  const auto out1 = scratch_dir() / "det1.qc";
  const auto out2 = scratch_dir() / "det2.qc";
  const auto a = run({input.string(), "-o", out1.string(), "--decoder", "recursive", "--seed", "1"});
  const auto b = run({input.string(), "-o", out2.string(), "--decoder", "recursive", "--seed", "2"});
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(slurp(out1) == slurp(out2));
  CHECK(without_millis(a.out) == without_millis(b.out));
}

TEST_CASE("json and profile output") {
  const auto input = copy_input("two_toffoli.qc");
  const auto output = scratch_dir() / "two_toffoli.json.qc";
  const auto r = run({input.string(), "-o", output.string(), "--decoder", "exact", "--json", "--profile"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 4);
  CHECK(j["k"] == 2);
  CHECK(j["t_original"] == 14);
  CHECK(j["t_canonical"] == 8);
  CHECK(j["t_optimized"] == 7);
  CHECK(j["profile_canonical_l2"] == 8);
  CHECK(j["profile_canonical_l1"] == 8);
  CHECK(j["profile_canonical_l0"] == 6);
  CHECK(j["profile_optimized_l2"] == 7);
  CHECK(j.contains("millis"));
  CHECK_FALSE(j.contains("verified"));
}

TEST_CASE("k override") {
  const auto input = copy_input("ccz.qc");
  const auto output = scratch_dir() / "ccz.k3.qc";
  const auto r = run({input.string(), "-o", output.string(), "--k", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("k=3\n") != std::string::npos);
  CHECK(read_circuit_file(output).k() == 3);
  CHECK(run({input.string(), "--k", "31"}).code == 1);
}

// ternions: enumerate, verify and inspect the point model of free cyclic
// submodules of T^2 over a finite field.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ternions/commands.hpp"

namespace {

// "-" reads stdin, "@path" reads a file, anything else is literal JSON.
std::string read_argument(const std::string& arg) {
  if (arg == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw ternions::UsageError("cannot read " + arg.substr(1));
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  return arg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point model of free cyclic submodules over the ternions"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string field = "p:2";
  std::string format = "json";
  unsigned workers = 1;
  std::uint64_t seed = 1;
  std::uint64_t max_candidates = 10'000'000;
  app.add_option("--field", field, "p:<prime> or rational")->capture_default_str();
  app.add_option("--format", format, "json, csv or text")->capture_default_str();
  app.add_option("--workers", workers, "worker threads for exhaustive scans")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for sampled checks")->capture_default_str();
  app.add_option("--max-candidates", max_candidates, "refuse larger finite scans")
      ->capture_default_str();

  std::string object, suite, payload;
  auto* enumerate = app.add_subcommand("enumerate", "list a point set");
  enumerate
      ->add_option("object", object,
                   "variety|x-image|y-image|segre|cubic|tube|dual-surface|planes|submodules")
      ->required();
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify
      ->add_option("suite", suite,
                   "theorem|lemma1|smooth|unimodular|invertibility|roundtrip|substructures|"
                   "counts|all")
      ->required();
  auto* classify = app.add_subcommand("classify", "classify a pair (JSON, @file or - for stdin)");
  classify->add_option("pair", payload, "{\"A\": {...}, \"B\": {...}}")->required();
  auto* plucker = app.add_subcommand("plucker", "Plücker vector of a 3x6 matrix");
  plucker->add_option("matrix", payload, "[[6 scalars] x 3]")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ternions::exit_code::kUsage;
  }

  ternions::CommandResult result;
  try {
    ternions::RunConfig config;
    config.field = ternions::FieldSpec::parse(field);
    config.format = ternions::parse_format(format);
    config.workers = workers;
    config.seed = seed;
    config.max_candidates = max_candidates;

    if (*enumerate) {
      result = ternions::cmd_enumerate(config, object);
    } else if (*verify) {
      result = ternions::cmd_verify(config, suite);
    } else if (*classify) {
      result = ternions::cmd_classify(config, read_argument(payload));
    } else {
      result = ternions::cmd_plucker(config, read_argument(payload));
    }
  } catch (const ternions::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ternions::exit_code::kUsage;
  }
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}

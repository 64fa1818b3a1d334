#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "suites.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cdv::cli::UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification driver emitting JSON reports"};
  app.require_subcommand(1);
  CLI::App* run = app.add_subcommand("run", "Run verification suites");
  CLI::App* list = app.add_subcommand("list", "List suite names");

  std::string suite_pos, suite_flag, out_path, curve_path, branch, m, g, scale_a1;
  std::uint64_t seed = cdv::cli::kDefaultSeed;
  std::size_t triples = 20;
  bool timings = false;
  run->add_option("name", suite_pos, "clifford, instanton, repsl2, theta, parity, nr, odd or all");
  run->add_option("--suite", suite_flag, "Same as the positional suite");
  run->add_option("--seed", seed, "Seed for randomized inputs")->capture_default_str();
  run->add_option("--out", out_path, "Write JSON here instead of stdout");
  run->add_option("--curve", curve_path, "Curve fixture: genus, then ascending coefficients of f");
  run->add_option("--branch", branch, "Six distinct rational branch values for nr");
  run->add_option("--m", m, "Odd degrees for repsl2");
  run->add_option("--g", g, "Genera for theta and parity");
  run->add_option("--triples", triples, "Random triples for odd")->capture_default_str();
  run->add_option("--scale-a1", scale_a1, "Multiply the dx1 component of the instanton connection (negative control)");
  run->add_flag("--timings", timings, "Include wall times (output is then not reproducible)");

  CLI11_PARSE(app, argc, argv);

  if (list->parsed()) {
    for (const auto& n : cdv::cli::suite_names()) std::cout << n << "\n";
    return 0;
  }

  try {
    if (!suite_pos.empty() && !suite_flag.empty() && suite_pos != suite_flag)
      throw cdv::cli::UsageError("conflicting suite names");
    std::string suite = suite_pos.empty() ? suite_flag : suite_pos;
    if (suite.empty()) suite = "all";
    cdv::cli::Options opt;
    opt.seed = seed;
    opt.triples = triples;
    if (!curve_path.empty()) opt.curve = cdv::cli::parse_curve(read_file(curve_path));
    if (!branch.empty()) {
      opt.branch = cdv::cli::parse_rational_csv(branch);
      if (opt.branch.size() != 6) throw cdv::cli::UsageError("--branch needs six values");
    }
    if (!m.empty()) opt.m = cdv::cli::parse_int_csv(m);
    for (int v : opt.m)
      if (v < 1 || v % 2 == 0) throw cdv::cli::UsageError("--m values must be odd and positive");
    if (!g.empty()) opt.g = cdv::cli::parse_int_csv(g);
    for (int v : opt.g)
      if (v < 1 || v > 12) throw cdv::cli::UsageError("--g values must lie in 1..12");
    if (!scale_a1.empty()) opt.scale_a1 = cdv::cli::parse_rational_csv(scale_a1).at(0);

    auto reports = cdv::cli::run_suites(cdv::cli::expand_suite(suite), opt);
    std::string json = cdv::cli::to_json(reports, opt, timings);
    if (out_path.empty()) {
      std::cout << json;
    } else {
      std::ofstream out(out_path);
      if (!out) throw cdv::cli::UsageError("cannot write " + out_path);
      out << json;
    }
    return cdv::cli::all_passed(reports) ? 0 : 1;
  } catch (const cdv::cli::UsageError& e) {
    std::cerr << "cdv: " << e.what() << "\n";
    return 2;
  }
}

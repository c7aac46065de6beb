#include "fibo/fibtiles.hpp"
#include "fibo/stirling.hpp"
#include "fibo/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

using namespace fibo;

int cmd_table(const std::string& family_name_arg, int max_n, const std::string& format) {
  auto family = parse_family(family_name_arg);
  if (!family) {
    std::cerr << "unknown family: " << family_name_arg
              << " (expected SF, SFbar, cF or cFbar)\n";
    return 2;
  }
  Triangle t(*family, max_n);
  if (format == "json") {
    std::cout << triangle_to_json(t).dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << triangle_to_csv(t);
  } else {
    for (int n = 1; n <= max_n; ++n) {
      for (int k = 1; k <= n; ++k) {
        if (k > 1) std::cout << "  ";
        std::cout << t.at(n, k).to_compact_string();
      }
      std::cout << '\n';
    }
  }
  return 0;
}

int cmd_rank(int n, const std::string& seq) {
  LevelSeq levels = parse_levels(seq);
  Tiling t = from_levels(levels);
  std::cout << tiling_rank(n, t) << '\n';
  return 0;
}

int cmd_unrank(int n, long long m) {
  Tiling t = unrank(n, m);
  std::cout << levels_to_string(to_levels(t)) << '\n';
  return 0;
}

int cmd_zeck(long long m) {
  if (m < 1) throw std::invalid_argument("zeck: m must be positive");
  auto indices = zeckendorf(m);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) std::cout << ' ';
    std::cout << indices[i];
  }
  std::cout << '\n';
  return 0;
}

int cmd_verify(const std::string& suite, const VerifyBounds& bounds, bool trace) {
  std::vector<CheckResult> results = run_suite(suite, bounds);
  int failures = 0;
  for (const CheckResult& r : results) {
    switch (r.status) {
      case CheckStatus::Pass:
        std::cout << "PASS " << r.name;
        if (trace && !r.detail.empty()) std::cout << ": " << r.detail;
        std::cout << '\n';
        break;
      case CheckStatus::Inapplicable:
        std::cout << "SKIP " << r.name << '\n';
        break;
      case CheckStatus::Fail:
        ++failures;
        std::cout << "FAIL " << r.name;
        if (trace && !r.detail.empty()) std::cout << ": " << r.detail;
        std::cout << '\n';
        break;
    }
  }
  std::cout << results.size() << " checks, " << failures << " failures\n";
  return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fibonacci-Stirling q-analogues: tables, tiling codecs and "
               "identity verification"};
  app.require_subcommand(1);

  std::string family = "SFbar";
  int max_n = 10;
  std::string format = "text";
  auto* table = app.add_subcommand("table", "Print one of the four triangles");
  table->add_option("family", family, "SF, SFbar, cF or cFbar")->required();
  table->add_option("max_n", max_n, "largest row");
  table->add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  int rank_n = 0;
  std::string rank_seq;
  auto* rank_cmd = app.add_subcommand("rank", "Rank of a tiling given its level sequence");
  rank_cmd->add_option("n", rank_n, "tiling height")->required();
  rank_cmd->add_option("seq", rank_seq, "level sequence, e.g. (1,0,2,1)")->required();

  int unrank_n = 0;
  long long unrank_m = 0;
  auto* unrank_cmd = app.add_subcommand("unrank", "Tiling of height n with rank m");
  unrank_cmd->add_option("n", unrank_n, "tiling height")->required();
  unrank_cmd->add_option("m", unrank_m, "rank, 0 <= m < F_n")->required();

  long long zeck_m = 0;
  auto* zeck_cmd = app.add_subcommand("zeck", "Zeckendorf indices of a positive integer");
  zeck_cmd->add_option("m", zeck_m, "positive integer")->required();

  std::string suite;
  VerifyBounds bounds;
  bool trace = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd
      ->add_option("suite", suite,
                   "files, rooks, mixed, connection, identities, gf, coeffs, "
                   "inverse or all")
      ->required()
      ->check(CLI::IsMember({"files", "rooks", "mixed", "connection", "identities",
                             "gf", "coeffs", "inverse", "all"}));
  verify_cmd->add_option("--max-n", bounds.max_n, "triangle/connection bound")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-x", bounds.max_x, "largest integer x substituted")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--series-order", bounds.series_order, "truncation order in t")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--trace", trace, "dump witnesses for failures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2; // usage errors exit 2
  }

  try {
    if (table->parsed()) return cmd_table(family, max_n, format);
    if (rank_cmd->parsed()) return cmd_rank(rank_n, rank_seq);
    if (unrank_cmd->parsed()) return cmd_unrank(unrank_n, unrank_m);
    if (zeck_cmd->parsed()) return cmd_zeck(zeck_m);
    if (verify_cmd->parsed()) return cmd_verify(suite, bounds, trace);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

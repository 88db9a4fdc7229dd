// Acceptance runner: one PASS/FAIL line per criterion, exit 1 on any FAIL.
#include <iostream>

#include "CLI11.hpp"
#include "eigenstrata/suite.hpp"

int main(int argc, char** argv) {
  CLI::App app{"eigenstrata acceptance suite"};
  eigenstrata::SuiteOptions opt;
  bool quiet = false;
  app.add_option("--seed", opt.seed, "master seed");
  app.add_option("--threads", opt.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--data-dir", opt.data_dir, "directory holding golden/");
  app.add_option("--criteria", opt.criteria, "criterion ids (default: all)")
      ->delimiter(',')
      ->check(CLI::Range(1, eigenstrata::kCriterionCount));
  app.add_flag("-q,--quiet", quiet, "no progress on stderr");
  CLI11_PARSE(app, argc, argv);

  try {
    const auto report = eigenstrata::run_suite(opt, quiet ? nullptr : &std::cerr);
    std::cout << report.text();
    return report.ok() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

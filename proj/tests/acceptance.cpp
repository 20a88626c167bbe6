// Acceptance gates: one PASS/FAIL line per criterion, each with a wall-clock limit.
// Usage: abcover_acceptance [--only N] [--verbose]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "abcover/verify.hpp"

using namespace abcover::verify;

namespace {

struct Criterion {
  int number;
  const char* title;
  double limit_s;
  std::vector<std::pair<std::string, Bounds>> suites;
};

Bounds bounds(int d, int n_max, int m_max) {
  Bounds b;
  b.d = d;
  b.n_max = n_max;
  b.m_max = m_max;
  return b;
}

std::vector<Criterion> criteria() {
  return {
      {1, "group-ring membership oracles agree, graded products match", 60, {{"oracle", bounds(4, 6, 7)}}},
      {2, "graded ring structure and Omega images", 30, {{"graded-ring", bounds(6, 6, 7)}}},
      {3, "Euler characteristic of the constrained complex", 60, {{"chi", bounds(4, 8, 7)}}},
      {4, "tautness catalogue and properties", 90, {{"tautness", bounds(4, 8, 7)}}},
      {5, "cokernel predictions", 10, {{"predictor", bounds(4, 8, 7)}}},
      {6, "high-order witnesses and the phi invariant", 60, {{"witness", bounds(5, 8, 7)}}},
      {7, "Moebius parity", 30, {{"mobparity", bounds(4, 8, 9)}}},
      {8, "ladder linking-matrix rank and cover dimensions", 10, {{"lambda-rank", bounds(3, 8, 8)}}},
      {9, "coloring enumeration", 60, {{"enumeration", bounds(3, 6, 7)}}},
      {10, "circuit constructions and wye-delta", 30, {{"constructions", bounds(3, 6, 7)}}},
  };
}

bool run(const Criterion& c, bool verbose) {
  const auto start = std::chrono::steady_clock::now();
  std::size_t total = 0, failed = 0;
  std::vector<std::string> failures;
  for (const auto& [name, b] : c.suites) {
    SuiteReport r;
    try {
      r = run_suite(name, b);
    } catch (const std::exception& e) {
      r.add(name + "/suite", false, e.what());
    }
    total += r.checks.size();
    for (const auto& ch : r.checks) {
      if (!ch.pass) {
        ++failed;
        failures.push_back(name + "/" + ch.id + ": " + ch.detail);
      } else if (verbose) {
        std::printf("    ok   %s/%s %s\n", name.c_str(), ch.id.c_str(), ch.detail.c_str());
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs <= c.limit_s;
  const bool pass = failed == 0 && total > 0 && in_time;
  std::printf("%s criterion %d: %s [%zu/%zu checks] (%.2fs / %.0fs)\n", pass ? "PASS" : "FAIL", c.number, c.title,
              total - failed, total, secs, c.limit_s);
  for (const auto& f : failures) std::printf("    fail %s\n", f.c_str());
  if (!in_time) std::printf("    fail time limit exceeded\n");
  std::fflush(stdout);
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--only") && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (!std::strcmp(argv[i], "--verbose")) {
      verbose = true;
    } else {
      std::fprintf(stderr, "usage: %s [--only N] [--verbose]\n", argv[0]);
      return 2;
    }
  }
  const auto all = criteria();
  if (only < 0 || only > static_cast<int>(all.size())) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  int failures = 0;
  for (const auto& c : all)
    if (only == 0 || c.number == only) failures += !run(c, verbose);
  if (only == 0) std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failures, all.size());
  return failures == 0 ? 0 : 1;
}

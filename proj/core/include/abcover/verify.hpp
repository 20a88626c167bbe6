#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace abcover::verify {

struct Check {
  std::string id;
  bool pass = false;
  std::string detail;  // counterexample or measured value
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;
  std::size_t failures() const;
  void add(std::string id, bool pass, std::string detail = {});
  std::string to_json(int indent = -1) const;
};

// Size bounds shared by all suites; each suite reads the fields it needs.
struct Bounds {
  int d = 4;        // largest rank
  int n_max = 6;    // rungs / ladder size
  int m_max = 7;    // circuit length, rung count or Möbius parity size
  std::string family;
  std::uint64_t seed = 1;
  int samples = 200;
};

std::vector<std::string> suite_names();
// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& name, const Bounds& bounds);

SuiteReport graded_ring(const Bounds& b);
SuiteReport oracle(const Bounds& b);
SuiteReport chi(const Bounds& b);
SuiteReport tautness(const Bounds& b);
SuiteReport predictor(const Bounds& b);
SuiteReport witness(const Bounds& b);
SuiteReport mobparity(const Bounds& b);
SuiteReport lambda_rank(const Bounds& b);
SuiteReport enumeration(const Bounds& b);
SuiteReport constructions(const Bounds& b);
// Exploratory: counts taut ladder colorings; not part of the acceptance gates.
SuiteReport mobius_census(const Bounds& b);

}  // namespace abcover::verify

// Executable property checks: the numbered acceptance criteria and a
// datum-generic property suite, both cross-checking the engine against the
// oracle. Results are deterministic for a given seed; timings are reported
// separately so the main report stays byte-identical between runs.

#ifndef IWAHORI_VERIFY_HPP_
#define IWAHORI_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "iwahori/group.hpp"

namespace iwahori::verify {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;  // first few only
  std::size_t failure_count = 0;
  double seconds = 0;
};

struct Criterion {
  int number;
  std::string name;
  std::function<CheckResult()> run;
};

std::vector<Criterion> acceptance_criteria();

// The individual criteria, also reachable through acceptance_criteria().
CheckResult semidirect_splitting();
CheckResult quasi_coxeter_structure();
CheckResult exact_sequence();
CheckResult length_equivalence();
CheckResult double_coset_canonical_form();
CheckResult double_coset_partition_count();
CheckResult descent_bijectivity();
CheckResult torsion_quotient();
CheckResult oracle_faithfulness();

// Every property check applicable to one datum, on the ball of radius max_len.
std::vector<CheckResult> property_suite(const IwahoriWeylGroup& g, int max_len,
                                        std::uint64_t seed);

// Data used by `verify` when no datum is given.
std::vector<GroupDatum> default_data();

// "PASS name checked=N" plus up to three failure lines each.
void print_result(std::ostream& out, const std::string& label, const CheckResult& r);

}  // namespace iwahori::verify

#endif  // IWAHORI_VERIFY_HPP_

#ifndef INCTREE_CLI_HPP
#define INCTREE_CLI_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace inctree {

/// One verification outcome.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyBounds {
  std::size_t max_n = 6;   // tree sizes and sequence lengths
  std::size_t max_m = 5;   // label counts for bucket schemes and bijections
  std::size_t cutoff = 50; // lattice-sum cutoff
};

/// suite in {hook, bijection, closed-forms, invariants, all}.
/// Throws std::invalid_argument for an unknown suite.
std::vector<Check> run_suite(const std::string& suite, const VerifyBounds& bounds);

/// Entry point behind the inctree executable. args excludes the program
/// name. Returns 0 when everything succeeded, 1 when a check failed, 2 on
/// usage errors, unknown families and capacity errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace inctree

#endif  // INCTREE_CLI_HPP

// Release gate: runs the ten numbered checks and prints one line per check.
// Exit 0 when every check passes within its time budget, 1 otherwise.

#include "gradres/criteria.hpp"

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  std::uint64_t seed = 20260813;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::cerr << "usage: " << argv[0] << " [--seed N]\n";
      return 2;
    }
  }
  try {
    const auto results = gradres::run_criteria(gradres::all_criterion_ids(), seed);
    const bool ok = gradres::print_criteria(std::cout, results);
    std::cout << (ok ? "acceptance: all criteria pass" : "acceptance: FAIL") << "\n";
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "acceptance: aborted: " << e.what() << "\n";
    return 1;
  }
}

#include <iostream>

#include "g2/acceptance.hpp"

int main() {
  bool ok = true;
  for (const auto& r : g2::run_acceptance()) {
    std::cout << g2::render(r) << std::flush;
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

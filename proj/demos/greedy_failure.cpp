// The smallest greedy failure worth staring at: seven powers of two where the
// increasing-order colouring paints itself into a corner at 2^27, plus the
// twelve-entry certificate pulled out of the wreck.

#include <iostream>

#include "schurlab/greedy.hpp"

int main() {
  using namespace schurlab;
  auto p2 = [](int e) { return uint64_t{1} << e; };
  auto s = IntegerSet::from_elements(
      p2(27), {p2(5), p2(6), p2(7), p2(9), p2(11), p2(16), p2(27)});

  auto out = greedy_two_colour(s);
  std::cout << "greedy " << (out.success ? "succeeded" : "failed") << "\n";
  if (out.success) return 0;

  std::cout << "stuck at " << *out.failed_element << "\n";
  auto cfg = extract_forbidden_configuration(out, s);
  const auto names = ForbiddenConfiguration::entry_names();
  const auto values = cfg.as_array();
  for (size_t i = 0; i < values.size(); ++i)
    std::cout << names[i] << " = " << values[i] << "\n";
  std::cout << "effective size: " << effective_size(cfg) << "\n";
  std::cout << "valid certificate: "
            << (check_forbidden_configuration(cfg, s).valid ? "yes" : "no") << "\n";
  return 0;
}

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "bsweep/simulator.hpp"

namespace bsweep {

double tour_oracle(std::span<const Segment> segments) {
  const std::size_t n = segments.size();
  if (n == 0) throw std::invalid_argument("tour_oracle: no segments");
  if (n > kTourOracleLimit) {
    throw std::invalid_argument("tour_oracle: " + std::to_string(n) + " segments exceed the limit of " +
                                std::to_string(kTourOracleLimit));
  }
  double traversed = 0.0;
  for (const auto& s : segments) traversed += s.length();

  // Segment 0 leads every order; rotations of a closed tour are equivalent.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      auto entry = [&](std::size_t k) {
        const Segment& s = segments[order[k]];
        return (mask >> k) & 1u ? s.b : s.a;
      };
      auto exit = [&](std::size_t k) {
        const Segment& s = segments[order[k]];
        return (mask >> k) & 1u ? s.a : s.b;
      };
      double links = 0.0;
      for (std::size_t k = 0; k < n; ++k) links += distance(exit(k), entry((k + 1) % n));
      best = std::min(best, links);
    }
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return traversed + best;
}

}  // namespace bsweep

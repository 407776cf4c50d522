#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "reorient/rational.hpp"

namespace reorient::detail {

/// "Any completion of the current choice must add at least `deficit` of `candidates`."
struct Certificate {
  std::vector<int> candidates;
  int deficit = 1;
};

/// Fills `out` with certificates for the chosen element set; empty output means feasible.
/// Candidates must exclude already chosen elements.
using CertificateOracle = std::function<void(const std::vector<char>& chosen, std::vector<Certificate>& out)>;

struct HittingProblem {
  int num_elements = 0;
  std::optional<std::vector<Rational>> weights;  ///< unit weights when absent
  std::vector<char> required;                    ///< forced into every solution (may be empty)
  std::vector<char> forbidden;                   ///< never chosen (may be empty)
  CertificateOracle oracle;
  std::int64_t node_limit = 0;
  /// Only solutions of cost at most `budget` are searched; none found reads as infeasible.
  std::optional<Rational> budget;
};

struct HittingResult {
  bool feasible = false;
  std::vector<int> chosen;  ///< sorted element indices, required ones included
  Rational cost = 0;
  std::int64_t nodes = 0;
};

/// Branch and bound over element sets. Branching follows the smallest certificate
/// (include its i-th candidate, exclude the earlier ones); bounds come from packings of
/// candidate-disjoint certificates. Unit weights use iterative deepening so the first
/// solution found is a minimum one. Throws SizeError past `node_limit`.
HittingResult solve_hitting(const HittingProblem& problem);

}  // namespace reorient::detail

#pragma once

#include <array>
#include <stdexcept>
#include <vector>

namespace reorient {

struct Literal {
  int var = 0;
  bool negated = false;

  bool operator==(const Literal&) const = default;
};

/// CNF instance whose clauses hold two or three literals.
struct SatInstance {
  int num_vars = 0;
  std::vector<std::vector<Literal>> clauses;

  /// Occurrences of each variable as {positive, negated}.
  std::vector<std::array<int, 2>> occurrences() const;

  /// Every variable occurs exactly twice positively and once negated.
  bool has_s3b_shape() const;

  int satisfied_count(const std::vector<bool>& assignment) const;

  /// Throws std::invalid_argument on bad variable ids or clause sizes.
  void validate() const;

  bool operator==(const SatInstance&) const = default;
};

bool literal_true(const Literal& l, const std::vector<bool>& assignment);

}  // namespace reorient

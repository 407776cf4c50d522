#include "reorient/sat.hpp"

#include <string>

namespace reorient {

bool literal_true(const Literal& l, const std::vector<bool>& assignment) {
  return assignment.at(static_cast<std::size_t>(l.var)) != l.negated;
}

std::vector<std::array<int, 2>> SatInstance::occurrences() const {
  std::vector<std::array<int, 2>> count(static_cast<std::size_t>(num_vars), {0, 0});
  for (const auto& clause : clauses) {
    for (const auto& l : clause) ++count.at(static_cast<std::size_t>(l.var))[l.negated ? 1 : 0];
  }
  return count;
}

bool SatInstance::has_s3b_shape() const {
  for (const auto& c : occurrences()) {
    if (c[0] != 2 || c[1] != 1) return false;
  }
  return true;
}

int SatInstance::satisfied_count(const std::vector<bool>& assignment) const {
  int satisfied = 0;
  for (const auto& clause : clauses) {
    for (const auto& l : clause) {
      if (literal_true(l, assignment)) {
        ++satisfied;
        break;
      }
    }
  }
  return satisfied;
}

void SatInstance::validate() const {
  if (num_vars < 0) throw std::invalid_argument("negative variable count");
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    const auto size = clauses[i].size();
    if (size < 1 || size > 3) {
      throw std::invalid_argument("clause " + std::to_string(i) + " must have one to three literals");
    }
    for (const auto& l : clauses[i]) {
      if (l.var < 0 || l.var >= num_vars) {
        throw std::invalid_argument("clause " + std::to_string(i) + " uses unknown variable " + std::to_string(l.var));
      }
    }
  }
}

}  // namespace reorient

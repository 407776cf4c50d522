#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "reorient/rational.hpp"

namespace reorient::detail {

/// Independence queries relative to a current independent set I.
class ExchangeOracle {
 public:
  virtual ~ExchangeOracle() = default;
  /// Make `current` the set I; it must be independent.
  virtual void reset(const std::vector<int>& current) = 0;
  /// I + x independent (x not in I).
  virtual bool can_add(int x) = 0;
  /// I - y + x independent (y in I, x not in I).
  virtual bool can_exchange(int y, int x) = 0;
};

/// Union of k graphic matroids on a fixed edge list: a set is independent when it splits
/// into k forests. Maintained by the matroid partition augmenting-path algorithm.
class ForestUnionOracle final : public ExchangeOracle {
 public:
  ForestUnionOracle(int num_vertices, int k, std::vector<std::pair<int, int>> ends);

  void reset(const std::vector<int>& current) override;
  bool can_add(int x) override;
  bool can_exchange(int y, int x) override;

  /// Add x, rearranging the forests as needed. Returns false (and changes nothing) when
  /// I + x is dependent.
  bool insert(int x);
  int forest_of(int element) const { return forest_[element]; }

 private:
  /// Breadth-first search for an augmenting path; returns the element that reached a
  /// forest without closing a cycle, together with that forest.
  std::optional<std::pair<int, int>> search(int x, std::vector<int>& parent) const;
  /// Elements of forest f on the u-v path, or empty with `connected` false.
  std::vector<int> forest_path(int f, int u, int v, bool& connected) const;

  int n_;
  int k_;
  std::vector<std::pair<int, int>> ends_;
  std::vector<int> forest_;  ///< -1 when outside I
};

/// At most cap[g] chosen elements in each group g.
class PartitionOracle final : public ExchangeOracle {
 public:
  PartitionOracle(std::vector<int> group_of, std::vector<int> capacity);

  void reset(const std::vector<int>& current) override;
  bool can_add(int x) override;
  bool can_exchange(int y, int x) override;

 private:
  std::vector<int> group_;
  std::vector<int> cap_;
  std::vector<int> used_;
};

/// Minimum-weight common independent set of size exactly `size`, grown by shortest
/// augmenting paths in the exchange graph. nullopt when no common independent set is that large.
std::optional<std::vector<int>> min_weight_common_independent(int ground_size, const std::vector<Rational>& weights,
                                                               ExchangeOracle& m1, ExchangeOracle& m2, int size);

}  // namespace reorient::detail

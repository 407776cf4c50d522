#include "reorient/detail/search.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "reorient/graph.hpp"

namespace reorient::detail {

namespace {

class Engine {
 public:
  explicit Engine(const HittingProblem& p)
      : p_(p),
        m_(p.num_elements),
        chosen_(static_cast<std::size_t>(p.num_elements), 0),
        forbidden_(static_cast<std::size_t>(p.num_elements), 0),
        used_(static_cast<std::size_t>(p.num_elements), 0) {
    if (!p.required.empty()) chosen_ = p.required;
    if (!p.forbidden.empty()) forbidden_ = p.forbidden;
    chosen_.resize(static_cast<std::size_t>(m_), 0);
    forbidden_.resize(static_cast<std::size_t>(m_), 0);
    for (int i = 0; i < m_; ++i) {
      if (chosen_[i] && forbidden_[i]) conflict_ = true;
    }
  }

  HittingResult run() {
    HittingResult result;
    if (conflict_) return result;
    Rational base = 0;
    int free_count = 0;
    for (int i = 0; i < m_; ++i) {
      if (chosen_[i]) base += weight(i);
      if (!chosen_[i] && !forbidden_[i]) ++free_count;
    }
    if (!p_.weights) {
      // Iterative deepening on the number of extra elements.
      int cap = free_count;
      if (p_.budget) {
        const Rational slack = *p_.budget - base;
        if (slack < 0) return finish(result);
        cap = std::min<int>(cap, static_cast<int>(slack.numerator() / slack.denominator()));
      }
      for (int depth = 0; depth <= cap; ++depth) {
        if (depth_search(depth)) {
          result.feasible = true;
          result.chosen = members(chosen_);
          result.cost = base + depth_used_;
          return finish(result);
        }
        if (root_dead_) break;
      }
      return finish(result);
    }
    has_best_ = false;
    weighted_search(base);
    if (has_best_) {
      result.feasible = true;
      result.chosen = members(best_);
      result.cost = best_cost_;
    }
    return finish(result);
  }

 private:
  Rational weight(int i) const { return p_.weights ? (*p_.weights)[i] : Rational(1); }

  static std::vector<int> members(const std::vector<char>& mask) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(mask.size()); ++i) {
      if (mask[i]) out.push_back(i);
    }
    return out;
  }

  HittingResult& finish(HittingResult& r) const {
    r.nodes = nodes_;
    return r;
  }

  void count_node() {
    if (++nodes_ > p_.node_limit && p_.node_limit > 0) {
      throw SizeError("exact search exceeded its node limit of " + std::to_string(p_.node_limit));
    }
  }

  // Returns false when some certificate can no longer be met.
  bool gather(std::vector<Certificate>& certs) {
    certs.clear();
    p_.oracle(chosen_, certs);
    for (auto& c : certs) {
      auto& cand = c.candidates;
      cand.erase(std::remove_if(cand.begin(), cand.end(), [&](int e) { return forbidden_[e] != 0; }), cand.end());
      std::sort(cand.begin(), cand.end());
      cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
      if (static_cast<int>(cand.size()) < c.deficit) return false;
    }
    return true;
  }

  // Greedy packing of certificates with pairwise disjoint candidate sets.
  Rational lower_bound(const std::vector<Certificate>& certs) {
    std::vector<int> order(certs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return certs[a].candidates.size() < certs[b].candidates.size();
    });
    Rational bound = 0;
    std::vector<int> touched;
    for (int idx : order) {
      const auto& c = certs[idx];
      if (std::any_of(c.candidates.begin(), c.candidates.end(), [&](int e) { return used_[e] != 0; })) continue;
      for (int e : c.candidates) {
        used_[e] = 1;
        touched.push_back(e);
      }
      if (!p_.weights) {
        bound += c.deficit;
      } else {
        std::vector<Rational> ws;
        for (int e : c.candidates) ws.push_back(weight(e));
        std::sort(ws.begin(), ws.end());
        for (int i = 0; i < c.deficit; ++i) bound += ws[i];
      }
    }
    for (int e : touched) used_[e] = 0;
    return bound;
  }

  static const Certificate& branching_certificate(const std::vector<Certificate>& certs) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < certs.size(); ++i) {
      if (certs[i].candidates.size() < certs[best].candidates.size()) best = i;
    }
    return certs[best];
  }

  bool depth_search(int depth) {
    depth_used_ = 0;
    return unit_dfs(depth, true);
  }

  bool unit_dfs(int budget, bool at_root) {
    count_node();
    std::vector<Certificate> certs;
    if (!gather(certs)) {
      if (at_root) root_dead_ = true;
      return false;
    }
    if (certs.empty()) return true;
    if (lower_bound(certs) > budget) return false;
    const std::vector<int> cand = branching_certificate(certs).candidates;
    std::vector<int> excluded;
    bool found = false;
    for (int e : cand) {
      chosen_[e] = 1;
      if (unit_dfs(budget - 1, false)) {
        ++depth_used_;
        found = true;
        break;
      }
      chosen_[e] = 0;
      forbidden_[e] = 1;
      excluded.push_back(e);
    }
    for (int e : excluded) forbidden_[e] = 0;
    return found;
  }

  void weighted_search(const Rational& cost) {
    count_node();
    if (p_.budget && cost > *p_.budget) return;
    if (has_best_ && cost >= best_cost_) return;
    std::vector<Certificate> certs;
    if (!gather(certs)) return;
    if (certs.empty()) {
      has_best_ = true;
      best_ = chosen_;
      best_cost_ = cost;
      return;
    }
    const Rational bound = cost + lower_bound(certs);
    if (p_.budget && bound > *p_.budget) return;
    if (has_best_ && bound >= best_cost_) return;
    std::vector<int> cand = branching_certificate(certs).candidates;
    std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) { return weight(a) < weight(b); });
    std::vector<int> excluded;
    for (int e : cand) {
      chosen_[e] = 1;
      weighted_search(cost + weight(e));
      chosen_[e] = 0;
      forbidden_[e] = 1;
      excluded.push_back(e);
    }
    for (int e : excluded) forbidden_[e] = 0;
  }

  const HittingProblem& p_;
  int m_;
  std::vector<char> chosen_;
  std::vector<char> forbidden_;
  std::vector<char> used_;
  std::int64_t nodes_ = 0;
  bool conflict_ = false;
  bool root_dead_ = false;
  int depth_used_ = 0;
  bool has_best_ = false;
  std::vector<char> best_;
  Rational best_cost_ = 0;
};

}  // namespace

HittingResult solve_hitting(const HittingProblem& problem) {
  if (problem.weights && static_cast<int>(problem.weights->size()) != problem.num_elements) {
    throw std::invalid_argument("weight vector size does not match the element count");
  }
  Engine engine(problem);
  return engine.run();
}

}  // namespace reorient::detail

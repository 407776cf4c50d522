#include "reorient/exact.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "reorient/connectivity.hpp"
#include "reorient/detail/bitgraph.hpp"
#include "reorient/detail/dinic.hpp"
#include "reorient/detail/search.hpp"

namespace reorient {

using detail::BitGraph;
using detail::Certificate;
using detail::Dinic;

Requirement Requirement::uniform(int n, int value) {
  Requirement r(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y) r.set(x, y, value);
    }
  }
  return r;
}

void Requirement::set(VertexId x, VertexId y, int value) {
  if (x < 0 || y < 0 || x >= n_ || y >= n_) throw std::invalid_argument("requirement pair out of range");
  if (value < 0) throw std::invalid_argument("requirement values must be non-negative");
  if (x != y) r_[index(x, y)] = value;
}

int Requirement::max_value() const { return r_.empty() ? 0 : *std::max_element(r_.begin(), r_.end()); }

namespace {

Dinic mixed_network(const MixedGraph& m) {
  Dinic net(m.num_vertices());
  for (const auto& e : m.edges()) net.add_undirected(e.u, e.v, 1);
  for (const auto& a : m.arcs()) net.add_edge(a.tail, a.head, 1);
  return net;
}

}  // namespace

bool Requirement::satisfied_by(const MixedGraph& m) const {
  if (m.num_vertices() != n_) throw std::invalid_argument("requirement size does not match the graph");
  Dinic net = mixed_network(m);
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      const int need = (*this)(x, y);
      if (need == 0) continue;
      net.reset();
      if (net.run(x, y, need) < need) return false;
    }
  }
  return true;
}

bool ConnectivityTarget::satisfied_by(const MixedGraph& m) const {
  switch (kind) {
    case Kind::vertex_strong:
      return is_k_strong(m, k);
    case Kind::arc_strong:
      return is_k_arc_strong(m, k);
    case Kind::requirement:
      return r.satisfied_by(m);
  }
  return false;
}

bool DoublingTarget::satisfied_by(const MixedGraph& g) const {
  if (!is_k_edge_connected(g, c)) return false;
  if (!vertex_deleted_two_edge_connected) return true;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const VertexId gone[] = {v};
    if (!is_k_edge_connected(delete_vertices(g, gone).graph, 2)) return false;
  }
  return true;
}

namespace {

enum class ArcEdit { reverse, deorient };

std::vector<char> mask_of(const std::vector<int>& indices, int size, const char* what) {
  std::vector<char> mask(static_cast<std::size_t>(size), 0);
  for (int i : indices) {
    if (i < 0 || i >= size) throw std::invalid_argument(std::string(what) + " index out of range");
    mask[i] = 1;
  }
  return mask;
}

SolveResult from_hitting(const detail::HittingResult& h) {
  SolveResult r;
  r.feasible = h.feasible;
  r.optimum = h.cost;
  r.witness = h.chosen;
  r.nodes_explored = h.nodes;
  return r;
}

// Certificates for l-strong targets: for every deletion set X with |X| < l and every sink
// (source) strong component R of the current digraph minus X, some unused arc must come to
// leave (enter) R.
class VertexStrongOracle {
 public:
  VertexStrongOracle(const MixedGraph& d, ArcEdit edit, int l) : d_(d), edit_(edit), l_(l) {
    if (d.num_vertices() > BitGraph::kMaxVertices) throw SizeError("vertex-strong search limited to 64 vertices");
  }

  void operator()(const std::vector<char>& chosen, std::vector<Certificate>& out) const {
    const int n = d_.num_vertices();
    BitGraph g(n, std::vector<std::uint64_t>(n, 0), std::vector<std::uint64_t>(n, 0));
    for (int i = 0; i < d_.num_arcs(); ++i) {
      const auto& a = d_.arc(i);
      if (!chosen[i]) {
        g.add(a.tail, a.head);
      } else if (edit_ == ArcEdit::reverse) {
        g.add(a.head, a.tail);
      } else {
        g.add(a.tail, a.head);
        g.add(a.head, a.tail);
      }
    }
    const std::uint64_t everything = g.all();
    g.for_each_small_set(l_, [&](std::uint64_t removed) {
      const std::uint64_t alive = everything & ~removed;
      if (g.strong(alive)) return true;
      std::uint64_t remaining = alive;
      while (remaining) {
        const int v = std::countr_zero(remaining);
        const std::uint64_t comp = g.forward(v, alive) & g.backward(v, alive);
        remaining &= ~comp;
        std::uint64_t outs = 0;
        std::uint64_t ins = 0;
        for (std::uint64_t rest = comp; rest; rest &= rest - 1) {
          const int u = std::countr_zero(rest);
          outs |= g.out(u);
          ins |= g.in(u);
        }
        const std::uint64_t others = alive & ~comp;
        if ((outs & others) == 0) out.push_back(crossing(chosen, others, comp));
        if ((ins & others) == 0) out.push_back(crossing(chosen, comp, others));
      }
      return true;
    });
  }

 private:
  Certificate crossing(const std::vector<char>& chosen, std::uint64_t from, std::uint64_t to) const {
    Certificate c;
    for (int i = 0; i < d_.num_arcs(); ++i) {
      if (chosen[i]) continue;
      const auto& a = d_.arc(i);
      if (((from >> a.tail) & 1U) && ((to >> a.head) & 1U)) c.candidates.push_back(i);
    }
    return c;
  }

  const MixedGraph& d_;
  ArcEdit edit_;
  int l_;
};

// Certificates from minimum cuts: a set X with d+(X) + d(X) < need must receive enough
// unused arcs entering X.
class CutOracle {
 public:
  CutOracle(const MixedGraph& d, ArcEdit edit, const ConnectivityTarget& target)
      : d_(d), edit_(edit), target_(target) {}

  void operator()(const std::vector<char>& chosen, std::vector<Certificate>& out) const {
    const int n = d_.num_vertices();
    Dinic net(n);
    for (const auto& e : d_.edges()) net.add_undirected(e.u, e.v, 1);
    for (int i = 0; i < d_.num_arcs(); ++i) {
      const auto& a = d_.arc(i);
      if (!chosen[i]) {
        net.add_edge(a.tail, a.head, 1);
      } else if (edit_ == ArcEdit::reverse) {
        net.add_edge(a.head, a.tail, 1);
      } else {
        net.add_undirected(a.tail, a.head, 1);
      }
    }
    auto probe = [&](int x, int y, int need) {
      if (need <= 0) return;
      net.reset();
      const auto flow = net.run(x, y, need);
      if (flow >= need) return;
      const auto side = net.reachable_from(x);
      Certificate c;
      c.deficit = need - static_cast<int>(flow);
      for (int i = 0; i < d_.num_arcs(); ++i) {
        const auto& a = d_.arc(i);
        if (!chosen[i] && !side[a.tail] && side[a.head]) c.candidates.push_back(i);
      }
      out.push_back(std::move(c));
    };
    if (target_.kind == ConnectivityTarget::Kind::arc_strong) {
      for (int v = 1; v < n; ++v) {
        probe(0, v, target_.k);
        probe(v, 0, target_.k);
      }
    } else {
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          if (x != y) probe(x, y, target_.r(x, y));
        }
      }
    }
  }

 private:
  const MixedGraph& d_;
  ArcEdit edit_;
  const ConnectivityTarget& target_;
};

detail::HittingProblem arc_problem(const MixedGraph& d, const SearchOptions& options) {
  detail::HittingProblem p;
  p.num_elements = d.num_arcs();
  p.required = mask_of(options.required, d.num_arcs(), "required arc");
  p.forbidden = mask_of(options.forbidden, d.num_arcs(), "forbidden arc");
  p.node_limit = options.node_limit;
  p.budget = options.budget;
  return p;
}

void attach_oracle(detail::HittingProblem& p, const MixedGraph& d, ArcEdit edit, const ConnectivityTarget& target) {
  if (target.kind == ConnectivityTarget::Kind::vertex_strong) {
    p.oracle = VertexStrongOracle(d, edit, target.k);
  } else {
    p.oracle = CutOracle(d, edit, target);
  }
}

}  // namespace

SolveResult min_reversals(const MixedGraph& d, const ConnectivityTarget& target, const SearchOptions& options) {
  if (!d.is_digraph()) throw GraphError("min_reversals expects a digraph");
  if (target.kind == ConnectivityTarget::Kind::requirement) {
    throw std::invalid_argument("min_reversals supports vertex- and arc-strong targets only");
  }
  if (target.k < 1) throw std::invalid_argument("connectivity target must be at least 1");
  const MixedGraph ug = underlying_graph(d);
  if (target.kind == ConnectivityTarget::Kind::vertex_strong) {
    if (d.num_vertices() <= target.k) return {};
    if (target.k == 2 && !check_kstrong_orientation_condition(ug, 2)) return {};
  } else if (!is_k_edge_connected(ug, 2 * target.k)) {
    return {};
  }
  auto p = arc_problem(d, options);
  const ConnectivityTarget held = target;
  attach_oracle(p, d, ArcEdit::reverse, held);
  return from_hitting(detail::solve_hitting(p));
}

SolveResult min_deorientations(const MixedGraph& d, const ConnectivityTarget& target, const SearchOptions& options) {
  if (!d.is_digraph()) throw GraphError("min_deorientations expects a digraph");
  if (target.kind == ConnectivityTarget::Kind::requirement && target.r.size() != d.num_vertices()) {
    throw std::invalid_argument("requirement size does not match the digraph");
  }
  std::vector<int> allowed;
  const auto forbidden = mask_of(options.forbidden, d.num_arcs(), "forbidden arc");
  for (int i = 0; i < d.num_arcs(); ++i) {
    if (!forbidden[i]) allowed.push_back(i);
  }
  if (!target.satisfied_by(deorient_arcs(d, allowed))) return {};
  auto p = arc_problem(d, options);
  attach_oracle(p, d, ArcEdit::deorient, target);
  return from_hitting(detail::solve_hitting(p));
}

SolveResult min_doubling(const MixedGraph& g, const DoublingTarget& target, const std::vector<Rational>& weights,
                         const SearchOptions& options) {
  if (!g.is_graph()) throw GraphError("min_doubling expects an undirected graph");
  const int m = g.num_edges();
  if (!weights.empty() && static_cast<int>(weights.size()) != m) {
    throw std::invalid_argument("one weight per edge expected");
  }
  for (const auto& w : weights) {
    if (w < 0) throw std::invalid_argument("weights must be non-negative");
  }
  std::vector<int> everything(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) everything[i] = i;
  if (!target.satisfied_by(double_edges(g, everything))) return {};

  struct Family {
    std::vector<int> crossing;
    int d;
    int need;
  };
  std::vector<Family> families;
  for (const auto& cut : enumerate_cuts_up_to(g, target.c - 1)) {
    families.push_back({cut.crossing_edges, cut.d, target.c});
  }
  if (target.vertex_deleted_two_edge_connected) {
    for (VertexId w = 0; w < g.num_vertices(); ++w) {
      const VertexId gone[] = {w};
      const auto rest = delete_vertices(g, gone);
      std::vector<int> origin;
      for (int i = 0; i < m; ++i) {
        if (g.edge(i).u != w && g.edge(i).v != w) origin.push_back(i);
      }
      for (const auto& cut : enumerate_cuts_up_to(rest.graph, 1)) {
        Family f{{}, cut.d, 2};
        for (int i : cut.crossing_edges) f.crossing.push_back(origin[i]);
        families.push_back(std::move(f));
      }
    }
  }

  detail::HittingProblem p;
  p.num_elements = m;
  if (!weights.empty()) p.weights = weights;
  p.required = mask_of(options.required, m, "required edge");
  p.forbidden = mask_of(options.forbidden, m, "forbidden edge");
  p.node_limit = options.node_limit;
  p.budget = options.budget;
  p.oracle = [families](const std::vector<char>& chosen, std::vector<Certificate>& out) {
    for (const auto& f : families) {
      int value = f.d;
      Certificate c;
      for (int e : f.crossing) {
        if (chosen[e]) {
          ++value;
        } else {
          c.candidates.push_back(e);
        }
      }
      if (value >= f.need) continue;
      c.deficit = f.need - value;
      out.push_back(std::move(c));
    }
  };
  return from_hitting(detail::solve_hitting(p));
}

namespace {

bool meets(const MixedGraph& m, const ConnectivityTarget& target) {
  if (target.kind == ConnectivityTarget::Kind::vertex_strong && m.num_vertices() <= BitGraph::kMaxVertices) {
    return detail::is_k_strong_by_deletions(m, target.k);
  }
  return target.satisfied_by(m);
}

// Depth-first search over per-edge decisions; undecided edges stay undirected, which can
// only help, so a failing check prunes the whole subtree.
class OrientationSearch {
 public:
  OrientationSearch(const MixedGraph& g, const ConnectivityTarget& target, bool allow_keep, const SearchOptions& o)
      : g_(g), target_(target), allow_keep_(allow_keep), options_(o) {
    if (!g.is_graph()) throw GraphError("orientation search expects an undirected graph");
    if (g.num_edges() > kMaxEnumeratedElements) {
      throw SizeError("orientation search limited to " + std::to_string(kMaxEnumeratedElements) + " edges");
    }
    decisions_.assign(static_cast<std::size_t>(g.num_edges()), EdgeChoice::keep);
  }

  SolveResult run() {
    SolveResult result;
    const int m = g_.num_edges();
    if (!meets(g_, target_)) {
      result.nodes_explored = nodes_;
      return result;
    }
    if (allow_keep_) {
      best_kept_ = m;
      best_ = decisions_;
      found_ = true;
    }
    visit(0, 0);
    result.nodes_explored = nodes_;
    if (!found_) return result;
    result.feasible = true;
    result.optimum = allow_keep_ ? Rational(m - best_kept_) : Rational(0);
    for (EdgeChoice c : best_) result.witness.push_back(static_cast<int>(c));
    return result;
  }

 private:
  // Returns true when the search can stop.
  bool visit(int index, int kept) {
    if (++nodes_ > options_.node_limit && options_.node_limit > 0) {
      throw SizeError("orientation search exceeded its node limit");
    }
    const int m = g_.num_edges();
    if (index == m) {
      if (!found_ || kept < best_kept_) {
        found_ = true;
        best_kept_ = kept;
        best_ = decisions_;
      }
      return !allow_keep_ || kept == 0;
    }
    for (EdgeChoice c : {EdgeChoice::forward, EdgeChoice::backward}) {
      decisions_[index] = c;
      if (meets(PartialOrientation{g_, decisions_}.realize(), target_) && visit(index + 1, kept)) return true;
    }
    decisions_[index] = EdgeChoice::keep;
    if (allow_keep_ && kept + 1 < best_kept_) {
      if (visit(index + 1, kept + 1)) return true;
    }
    return false;
  }

  const MixedGraph& g_;
  const ConnectivityTarget& target_;
  bool allow_keep_;
  const SearchOptions& options_;
  std::vector<EdgeChoice> decisions_;
  std::vector<EdgeChoice> best_;
  int best_kept_ = 0;
  bool found_ = false;
  std::int64_t nodes_ = 0;
};

}  // namespace

SolveResult max_partial_orientation(const MixedGraph& g, const ConnectivityTarget& target,
                                    const SearchOptions& options) {
  return OrientationSearch(g, target, true, options).run();
}

SolveResult find_orientation(const MixedGraph& g, const ConnectivityTarget& target, const SearchOptions& options) {
  return OrientationSearch(g, target, false, options).run();
}

SolveResult best_orientation_for_requirement(const MixedGraph& g, const Requirement& r, const SearchOptions& options) {
  if (r.size() != g.num_vertices()) throw std::invalid_argument("requirement size does not match the graph");
  return find_orientation(g, ConnectivityTarget::requirement(r), options);
}

SolveResult vertex_cover(const MixedGraph& g, const SearchOptions& options) {
  const int n = g.num_vertices();
  std::vector<std::pair<int, int>> ends;
  for (const auto& e : g.edges()) ends.push_back({e.u, e.v});
  for (const auto& a : g.arcs()) ends.push_back({a.tail, a.head});
  std::vector<char> in_cover(static_cast<std::size_t>(n), 0);
  std::vector<char> best;
  int best_size = n + 1;
  std::int64_t nodes = 0;

  auto first_uncovered = [&]() {
    for (std::size_t i = 0; i < ends.size(); ++i) {
      if (!in_cover[ends[i].first] && !in_cover[ends[i].second]) return static_cast<int>(i);
    }
    return -1;
  };
  // Disjoint uncovered edges each need their own cover vertex.
  auto matching_bound = [&]() {
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    int bound = 0;
    for (const auto& [u, v] : ends) {
      if (in_cover[u] || in_cover[v] || used[u] || used[v]) continue;
      used[u] = used[v] = 1;
      ++bound;
    }
    return bound;
  };
  auto search = [&](auto&& self, int size) -> void {
    if (++nodes > options.node_limit && options.node_limit > 0) throw SizeError("vertex cover search exceeded its node limit");
    if (size + matching_bound() >= best_size) return;
    const int e = first_uncovered();
    if (e < 0) {
      best = in_cover;
      best_size = size;
      return;
    }
    for (int v : {std::min(ends[e].first, ends[e].second), std::max(ends[e].first, ends[e].second)}) {
      in_cover[v] = 1;
      self(self, size + 1);
      in_cover[v] = 0;
    }
  };
  search(search, 0);
  SolveResult result;
  result.feasible = true;
  result.optimum = best_size;
  for (int v = 0; v < n; ++v) {
    if (best[v]) result.witness.push_back(v);
  }
  result.nodes_explored = nodes;
  return result;
}

SolveResult max2sat(const SatInstance& instance, const SearchOptions& options) {
  instance.validate();
  const int n = instance.num_vars;
  if (n > kMaxEnumeratedElements) throw SizeError("max2sat enumeration limited to 22 variables");
  SolveResult result;
  result.feasible = true;
  int best = -1;
  std::vector<bool> assignment(static_cast<std::size_t>(n));
  for (std::uint64_t bits = 0; bits < (1ULL << n); ++bits) {
    if (options.node_limit > 0 && static_cast<std::int64_t>(bits) >= options.node_limit) {
      throw SizeError("max2sat enumeration exceeded its node limit");
    }
    for (int v = 0; v < n; ++v) assignment[v] = (bits >> v) & 1U;
    const int value = instance.satisfied_count(assignment);
    if (value > best) {
      best = value;
      result.witness.assign(assignment.begin(), assignment.end());
    }
    ++result.nodes_explored;
  }
  result.optimum = best;
  return result;
}

}  // namespace reorient

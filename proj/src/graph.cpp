#include "reorient/graph.hpp"

#include <algorithm>
#include <string>

namespace reorient {

namespace {

std::vector<char> index_mask(std::span<const int> indices, int size, const char* what) {
  std::vector<char> mask(static_cast<std::size_t>(size), 0);
  for (int i : indices) {
    if (i < 0 || i >= size) {
      throw GraphError(std::string(what) + " index " + std::to_string(i) + " does not exist");
    }
    if (mask[static_cast<std::size_t>(i)]) {
      throw GraphError(std::string(what) + " index " + std::to_string(i) + " listed twice");
    }
    mask[static_cast<std::size_t>(i)] = 1;
  }
  return mask;
}

std::vector<char> vertex_mask(const MixedGraph& g, std::span<const VertexId> vs) {
  std::vector<char> mask(static_cast<std::size_t>(g.num_vertices()), 0);
  for (VertexId v : vs) {
    if (!g.valid_vertex(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
    mask[static_cast<std::size_t>(v)] = 1;
  }
  return mask;
}

}  // namespace

MixedGraph::MixedGraph(int num_vertices) : n_(num_vertices) {
  if (num_vertices < 0) throw GraphError("negative vertex count");
}

VertexId MixedGraph::add_vertex() { return n_++; }

VertexId MixedGraph::add_vertices(int count) {
  if (count < 0) throw GraphError("negative vertex count");
  const VertexId first = n_;
  n_ += count;
  return first;
}

void MixedGraph::check_pair(VertexId a, VertexId b, const char* what) const {
  if (!valid_vertex(a) || !valid_vertex(b)) {
    throw GraphError(std::string(what) + " " + std::to_string(a) + "-" + std::to_string(b) +
                     " has an endpoint out of range (n=" + std::to_string(n_) + ")");
  }
  if (a == b) throw GraphError(std::string(what) + " at vertex " + std::to_string(a) + " is a loop");
}

int MixedGraph::add_edge(VertexId u, VertexId v, std::string label) {
  check_pair(u, v, "edge");
  edges_.push_back(Edge{u, v, std::move(label)});
  return num_edges() - 1;
}

int MixedGraph::add_arc(VertexId tail, VertexId head, std::string label) {
  check_pair(tail, head, "arc");
  arcs_.push_back(Arc{tail, head, std::move(label)});
  return num_arcs() - 1;
}

VertexMapped delete_vertices(const MixedGraph& g, std::span<const VertexId> removed) {
  const auto gone = vertex_mask(g, removed);
  VertexMapped out;
  out.old_to_new.assign(static_cast<std::size_t>(g.num_vertices()), -1);
  int next = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!gone[static_cast<std::size_t>(v)]) out.old_to_new[static_cast<std::size_t>(v)] = next++;
  }
  out.graph = MixedGraph(next);
  const auto& map = out.old_to_new;
  for (const Edge& e : g.edges()) {
    if (map[e.u] >= 0 && map[e.v] >= 0) out.graph.add_edge(map[e.u], map[e.v], e.label);
  }
  for (const Arc& a : g.arcs()) {
    if (map[a.tail] >= 0 && map[a.head] >= 0) out.graph.add_arc(map[a.tail], map[a.head], a.label);
  }
  return out;
}

MixedGraph reverse_arcs(const MixedGraph& d, std::span<const int> arc_indices) {
  if (!d.is_digraph()) throw GraphError("reverse_arcs expects a digraph");
  const auto flip = index_mask(arc_indices, d.num_arcs(), "arc");
  MixedGraph out(d.num_vertices());
  for (int i = 0; i < d.num_arcs(); ++i) {
    const Arc& a = d.arc(i);
    if (flip[static_cast<std::size_t>(i)]) {
      out.add_arc(a.head, a.tail, a.label);
    } else {
      out.add_arc(a.tail, a.head, a.label);
    }
  }
  return out;
}

MixedGraph deorient_arcs(const MixedGraph& m, std::span<const int> arc_indices) {
  const auto chosen = index_mask(arc_indices, m.num_arcs(), "arc");
  MixedGraph out(m.num_vertices());
  for (const Edge& e : m.edges()) out.add_edge(e.u, e.v, e.label);
  for (int i = 0; i < m.num_arcs(); ++i) {
    const Arc& a = m.arc(i);
    if (chosen[static_cast<std::size_t>(i)]) out.add_edge(a.tail, a.head, a.label);
  }
  for (int i = 0; i < m.num_arcs(); ++i) {
    const Arc& a = m.arc(i);
    if (!chosen[static_cast<std::size_t>(i)]) out.add_arc(a.tail, a.head, a.label);
  }
  return out;
}

MixedGraph add_opposite_arcs(const MixedGraph& m, std::span<const int> arc_indices) {
  index_mask(arc_indices, m.num_arcs(), "arc");
  MixedGraph out = m;
  std::vector<int> sorted(arc_indices.begin(), arc_indices.end());
  std::sort(sorted.begin(), sorted.end());
  for (int i : sorted) {
    const Arc& a = m.arc(i);
    out.add_arc(a.head, a.tail, a.label);
  }
  return out;
}

MixedGraph digon_to_edge(const MixedGraph& m) {
  const int na = m.num_arcs();
  std::vector<int> partner(static_cast<std::size_t>(na), -1);
  for (int i = 0; i < na; ++i) {
    if (partner[i] >= 0) continue;
    const Arc& a = m.arc(i);
    for (int j = i + 1; j < na; ++j) {
      const Arc& b = m.arc(j);
      if (partner[j] < 0 && b.tail == a.head && b.head == a.tail) {
        partner[i] = j;
        partner[j] = i;
        break;
      }
    }
  }
  MixedGraph out(m.num_vertices());
  for (const Edge& e : m.edges()) out.add_edge(e.u, e.v, e.label);
  for (int i = 0; i < na; ++i) {
    if (partner[i] > i) out.add_edge(m.arc(i).tail, m.arc(i).head, m.arc(i).label);
  }
  for (int i = 0; i < na; ++i) {
    if (partner[i] < 0) out.add_arc(m.arc(i).tail, m.arc(i).head, m.arc(i).label);
  }
  return out;
}

MixedGraph edge_to_digon(const MixedGraph& m) {
  MixedGraph out(m.num_vertices());
  for (const Arc& a : m.arcs()) out.add_arc(a.tail, a.head, a.label);
  for (const Edge& e : m.edges()) {
    out.add_arc(e.u, e.v, e.label);
    out.add_arc(e.v, e.u, e.label);
  }
  return out;
}

MixedGraph double_edges(const MixedGraph& g, std::span<const int> edge_indices) {
  index_mask(edge_indices, g.num_edges(), "edge");
  MixedGraph out = g;
  std::vector<int> sorted(edge_indices.begin(), edge_indices.end());
  std::sort(sorted.begin(), sorted.end());
  for (int i : sorted) out.add_edge(g.edge(i).u, g.edge(i).v, g.edge(i).label);
  return out;
}

MixedGraph underlying_graph(const MixedGraph& m) {
  MixedGraph out(m.num_vertices());
  for (const Edge& e : m.edges()) out.add_edge(e.u, e.v, e.label);
  for (const Arc& a : m.arcs()) out.add_edge(a.tail, a.head, a.label);
  return out;
}

VertexMapped contract(const MixedGraph& m, std::span<const VertexId> merged) {
  const auto in_set = vertex_mask(m, merged);
  if (merged.empty()) throw GraphError("contract needs a non-empty vertex set");
  const VertexId anchor = *std::min_element(merged.begin(), merged.end());
  VertexMapped out;
  out.old_to_new.assign(static_cast<std::size_t>(m.num_vertices()), -1);
  int next = 0;
  for (VertexId v = 0; v < m.num_vertices(); ++v) {
    if (!in_set[v] || v == anchor) out.old_to_new[v] = next++;
  }
  for (VertexId v = 0; v < m.num_vertices(); ++v) {
    if (in_set[v]) out.old_to_new[v] = out.old_to_new[anchor];
  }
  out.graph = MixedGraph(next);
  const auto& map = out.old_to_new;
  for (const Edge& e : m.edges()) {
    if (map[e.u] != map[e.v]) out.graph.add_edge(map[e.u], map[e.v], e.label);
  }
  for (const Arc& a : m.arcs()) {
    if (map[a.tail] != map[a.head]) out.graph.add_arc(map[a.tail], map[a.head], a.label);
  }
  return out;
}

MixedGraph subdivide(const MixedGraph& g, std::span<const int> edge_indices, int times) {
  if (times < 0) throw GraphError("subdivide needs a non-negative count");
  const auto chosen = index_mask(edge_indices, g.num_edges(), "edge");
  MixedGraph out(g.num_vertices());
  for (int i = 0; i < g.num_edges(); ++i) {
    if (!chosen[i]) out.add_edge(g.edge(i).u, g.edge(i).v, g.edge(i).label);
  }
  for (const Arc& a : g.arcs()) out.add_arc(a.tail, a.head, a.label);
  for (int i = 0; i < g.num_edges(); ++i) {
    if (!chosen[i]) continue;
    VertexId prev = g.edge(i).u;
    for (int t = 0; t < times; ++t) {
      const VertexId mid = out.add_vertex();
      out.add_edge(prev, mid, g.edge(i).label);
      prev = mid;
    }
    out.add_edge(prev, g.edge(i).v, g.edge(i).label);
  }
  return out;
}

MixedGraph subdivide_all(const MixedGraph& g, int times) {
  std::vector<int> all(static_cast<std::size_t>(g.num_edges()));
  for (int i = 0; i < g.num_edges(); ++i) all[i] = i;
  return subdivide(g, all, times);
}

std::vector<VertexDegrees> degrees(const MixedGraph& m) {
  std::vector<VertexDegrees> deg(static_cast<std::size_t>(m.num_vertices()));
  for (const Edge& e : m.edges()) {
    ++deg[e.u].undirected;
    ++deg[e.v].undirected;
  }
  for (const Arc& a : m.arcs()) {
    ++deg[a.tail].out;
    ++deg[a.head].in;
  }
  return deg;
}

MixedGraph relabel(const MixedGraph& m, std::span<const VertexId> perm) {
  if (static_cast<int>(perm.size()) != m.num_vertices()) throw GraphError("permutation size mismatch");
  std::vector<char> seen(perm.size(), 0);
  for (VertexId p : perm) {
    if (p < 0 || p >= m.num_vertices() || seen[p]) throw GraphError("not a permutation");
    seen[p] = 1;
  }
  MixedGraph out(m.num_vertices());
  for (const Edge& e : m.edges()) out.add_edge(perm[e.u], perm[e.v], e.label);
  for (const Arc& a : m.arcs()) out.add_arc(perm[a.tail], perm[a.head], a.label);
  return out;
}

MixedGraph PartialOrientation::realize() const {
  if (!source.is_graph()) throw GraphError("partial orientation source must be undirected");
  if (static_cast<int>(decisions.size()) != source.num_edges()) {
    throw GraphError("partial orientation needs one decision per edge");
  }
  MixedGraph out(source.num_vertices());
  for (int i = 0; i < source.num_edges(); ++i) {
    if (decisions[i] == EdgeChoice::keep) out.add_edge(source.edge(i).u, source.edge(i).v, source.edge(i).label);
  }
  for (int i = 0; i < source.num_edges(); ++i) {
    const Edge& e = source.edge(i);
    if (decisions[i] == EdgeChoice::forward) out.add_arc(e.u, e.v, e.label);
    if (decisions[i] == EdgeChoice::backward) out.add_arc(e.v, e.u, e.label);
  }
  return out;
}

int PartialOrientation::oriented_count() const {
  return static_cast<int>(std::count_if(decisions.begin(), decisions.end(),
                                        [](EdgeChoice c) { return c != EdgeChoice::keep; }));
}

}  // namespace reorient

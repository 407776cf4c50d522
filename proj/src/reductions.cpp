#include "reorient/reductions.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "reorient/connectivity.hpp"

namespace reorient {

namespace {

std::string name(const std::string& base, int index) { return base + std::to_string(index); }

std::string tagged(const std::string& tag, const std::string& text) { return tag.empty() ? text : tag + ":" + text; }

void add_digon(MixedGraph& g, VertexId a, VertexId b, const std::string& label) {
  g.add_arc(a, b, label);
  g.add_arc(b, a, label);
}

void complete_digraph_on(MixedGraph& g, const std::vector<VertexId>& vs, const std::string& label) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) add_digon(g, vs[i], vs[j], label);
  }
}

VertexId fresh(MixedGraph& g, std::vector<std::string>& roles, std::string role) {
  roles.push_back(std::move(role));
  return g.add_vertex();
}

std::vector<char> index_set(std::span<const int> items, int size, const char* what) {
  std::vector<char> mask(static_cast<std::size_t>(size), 0);
  for (int i : items) {
    if (i < 0 || i >= size) throw std::invalid_argument(std::string(what) + " index out of range");
    mask[i] = 1;
  }
  return mask;
}

bool connected_after_removing(const MixedGraph& g, VertexId v) {
  const VertexId gone[] = {v};
  return edge_connectivity(delete_vertices(g, gone).graph) >= 1;
}

bool two_vertex_connected(const MixedGraph& g) {
  if (edge_connectivity(g) < 1) return false;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!connected_after_removing(g, v)) return false;
  }
  return true;
}

bool covers(const MixedGraph& g, const std::vector<char>& in_cover) {
  for (const auto& e : g.edges()) {
    if (!in_cover[e.u] && !in_cover[e.v]) return false;
  }
  return true;
}

std::vector<char> vertex_set(const MixedGraph& g, std::span<const VertexId> vs) {
  std::vector<char> mask(static_cast<std::size_t>(g.num_vertices()), 0);
  for (VertexId v : vs) {
    if (!g.valid_vertex(v)) throw GraphError("vertex out of range");
    mask[v] = 1;
  }
  return mask;
}

}  // namespace

// ---------------------------------------------------------------------------------------
// Rockets

std::vector<VertexId> RocketLayout::interior() const {
  std::vector<VertexId> out;
  for (int i = 1; i <= k; ++i) out.push_back(x[i]);
  for (int i = 1; i <= k; ++i) out.push_back(y[i]);
  for (int i = 1; i <= k; ++i) out.push_back(z[i]);
  out.push_back(u);
  return out;
}

RocketLayout place_rocket(MixedGraph& host, std::vector<std::string>& roles, RocketKind kind, int k, VertexId x0,
                          VertexId y0, VertexId z0, VertexId v_star, const std::string& tag) {
  if (k < 0) throw std::invalid_argument("rocket size must be non-negative");
  if (static_cast<int>(roles.size()) != host.num_vertices()) throw std::logic_error("role table out of sync");
  RocketLayout r;
  r.kind = kind;
  r.k = k;
  r.x = {x0};
  r.y = {y0};
  r.z = {z0};
  r.v_star = v_star;
  for (int i = 1; i <= k; ++i) r.x.push_back(fresh(host, roles, tagged(tag, name("x_", i))));
  for (int i = 1; i <= k; ++i) r.y.push_back(fresh(host, roles, tagged(tag, name("y_", i))));
  for (int i = 1; i <= k; ++i) r.z.push_back(fresh(host, roles, tagged(tag, name("z_", i))));
  r.u = fresh(host, roles, tagged(tag, "u"));
  const auto arc = [&](VertexId from, VertexId to, const std::string& label) {
    const int id = kind == RocketKind::out ? host.add_arc(from, to, tagged(tag, label))
                                           : host.add_arc(to, from, tagged(tag, label));
    r.arcs.push_back(id);
    return id;
  };
  for (int i = 1; i <= k; ++i) {
    const std::string s = std::to_string(i);
    arc(r.x[i], r.y[i], "x_" + s + "y_" + s);
    arc(r.y[i], r.z[i], "y_" + s + "z_" + s);
    arc(r.z[i], r.x[i], "z_" + s + "x_" + s);
  }
  for (int i = 0; i < k; ++i) {
    const std::string s = std::to_string(i);
    const std::string t = std::to_string(i + 1);
    arc(r.x[i], r.x[i + 1], "x_" + s + "x_" + t);
    arc(r.y[i], r.y[i + 1], "y_" + s + "y_" + t);
    arc(r.z[i + 1], r.z[i], "z_" + t + "z_" + s);
  }
  arc(r.x[k], r.u, "x_" + std::to_string(k) + "u");
  arc(r.y[k], r.u, "y_" + std::to_string(k) + "u");
  arc(r.u, r.z[k], "uz_" + std::to_string(k));
  r.tip = arc(r.u, r.v_star, "uv*");
  return r;
}

Rocket build_rocket(RocketKind kind, int k) {
  if (k < 1) throw std::invalid_argument("rocket size must be at least 1");
  Rocket rocket;
  rocket.graph = MixedGraph(4);
  std::vector<std::string> roles{"x_0", "y_0", "z_0", "v*"};
  rocket.layout = place_rocket(rocket.graph, roles, kind, k, 0, 1, 2, 3, "");
  return rocket;
}

// ---------------------------------------------------------------------------------------
// I2VCOMG -> M2SAR

I2vcomgReduction reduce_i2vcomg_to_m2sar(const MixedGraph& m, std::span<const VertexId> terminals) {
  const int n = m.num_vertices();
  const auto is_t = vertex_set(m, terminals);
  for (const auto& e : m.edges()) {
    if (is_t[e.u] && is_t[e.v]) throw GraphError("terminal set is not independent");
  }
  for (const auto& a : m.arcs()) {
    if (is_t[a.tail] && is_t[a.head]) throw GraphError("terminal set is not independent");
  }

  I2vcomgReduction red;
  red.source = m;
  for (VertexId v = 0; v < n; ++v) {
    if (is_t[v]) red.terminals.push_back(v);
  }
  for (const auto& a : m.arcs()) {
    red.chosen_end.push_back(is_t[std::min(a.tail, a.head)] ? std::max(a.tail, a.head) : std::min(a.tail, a.head));
  }

  MixedGraph& d = red.witness.instance;
  auto& roles = red.witness.vertex_roles;
  const int ne = m.num_edges();
  const int na = m.num_arcs();
  std::vector<std::array<VertexId, 2>> edge_end(static_cast<std::size_t>(ne));
  std::vector<std::array<VertexId, 2>> arc_end(static_cast<std::size_t>(na));  // non-rocket ends
  std::vector<std::array<VertexId, 3>> rocket_base(static_cast<std::size_t>(na));
  red.houses.resize(static_cast<std::size_t>(n));

  for (VertexId v = 0; v < n; ++v) {
    const std::string vs = name("v", v);
    if (is_t[v]) {
      const VertexId t = fresh(d, roles, "T:" + vs);
      red.houses[v] = {t};
      for (int i = 0; i < ne; ++i) {
        if (m.edge(i).u == v) edge_end[i][0] = t;
        if (m.edge(i).v == v) edge_end[i][1] = t;
      }
      for (int i = 0; i < na; ++i) {
        if (m.arc(i).tail == v) arc_end[i][0] = t;
        if (m.arc(i).head == v) arc_end[i][1] = t;
      }
      continue;
    }
    auto& house = red.houses[v];
    for (int i = 0; i < ne; ++i) {
      const auto& e = m.edge(i);
      if (e.u != v && e.v != v) continue;
      const VertexId x = fresh(d, roles, "x^{" + vs + "," + name("e", i) + "}");
      house.push_back(x);
      edge_end[i][e.u == v ? 0 : 1] = x;
    }
    for (int i = 0; i < na; ++i) {
      const auto& a = m.arc(i);
      if (a.tail != v && a.head != v) continue;
      const std::string key = "{" + vs + "," + name("a", i) + "}";
      if (red.chosen_end[i] != v) {
        const VertexId x = fresh(d, roles, "x^" + key);
        house.push_back(x);
        arc_end[i][a.tail == v ? 0 : 1] = x;
      } else {
        for (int j = 0; j < 3; ++j) {
          static const char* base[] = {"x_0^", "y_0^", "z_0^"};
          rocket_base[i][j] = fresh(d, roles, base[j] + key);
          house.push_back(rocket_base[i][j]);
        }
      }
    }
    // An isolated vertex still needs a place in D, otherwise it would silently vanish.
    if (house.empty()) house.push_back(fresh(d, roles, "x^{" + vs + "}"));
    complete_digraph_on(d, house, "X_" + vs);
  }
  for (int i = 0; i < ne; ++i) {
    red.linking_arc.push_back(d.add_arc(edge_end[i][0], edge_end[i][1], name("e", i)));
  }
  for (int i = 0; i < na; ++i) {
    const auto& a = m.arc(i);
    const bool at_tail = red.chosen_end[i] == a.tail;
    const VertexId target = at_tail ? arc_end[i][1] : arc_end[i][0];
    red.rockets.push_back(place_rocket(d, roles, at_tail ? RocketKind::out : RocketKind::in, ne, rocket_base[i][0],
                                       rocket_base[i][1], rocket_base[i][2], target, name("R_a", i)));
  }
  red.witness.budget = ne;
  return red;
}

std::vector<int> lift_orientation_to_reversals(const I2vcomgReduction& red, std::span<const EdgeChoice> orientation) {
  if (static_cast<int>(orientation.size()) != red.source.num_edges()) {
    throw std::invalid_argument("one choice per edge expected");
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < orientation.size(); ++i) {
    if (orientation[i] == EdgeChoice::keep) throw std::invalid_argument("every edge must be oriented");
    if (orientation[i] == EdgeChoice::backward) out.push_back(red.linking_arc[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeChoice> lift_reversals_to_orientation(const I2vcomgReduction& red, std::span<const int> reversed) {
  const auto flipped = index_set(reversed, red.witness.instance.num_arcs(), "arc");
  std::vector<EdgeChoice> out;
  for (int arc : red.linking_arc) out.push_back(flipped[arc] ? EdgeChoice::backward : EdgeChoice::forward);
  return out;
}

bool is_i2vcomg_orientation(const MixedGraph& m, std::span<const VertexId> terminals,
                            std::span<const EdgeChoice> orientation) {
  if (static_cast<int>(orientation.size()) != m.num_edges()) throw std::invalid_argument("one choice per edge expected");
  MixedGraph d(m.num_vertices());
  for (const auto& a : m.arcs()) d.add_arc(a.tail, a.head);
  for (int i = 0; i < m.num_edges(); ++i) {
    const auto& e = m.edge(i);
    if (orientation[i] == EdgeChoice::keep) return false;
    if (orientation[i] == EdgeChoice::forward) {
      d.add_arc(e.u, e.v);
    } else {
      d.add_arc(e.v, e.u);
    }
  }
  if (!is_k_arc_strong(d, 2)) return false;
  for (VertexId t : terminals) {
    const VertexId gone[] = {t};
    if (!is_strong(delete_vertices(d, gone).graph)) return false;
  }
  return true;
}

std::optional<std::vector<EdgeChoice>> find_i2vcomg_orientation(const MixedGraph& m,
                                                                std::span<const VertexId> terminals) {
  const int ne = m.num_edges();
  if (ne > kMaxEnumeratedElements) throw SizeError("too many edges to enumerate orientations");
  std::vector<EdgeChoice> choice(static_cast<std::size_t>(ne));
  for (std::uint64_t mask = 0; mask < (1ULL << ne); ++mask) {
    for (int i = 0; i < ne; ++i) choice[i] = ((mask >> i) & 1U) ? EdgeChoice::backward : EdgeChoice::forward;
    if (is_i2vcomg_orientation(m, terminals, choice)) return choice;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------------------
// Twice-subdivided cubic graphs

ClassGInstance class_g_instance(const MixedGraph& cubic) {
  if (!cubic.is_graph()) throw GraphError("expected an undirected graph");
  for (const auto& d : degrees(cubic)) {
    if (d.undirected != 3) throw GraphError("graph is not cubic");
  }
  if (cubic.num_vertices() == 0 || !two_vertex_connected(cubic)) throw GraphError("graph is not 2-connected");
  ClassGInstance inst;
  inst.cubic = cubic;
  const int n = cubic.num_vertices();
  inst.graph = MixedGraph(n);
  for (int i = 0; i < cubic.num_edges(); ++i) {
    const auto& e = cubic.edge(i);
    const VertexId a = inst.graph.add_vertex();
    const VertexId b = inst.graph.add_vertex();
    inst.graph.add_edge(e.u, a, name("e", i));
    inst.graph.add_edge(a, b, name("e", i));
    inst.graph.add_edge(b, e.v, name("e", i));
    inst.subdivision.push_back({a, b});
  }
  inst.core.resize(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) inst.core[v] = v;
  return inst;
}

ClassGInstance recognize_class_g(const MixedGraph& g) {
  if (!g.is_graph()) throw GraphError("expected an undirected graph");
  const int n = g.num_vertices();
  const auto deg = degrees(g);
  std::vector<VertexId> cubic_id(static_cast<std::size_t>(n), -1);
  ClassGInstance inst;
  inst.graph = g;
  for (VertexId v = 0; v < n; ++v) {
    if (deg[v].undirected == 3) {
      cubic_id[v] = static_cast<int>(inst.core.size());
      inst.core.push_back(v);
    } else if (deg[v].undirected != 2) {
      throw GraphError("vertex of degree other than 2 or 3");
    }
  }
  if (inst.core.empty()) throw GraphError("no branch vertices");
  std::vector<std::vector<std::pair<VertexId, int>>> adj(static_cast<std::size_t>(n));
  for (int i = 0; i < g.num_edges(); ++i) {
    adj[g.edge(i).u].push_back({g.edge(i).v, i});
    adj[g.edge(i).v].push_back({g.edge(i).u, i});
  }
  inst.cubic = MixedGraph(static_cast<int>(inst.core.size()));
  std::vector<char> used(static_cast<std::size_t>(g.num_edges()), 0);
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  for (VertexId c : inst.core) {
    for (const auto& [first, e0] : adj[c]) {
      if (used[e0]) continue;
      std::vector<VertexId> chain{c};
      VertexId prev = c;
      VertexId cur = first;
      int via = e0;
      used[via] = 1;
      while (cubic_id[cur] < 0) {
        chain.push_back(cur);
        if (chain.size() > 3) throw GraphError("subdivided edge is longer than three edges");
        const auto& nb = adj[cur];
        const auto& next = nb[0].second == via ? nb[1] : nb[0];
        prev = cur;
        cur = next.first;
        via = next.second;
        used[via] = 1;
      }
      (void)prev;
      if (chain.size() != 3) throw GraphError("edge not subdivided exactly twice");
      if (cur == c) throw GraphError("subdivided loop");
      covered[chain[1]] = covered[chain[2]] = 1;
      inst.cubic.add_edge(cubic_id[c], cubic_id[cur]);
      inst.subdivision.push_back({chain[1], chain[2]});
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (cubic_id[v] < 0 && !covered[v]) throw GraphError("subdivision vertex off every branch path");
  }
  if (!two_vertex_connected(inst.cubic)) throw GraphError("underlying cubic graph is not 2-connected");
  return inst;
}

PathDecomposition legal_decomposition(const MixedGraph& g) {
  recognize_class_g(g);
  PathDecomposition p;
  std::vector<char> used(static_cast<std::size_t>(g.num_edges()), 0);
  const auto deg = degrees(g);
  const auto other = [&](int e, VertexId v) { return g.edge(e).u == v ? g.edge(e).v : g.edge(e).u; };
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (deg[v].undirected != 3) continue;
    std::vector<int> inc;
    for (int i = 0; i < g.num_edges() && inc.size() < 2; ++i) {
      if (g.edge(i).u == v || g.edge(i).v == v) inc.push_back(i);
    }
    used[inc[0]] = used[inc[1]] = 1;
    p.two_paths.push_back({other(inc[0], v), v, other(inc[1], v)});
    p.two_path_edges.push_back({inc[0], inc[1]});
  }
  for (int i = 0; i < g.num_edges(); ++i) {
    if (used[i]) continue;
    p.one_paths.push_back({g.edge(i).u, g.edge(i).v});
    p.one_path_edge.push_back(i);
  }
  return p;
}

bool is_legal_decomposition(const MixedGraph& g, const PathDecomposition& p) {
  std::vector<int> edge_uses(static_cast<std::size_t>(g.num_edges()), 0);
  std::vector<int> vertex_uses(static_cast<std::size_t>(g.num_vertices()), 0);
  const auto joins = [&](int e, VertexId a, VertexId b) {
    if (e < 0 || e >= g.num_edges()) return false;
    const auto& ed = g.edge(e);
    return (ed.u == a && ed.v == b) || (ed.u == b && ed.v == a);
  };
  if (p.one_paths.size() != p.one_path_edge.size() || p.two_paths.size() != p.two_path_edges.size()) return false;
  for (std::size_t i = 0; i < p.one_paths.size(); ++i) {
    const auto [a, b] = p.one_paths[i];
    if (!joins(p.one_path_edge[i], a, b)) return false;
    ++edge_uses[p.one_path_edge[i]];
    ++vertex_uses[a];
    ++vertex_uses[b];
  }
  for (std::size_t i = 0; i < p.two_paths.size(); ++i) {
    const auto [a, b, c] = p.two_paths[i];
    if (a == c || !joins(p.two_path_edges[i][0], a, b) || !joins(p.two_path_edges[i][1], b, c)) return false;
    ++edge_uses[p.two_path_edges[i][0]];
    ++edge_uses[p.two_path_edges[i][1]];
    ++vertex_uses[a];
    ++vertex_uses[b];
    ++vertex_uses[c];
  }
  return std::all_of(edge_uses.begin(), edge_uses.end(), [](int c) { return c == 1; }) &&
         std::all_of(vertex_uses.begin(), vertex_uses.end(), [](int c) { return c == 2; });
}

std::vector<VertexId> lift_cover_to_subdivision(const ClassGInstance& inst, std::span<const VertexId> cover) {
  const auto in = vertex_set(inst.cubic, cover);
  if (!covers(inst.cubic, in)) throw std::invalid_argument("not a vertex cover");
  std::vector<VertexId> out;
  for (VertexId v = 0; v < inst.cubic.num_vertices(); ++v) {
    if (in[v]) out.push_back(inst.core[v]);
  }
  for (int i = 0; i < inst.cubic.num_edges(); ++i) {
    const auto& e = inst.cubic.edge(i);
    // The subdivision vertex away from a covered end covers the two remaining edges.
    out.push_back(in[e.u] ? inst.subdivision[i][1] : inst.subdivision[i][0]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> project_cover_from_subdivision(const ClassGInstance& inst, std::span<const VertexId> cover) {
  auto in = vertex_set(inst.graph, cover);
  if (!covers(inst.graph, in)) throw std::invalid_argument("not a vertex cover");
  for (int i = 0; i < inst.cubic.num_edges(); ++i) {
    const auto [a, b] = inst.subdivision[i];
    if (in[a] && in[b]) {
      in[a] = 0;
      in[inst.core[inst.cubic.edge(i).u]] = 1;
    }
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < inst.cubic.num_vertices(); ++v) {
    if (in[inst.core[v]]) out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------------------
// VC -> 4EDA

namespace {

// Gadget vertex slots: 0 = x^u, 1 = x^v, 2 = x^w, 2 + i = x^i.
constexpr std::array<std::array<int, 2>, 17> kGadgetEdges{{{0, 4},
                                                           {0, 5},
                                                           {0, 6},
                                                           {0, 7},
                                                           {1, 3},
                                                           {1, 10},
                                                           {2, 9},
                                                           {2, 10},
                                                           {3, 4},
                                                           {3, 10},
                                                           {4, 5},
                                                           {5, 6},
                                                           {6, 7},
                                                           {7, 8},
                                                           {8, 9},
                                                           {8, 10},
                                                           {9, 10}}};
constexpr std::array<const char*, 11> kGadgetNames{"u", "v", "w", "1", "2", "3", "4", "5", "6", "7", "8"};
// Edge positions in kGadgetEdges used by the two menus of the forward map.
constexpr std::array<int, 4> kMiddleCovered{8, 11, 13, 6};  // 12, 34, 56, w7
constexpr std::array<int, 4> kMiddleOpen{4, 10, 12, 14};    // v1, 23, 45, 67

}  // namespace

VcTo4edaReduction reduce_vc_to_4eda(const MixedGraph& g, int k) {
  recognize_class_g(g);
  if (g.num_vertices() < 5) throw GraphError("need at least five vertices");
  VcTo4edaReduction red;
  red.source = g;
  red.k = k;
  red.decomposition = legal_decomposition(g);
  const auto& dec = red.decomposition;
  MixedGraph& h = red.witness.instance;
  auto& roles = red.witness.vertex_roles;

  for (std::size_t i = 0; i < dec.one_paths.size(); ++i) {
    red.one_path_vertex.push_back(fresh(h, roles, name("x_P", static_cast<int>(i))));
  }
  for (std::size_t i = 0; i < dec.two_paths.size(); ++i) {
    PathGadget gadget;
    gadget.path = dec.two_paths[i];
    const std::string base = name("x_Q", static_cast<int>(i)) + "^";
    for (int s = 0; s < 11; ++s) gadget.vertices[s] = fresh(h, roles, base + kGadgetNames[s]);
    red.gadgets.push_back(gadget);
  }
  red.hub = fresh(h, roles, "y");
  for (std::size_t i = 0; i < red.gadgets.size(); ++i) {
    auto& gadget = red.gadgets[i];
    const std::string base = name("Q", static_cast<int>(i)) + ":";
    for (int j = 0; j < 17; ++j) {
      const auto [a, b] = kGadgetEdges[j];
      gadget.edges[j] = h.add_edge(gadget.vertices[a], gadget.vertices[b],
                                   base + kGadgetNames[a] + "-" + kGadgetNames[b]);
    }
  }
  for (std::size_t i = 0; i < red.one_path_vertex.size(); ++i) {
    red.hub_edge.push_back(h.add_edge(red.one_path_vertex[i], red.hub, name("x_P", static_cast<int>(i)) + "y"));
  }
  // Every vertex of G lies on two paths, at most one of them a 2-path.
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    std::vector<VertexId> ends;
    for (std::size_t i = 0; i < dec.one_paths.size(); ++i) {
      if (dec.one_paths[i][0] == v || dec.one_paths[i][1] == v) ends.push_back(red.one_path_vertex[i]);
    }
    for (std::size_t i = 0; i < dec.two_paths.size(); ++i) {
      for (int s = 0; s < 3; ++s) {
        if (dec.two_paths[i][s] == v) ends.push_back(red.gadgets[i].vertices[s]);
      }
    }
    if (ends.size() != 2) throw std::logic_error("vertex not on exactly two paths");
    red.link_edge.push_back(h.add_edge(ends[0], ends[1], name("e_v", v)));
  }
  red.witness.budget = k + g.num_vertices();
  return red;
}

std::vector<int> lift_cover_to_doubling(const VcTo4edaReduction& red, std::span<const VertexId> cover) {
  const auto in = vertex_set(red.source, cover);
  if (!covers(red.source, in)) throw std::invalid_argument("not a vertex cover");
  std::vector<int> out;
  for (VertexId v = 0; v < red.source.num_vertices(); ++v) {
    if (in[v]) out.push_back(red.link_edge[v]);
  }
  for (const auto& gadget : red.gadgets) {
    const auto& menu = in[gadget.path[1]] ? kMiddleCovered : kMiddleOpen;
    for (int j : menu) out.push_back(gadget.edges[j]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> lift_doubling_to_cover(const VcTo4edaReduction& red, std::span<const int> doubled) {
  const MixedGraph& h = red.witness.instance;
  auto f = index_set(doubled, h.num_edges(), "edge");
  if (!is_k_edge_connected(double_edges(h, doubled), 4)) {
    throw std::invalid_argument("doubling set does not reach 4-edge-connectivity");
  }
  const auto& dec = red.decomposition;
  for (std::size_t i = 0; i < dec.one_paths.size(); ++i) {
    const int eu = red.link_edge[dec.one_paths[i][0]];
    const int ev = red.link_edge[dec.one_paths[i][1]];
    if (f[eu] || f[ev]) continue;
    f[red.hub_edge[i]] = 0;
    f[eu] = 1;
  }
  for (std::size_t i = 0; i < dec.two_paths.size(); ++i) {
    const auto [u, v, w] = dec.two_paths[i];
    const int eu = red.link_edge[u];
    const int ev = red.link_edge[v];
    const int ew = red.link_edge[w];
    if (f[ev] || (f[eu] && f[ew])) continue;
    // Exactly one of e_u, e_w is doubled here; trade the gadget edges for the other one.
    for (int e : red.gadgets[i].edges) f[e] = 0;
    for (int j : kMiddleOpen) f[red.gadgets[i].edges[j]] = 1;
    f[eu] = f[ew] = 1;
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < red.source.num_vertices(); ++v) {
    if (f[red.link_edge[v]]) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<VertexId>> predicted_three_edge_cuts(const VcTo4edaReduction& red) {
  std::vector<std::vector<VertexId>> cuts;
  for (VertexId x : red.one_path_vertex) cuts.push_back({x});
  for (const auto& gadget : red.gadgets) {
    const auto& x = gadget.vertices;
    cuts.push_back(std::vector<VertexId>(x.begin(), x.end()));
    for (int s : {1, 2, 3, 4, 5, 6, 7, 8, 9}) cuts.push_back({x[s]});
    cuts.push_back({x[0], x[4], x[5], x[6], x[7]});
  }
  for (auto& c : cuts) std::sort(c.begin(), c.end());
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

// ---------------------------------------------------------------------------------------
// MAX 2-SAT -> 3SDO

NormalizedSat normalize_to_s3bmax2sat(const SatInstance& sat) {
  sat.validate();
  for (const auto& c : sat.clauses) {
    if (c.size() != 2) throw std::invalid_argument("clauses must have exactly two literals");
  }
  NormalizedSat out;
  out.instance = sat;
  const auto occ = sat.occurrences();
  for (int x = 0; x < sat.num_vars; ++x) {
    if (occ[x][0] + occ[x][1] != 3 || occ[x][0] == 0 || occ[x][1] == 0) {
      throw std::invalid_argument("variable " + std::to_string(x) + " must occur three times with both signs");
    }
    out.flipped.push_back(occ[x][1] == 2);
  }
  for (auto& c : out.instance.clauses) {
    for (auto& l : c) {
      if (out.flipped[l.var]) l.negated = !l.negated;
    }
  }
  return out;
}

SdoReduction reduce_s3bmax2sat_to_3sdo(const SatInstance& sat, int ell) {
  sat.validate();
  for (const auto& c : sat.clauses) {
    if (c.size() != 2) throw std::invalid_argument("clauses must have exactly two literals");
    if (c[0].var == c[1].var) throw std::invalid_argument("a clause mentions the same variable twice");
  }
  if (!sat.has_s3b_shape()) throw std::invalid_argument("every variable must occur twice positive and once negated");

  SdoReduction red;
  red.source = sat;
  red.ell = ell;
  MixedGraph& d = red.witness.instance;
  auto& roles = red.witness.vertex_roles;
  const int nx = sat.num_vars;
  const int nc = static_cast<int>(sat.clauses.size());
  red.variables.resize(static_cast<std::size_t>(nx));

  for (int x = 0; x < nx; ++x) {
    auto& gx = red.variables[x];
    std::vector<int> positive;
    for (int c = 0; c < nc; ++c) {
      for (const auto& l : sat.clauses[c]) {
        if (l.var != x) continue;
        if (l.negated) {
          gx.clauses[1] = c;
        } else {
          positive.push_back(c);
        }
      }
    }
    gx.clauses[0] = positive[0];
    gx.clauses[2] = positive[1];
  }
  const auto pair_tag = [](int x, int c) { return "(x" + std::to_string(x) + ",C" + std::to_string(c) + ")"; };
  for (int x = 0; x < nx; ++x) {
    auto& gx = red.variables[x];
    for (int j = 0; j < 3; ++j) {
      const std::string t = pair_tag(x, gx.clauses[j]);
      gx.p[j] = fresh(d, roles, "p_" + t);
      gx.q[j] = fresh(d, roles, "q_" + t);
      gx.s_pair[j] = fresh(d, roles, "s_" + t);
    }
  }
  for (int x = 0; x < nx; ++x) {
    auto& gx = red.variables[x];
    const std::string t = name("x", x);
    gx.p_x = fresh(d, roles, "p_" + t);
    gx.q_x = fresh(d, roles, "q_" + t);
    for (int j = 0; j < 4; ++j) gx.s[j] = fresh(d, roles, "s_" + t + "^" + std::to_string(j + 1));
    for (int j = 0; j < 4; ++j) gx.w[j] = fresh(d, roles, "w_" + t + "^" + std::to_string(j + 1));
  }
  for (int c = 0; c < nc; ++c) {
    red.clause_vertex.push_back(fresh(d, roles, name("v_C", c)));
    red.clause_hub.push_back(fresh(d, roles, name("s_C", c)));
  }

  for (int x = 0; x < nx; ++x) {
    auto& gx = red.variables[x];
    for (int j = 0; j < 3; ++j) {
      const std::string t = pair_tag(x, gx.clauses[j]);
      complete_digraph_on(d, {gx.p[j], gx.q[j], gx.s_pair[j]}, "pair" + t);
    }
    complete_digraph_on(d, {gx.p_x, gx.q_x, gx.s[2]}, "triangle_x" + std::to_string(x));
  }
  for (int c = 0; c < nc; ++c) {
    red.clause_arc.push_back(d.add_arc(red.clause_hub[c], red.clause_vertex[c], name("s_C", c) + name("v_C", c)));
  }
  for (int x = 0; x < nx; ++x) {
    auto& gx = red.variables[x];
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 2; ++j) add_digon(d, gx.w[i], gx.s[j], "ws_x" + std::to_string(x));
    }
    const auto& cl = gx.clauses;
    const VertexId v1 = red.clause_vertex[cl[0]];
    const VertexId v2 = red.clause_vertex[cl[1]];
    const VertexId v3 = red.clause_vertex[cl[2]];
    const std::array<std::array<VertexId, 2>, 16> list{{{gx.q[0], gx.w[0]},
                                                        {gx.p[1], gx.w[0]},
                                                        {gx.q[1], gx.w[1]},
                                                        {gx.p[2], gx.w[1]},
                                                        {gx.q[2], gx.w[2]},
                                                        {gx.p_x, gx.w[2]},
                                                        {gx.q_x, gx.w[3]},
                                                        {gx.p[0], gx.w[3]},
                                                        {gx.p[0], v1},
                                                        {v1, gx.q[0]},
                                                        {gx.q[1], v2},
                                                        {v2, gx.p[1]},
                                                        {gx.p[2], v3},
                                                        {v3, gx.q[2]},
                                                        {gx.q_x, gx.s[3]},
                                                        {gx.s[3], gx.p_x}}};
    std::array<int, 16> ids{};
    for (int i = 0; i < 16; ++i) {
      ids[i] = d.add_arc(list[i][0], list[i][1], roles[list[i][0]] + roles[list[i][1]]);
    }
    gx.true_menu = {ids[0], ids[2], ids[4], ids[6], ids[8], ids[12]};
    gx.false_menu = {ids[7], ids[1], ids[3], ids[5], ids[10], ids[14]};
    gx.negated_entry = ids[10];
  }
  for (const auto& gx : red.variables) red.hub_set.insert(red.hub_set.end(), gx.s.begin(), gx.s.end());
  for (const auto& gx : red.variables) red.hub_set.insert(red.hub_set.end(), gx.s_pair.begin(), gx.s_pair.end());
  red.hub_set.insert(red.hub_set.end(), red.clause_hub.begin(), red.clause_hub.end());
  complete_digraph_on(d, red.hub_set, "S");
  red.witness.budget = 6 * nx + nc - ell;
  return red;
}

std::vector<int> lift_assignment_to_deorientation(const SdoReduction& red, const std::vector<bool>& assignment) {
  if (static_cast<int>(assignment.size()) != red.source.num_vars) {
    throw std::invalid_argument("one value per variable expected");
  }
  std::vector<int> out;
  for (int x = 0; x < red.source.num_vars; ++x) {
    const auto& menu = assignment[x] ? red.variables[x].true_menu : red.variables[x].false_menu;
    out.insert(out.end(), menu.begin(), menu.end());
  }
  for (std::size_t c = 0; c < red.source.clauses.size(); ++c) {
    bool sat = false;
    for (const auto& l : red.source.clauses[c]) sat |= literal_true(l, assignment);
    if (!sat) out.push_back(red.clause_arc[c]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<bool> lift_deorientation_to_assignment(const SdoReduction& red, std::span<const int> deoriented) {
  const auto f = index_set(deoriented, red.witness.instance.num_arcs(), "arc");
  std::vector<bool> out;
  for (const auto& gx : red.variables) out.push_back(!f[gx.negated_entry]);
  return out;
}

ReductionWitness lift_3sdo_to_lstrong(const MixedGraph& d, int budget, int ell) {
  if (ell < 4) throw std::invalid_argument("l must be at least 4");
  if (!d.is_digraph()) throw GraphError("expected a digraph");
  ReductionWitness out;
  out.instance = d;
  out.budget = budget;
  for (VertexId v = 0; v < d.num_vertices(); ++v) out.vertex_roles.push_back(name("D:", v));
  std::vector<VertexId> extra;
  for (int i = 0; i < ell - 3; ++i) {
    const VertexId z = fresh(out.instance, out.vertex_roles, name("universal", i));
    for (VertexId v = 0; v < d.num_vertices(); ++v) add_digon(out.instance, z, v, name("universal", i));
    for (VertexId other : extra) add_digon(out.instance, other, z, "universal");
    extra.push_back(z);
  }
  return out;
}

// ---------------------------------------------------------------------------------------
// LCO -> LCDO

HardenedLco harden_lco(const MixedGraph& g, const Requirement& r) {
  if (!g.is_graph()) throw GraphError("expected an undirected graph");
  const int n = g.num_vertices();
  if (r.size() != n) throw std::invalid_argument("requirement size mismatch");
  HardenedLco h;
  h.graph = g;
  h.a = h.graph.add_vertex();
  h.b = h.graph.add_vertex();
  h.ab_edge = h.graph.add_edge(h.a, h.b, "ab");
  for (VertexId x = 0; x < n; ++x) h.graph.add_edge(x, h.a, name("a-", x));
  for (VertexId x = 0; x < n; ++x) h.graph.add_edge(x, h.b, name("b-", x));
  h.requirement = Requirement(n + 2);
  h.requirement.set(h.a, h.b, n);
  h.requirement.set(h.b, h.a, 1);
  for (VertexId x = 0; x < n; ++x) {
    for (VertexId t : {h.a, h.b}) {
      h.requirement.set(x, t, 1);
      h.requirement.set(t, x, 1);
    }
    for (VertexId y = 0; y < n; ++y) {
      if (x != y) h.requirement.set(x, y, r(x, y) + 1);
    }
  }
  return h;
}

std::vector<EdgeChoice> lift_orientation_to_hardened(const HardenedLco& h, std::span<const EdgeChoice> orientation) {
  const int m = h.ab_edge;
  if (static_cast<int>(orientation.size()) != m) throw std::invalid_argument("one choice per edge expected");
  std::vector<EdgeChoice> out(orientation.begin(), orientation.end());
  const int n = h.a;
  out.push_back(EdgeChoice::backward);                        // b -> a
  out.insert(out.end(), static_cast<std::size_t>(n), EdgeChoice::backward);  // a -> x
  out.insert(out.end(), static_cast<std::size_t>(n), EdgeChoice::forward);   // x -> b
  return out;
}

std::vector<EdgeChoice> lift_orientation_from_hardened(const HardenedLco& h, std::span<const EdgeChoice> orientation) {
  const MixedGraph& g = h.graph;
  if (static_cast<int>(orientation.size()) != g.num_edges()) throw std::invalid_argument("one choice per edge expected");
  std::vector<EdgeChoice> cur(orientation.begin(), orientation.end());
  const auto head = [&](int e) { return cur[e] == EdgeChoice::forward ? g.edge(e).v : g.edge(e).u; };
  const auto tail = [&](int e) { return cur[e] == EdgeChoice::forward ? g.edge(e).u : g.edge(e).v; };
  if (cur[h.ab_edge] == EdgeChoice::forward) {
    // Reversing a directed cycle through ab keeps every local arc-connectivity.
    std::vector<int> via(static_cast<std::size_t>(g.num_vertices()), -2);
    std::deque<VertexId> queue{h.b};
    via[h.b] = -1;
    while (!queue.empty() && via[h.a] == -2) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (int e = 0; e < g.num_edges(); ++e) {
        if (e == h.ab_edge || cur[e] == EdgeChoice::keep || tail(e) != x || via[head(e)] != -2) continue;
        via[head(e)] = e;
        queue.push_back(head(e));
      }
    }
    if (via[h.a] != -2) {
      std::vector<int> cycle{h.ab_edge};
      for (VertexId x = h.a; x != h.b; x = tail(via[x])) cycle.push_back(via[x]);
      for (int e : cycle) cur[e] = cur[e] == EdgeChoice::forward ? EdgeChoice::backward : EdgeChoice::forward;
    }
  }
  return {cur.begin(), cur.begin() + h.ab_edge};
}

LcdoReduction reduce_lco_to_lcdo(const MixedGraph& g, const Requirement& r) {
  if (!g.is_graph()) throw GraphError("expected an undirected graph");
  const int n = g.num_vertices();
  const int m = g.num_edges();
  if (r.size() != n) throw std::invalid_argument("requirement size mismatch");
  for (VertexId x = 0; x < n; ++x) {
    for (VertexId y = 0; y < n; ++y) {
      if (x != y && r(x, y) < 1) throw std::invalid_argument("requirement must be at least 1 between distinct vertices");
    }
  }
  LcdoReduction red;
  red.source = g;
  MixedGraph& d = red.witness.instance;
  auto& roles = red.witness.vertex_roles;
  d = MixedGraph(n);
  for (VertexId v = 0; v < n; ++v) roles.push_back(name("v", v));
  for (int i = 0; i < m; ++i) {
    const auto& e = g.edge(i);
    const VertexId w = fresh(d, roles, name("w_e", i));
    red.edge_vertex.push_back(w);
    const int first = d.add_arc(e.u, w, name("u-w_e", i));
    const int second = d.add_arc(e.v, w, name("v-w_e", i));
    red.edge_arcs.push_back({first, second});
  }
  Requirement rr(n + m);
  for (VertexId x = 0; x < n + m; ++x) {
    for (VertexId y = 0; y < n; ++y) {
      if (x == y) continue;
      rr.set(x, y, x < n ? r(x, y) : 1);
    }
  }
  red.witness.requirement = rr;
  red.witness.budget = m;
  return red;
}

std::vector<int> lift_orientation_to_deorientation(const LcdoReduction& red, std::span<const EdgeChoice> orientation) {
  if (static_cast<int>(orientation.size()) != red.source.num_edges()) {
    throw std::invalid_argument("one choice per edge expected");
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < orientation.size(); ++i) {
    if (orientation[i] == EdgeChoice::keep) throw std::invalid_argument("every edge must be oriented");
    out.push_back(orientation[i] == EdgeChoice::forward ? red.edge_arcs[i][1] : red.edge_arcs[i][0]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeChoice> lift_deorientation_to_orientation(const LcdoReduction& red, std::span<const int> deoriented) {
  const auto f = index_set(deoriented, red.witness.instance.num_arcs(), "arc");
  std::vector<EdgeChoice> out;
  for (const auto& arcs : red.edge_arcs) {
    out.push_back(f[arcs[1]] || !f[arcs[0]] ? EdgeChoice::forward : EdgeChoice::backward);
  }
  return out;
}

}  // namespace reorient

#include "reorient/io.hpp"

#include <charconv>
#include <fstream>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace reorient {

namespace {

using nlohmann::json;

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

/// Rest of the line after `last_token`, trimmed.
std::string tail_text(std::string_view line, std::string_view last_token) {
  const std::size_t from = static_cast<std::size_t>(last_token.data() + last_token.size() - line.data());
  std::string_view rest = line.substr(from);
  while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) rest.remove_prefix(1);
  while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t' || rest.back() == '\r')) rest.remove_suffix(1);
  return std::string(rest);
}

int to_int(std::string_view s, int line, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, std::string("expected an integer ") + what + ", got '" + std::string(s) + "'");
  }
  return value;
}

int to_index(std::string_view s, int line, const char* what) {
  const int v = to_int(s, line, what);
  if (v < 0) throw ParseError(line, std::string("negative ") + what);
  return v;
}

Rational to_weight(std::string_view s, int line) {
  Rational w;
  try {
    w = parse_rational(s);
  } catch (const std::exception& e) {
    throw ParseError(line, std::string("malformed weight: ") + e.what());
  }
  if (w < Rational(0)) throw ParseError(line, "weights must be non-negative");
  return w;
}

void expect_arity(const std::vector<std::string_view>& t, std::size_t n, int line) {
  if (t.size() != n) {
    throw ParseError(line, "'" + std::string(t[0]) + "' expects " + std::to_string(n - 1) + " fields");
  }
}

struct Pending {
  struct Weight {
    bool arc;
    int index;
    Rational value;
    int line;
  };
  struct Req {
    int x, y, value, line;
  };
  struct Label {
    char kind;
    int index;
    std::string text;
    int line;
  };
  std::vector<Weight> weights;
  std::vector<Req> reqs;
  std::vector<Label> labels;
};

void parse_weight_line(const std::vector<std::string_view>& t, int line, Pending& p) {
  expect_arity(t, 4, line);
  if (t[1] != "e" && t[1] != "a") throw ParseError(line, "weight kind must be 'e' or 'a'");
  p.weights.push_back({t[1] == "a", to_index(t[2], line, "element index"), to_weight(t[3], line), line});
}

void apply_weights(InstanceFile& inst, const std::vector<Pending::Weight>& weights) {
  for (const auto& w : weights) {
    auto& target = w.arc ? inst.arc_weights : inst.edge_weights;
    const int count = w.arc ? inst.graph.num_arcs() : inst.graph.num_edges();
    if (w.index >= count) throw ParseError(w.line, "weight for a missing element");
    if (target.empty()) target.assign(static_cast<std::size_t>(count), Rational(1));
    target[w.index] = w.value;
  }
}

json rational_json(const Rational& r) { return to_string(r); }

}  // namespace

InstanceFile parse_instance_text(std::string_view text) {
  InstanceFile inst;
  Pending pending;
  std::optional<int> declared;
  int max_id = -1;
  int max_line = 0;
  std::vector<std::pair<int, int>> edges, arcs;
  std::vector<std::pair<int, int>> terminals;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto t = tokens(line);
    if (t.empty() || t[0].front() == '#') continue;
    const auto& key = t[0];
    const auto vertex = [&](std::string_view s) {
      const int v = to_index(s, line_no, "vertex id");
      if (v > max_id) {
        max_id = v;
        max_line = line_no;
      }
      return v;
    };
    if (key == "v") {
      expect_arity(t, 2, line_no);
      if (declared) throw ParseError(line_no, "vertex count given twice");
      declared = to_index(t[1], line_no, "vertex count");
    } else if (key == "e" || key == "a") {
      expect_arity(t, 3, line_no);
      const int u = vertex(t[1]);
      const int v = vertex(t[2]);
      if (u == v) throw ParseError(line_no, "loops are not allowed");
      (key == "e" ? edges : arcs).push_back({u, v});
    } else if (key == "w") {
      parse_weight_line(t, line_no, pending);
    } else if (key == "r") {
      expect_arity(t, 4, line_no);
      const int value = to_index(t[3], line_no, "requirement value");
      if ((t[1] == "*") != (t[2] == "*")) throw ParseError(line_no, "use '*' for both ends or neither");
      if (t[1] == "*") {
        pending.reqs.push_back({-1, -1, value, line_no});
      } else {
        pending.reqs.push_back({vertex(t[1]), vertex(t[2]), value, line_no});
      }
    } else if (key == "t") {
      expect_arity(t, 2, line_no);
      terminals.push_back({vertex(t[1]), line_no});
    } else if (key == "k") {
      expect_arity(t, 2, line_no);
      if (inst.budget) throw ParseError(line_no, "budget given twice");
      inst.budget = to_int(t[1], line_no, "budget");
    } else if (key == "label") {
      if (t.size() < 3) throw ParseError(line_no, "'label' expects a kind, an index and text");
      if (t[1] != "v" && t[1] != "e" && t[1] != "a") throw ParseError(line_no, "label kind must be v, e or a");
      pending.labels.push_back({t[1][0], to_index(t[2], line_no, "element index"), tail_text(line, t[2]), line_no});
    } else {
      throw ParseError(line_no, "unknown record '" + std::string(key) + "'");
    }
  }
  const int n = declared.value_or(max_id + 1);
  if (max_id >= n) throw ParseError(max_line, "vertex id " + std::to_string(max_id) + " exceeds the declared count");
  inst.graph = MixedGraph(n);
  for (const auto& [u, v] : edges) inst.graph.add_edge(u, v);
  for (const auto& [u, v] : arcs) inst.graph.add_arc(u, v);
  apply_weights(inst, pending.weights);
  if (!pending.reqs.empty()) {
    Requirement r(n);
    for (const auto& q : pending.reqs) {
      if (q.x < 0) {
        r = Requirement::uniform(n, q.value);
      } else {
        if (q.x == q.y) throw ParseError(q.line, "requirement on a single vertex");
        r.set(q.x, q.y, q.value);
      }
    }
    inst.requirement = r;
  }
  for (const auto& [v, line] : terminals) {
    if (std::find(inst.terminals.begin(), inst.terminals.end(), v) != inst.terminals.end()) {
      throw ParseError(line, "terminal listed twice");
    }
    inst.terminals.push_back(v);
  }
  // Element labels are rebuilt by re-adding, since MixedGraph stores labels on elements.
  if (!pending.labels.empty()) {
    std::vector<std::string> elabel(edges.size()), alabel(arcs.size());
    for (const auto& l : pending.labels) {
      const int count = l.kind == 'v' ? n : l.kind == 'e' ? static_cast<int>(edges.size()) : static_cast<int>(arcs.size());
      if (l.index >= count) throw ParseError(l.line, "label for a missing element");
      if (l.kind == 'v') {
        if (inst.vertex_labels.empty()) inst.vertex_labels.assign(static_cast<std::size_t>(n), "");
        inst.vertex_labels[l.index] = l.text;
      } else {
        (l.kind == 'e' ? elabel : alabel)[l.index] = l.text;
      }
    }
    MixedGraph g(n);
    for (std::size_t i = 0; i < edges.size(); ++i) g.add_edge(edges[i].first, edges[i].second, elabel[i]);
    for (std::size_t i = 0; i < arcs.size(); ++i) g.add_arc(arcs[i].first, arcs[i].second, alabel[i]);
    inst.graph = std::move(g);
  }
  return inst;
}

void apply_weights_text(InstanceFile& inst, std::string_view text) {
  Pending pending;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const auto t = tokens(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (t.empty() || t[0].front() == '#') continue;
    if (t[0] != "w") throw ParseError(line_no, "weights files hold only 'w' records");
    parse_weight_line(t, line_no, pending);
  }
  apply_weights(inst, pending.weights);
}

std::string emit_instance_text(const InstanceFile& inst) {
  std::ostringstream out;
  const auto& g = inst.graph;
  out << "v " << g.num_vertices() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  for (const auto& a : g.arcs()) out << "a " << a.tail << ' ' << a.head << '\n';
  for (std::size_t i = 0; i < inst.edge_weights.size(); ++i) {
    if (inst.edge_weights[i] != Rational(1)) out << "w e " << i << ' ' << to_string(inst.edge_weights[i]) << '\n';
  }
  for (std::size_t i = 0; i < inst.arc_weights.size(); ++i) {
    if (inst.arc_weights[i] != Rational(1)) out << "w a " << i << ' ' << to_string(inst.arc_weights[i]) << '\n';
  }
  if (inst.requirement) {
    const auto& r = *inst.requirement;
    for (VertexId x = 0; x < r.size(); ++x) {
      for (VertexId y = 0; y < r.size(); ++y) {
        if (x != y && r(x, y) != 0) out << "r " << x << ' ' << y << ' ' << r(x, y) << '\n';
      }
    }
  }
  for (VertexId t : inst.terminals) out << "t " << t << '\n';
  if (inst.budget) out << "k " << *inst.budget << '\n';
  for (std::size_t i = 0; i < inst.vertex_labels.size(); ++i) {
    if (!inst.vertex_labels[i].empty()) out << "label v " << i << ' ' << inst.vertex_labels[i] << '\n';
  }
  for (int i = 0; i < g.num_edges(); ++i) {
    if (!g.edge(i).label.empty()) out << "label e " << i << ' ' << g.edge(i).label << '\n';
  }
  for (int i = 0; i < g.num_arcs(); ++i) {
    if (!g.arc(i).label.empty()) out << "label a " << i << ' ' << g.arc(i).label << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

InstanceFile read_instance_file(const std::string& path) {
  const std::string text = read_text_file(path);
  if (path.size() > 5 && path.ends_with(".json")) return instance_from_json(text);
  return parse_instance_text(text);
}

SatInstance parse_sat_text(std::string_view text) {
  SatInstance sat;
  bool header = false;
  int expected = 0;
  std::vector<Literal> current;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const auto t = tokens(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (t.empty() || t[0] == "c" || t[0].front() == '#') continue;
    if (t[0] == "p") {
      if (header) throw ParseError(line_no, "second problem line");
      if (t.size() != 4 || t[1] != "cnf") throw ParseError(line_no, "expected 'p cnf <vars> <clauses>'");
      sat.num_vars = to_index(t[2], line_no, "variable count");
      expected = to_index(t[3], line_no, "clause count");
      header = true;
      continue;
    }
    if (!header) throw ParseError(line_no, "clause before the problem line");
    for (const auto& tok : t) {
      const int lit = to_int(tok, line_no, "literal");
      if (lit == 0) {
        if (current.size() < 2 || current.size() > 3) throw ParseError(line_no, "clauses need two or three literals");
        sat.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      const int var = std::abs(lit) - 1;
      if (var >= sat.num_vars) throw ParseError(line_no, "literal names an undeclared variable");
      current.push_back({var, lit < 0});
    }
  }
  if (!header) throw ParseError(0, "missing problem line");
  if (!current.empty()) throw ParseError(line_no, "last clause is not terminated by 0");
  if (static_cast<int>(sat.clauses.size()) != expected) {
    throw ParseError(0, "problem line announces " + std::to_string(expected) + " clauses, found " +
                            std::to_string(sat.clauses.size()));
  }
  return sat;
}

SatInstance read_sat_file(const std::string& path) {
  const std::string text = read_text_file(path);
  if (path.size() > 5 && path.ends_with(".json")) return sat_from_json(text);
  return parse_sat_text(text);
}

std::string emit_sat_text(const SatInstance& sat) {
  std::ostringstream out;
  out << "p cnf " << sat.num_vars << ' ' << sat.clauses.size() << '\n';
  for (const auto& c : sat.clauses) {
    for (const auto& l : c) out << (l.negated ? -(l.var + 1) : l.var + 1) << ' ';
    out << "0\n";
  }
  return out.str();
}

std::string instance_to_json(const InstanceFile& inst) {
  json j;
  const auto& g = inst.graph;
  j["vertices"] = g.num_vertices();
  j["edges"] = json::array();
  for (const auto& e : g.edges()) j["edges"].push_back({e.u, e.v});
  j["arcs"] = json::array();
  for (const auto& a : g.arcs()) j["arcs"].push_back({a.tail, a.head});
  if (!inst.edge_weights.empty()) {
    j["edge_weights"] = json::array();
    for (const auto& w : inst.edge_weights) j["edge_weights"].push_back(rational_json(w));
  }
  if (!inst.arc_weights.empty()) {
    j["arc_weights"] = json::array();
    for (const auto& w : inst.arc_weights) j["arc_weights"].push_back(rational_json(w));
  }
  if (inst.requirement) {
    json r = json::array();
    for (VertexId x = 0; x < inst.requirement->size(); ++x) {
      for (VertexId y = 0; y < inst.requirement->size(); ++y) {
        if (x != y && (*inst.requirement)(x, y) != 0) r.push_back({x, y, (*inst.requirement)(x, y)});
      }
    }
    j["requirement"] = r;
  }
  if (!inst.terminals.empty()) j["terminals"] = inst.terminals;
  if (inst.budget) j["budget"] = *inst.budget;
  if (!inst.vertex_labels.empty()) j["vertex_labels"] = inst.vertex_labels;
  bool labelled = false;
  for (const auto& e : g.edges()) labelled = labelled || !e.label.empty();
  for (const auto& a : g.arcs()) labelled = labelled || !a.label.empty();
  if (labelled) {
    j["edge_labels"] = json::array();
    for (const auto& e : g.edges()) j["edge_labels"].push_back(e.label);
    j["arc_labels"] = json::array();
    for (const auto& a : g.arcs()) j["arc_labels"].push_back(a.label);
  }
  return j.dump(2);
}

InstanceFile instance_from_json(std::string_view text) {
  InstanceFile inst;
  try {
    const json j = json::parse(text);
    const int n = j.at("vertices").get<int>();
    if (n < 0) throw ParseError(0, "negative vertex count");
    const auto labels = [&](const char* key, std::size_t count) {
      std::vector<std::string> out(count);
      if (j.contains(key)) out = j.at(key).get<std::vector<std::string>>();
      if (out.size() != count) throw ParseError(0, std::string(key) + " has the wrong length");
      return out;
    };
    const auto edges = j.value("edges", json::array());
    const auto arcs = j.value("arcs", json::array());
    const auto elabel = labels("edge_labels", edges.size());
    const auto alabel = labels("arc_labels", arcs.size());
    inst.graph = MixedGraph(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      inst.graph.add_edge(edges[i].at(0).get<int>(), edges[i].at(1).get<int>(), elabel[i]);
    }
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      inst.graph.add_arc(arcs[i].at(0).get<int>(), arcs[i].at(1).get<int>(), alabel[i]);
    }
    const auto weights = [&](const char* key, std::size_t count) {
      std::vector<Rational> out;
      if (!j.contains(key)) return out;
      for (const auto& w : j.at(key)) out.push_back(to_weight(w.get<std::string>(), 0));
      if (out.size() != count) throw ParseError(0, std::string(key) + " has the wrong length");
      return out;
    };
    inst.edge_weights = weights("edge_weights", edges.size());
    inst.arc_weights = weights("arc_weights", arcs.size());
    if (j.contains("requirement")) {
      Requirement r(n);
      for (const auto& entry : j.at("requirement")) r.set(entry.at(0), entry.at(1), entry.at(2));
      inst.requirement = r;
    }
    if (j.contains("terminals")) inst.terminals = j.at("terminals").get<std::vector<int>>();
    for (VertexId t : inst.terminals) {
      if (!inst.graph.valid_vertex(t)) throw ParseError(0, "terminal out of range");
    }
    if (j.contains("budget")) inst.budget = j.at("budget").get<int>();
    if (j.contains("vertex_labels")) inst.vertex_labels = labels("vertex_labels", static_cast<std::size_t>(n));
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("malformed JSON instance: ") + e.what());
  } catch (const GraphError& e) {
    throw ParseError(0, e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
  return inst;
}

std::string sat_to_json(const SatInstance& sat) {
  json j;
  j["variables"] = sat.num_vars;
  j["clauses"] = json::array();
  for (const auto& c : sat.clauses) {
    json cl = json::array();
    for (const auto& l : c) cl.push_back(l.negated ? -(l.var + 1) : l.var + 1);
    j["clauses"].push_back(cl);
  }
  return j.dump(2);
}

SatInstance sat_from_json(std::string_view text) {
  SatInstance sat;
  try {
    const json j = json::parse(text);
    sat.num_vars = j.at("variables").get<int>();
    for (const auto& c : j.at("clauses")) {
      std::vector<Literal> lits;
      for (const auto& l : c) {
        const int v = l.get<int>();
        if (v == 0) throw ParseError(0, "literal 0");
        lits.push_back({std::abs(v) - 1, v < 0});
      }
      sat.clauses.push_back(lits);
    }
    sat.validate();
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("malformed JSON instance: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
  return sat;
}

std::string content_hash(std::string_view canonical_text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : canonical_text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace reorient

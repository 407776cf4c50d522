// Batch front end: check, solve, poly, approx, reduce, verify-reduction, gen.
// Exit codes: 0 feasible (or success), 1 infeasible, 2 error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "reorient/connectivity.hpp"
#include "reorient/exact.hpp"
#include "reorient/generate.hpp"
#include "reorient/io.hpp"
#include "reorient/polyalg.hpp"
#include "reorient/reductions.hpp"

using namespace reorient;
using ojson = nlohmann::ordered_json;

namespace {

enum class Status { feasible, infeasible, error };

struct Report {
  std::string verb;
  std::string problem;
  Status status = Status::error;
  std::optional<Rational> optimum;
  std::vector<int> witness;
  std::string instance_hash;
  std::string message;
  ojson extra = ojson::object();
};

struct Common {
  std::string format = "text";
  bool timing = true;
  std::string output;
};

const char* status_name(Status s) {
  switch (s) {
    case Status::feasible:
      return "feasible";
    case Status::infeasible:
      return "infeasible";
    default:
      return "error";
  }
}

int exit_code(Status s) { return s == Status::feasible ? 0 : s == Status::infeasible ? 1 : 2; }

void print_report(const Report& r, const Common& c, double elapsed_ms) {
  if (c.format == "json") {
    ojson j;
    j["verb"] = r.verb;
    j["problem"] = r.problem;
    j["status"] = status_name(r.status);
    if (r.optimum) j["optimum"] = to_string(*r.optimum);
    j["witness"] = r.witness;
    if (!r.instance_hash.empty()) j["instance"] = r.instance_hash;
    if (!r.message.empty()) j["message"] = r.message;
    for (const auto& [k, v] : r.extra.items()) j[k] = v;
    if (c.timing) j["elapsed_ms"] = elapsed_ms;
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::cout << "status: " << status_name(r.status) << '\n';
  if (!r.problem.empty()) std::cout << "problem: " << r.problem << '\n';
  if (r.optimum) std::cout << "optimum: " << to_string(*r.optimum) << '\n';
  if (r.status == Status::feasible || !r.witness.empty()) {
    std::cout << "witness:";
    for (int w : r.witness) std::cout << ' ' << w;
    std::cout << '\n';
  }
  for (const auto& [k, v] : r.extra.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  if (!r.instance_hash.empty()) std::cout << "instance: " << r.instance_hash << '\n';
  if (!r.message.empty()) std::cout << "message: " << r.message << '\n';
  if (c.timing) std::cout << "elapsed_ms: " << elapsed_ms << '\n';
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad list entry '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

InstanceFile load(const std::string& path, const std::string& weights) {
  auto inst = read_instance_file(path);
  if (!weights.empty()) apply_weights_text(inst, read_text_file(weights));
  return inst;
}

std::string hash_of(const InstanceFile& inst) { return content_hash(emit_instance_text(inst)); }
std::string hash_of(const SatInstance& sat) { return content_hash(emit_sat_text(sat)); }

ConnectivityTarget target_for(const std::string& mode, int k, const InstanceFile& inst) {
  if (mode == "arc-strong") return ConnectivityTarget::arc(k);
  if (mode == "strong") return ConnectivityTarget::strong(k);
  if (mode == "requirement") {
    if (!inst.requirement) throw std::invalid_argument("mode 'requirement' needs 'r' records in the instance");
    return ConnectivityTarget::requirement(*inst.requirement);
  }
  throw std::invalid_argument("unknown mode '" + mode + "'");
}

MixedGraph apply_orientation(const MixedGraph& m, const std::vector<int>& codes) {
  if (static_cast<int>(codes.size()) != m.num_edges()) throw std::invalid_argument("one code per edge expected");
  MixedGraph out(m.num_vertices());
  for (int i = 0; i < m.num_edges(); ++i) {
    const auto& e = m.edge(i);
    if (codes[i] == 0) out.add_edge(e.u, e.v);
  }
  for (const auto& a : m.arcs()) out.add_arc(a.tail, a.head);
  for (int i = 0; i < m.num_edges(); ++i) {
    const auto& e = m.edge(i);
    if (codes[i] == 1) out.add_arc(e.u, e.v);
    if (codes[i] == 2) out.add_arc(e.v, e.u);
    if (codes[i] < 0 || codes[i] > 2) throw std::invalid_argument("orientation codes are 0, 1 or 2");
  }
  return out;
}

/// Minimisation results decided against an optional budget.
void settle_min(Report& r, const SolveResult& s, std::optional<int> budget) {
  r.witness = s.witness;
  if (!s.feasible) {
    r.status = Status::infeasible;
    return;
  }
  r.optimum = s.optimum;
  r.status = (!budget || s.optimum <= Rational(*budget)) ? Status::feasible : Status::infeasible;
  if (budget) r.extra["budget"] = *budget;
}

void settle_max(Report& r, const SolveResult& s, std::optional<int> target) {
  r.witness = s.witness;
  if (!s.feasible) {
    r.status = Status::infeasible;
    return;
  }
  r.optimum = s.optimum;
  r.status = (!target || s.optimum >= Rational(*target)) ? Status::feasible : Status::infeasible;
  if (target) r.extra["budget"] = *target;
}

InstanceFile as_file(const ReductionWitness& w) {
  InstanceFile f;
  f.graph = w.instance;
  f.requirement = w.requirement;
  f.budget = w.budget;
  f.vertex_labels = w.vertex_roles;
  return f;
}

/// Instance text without provenance, and the sidecar with it.
std::pair<std::string, std::string> split_provenance(const InstanceFile& f) {
  const std::string full = emit_instance_text(f);
  std::istringstream in(full);
  std::string line, plain;
  while (std::getline(in, line)) {
    if (line.rfind("label ", 0) != 0) plain += line + '\n';
  }
  return {plain, full};
}

// ---------------------------------------------------------------------------------------

struct CheckArgs {
  std::string file, mode = "arc-strong", apply = "none", witness, weights;
  int k = 1;
};

Report run_check(const CheckArgs& a) {
  Report r;
  r.verb = "check";
  r.problem = a.mode;
  const auto inst = load(a.file, a.weights);
  r.instance_hash = hash_of(inst);
  MixedGraph g = inst.graph;
  const auto items = parse_list(a.witness);
  if (a.apply == "reverse") {
    g = reverse_arcs(g, items);
  } else if (a.apply == "deorient") {
    g = deorient_arcs(g, items);
  } else if (a.apply == "double") {
    g = double_edges(g, items);
  } else if (a.apply == "orient") {
    g = apply_orientation(g, items);
  } else if (a.apply != "none") {
    throw std::invalid_argument("unknown --apply '" + a.apply + "'");
  }
  bool ok = false;
  if (a.mode == "arc-strong") {
    ok = is_k_arc_strong(g, a.k);
  } else if (a.mode == "strong") {
    ok = is_k_strong(g, a.k);
  } else if (a.mode == "edge-connected") {
    ok = is_k_edge_connected(g, a.k);
  } else if (a.mode == "requirement") {
    if (!inst.requirement) throw std::invalid_argument("mode 'requirement' needs 'r' records in the instance");
    if (inst.requirement->size() != g.num_vertices()) throw std::invalid_argument("requirement size mismatch");
    ok = inst.requirement->satisfied_by(g);
  } else if (a.mode == "orientation-condition") {
    ok = check_kstrong_orientation_condition(g, a.k);
  } else if (a.mode == "cactus") {
    ok = is_cactus(g);
  } else {
    throw std::invalid_argument("unknown mode '" + a.mode + "'");
  }
  r.extra["k"] = a.k;
  r.status = ok ? Status::feasible : Status::infeasible;
  return r;
}

struct SolveArgs {
  std::string problem, file, mode = "arc-strong", weights;
  int k = 1;
  int c = 4;
  bool vertex_deleted = false;
  std::optional<int> budget;
  std::int64_t node_limit = 20'000'000;
};

Report run_solve(const SolveArgs& a) {
  Report r;
  r.verb = "solve";
  r.problem = a.problem;
  SearchOptions opt;
  opt.node_limit = a.node_limit;
  if (a.problem == "max2sat") {
    const auto sat = read_sat_file(a.file);
    r.instance_hash = hash_of(sat);
    settle_max(r, max2sat(sat, opt), a.budget);
    return r;
  }
  const auto inst = load(a.file, a.weights);
  r.instance_hash = hash_of(inst);
  const auto budget = a.budget ? a.budget : inst.budget;
  if (budget) opt.budget = Rational(*budget);
  const auto& g = inst.graph;
  if (a.problem == "reversal" || a.problem == "m2sar") {
    const auto target = a.problem == "m2sar" ? ConnectivityTarget::strong(2) : target_for(a.mode, a.k, inst);
    settle_min(r, min_reversals(g, target, opt), budget);
  } else if (a.problem == "deorientation" || a.problem == "3sdo" || a.problem == "lcdo") {
    const auto target = a.problem == "3sdo"   ? ConnectivityTarget::strong(3)
                        : a.problem == "lcdo" ? target_for("requirement", 0, inst)
                                              : target_for(a.mode, a.k, inst);
    settle_min(r, min_deorientations(g, target, opt), budget);
  } else if (a.problem == "doubling") {
    settle_min(r, min_doubling(g, DoublingTarget{a.c, a.vertex_deleted}, inst.edge_weights, opt), budget);
  } else if (a.problem == "partial-orientation") {
    opt.budget.reset();
    settle_max(r, max_partial_orientation(g, target_for(a.mode, a.k, inst), opt), budget);
  } else if (a.problem == "orientation" || a.problem == "lco") {
    opt.budget.reset();
    const auto target = a.problem == "lco" ? target_for("requirement", 0, inst) : target_for(a.mode, a.k, inst);
    settle_min(r, find_orientation(g, target, opt), std::nullopt);
  } else if (a.problem == "i2vcomg") {
    const auto found = find_i2vcomg_orientation(g, inst.terminals);
    r.status = found ? Status::feasible : Status::infeasible;
    if (found) {
      for (auto c : *found) r.witness.push_back(static_cast<int>(c));
    }
  } else if (a.problem == "vc") {
    settle_min(r, vertex_cover(g, opt), budget);
  } else {
    throw std::invalid_argument("unknown problem '" + a.problem + "'");
  }
  return r;
}

struct PolyArgs {
  std::string algorithm, file, weights;
  std::optional<int> k;
};

Report run_poly(const PolyArgs& a) {
  Report r;
  r.verb = "poly";
  r.problem = a.algorithm;
  const auto inst = load(a.file, a.weights);
  r.instance_hash = hash_of(inst);
  if (a.algorithm == "w23eda") {
    settle_min(r, w23eda(inst.graph, inst.edge_weights), inst.budget);
  } else if (a.algorithm == "degrees") {
    settle_min(r, degree_deorientation(inst.graph, a.k.value_or(1)), inst.budget);
  } else if (a.algorithm == "robbins") {
    const auto bound = robbins_partial_orientation(inst.graph, 0).bound;
    const auto res = robbins_partial_orientation(inst.graph, a.k.value_or(bound));
    r.optimum = Rational(bound);
    r.status = res.feasible ? Status::feasible : Status::infeasible;
    for (auto c : res.orientation.decisions) r.witness.push_back(static_cast<int>(c));
  } else {
    throw std::invalid_argument("unknown algorithm '" + a.algorithm + "'");
  }
  return r;
}

struct ApproxArgs {
  std::string algorithm, file;
  int k = 1;
  int root = 0;
};

Report run_approx(const ApproxArgs& a) {
  Report r;
  r.verb = "approx";
  r.problem = a.algorithm;
  const auto inst = load(a.file, "");
  r.instance_hash = hash_of(inst);
  if (a.algorithm == "deor") {
    const auto res = deor_k_arc_2approx(inst.graph, a.k, a.root);
    r.status = res.feasible ? Status::feasible : Status::infeasible;
    r.witness = res.arcs;
    if (res.feasible) r.optimum = Rational(static_cast<int>(res.arcs.size()));
  } else if (a.algorithm == "m4eda") {
    const auto res = m4eda_approx(inst.graph);
    r.status = res.feasible ? Status::feasible : Status::infeasible;
    r.witness = res.doubled;
    if (res.feasible) r.optimum = Rational(static_cast<int>(res.doubled.size()));
    r.extra["forced"] = res.forced;
    r.extra["chosen"] = res.chosen;
  } else {
    throw std::invalid_argument("unknown algorithm '" + a.algorithm + "'");
  }
  return r;
}

// ---------------------------------------------------------------------------------------

struct ReduceArgs {
  std::string name, file, output, sidecar;
  std::optional<int> ell, k;
};

InstanceFile class_g_file(const ClassGInstance& inst) {
  InstanceFile f;
  f.graph = inst.graph;
  f.vertex_labels.assign(static_cast<std::size_t>(inst.graph.num_vertices()), "");
  for (std::size_t v = 0; v < inst.core.size(); ++v) f.vertex_labels[inst.core[v]] = "v" + std::to_string(v);
  for (std::size_t i = 0; i < inst.subdivision.size(); ++i) {
    f.vertex_labels[inst.subdivision[i][0]] = "s_e" + std::to_string(i) + "^u";
    f.vertex_labels[inst.subdivision[i][1]] = "s_e" + std::to_string(i) + "^v";
  }
  return f;
}

int run_reduce(const ReduceArgs& a) {
  std::optional<InstanceFile> target;
  if (a.name == "s3b-normalize") {
    write_output(a.output, emit_sat_text(normalize_to_s3bmax2sat(read_sat_file(a.file)).instance));
    return 0;
  }
  if (a.name == "s3b-3sdo") {
    target = as_file(reduce_s3bmax2sat_to_3sdo(read_sat_file(a.file), a.ell.value_or(0)).witness);
  } else {
    const auto inst = read_instance_file(a.file);
    const auto need_req = [&]() -> const Requirement& {
      if (!inst.requirement) throw std::invalid_argument("this reduction needs 'r' records");
      return *inst.requirement;
    };
    if (a.name == "i2vcomg-m2sar") {
      target = as_file(reduce_i2vcomg_to_m2sar(inst.graph, inst.terminals).witness);
    } else if (a.name == "class-g") {
      target = class_g_file(class_g_instance(inst.graph));
    } else if (a.name == "vc-4eda") {
      const auto k = a.k ? a.k : inst.budget;
      if (!k) throw std::invalid_argument("vc-4eda needs --k or a 'k' record");
      target = as_file(reduce_vc_to_4eda(inst.graph, *k).witness);
    } else if (a.name == "lstrong") {
      if (!a.ell) throw std::invalid_argument("lstrong needs --ell");
      target = as_file(lift_3sdo_to_lstrong(inst.graph, a.k.value_or(inst.budget.value_or(0)), *a.ell));
    } else if (a.name == "harden") {
      const auto h = harden_lco(inst.graph, need_req());
      InstanceFile f;
      f.graph = h.graph;
      f.requirement = h.requirement;
      f.vertex_labels.assign(static_cast<std::size_t>(h.graph.num_vertices()), "");
      f.vertex_labels[h.a] = "a";
      f.vertex_labels[h.b] = "b";
      target = f;
    } else if (a.name == "lco-lcdo") {
      target = as_file(reduce_lco_to_lcdo(inst.graph, need_req()).witness);
    } else {
      throw std::invalid_argument("unknown reduction '" + a.name + "'");
    }
  }
  const auto [plain, full] = split_provenance(*target);
  write_output(a.output, plain);
  if (!a.sidecar.empty()) write_output(a.sidecar, full);
  return 0;
}

struct VerifyArgs {
  std::string name, file;
  std::optional<int> ell, k;
  std::int64_t node_limit = 20'000'000;
};

Report run_verify(const VerifyArgs& a) {
  Report r;
  r.verb = "verify-reduction";
  r.problem = a.name;
  SearchOptions opt;
  opt.node_limit = a.node_limit;
  const auto decide_min = [&](const SolveResult& s, int budget) { return s.feasible && s.optimum <= Rational(budget); };
  bool source = false, target = false;
  if (a.name == "s3b-3sdo") {
    const auto sat = read_sat_file(a.file);
    r.instance_hash = hash_of(sat);
    const int ell = a.ell.value_or(0);
    const auto red = reduce_s3bmax2sat_to_3sdo(sat, ell);
    source = max2sat(sat).optimum >= Rational(ell);
    opt.budget = Rational(std::max(red.witness.budget, 0));
    target = red.witness.budget >= 0 &&
             decide_min(min_deorientations(red.witness.instance, ConnectivityTarget::strong(3), opt), red.witness.budget);
  } else {
    const auto inst = read_instance_file(a.file);
    r.instance_hash = hash_of(inst);
    const auto& g = inst.graph;
    if (a.name == "i2vcomg-m2sar") {
      const auto red = reduce_i2vcomg_to_m2sar(g, inst.terminals);
      source = find_i2vcomg_orientation(g, inst.terminals).has_value();
      opt.budget = Rational(red.witness.budget);
      target = decide_min(min_reversals(red.witness.instance, ConnectivityTarget::strong(2), opt), red.witness.budget);
    } else if (a.name == "class-g") {
      const auto cg = class_g_instance(g);
      const auto small = vertex_cover(g, opt).optimum;
      const auto big = vertex_cover(cg.graph, opt).optimum;
      r.extra["source_optimum"] = to_string(small);
      r.extra["target_optimum"] = to_string(big);
      source = target = big == small + Rational(g.num_edges());
    } else if (a.name == "vc-4eda") {
      const auto k = a.k ? a.k : inst.budget;
      if (!k) throw std::invalid_argument("vc-4eda needs --k or a 'k' record");
      const auto red = reduce_vc_to_4eda(g, *k);
      source = decide_min(vertex_cover(g, opt), *k);
      opt.budget = Rational(red.witness.budget);
      target = decide_min(min_doubling(red.witness.instance, DoublingTarget{4, false}, {}, opt), red.witness.budget);
    } else if (a.name == "lstrong") {
      if (!a.ell) throw std::invalid_argument("lstrong needs --ell");
      const int budget = a.k.value_or(inst.budget.value_or(0));
      const auto lifted = lift_3sdo_to_lstrong(g, budget, *a.ell);
      opt.budget = Rational(budget);
      source = decide_min(min_deorientations(g, ConnectivityTarget::strong(3), opt), budget);
      target = decide_min(min_deorientations(lifted.instance, ConnectivityTarget::strong(*a.ell), opt), budget);
    } else if (a.name == "harden") {
      if (!inst.requirement) throw std::invalid_argument("harden needs 'r' records");
      const auto h = harden_lco(g, *inst.requirement);
      source = best_orientation_for_requirement(g, *inst.requirement, opt).feasible;
      target = best_orientation_for_requirement(h.graph, h.requirement, opt).feasible;
    } else if (a.name == "lco-lcdo") {
      if (!inst.requirement) throw std::invalid_argument("lco-lcdo needs 'r' records");
      const auto red = reduce_lco_to_lcdo(g, *inst.requirement);
      source = best_orientation_for_requirement(g, *inst.requirement, opt).feasible;
      opt.budget = Rational(red.witness.budget);
      target = decide_min(min_deorientations(red.witness.instance,
                                             ConnectivityTarget::requirement(*red.witness.requirement), opt),
                          red.witness.budget);
    } else {
      throw std::invalid_argument("unknown reduction '" + a.name + "'");
    }
  }
  r.extra["source_positive"] = source;
  r.extra["target_positive"] = target;
  r.status = source == target ? Status::feasible : Status::infeasible;
  if (source != target) r.message = "source and target disagree";
  return r;
}

struct GenArgs {
  std::vector<std::string> params;
  std::string output;
};

int run_gen(const GenArgs& a) {
  if (a.params.empty()) throw std::invalid_argument("gen needs a kind");
  const auto& kind = a.params[0];
  const auto need = [&](std::size_t n) {
    if (a.params.size() != n + 1) {
      throw std::invalid_argument("gen " + kind + " expects " + std::to_string(n) + " parameters");
    }
  };
  const auto integer = [&](std::size_t i) { return std::stoi(a.params[i]); };
  const auto seed = [&](std::size_t i) {
    std::string s = a.params[i];
    if (s.rfind("seed=", 0) == 0) s = s.substr(5);
    return static_cast<std::uint64_t>(std::stoull(s));
  };
  InstanceFile f;
  if (kind == "rocket") {
    need(2);
    if (a.params[2] != "out" && a.params[2] != "in") throw std::invalid_argument("rocket direction is out or in");
    const auto rk = build_rocket(a.params[2] == "out" ? RocketKind::out : RocketKind::in, integer(1));
    f.graph = rk.graph;
    const int k = rk.layout.k;
    f.vertex_labels = {"x_0", "y_0", "z_0", "v*"};
    for (int i = 1; i <= k; ++i) f.vertex_labels.push_back("x_" + std::to_string(i));
    for (int i = 1; i <= k; ++i) f.vertex_labels.push_back("y_" + std::to_string(i));
    for (int i = 1; i <= k; ++i) f.vertex_labels.push_back("z_" + std::to_string(i));
    f.vertex_labels.push_back("u");
  } else if (kind == "random-digraph") {
    need(3);
    f.graph = random_digraph(integer(1), integer(2), seed(3));
  } else if (kind == "cactus") {
    need(2);
    f.graph = random_cactus(integer(1), seed(2));
    if (!is_cactus(f.graph)) throw std::logic_error("generated graph is not a cactus");
  } else if (kind == "class-g-from") {
    need(1);
    f = class_g_file(class_g_instance(read_instance_file(a.params[1]).graph));
  } else if (kind == "s3b-sat") {
    need(2);
    const auto sat = random_s3b_sat(integer(1), seed(2));
    write_output(a.output, emit_sat_text(sat));
    return 0;
  } else {
    throw std::invalid_argument("unknown generator '" + kind + "'");
  }
  write_output(a.output, emit_instance_text(f));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arc reversal, partial orientation, deorientation and doubling toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("!--no-timing", common.timing, "Omit elapsed time from reports");
  int threads = 1;
  app.add_option("--threads", threads, "Worker threads (the solvers are sequential; only 1 is accepted)")
      ->check(CLI::Range(1, 1));

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Test a connectivity property, optionally after applying a witness");
  c->add_option("file", check.file, "Instance file")->required();
  c->add_option("--mode", check.mode,
                "arc-strong | strong | edge-connected | requirement | orientation-condition | cactus");
  c->add_option("--k", check.k, "Connectivity level");
  c->add_option("--apply", check.apply, "none | reverse | deorient | double | orient");
  c->add_option("--witness", check.witness, "Element indices (or orientation codes), comma separated");
  c->add_option("--weights", check.weights, "Weights file");

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Exact desk-scale solvers");
  s->add_option("problem", solve.problem,
                "reversal | m2sar | deorientation | 3sdo | lcdo | doubling | partial-orientation | orientation | "
                "lco | i2vcomg | vc | max2sat")
      ->required();
  s->add_option("file", solve.file, "Instance file")->required();
  s->add_option("--mode", solve.mode, "arc-strong | strong | requirement");
  s->add_option("--k", solve.k, "Connectivity level");
  s->add_option("--c", solve.c, "Doubling target edge-connectivity");
  s->add_flag("--vertex-deleted", solve.vertex_deleted, "Doubling also needs G'-v 2-edge-connected");
  s->add_option("--budget", solve.budget, "Decision budget (overrides a 'k' record)");
  s->add_option("--node-limit", solve.node_limit, "Search node limit");
  s->add_option("--weights", solve.weights, "Weights file");

  PolyArgs poly;
  auto* p = app.add_subcommand("poly", "Polynomial algorithms");
  p->add_option("algorithm", poly.algorithm, "w23eda | degrees | robbins")->required();
  p->add_option("file", poly.file, "Instance file")->required();
  p->add_option("--k", poly.k, "Degree bound or number of edges to orient");
  p->add_option("--weights", poly.weights, "Weights file");

  ApproxArgs approx;
  auto* ap = app.add_subcommand("approx", "Approximation algorithms");
  ap->add_option("algorithm", approx.algorithm, "deor | m4eda")->required();
  ap->add_option("file", approx.file, "Instance file")->required();
  ap->add_option("--k", approx.k, "Arc-strength target");
  ap->add_option("--root", approx.root, "Branching root");

  ReduceArgs reduce;
  auto* re = app.add_subcommand("reduce", "Build a reduction target with its provenance sidecar");
  re->add_option("name", reduce.name,
                 "i2vcomg-m2sar | class-g | vc-4eda | s3b-normalize | s3b-3sdo | lstrong | harden | lco-lcdo")
      ->required();
  re->add_option("file", reduce.file, "Source instance")->required();
  re->add_option("-o,--output", reduce.output, "Target instance (default stdout)");
  re->add_option("--sidecar", reduce.sidecar, "Target instance with label records");
  re->add_option("--ell", reduce.ell, "Clause target or strength level");
  re->add_option("--k", reduce.k, "Source budget");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify-reduction", "Decide source and target exactly and compare");
  v->add_option("name", verify.name, "Reduction name (as for reduce)")->required();
  v->add_option("file", verify.file, "Source instance")->required();
  v->add_option("--ell", verify.ell, "Clause target or strength level");
  v->add_option("--k", verify.k, "Source budget");
  v->add_option("--node-limit", verify.node_limit, "Search node limit");

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate instances");
  g->add_option("params", gen.params,
                "rocket <k> <out|in> | random-digraph <n> <m> <seed> | cactus <n> <seed> | class-g-from <file> | "
                "s3b-sat <vars> <seed>")
      ->required();
  g->add_option("-o,--output", gen.output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    if (*re) return run_reduce(reduce);
    if (*g) return run_gen(gen);
    if (*c) report = run_check(check);
    if (*s) report = run_solve(solve);
    if (*p) report = run_poly(poly);
    if (*ap) report = run_approx(approx);
    if (*v) report = run_verify(verify);
  } catch (const std::exception& e) {
    if (*re || *g) {
      std::cerr << "error: " << e.what() << '\n';
      return 2;
    }
    report.verb = app.get_subcommands().front()->get_name();
    report.status = Status::error;
    report.message = e.what();
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  print_report(report, common, ms);
  return exit_code(report.status);
}

#include "rigikit/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rigikit/bounded.hpp"
#include "rigikit/decide.hpp"
#include "rigikit/errors.hpp"
#include "rigikit/graph_io.hpp"
#include "rigikit/json_report.hpp"
#include "rigikit/realize.hpp"
#include "rigikit/reduce.hpp"
#include "rigikit/selftest.hpp"

namespace rigikit::cli {

namespace {

using nlohmann::json;

struct Settings {
  std::uint64_t seed = 0;
  std::string format = "json";
  unsigned trials = 3;

  RankOptions rank() const { return RankOptions{seed, trials}; }
  bool text() const { return format == "text"; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, "cannot open file");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json parse_json_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": byte " + std::to_string(e.byte), "malformed JSON");
  }
}

MixedGraph load_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path + (e.location().empty() ? "" : ": " + e.location()), e.message());
  }
}

std::string rational_text(const Rational& q) { return q.get_str(); }

std::string names_text(const std::vector<std::string>& names) {
  std::string s = "{";
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + names[i];
  return s + "}";
}

std::string edge_text(const NamedEdge& e) { return e.u + e.v + "_" + std::string(to_string(e.kind)); }

std::string edges_text(const std::vector<NamedEdge>& es) {
  std::string s = "{";
  for (std::size_t i = 0; i < es.size(); ++i) s += (i ? "," : "") + edge_text(es[i]);
  return s + "}";
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

void print_trace_text(std::ostream& out, const ReductionTrace& t) {
  out << "reduction steps: " << t.steps.size() << (t.partial ? " (partial: input not rigid, R1 only)" : "") << "\n";
  for (const auto& s : t.steps) {
    if (s.kind == ReductionKind::R1) {
      out << "  R1 delete " << edge_text(s.edge) << " in direction-pure circuit " << edges_text(s.circuit) << "\n";
    } else {
      out << "  R2 keep " << names_text(s.block) << " exposed by " << edge_text(s.edge) << "\n";
    }
  }
  out << "reduced graph: " << names_text(t.result.vertex_names()) << " " << edges_text(t.result.named(t.result.all_edges()))
      << " hash " << t.hashes.back() << "\n";
}

void print_verdict_text(std::ostream& out, const Verdict& v) {
  const json j = to_json(v);
  out << "answer: " << to_string(v.answer) << "\n";
  out << "certificate: " << certificate_name(v.certificate);
  const json& c = j["certificate"];
  for (auto it = c.begin(); it != c.end(); ++it)
    if (it.key() != "kind") out << " " << it.key() << "=" << it.value().dump();
  out << "\n";
  out << "justification: " << v.justification << "\n";
  out << "note: " << j["note"].get<std::string>() << "\n";
  if (v.trace) print_trace_text(out, *v.trace);
}

void print_report_text(std::ostream& out, const MixedGraph& g, const ConditionsReport& r) {
  out << "rigid: " << yes_no(r.rigid) << " (rank " << r.rank << " of " << r.required_rank << ")\n";
  out << "redundantly rigid: " << yes_no(r.redundantly_rigid.value);
  if (r.redundantly_rigid.failing_edge) out << " (fails at " << edge_text(g.named(*r.redundantly_rigid.failing_edge)) << ")";
  out << "\n2-connected: " << yes_no(r.two_connected.value);
  if (r.two_connected.cut_vertex) out << " (cut vertex " << g.name(*r.two_connected.cut_vertex) << ")";
  out << "\ndirection-balanced: " << yes_no(r.direction_balanced.value);
  if (r.direction_balanced.separation) {
    const auto& s = *r.direction_balanced.separation;
    out << " (cut {" << g.name(s.u) << "," << g.name(s.v) << "}, side "
        << names_text(g.names_of(s.sides.at(*r.direction_balanced.deficient_side))) << ")";
  }
  out << "\nM-connected: " << yes_no(r.m_connected) << " (" << r.m_component_count << " components)\n";
  out << "direction-independent: " << yes_no(r.direction_independent.independent);
  if (r.direction_independent.circuit) out << " (circuit " << edges_text(g.named(*r.direction_independent.circuit)) << ")";
  out << "\nbounded: " << yes_no(r.bounded) << "\n";
  out << "G-e rigid for every length edge: " << yes_no(r.all_length_redundant()) << "\n";
  out << "G-e bounded for every direction edge: " << yes_no(r.all_direction_bounded()) << "\n";
}

void print_framework_text(std::ostream& out, const Framework& f) {
  for (VertexId v = 0; v < f.graph.vertex_count(); ++v)
    out << f.graph.name(v) << " " << rational_text(f.at(v).x) << " " << rational_text(f.at(v).y) << "\n";
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_analyze(const Settings& s, const std::string& path, std::ostream& out) {
  const MixedGraph g = load_graph(path);
  const ConditionsReport report = conditions_report(g, s.rank());
  const MatroidView view = MatroidView::build(g, s.rank());
  const BoundedDecomposition blocks = bounded_components(g, s.rank());
  if (s.text()) {
    print_report_text(out, g, report);
    out << "M-components:";
    for (const EdgeSet& c : view.components) out << " " << edges_text(g.named(c));
    out << "\nbounded components:";
    for (const VertexSet& b : blocks.blocks) out << " " << names_text(g.names_of(b));
    out << "\n";
  } else {
    emit(out, json{{"graph_hash", graph_hash(g)},
                   {"conditions", to_json(g, report)},
                   {"matroid", to_json(view)},
                   {"bounded_components", to_json(g, blocks)}});
  }
  return kSuccess;
}

int cmd_decide(const Settings& s, const std::string& path, bool fast_path, std::ostream& out) {
  const MixedGraph g = load_graph(path);
  const Verdict v = decide_global_rigidity(g, DecideOptions{s.rank(), fast_path});
  if (s.text()) {
    print_verdict_text(out, v);
  } else {
    json j = to_json(v);
    j["graph_hash"] = graph_hash(g);
    emit(out, j);
  }
  return v.answer == Answer::AllGenericGloballyRigid ? kSuccess : kNotAll;
}

int cmd_reduce(const Settings& s, const std::string& path, std::ostream& out) {
  const MixedGraph g = load_graph(path);
  const ReductionTrace t = reduce_fully(g, s.rank());
  if (s.text()) {
    print_trace_text(out, t);
  } else {
    emit(out, to_json(t));
  }
  return kSuccess;
}

int cmd_realize(const Settings& s, const std::string& path, std::ostream& out) {
  SlopeInstance in;
  try {
    in = slope_instance_from_json(parse_json_file(path));
  } catch (const json::exception& e) {
    throw InputError(path, e.what());
  }
  const Framework f = realize_from_slopes(in, s.seed);
  if (s.text()) {
    print_framework_text(out, f);
  } else {
    emit(out, framework_to_json(f));
  }
  return kSuccess;
}

int cmd_compare(const Settings& s, const std::string& graph_path, const std::string& p_path,
                const std::string& q_path, std::ostream& out) {
  const MixedGraph g = load_graph(graph_path);
  const Framework p = framework_from_json(g, parse_json_file(p_path));
  const Framework q = framework_from_json(g, parse_json_file(q_path));
  const bool equivalent = are_equivalent(g, p.coords, q.coords);
  const bool congruent = are_congruent(p.coords, q.coords);
  if (s.text()) {
    out << "equivalent: " << yes_no(equivalent) << "\ncongruent: " << yes_no(congruent) << "\n";
  } else {
    emit(out, json{{"equivalent", equivalent}, {"congruent", congruent}});
  }
  return kSuccess;
}

int cmd_gen(const Settings& s, std::size_t n, std::size_t lengths, std::ostream& out) {
  const MixedGraph g = random_minimally_rigid(n, s.seed, lengths);
  if (s.text()) {
    out << names_text(g.vertex_names()) << " " << edges_text(g.named(g.all_edges())) << "\n";
  } else {
    emit(out, graph_to_json(g));
  }
  return kSuccess;
}

int cmd_selftest(const Settings& s, std::size_t samples, std::ostream& out) {
  const SelftestResult r = run_selftest(s.seed, samples);
  if (s.text()) {
    for (const auto& c : r.checks) out << c.name << ": " << c.cases - c.failures << "/" << c.cases << " agree\n";
    out << (r.passed() ? "selftest passed" : "selftest FAILED") << "\n";
  } else {
    emit(out, to_json(r));
  }
  return r.passed() ? kSuccess : kInternalError;
}

void report_error(std::ostream& out, const Settings& s, const std::string& kind, const std::string& location,
                  const std::string& message) {
  if (s.text()) {
    out << "error (" << kind << "): " << (location.empty() ? "" : location + ": ") << message << "\n";
  } else {
    json e{{"kind", kind}, {"message", message}};
    if (!location.empty()) e["location"] = location;
    emit(out, json{{"error", std::move(e)}});
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Global rigidity of generic direction-length frameworks", "rigikit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", s.seed, "Seed for every randomised step")->capture_default_str();
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--trials", s.trials, "Rank oracle trials")->check(CLI::Range(1u, 64u))->capture_default_str();

  std::string graph_path, p_path, q_path;
  bool no_fast_path = false;
  std::size_t n = 0, lengths = 0, samples = 300;

  auto* analyze = app.add_subcommand("analyze", "Conditions report, matroid view and bounded components");
  analyze->add_option("graph", graph_path)->required();
  auto* decide = app.add_subcommand("decide", "Decide whether every generic realisation is globally rigid");
  decide->add_option("graph", graph_path)->required();
  decide->add_flag("--no-fast-path", no_fast_path, "Send one-length-edge graphs through the reduction");
  auto* reduce = app.add_subcommand("reduce", "Direction reduction trace");
  reduce->add_option("graph", graph_path)->required();
  auto* realize = app.add_subcommand("realize", "Realisation from prescribed slopes");
  realize->add_option("slopes", graph_path)->required();
  auto* compare = app.add_subcommand("compare", "Equivalence and congruence of two frameworks");
  compare->add_option("graph", graph_path)->required();
  compare->add_option("p", p_path)->required();
  compare->add_option("q", q_path)->required();
  auto* gen = app.add_subcommand("gen", "Random minimally rigid mixed graph");
  gen->add_option("-n,--vertices", n)->required();
  gen->add_option("-l,--lengths", lengths)->required();
  auto* selftest = app.add_subcommand("selftest", "Oracle agreement suite");
  selftest->add_option("--samples", samples)->capture_default_str();

  std::vector<const char*> argv{"rigikit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(s, graph_path, out);
    if (decide->parsed()) return cmd_decide(s, graph_path, !no_fast_path, out);
    if (reduce->parsed()) return cmd_reduce(s, graph_path, out);
    if (realize->parsed()) return cmd_realize(s, graph_path, out);
    if (compare->parsed()) return cmd_compare(s, graph_path, p_path, q_path, out);
    if (gen->parsed()) return cmd_gen(s, n, lengths, out);
    if (selftest->parsed()) return cmd_selftest(s, samples, out);
  } catch (const InputError& e) {
    report_error(out, s, "input", e.location(), e.message());
    return kInputError;
  } catch (const PreconditionError& e) {
    report_error(out, s, "precondition", "", e.what());
    return kInputError;
  } catch (const std::exception& e) {
    report_error(out, s, "internal", "", e.what());
    err << "rigikit: internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace rigikit::cli

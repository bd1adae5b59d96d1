#include "rigikit/decide.hpp"

#include <algorithm>

#include "rigikit/bounded.hpp"
#include "rigikit/errors.hpp"

namespace rigikit {

std::string_view to_string(Answer a) {
  return a == Answer::AllGenericGloballyRigid ? "ALL_GENERIC_GLOBALLY_RIGID" : "NOT_ALL";
}

namespace {

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

constexpr const char* kTrivial = "a single vertex admits only translations";
constexpr const char* kNoLengths = "direction-pure edge sets have rank at most 2|V|-3";
constexpr const char* kNotRigid = "rigidity is necessary for global rigidity";
constexpr const char* kOneLength = "rigid with exactly one length edge";
constexpr const char* kIrreducible =
    "direction reduction preserves the answer; an irreducible graph with |L| >= 2 is globally rigid iff "
    "2-connected, direction-balanced and redundantly rigid";
constexpr const char* kSparse = "sparse characterisation through the unique circuit of M(G)";
constexpr const char* kSparseMinimal = "a minimally rigid graph with |L| >= 2 is not redundantly rigid";

std::size_t required_rank(const MixedGraph& g) { return g.vertex_count() <= 1 ? 0 : 2 * g.vertex_count() - 2; }

Verdict no(Certificate c, std::string why) { return Verdict{Answer::NotAll, std::move(c), std::nullopt, std::move(why)}; }
Verdict yes(Certificate c, std::string why) {
  return Verdict{Answer::AllGenericGloballyRigid, std::move(c), std::nullopt, std::move(why)};
}

/// Decides an irreducible rigid graph with |L| >= 2 by the three conditions.
Verdict decide_irreducible(const MixedGraph& h, const RankOptions& options) {
  if (const auto c = is_2connected(h); !c.value) {
    cert::Not2Connected out;
    if (c.cut_vertex) out.cut_vertex = h.name(*c.cut_vertex);
    if (c.component) out.component = h.names_of(*c.component);
    return no(out, kIrreducible);
  }
  if (const auto b = is_direction_balanced(h); !b.value) {
    const Separation& s = *b.separation;
    return no(cert::NotDirectionBalanced{h.name(s.u), h.name(s.v), h.names_of(s.sides.at(*b.deficient_side))},
              kIrreducible);
  }
  if (const auto r = is_redundantly_rigid(h, options); !r.value)
    return no(cert::NotRedundantlyRigid{h.named(*r.failing_edge)}, kIrreducible);
  return yes(cert::IrreducibleAllConditions{generic_rank(h, options)}, kIrreducible);
}

}  // namespace

std::string_view certificate_name(const Certificate& c) {
  return std::visit(Overloaded{
                        [](const cert::TrivialSingleVertex&) { return "TrivialSingleVertex"; },
                        [](const cert::RigidWithOneLengthEdge&) { return "RigidWithOneLengthEdge"; },
                        [](const cert::IrreducibleAllConditions&) { return "IrreducibleAllConditions"; },
                        [](const cert::NotRigid&) { return "NotRigid"; },
                        [](const cert::Not2Connected&) { return "Not2Connected"; },
                        [](const cert::NotDirectionBalanced&) { return "NotDirectionBalanced"; },
                        [](const cert::NotRedundantlyRigid&) { return "NotRedundantlyRigid"; },
                        [](const cert::SparseCircuit&) { return "SparseCircuit"; },
                    },
                    c);
}

Verdict decide_global_rigidity(const MixedGraph& g, const DecideOptions& options) {
  const RankOptions& ro = options.rank;
  if (g.vertex_count() <= 1) return yes(cert::TrivialSingleVertex{}, kTrivial);
  const std::size_t required = required_rank(g);
  if (g.length_count() == 0) return no(cert::NotRigid{generic_rank(g, ro), required, true}, kNoLengths);
  const std::size_t rank = generic_rank(g, ro);
  if (rank != required) return no(cert::NotRigid{rank, required, false}, kNotRigid);
  if (g.length_count() == 1 && options.single_length_fast_path)
    return yes(cert::RigidWithOneLengthEdge{false}, kOneLength);

  ReductionTrace trace = reduce_fully(g, ro);
  const MixedGraph& h = trace.result;
  Verdict v = h.length_count() == 1 ? yes(cert::RigidWithOneLengthEdge{true}, kOneLength) : decide_irreducible(h, ro);
  v.trace = std::move(trace);
  return v;
}

Verdict decide_sparse(const MixedGraph& g, const RankOptions& options) {
  const std::size_t n = g.vertex_count();
  if (g.edge_count() + 1 > 2 * n && !(n == 0 && g.edge_count() == 0))
    throw PreconditionError("decide_sparse: needs |D| + |L| <= 2|V| - 1");
  if (n <= 1) return yes(cert::TrivialSingleVertex{}, kTrivial);
  const MatroidView view = MatroidView::build(g, options);
  if (!view.rigid()) return no(cert::NotRigid{view.rank, required_rank(g), g.length_count() == 0}, kNotRigid);
  if (g.length_count() == 1) return yes(cert::RigidWithOneLengthEdge{false}, kOneLength);
  if (g.edge_count() == 2 * n - 2)
    return no(cert::NotRedundantlyRigid{g.named(view.coloops.front())}, kSparseMinimal);

  const EdgeSet& c = view.fundamental_circuits.front().second;
  const MixedGraph spanned = g.spanned_by(c);
  cert::SparseCircuit sc;
  sc.circuit = g.named(c);
  sc.mixed = is_mixed(g, c);
  sc.direction_balanced = is_direction_balanced(spanned).value;
  const EdgeSet l = g.length_edges();
  sc.contains_lengths = std::includes(c.begin(), c.end(), l.begin(), l.end());
  return sc.holds() ? yes(sc, kSparse) : no(sc, kSparse);
}

std::optional<std::string> check_certificate(const MixedGraph& g, const Verdict& v, const RankOptions& options) {
  const bool says_yes = v.answer == Answer::AllGenericGloballyRigid;
  const MixedGraph& h = v.trace ? v.trace->result : g;
  if (v.trace) {
    if (auto bad = verify_trace(g, *v.trace, options)) return "trace: " + *bad;
    if (!is_direction_irreducible(h, options)) return "trace result is not direction-irreducible";
  }
  auto fail_if = [](bool bad, const char* what) -> std::optional<std::string> {
    if (bad) return std::string(what);
    return std::nullopt;
  };
  return std::visit(
      Overloaded{
          [&](const cert::TrivialSingleVertex&) {
            return fail_if(!says_yes || g.vertex_count() > 1, "trivial certificate on a graph with several vertices");
          },
          [&](const cert::RigidWithOneLengthEdge&) {
            return fail_if(!says_yes || h.length_count() != 1 || !is_rigid(h, options) || !is_rigid(g, options),
                           "graph is not rigid with one length edge");
          },
          [&](const cert::IrreducibleAllConditions&) {
            return fail_if(!says_yes || !v.trace || h.length_count() < 2 || !is_2connected(h).value ||
                               !is_direction_balanced(h).value || !is_redundantly_rigid(h, options).value,
                           "a required condition fails on the reduced graph");
          },
          [&](const cert::NotRigid& c) {
            return fail_if(says_yes || c.required != required_rank(g) || c.rank >= c.required ||
                               generic_rank(g, options) != c.rank ||
                               c.no_length_edges != (g.length_count() == 0),
                           "rank deficit does not reproduce");
          },
          [&](const cert::Not2Connected& c) -> std::optional<std::string> {
            if (says_yes) return "negative certificate on a YES answer";
            if (c.cut_vertex) {
              auto x = h.find_vertex(*c.cut_vertex);
              if (!x) return "unknown cut vertex";
              if (components_without(h, {*x}).size() < 2) return "cut vertex does not disconnect";
              return std::nullopt;
            }
            return fail_if(components_without(h, {}).size() < 2, "graph is connected");
          },
          [&](const cert::NotDirectionBalanced& c) -> std::optional<std::string> {
            if (says_yes) return "negative certificate on a YES answer";
            auto u = h.find_vertex(c.u);
            auto w = h.find_vertex(c.v);
            if (!u || !w || *u == *w) return "invalid cut pair";
            VertexSet cut{std::min(*u, *w), std::max(*u, *w)};
            const auto sides = components_without(h, cut);
            VertexSet side;
            for (const auto& name : c.side) {
              auto x = h.find_vertex(name);
              if (!x) return "unknown side vertex";
              side.push_back(*x);
            }
            std::sort(side.begin(), side.end());
            if (sides.size() < 2 || std::find(sides.begin(), sides.end(), side) == sides.end())
              return "side is not a component of G - {u,v}";
            std::vector<bool> in(h.vertex_count(), false);
            for (VertexId x : side) in[x] = true;
            in[cut[0]] = in[cut[1]] = true;
            for (const Edge& e : h.edges()) {
              const bool joins_cut = (e.u == cut[0] && e.v == cut[1]);
              if (e.kind == EdgeKind::Direction && in[e.u] && in[e.v] && !joins_cut)
                return "side holds a direction edge";
            }
            return std::nullopt;
          },
          [&](const cert::NotRedundantlyRigid& c) -> std::optional<std::string> {
            if (says_yes) return "negative certificate on a YES answer";
            auto e = h.find_edge(c.edge);
            if (!e) return "edge not in graph";
            return fail_if(is_rigid(h.without_edge(*e), options) || !is_rigid(h, options),
                           "removing the edge keeps the graph rigid");
          },
          [&](const cert::SparseCircuit& c) -> std::optional<std::string> {
            if (says_yes != c.holds()) return "answer does not follow from the circuit properties";
            if (g.edge_count() != 2 * g.vertex_count() - 1) return "graph is not of size 2|V|-1";
            EdgeSet ids;
            for (const auto& ne : c.circuit) {
              auto e = g.find_edge(ne);
              if (!e) return "circuit edge not in graph";
              ids.push_back(*e);
            }
            std::sort(ids.begin(), ids.end());
            const GenericRankOracle oracle(g, options);
            if (oracle.rank(ids) != ids.size() - 1) return "circuit is not dependent";
            for (EdgeIndex x : ids) {
              EdgeSet rest;
              std::copy_if(ids.begin(), ids.end(), std::back_inserter(rest), [&](EdgeIndex y) { return y != x; });
              if (!oracle.is_independent(rest)) return "circuit is not minimal";
            }
            const EdgeSet l = g.length_edges();
            if (c.mixed != is_mixed(g, ids) ||
                c.direction_balanced != is_direction_balanced(g.spanned_by(ids)).value ||
                c.contains_lengths != std::includes(ids.begin(), ids.end(), l.begin(), l.end()))
              return "circuit properties do not reproduce";
            return std::nullopt;
          },
      },
      v.certificate);
}

bool ConditionsReport::all_length_redundant() const {
  return std::all_of(length_redundancy.begin(), length_redundancy.end(), [](const EdgeCheck& c) { return c.value; });
}

bool ConditionsReport::all_direction_bounded() const {
  return std::all_of(direction_boundedness.begin(), direction_boundedness.end(),
                     [](const EdgeCheck& c) { return c.value; });
}

ConditionsReport conditions_report(const MixedGraph& g, const RankOptions& options) {
  ConditionsReport r;
  const MatroidView view = MatroidView::build(g, options);
  r.rank = view.rank;
  r.required_rank = required_rank(g);
  r.rigid = view.rigid();
  r.redundantly_rigid = is_redundantly_rigid(g, options);
  r.two_connected = is_2connected(g);
  r.direction_balanced = is_direction_balanced(g);
  r.m_component_count = view.components.size();
  r.m_connected = g.edge_count() <= 1 || view.components.size() == 1;
  r.direction_independent = direction_independent(g, options);
  r.bounded = is_bounded(g, options);
  for (EdgeIndex e : g.length_edges()) r.length_redundancy.push_back({g.named(e), is_rigid(g.without_edge(e), options)});
  for (EdgeIndex e : g.direction_edges())
    r.direction_boundedness.push_back({g.named(e), is_bounded(g.without_edge(e), options)});
  return r;
}

}  // namespace rigikit

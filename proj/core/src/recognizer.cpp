#include "circarc/recognizer.hpp"

#include "circarc/completion.hpp"
#include "circarc/delta.hpp"
#include "circarc/errors.hpp"
#include "circarc/intervals.hpp"
#include "circarc/knotting.hpp"

#include <string>

namespace circarc {

Vertex choose_anchor(const Graph& h) {
  Vertex best = -1;
  for (Vertex v = 0; v < h.size(); ++v) {
    if (best < 0 || h.closed_degree(v) < h.closed_degree(best)) best = v;
  }
  return best;
}

namespace {

Certificate finish(const Graph& g, Certificate cert) {
  if (const Check c = verify_certificate(g, cert); !c) {
    throw InternalError("emitted certificate fails verification: " + c.reason);
  }
  return cert;
}

Certificate negative(const Graph& g, const ReductionTrace& trace, const Completion& c,
                     AvoidWalkPair pair) {
  NegativeCertificate body;
  body.completion = c.graph.graph();
  body.base_size = c.base_size;
  for (Vertex v = c.base_size; v < c.graph.size(); ++v) body.partner.push_back(c.pairing.partner[v]);
  body.obstruction = std::move(pair);
  return finish(g, Certificate{trace, std::move(body)});
}

}  // namespace

Certificate recognize(const Graph& g) {
  const Reduction red = reduce(g);
  const int nr = red.graph.size();
  if (nr <= 1) {
    ArcRepresentation base;
    if (nr == 1) base = ArcRepresentation{4, {Arc{0, 1}}};
    return finish(g, Certificate{red.trace, PositiveCertificate{expand_arcs(red.trace, g.size(), base)}});
  }

  const TypedGraph t = TypedGraph::classify(red.graph);
  const Completion c = complete(t);
  const TypedGraph& h = c.graph;
  const Vertex z = choose_anchor(h.graph());

  const KnottingGraph k(h, z);
  const auto knots = bipartite_or_odd_cycle(k);
  if (const auto* odd = std::get_if<OddCycle>(&knots)) {
    return negative(g, red.trace, c, extract_invertible_pair(h, k, *odd));
  }
  const auto split = disagreement_partition(h, c.pairing, z);
  if (const auto* pair = std::get_if<AvoidWalkPair>(&split)) {
    return negative(g, red.trace, c, *pair);
  }

  const auto zs = build_z(h, c.pairing, z, std::get<std::vector<Vertex>>(split));
  const LabelledGraph l = LabelledGraph::from_typed(h, zs);
  Orientation o;
  try {
    o = interval_orientation(l);
  } catch (const DeltaInvertiblePair&) {
    // Unreachable when the anchor's knotting graph is bipartite; try every
    // anchor before giving up.
    for (Vertex w = 0; w < h.size(); ++w) {
      const KnottingGraph kw(h, w);
      const auto other = bipartite_or_odd_cycle(kw);
      if (const auto* odd = std::get_if<OddCycle>(&other)) {
        return negative(g, red.trace, c, extract_invertible_pair(h, kw, *odd));
      }
    }
    throw InternalError("Z has no interval ordering although no anchor yields an obstruction");
  }

  const IntervalModel model = build_intervals(l, o.order);
  if (const Check ck = check_interval_model(l, model); !ck) {
    throw InternalError("interval model is inconsistent: " + ck.reason);
  }
  const ArcRepresentation full = lift_to_circle(model, zs, c.pairing, h.size());
  if (const Check ck = verify_representation(h.graph(), full); !ck) {
    throw InternalError("lifted model of the completion is wrong: " + ck.reason);
  }
  const ArcRepresentation arcs = expand_arcs(red.trace, g.size(), restrict_arcs(full, nr));
  return finish(g, Certificate{red.trace, PositiveCertificate{arcs}});
}

Check verify_positive(const Graph& g, const Certificate& cert) {
  if (!cert.circular_arc()) return Check::fail("certificate is not positive");
  return verify_representation(g, cert.positive().arcs);
}

Check verify_negative(const Graph& g, const Certificate& cert) {
  if (cert.circular_arc()) return Check::fail("certificate is not negative");
  const NegativeCertificate& neg = cert.negative();

  Reduction red;
  try {
    red = replay(g, cert.reduction);
  } catch (const PreconditionError& e) {
    return Check::fail(std::string("reduction does not replay: ") + e.what());
  }
  const Graph& base = red.graph;
  const Graph& h = neg.completion;
  const int n = base.size();
  if (neg.base_size != n || h.size() < n) return Check::fail("completion base size mismatch");
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (h.adjacent(u, v) != base.adjacent(u, v)) {
        return Check::fail("completion does not extend the reduced graph");
      }
    }
  }

  TypedGraph tb;
  try {
    tb = TypedGraph::classify(base);
  } catch (const PreconditionError& e) {
    return Check::fail(std::string("reduced graph: ") + e.what());
  }
  CircularPairing claimed;
  try {
    claimed = circular_pairs(tb);
  } catch (const InternalError& e) {
    return Check::fail(e.what());
  }
  claimed.partner.resize(static_cast<std::size_t>(h.size()), -1);
  if (static_cast<int>(neg.partner.size()) != h.size() - n) {
    return Check::fail("partner list does not cover the added vertices");
  }
  for (int i = 0; i < h.size() - n; ++i) {
    const Vertex p = neg.partner[i];
    if (p < 0 || p >= n || claimed.partner[p] >= 0) {
      return Check::fail("added vertex " + h.name(n + i) + " has an invalid partner");
    }
    claimed.partner[p] = n + i;
    claimed.partner[n + i] = p;
  }
  if (const Check c = verify_completion(base, h, claimed); !c) return c;

  const TypedGraph th = TypedGraph::classify(h);
  return check_walk_pair(th, neg.obstruction);
}

Check verify_certificate(const Graph& g, const Certificate& cert) {
  return cert.circular_arc() ? verify_positive(g, cert) : verify_negative(g, cert);
}

}  // namespace circarc

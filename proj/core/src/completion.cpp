#include "circarc/completion.hpp"

#include "circarc/errors.hpp"

#include <string>

namespace circarc {

int CircularPairing::pair_count() const {
  int paired_vertices = 0;
  for (Vertex p : partner) paired_vertices += p >= 0 ? 1 : 0;
  return paired_vertices / 2;
}

CircularPairing circular_pairs(const TypedGraph& t) {
  const int n = t.size();
  CircularPairing pairing;
  pairing.partner.assign(static_cast<std::size_t>(n), -1);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (t.adjacent(u, v) || !t.spanning_pair(u, v)) continue;
      if (pairing.paired(u) || pairing.paired(v)) {
        const Vertex w = pairing.paired(u) ? u : v;
        throw InternalError("vertex " + t.graph().name(w) + " lies in two circular pairs");
      }
      pairing.partner[u] = v;
      pairing.partner[v] = u;
    }
  }
  return pairing;
}

namespace {

std::string fresh_name(const Graph& g, const std::string& base) {
  std::string name = "~" + base;
  while (g.find(name)) name = "~" + name;
  return name;
}

}  // namespace

Completion complete(const TypedGraph& t) {
  const CircularPairing base_pairs = circular_pairs(t);
  const int n = t.size();
  Graph h = t.graph();
  for (Vertex v = 0; v < n; ++v) {
    if (base_pairs.paired(v)) continue;
    const VertexSet nv = h.closed_neighborhood(v);
    std::vector<Vertex> neighbors;
    for (Vertex u = 0; u < h.size(); ++u) {
      if (!h.closed_neighborhood(u).is_subset_of(nv)) neighbors.push_back(u);
    }
    const Vertex bar = h.add_vertex(fresh_name(h, h.name(v)));
    for (Vertex u : neighbors) h.add_edge(bar, u);
  }

  Completion out{{}, {}, n};
  try {
    out.graph = TypedGraph::classify(h);
  } catch (const PreconditionError& e) {
    throw InternalError(std::string("completion is not reduced: ") + e.what());
  }
  out.pairing = circular_pairs(out.graph);
  if (const Check c = verify_completion(t.graph(), out.graph.graph(), out.pairing); !c) {
    throw InternalError("completion check failed: " + c.reason);
  }
  return out;
}

Check verify_completion(const Graph& base, const Graph& h, const CircularPairing& pairing) {
  const int n = base.size();
  const int m = h.size();
  if (m < n) return Check::fail("completion is smaller than the base graph");
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (base.adjacent(u, v) != h.adjacent(u, v)) {
        return Check::fail("base is not induced at " + base.name(u) + "," + base.name(v));
      }
    }
  }

  TypedGraph tb;
  TypedGraph th;
  try {
    tb = TypedGraph::classify(base);
  } catch (const PreconditionError& e) {
    return Check::fail(std::string("base graph: ") + e.what());
  }
  try {
    th = TypedGraph::classify(h);
  } catch (const PreconditionError& e) {
    return Check::fail(std::string("completion: ") + e.what());
  }

  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (tb.type(u, v) != th.type(u, v)) {
        return Check::fail("type of " + base.name(u) + "," + base.name(v) + " changes");
      }
    }
  }

  CircularPairing actual;
  CircularPairing base_pairs;
  try {
    actual = circular_pairs(th);
    base_pairs = circular_pairs(tb);
  } catch (const InternalError& e) {
    return Check::fail(e.what());
  }
  if (actual != pairing) return Check::fail("pairing differs from the circular pairs");
  for (Vertex u = 0; u < m; ++u) {
    if (!actual.paired(u)) return Check::fail("vertex " + h.name(u) + " is unpaired");
  }
  for (Vertex u = n; u < m; ++u) {
    if (actual.partner[u] >= n) {
      return Check::fail("added vertex " + h.name(u) + " is paired with an added vertex");
    }
  }
  const int s = base_pairs.pair_count() * 2;
  if (m != 2 * n - s) {
    return Check::fail("size " + std::to_string(m) + " breaks 2|V| - |S| = " +
                       std::to_string(2 * n - s));
  }
  return Check::pass();
}

}  // namespace circarc

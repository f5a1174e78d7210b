#include "circarc/knotting.hpp"

#include "circarc/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace circarc {
namespace {

// Edge xy survives in the uz-pruned graph unless it is an overlap edge whose
// ends are both overlapped by u or both by z.
bool pruned_edge(const TypedGraph& t, Vertex z, Vertex u, Vertex x, Vertex y) {
  if (!t.adjacent(x, y)) return false;
  if (!t.overlaps(x, y)) return true;
  return !(t.overlaps(u, x) && t.overlaps(u, y)) && !(t.overlaps(z, x) && t.overlaps(z, y));
}

VertexSet component_domain(const TypedGraph& t, Vertex z, Vertex u) {
  return t.non_nested_set(u) & t.non_nested_set(z);
}

}  // namespace

KnottingGraph::KnottingGraph(const TypedGraph& t, Vertex anchor)
    : anchor_(anchor), n_(t.size()) {
  if (anchor < 0 || anchor >= n_) throw PreconditionError("anchor out of range");
  gamma_.assign(static_cast<std::size_t>(n_) * n_, -1);
  copy_of_.assign(static_cast<std::size_t>(n_), {});

  const auto az = members(t.non_nested_set(anchor));
  for (Vertex u : az) {
    const auto dom = members(component_domain(t, anchor, u));
    std::vector<int> root(dom.size());
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int i) {
      while (root[i] != i) i = root[i] = root[root[i]];
      return i;
    };
    for (std::size_t i = 0; i < dom.size(); ++i) {
      for (std::size_t j = i + 1; j < dom.size(); ++j) {
        if (pruned_edge(t, anchor, u, dom[i], dom[j])) {
          const int a = find(static_cast<int>(i));
          const int b = find(static_cast<int>(j));
          root[std::max(a, b)] = std::min(a, b);
        }
      }
    }
    // Roots are the smallest members, so numbering follows smallest member.
    std::vector<int> label(dom.size(), -1);
    int count = 0;
    for (std::size_t i = 0; i < dom.size(); ++i) {
      const int r = find(static_cast<int>(i));
      if (label[r] < 0) label[r] = count++;
      gamma_[static_cast<std::size_t>(u) * n_ + dom[i]] = label[r];
    }
    for (int c = 0; c < count; ++c) {
      copy_of_[u].push_back(static_cast<int>(copies_.size()));
      copies_.push_back({u, c});
    }
  }

  adjacency_.assign(copies_.size(), {});
  for (Vertex u : az) {
    for (Vertex v : az) {
      if (u >= v || !t.non_nested(u, v)) continue;
      const int a = copy_index(u, gamma(u, v));
      const int b = copy_index(v, gamma(v, u));
      adjacency_[a].push_back(b);
      adjacency_[b].push_back(a);
    }
  }
}

int KnottingGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : adjacency_) total += row.size();
  return static_cast<int>(total / 2);
}

int KnottingGraph::gamma(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
  return gamma_[static_cast<std::size_t>(u) * n_ + v];
}

int KnottingGraph::copy_index(Vertex u, int component) const {
  return copy_of_.at(u).at(component);
}

std::vector<Vertex> component_path(const TypedGraph& t, Vertex z, Vertex u, Vertex a, Vertex b) {
  const VertexSet dom = component_domain(t, z, u);
  if (!dom[a] || !dom[b]) throw PreconditionError("path ends outside the uz-domain");
  std::vector<Vertex> parent(static_cast<std::size_t>(t.size()), -1);
  std::deque<Vertex> queue{a};
  parent[a] = a;
  while (!queue.empty() && parent[b] < 0) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : members(dom & t.graph().closed_neighborhood(x))) {
      if (parent[y] < 0 && pruned_edge(t, z, u, x, y)) {
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  if (parent[b] < 0) throw InternalError("vertices are not uz-connected");
  std::vector<Vertex> path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::variant<TwoColoring, OddCycle> bipartite_or_odd_cycle(const KnottingGraph& k) {
  return two_color(k.adjacency());
}

AvoidWalkPair extract_invertible_pair(const TypedGraph& t, const KnottingGraph& k,
                                      const OddCycle& cycle) {
  const auto len = cycle.vertices.size();
  if (len % 2 == 0) throw PreconditionError("cycle has even length");
  std::vector<Vertex> u(len);
  for (std::size_t j = 0; j < len; ++j) u[j] = k.copies().at(cycle.vertices[j]).vertex;

  // u[j] is the (j+1)-th cycle vertex; moves alternate Q, P, Q, ... starting from
  // (u_1, u_k) and finishing at (u_k, u_1).
  std::vector<PairState> states{{u.front(), u.back()}};
  for (std::size_t j = 0; j < len; ++j) {
    const Vertex prev = u[(j + len - 1) % len];
    const Vertex next = u[(j + 1) % len];
    const auto path = component_path(t, k.anchor(), u[j], prev, next);
    for (std::size_t s = 1; s < path.size(); ++s) {
      PairState st = states.back();
      (j % 2 == 0 ? st.second : st.first) = path[s];
      states.push_back(st);
    }
  }
  AvoidWalkPair pair = walks_from_states(k.anchor(), states);
  if (const Check c = check_walk_pair(t, pair); !c) {
    throw InternalError("extracted walk pair is invalid: " + c.reason);
  }
  return pair;
}

namespace {

// Ordered pairs (p, q) of A(z) with p, q non-nested; steps move one side
// along an edge while both walks keep avoiding each other and z.
class StateSpace {
 public:
  StateSpace(const TypedGraph& t, Vertex z)
      : n_(t.size()), comp_(static_cast<std::size_t>(n_) * n_, -1),
        parent_(comp_.size(), -1), depth_(comp_.size(), 0) {
    const VertexSet& az = t.non_nested_set(z);
    int next_id = 0;
    std::deque<int> queue;
    for (Vertex p : members(az)) {
      for (Vertex q : members(az & t.non_nested_set(p))) {
        const int code = encode(p, q);
        if (comp_[code] >= 0) continue;
        comp_[code] = next_id;
        queue.push_back(code);
        while (!queue.empty()) {
          const int cur = queue.front();
          queue.pop_front();
          const Vertex a = cur / n_;
          const Vertex b = cur % n_;
          auto visit = [&](Vertex na, Vertex nb) {
            const int k = encode(na, nb);
            if (comp_[k] >= 0) return;
            comp_[k] = next_id;
            parent_[k] = cur;
            depth_[k] = depth_[cur] + 1;
            queue.push_back(k);
          };
          const VertexSet options_a = az & t.non_nested_set(b) & t.graph().closed_neighborhood(a);
          for (Vertex na : members(options_a)) {
            if (na != a && t.avoids_edge(b, a, na) && t.avoids_edge(z, a, na)) visit(na, b);
          }
          const VertexSet options_b = az & t.non_nested_set(a) & t.graph().closed_neighborhood(b);
          for (Vertex nb : members(options_b)) {
            if (nb != b && t.avoids_edge(a, b, nb) && t.avoids_edge(z, b, nb)) visit(a, nb);
          }
        }
        ++next_id;
      }
    }
  }

  int component(Vertex p, Vertex q) const { return comp_[encode(p, q)]; }

  std::vector<PairState> path(PairState from, PairState to) const {
    int x = encode(from.first, from.second);
    int y = encode(to.first, to.second);
    if (comp_[x] < 0 || comp_[x] != comp_[y]) throw InternalError("states are not connected");
    std::vector<PairState> head;
    std::vector<PairState> tail;
    while (x != y) {
      if (depth_[x] >= depth_[y]) {
        head.push_back(decode(x));
        x = parent_[x];
      } else {
        tail.push_back(decode(y));
        y = parent_[y];
      }
    }
    head.push_back(decode(x));
    head.insert(head.end(), tail.rbegin(), tail.rend());
    return head;
  }

 private:
  int encode(Vertex p, Vertex q) const { return p * n_ + q; }
  PairState decode(int code) const { return {code / n_, code % n_}; }

  int n_;
  std::vector<int> comp_;
  std::vector<int> parent_;
  std::vector<int> depth_;
};

}  // namespace

std::variant<std::vector<Vertex>, AvoidWalkPair> disagreement_partition(
    const TypedGraph& t, const CircularPairing& pairing, Vertex z) {
  const Vertex zbar = pairing.partner.at(z);
  if (zbar < 0) throw PreconditionError("anchor is not circularly paired");
  std::vector<Vertex> x;
  for (Vertex v = 0; v < t.size(); ++v) {
    if (!t.overlaps(z, v)) continue;
    if (t.type(z, v) != EdgeType::Overlap1) {
      throw InternalError("overlap " + t.graph().name(z) + "," + t.graph().name(v) +
                          " of the anchor is not a 1-overlap");
    }
    x.push_back(v);
  }

  const StateSpace space(t, z);
  const auto m = x.size();
  AdjacencyList disagree(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (space.component(x[i], zbar) < 0) {
      throw InternalError("state (" + t.graph().name(x[i]) + ", partner of anchor) is invalid");
    }
    for (std::size_t j = i; j < m; ++j) {
      if (space.component(x[i], zbar) == space.component(zbar, x[j])) {
        disagree[i].push_back(static_cast<int>(j));
        if (i != j) disagree[j].push_back(static_cast<int>(i));
      }
    }
  }

  const auto colored = two_color(disagree);
  if (const auto* coloring = std::get_if<TwoColoring>(&colored)) {
    std::vector<Vertex> y;
    for (std::size_t i = 0; i < m; ++i) {
      if (coloring->color[i] == 0) y.push_back(x[i]);
    }
    return y;
  }

  // Segment i runs (x_i, zbar) .. (zbar, x_{i+1}); every second segment is
  // used with its coordinates swapped so the pieces chain together.
  const auto& cyc = std::get<OddCycle>(colored).vertices;
  const auto k = cyc.size();
  std::vector<PairState> states;
  for (std::size_t i = 0; i < k; ++i) {
    auto seg = space.path({x[cyc[i]], zbar}, {zbar, x[cyc[(i + 1) % k]]});
    if (i % 2 == 1) {
      for (auto& s : seg) std::swap(s.first, s.second);
    }
    states.insert(states.end(), seg.begin() + (states.empty() ? 0 : 1), seg.end());
  }
  AvoidWalkPair pair = walks_from_states(z, states);
  if (const Check c = check_walk_pair(t, pair); !c) {
    throw InternalError("disagreement walk pair is invalid: " + c.reason);
  }
  return pair;
}

std::vector<Vertex> build_z(const TypedGraph& t, const CircularPairing& pairing, Vertex z,
                            std::span<const Vertex> y) {
  const int n = t.size();
  VertexSet in_z = ~t.graph().closed_neighborhood(z);
  for (Vertex v : y) in_z.set(v);
  for (Vertex u = 0; u < n; ++u) {
    const Vertex bar = pairing.partner.at(u);
    if (bar < 0 || in_z[u] == in_z[bar]) {
      throw InternalError("vertex " + t.graph().name(u) +
                          " and its partner are not split by Z");
    }
  }
  const auto out = members(in_z);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (t.spanning_pair(out[i], out[j])) {
        throw InternalError("Z contains the spanning pair " + t.graph().name(out[i]) + "," +
                            t.graph().name(out[j]));
      }
    }
  }
  return out;
}

}  // namespace circarc

#include "circarc/delta.hpp"

#include "circarc/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace circarc {

LabelledGraph::LabelledGraph(int n)
    : n_(n),
      labels_(static_cast<std::size_t>(n) * n, Label::NonEdge),
      dc_(static_cast<std::size_t>(n) * n, 0) {}

LabelledGraph LabelledGraph::from_typed(const TypedGraph& t, std::span<const Vertex> vertices) {
  const int m = static_cast<int>(vertices.size());
  LabelledGraph l(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Vertex u = vertices[i];
      const Vertex v = vertices[j];
      switch (t.type(u, v)) {
        case EdgeType::NonEdge: break;
        case EdgeType::Overlap1:
        case EdgeType::Overlap2: l.set_label(i, j, Label::Overlap); break;
        case EdgeType::Inclusion:
          l.set_label(i, j, Label::Inclusion);
          if (t.contains(u, v)) {
            l.set_contains(i, j);
          } else {
            l.set_contains(j, i);
          }
          break;
      }
    }
  }
  return l;
}

void LabelledGraph::set_label(Vertex u, Vertex v, Label label) {
  if (u == v) throw PreconditionError("cannot relabel a loop");
  labels_[index(u, v)] = label;
  labels_[index(v, u)] = label;
  if (label != Label::Inclusion) {
    dc_[index(u, v)] = 0;
    dc_[index(v, u)] = 0;
  }
}

void LabelledGraph::set_contains(Vertex u, Vertex v) {
  if (u == v || label(u, v) != Label::Inclusion) {
    throw PreconditionError("containment needs an inclusion pair");
  }
  dc_[index(u, v)] = 1;
  dc_[index(v, u)] = 0;
}

bool LabelledGraph::avoids_edge(Vertex z, Vertex x, Vertex y) const {
  if (x != y && !adjacent(x, y)) return false;
  if (z == x || z == y) return false;
  const Label zx = label(z, x);
  const Label zy = label(z, y);
  if (zx == Label::Inclusion || zy == Label::Inclusion) return false;
  return x == y || zx != Label::Overlap || zy != Label::Overlap ||
         label(x, y) == Label::Inclusion;
}

LabelledGraph LabelledGraph::induced(std::span<const Vertex> vertices) const {
  const int m = static_cast<int>(vertices.size());
  LabelledGraph l(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      l.labels_[l.index(i, j)] = label(vertices[i], vertices[j]);
      l.dc_[l.index(i, j)] = dc_[index(vertices[i], vertices[j])];
    }
  }
  return l;
}

Check LabelledGraph::validate() const {
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      const bool forward = contains(u, v);
      const bool backward = contains(v, u);
      if (label(u, v) == Label::Inclusion ? forward == backward : forward || backward) {
        return Check::fail("containment of pair " + std::to_string(u) + "," +
                           std::to_string(v) + " is not a single direction");
      }
    }
  }
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = 0; v < n_; ++v) {
      if (!contains(u, v)) continue;
      for (Vertex w = 0; w < n_; ++w) {
        if (contains(v, w) && !contains(u, w)) return Check::fail("containment is not transitive");
        if (w != u && adjacent(v, w) && !adjacent(u, w)) {
          return Check::fail("containment disagrees with neighborhoods");
        }
      }
    }
  }
  return Check::pass();
}

bool is_delta_pair(const LabelledGraph& l, const OrderedPair& p) {
  return p.first != p.second && l.label(p.first, p.second) != Label::Inclusion;
}

bool delta_step(const LabelledGraph& l, const OrderedPair& p, const OrderedPair& q) {
  if (p.second == q.second) return l.avoids_edge(p.second, p.first, q.first);
  if (p.first == q.first) return l.avoids_edge(p.first, p.second, q.second);
  return false;
}

ImplicationClasses::ImplicationClasses(const LabelledGraph& l)
    : n_(l.size()),
      class_(static_cast<std::size_t>(n_) * n_, -1),
      parent_(static_cast<std::size_t>(n_) * n_, -1),
      depth_(static_cast<std::size_t>(n_) * n_, 0) {
  const int n = n_;
  auto decode = [n](int code) { return OrderedPair{code / n, code % n}; };
  std::deque<int> queue;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      const OrderedPair root{a, b};
      if (!is_delta_pair(l, root) || class_[index(root)] >= 0) continue;
      const int id = static_cast<int>(classes_.size());
      classes_.emplace_back();
      class_[index(root)] = id;
      queue.push_back(static_cast<int>(index(root)));
      while (!queue.empty()) {
        const int code = queue.front();
        queue.pop_front();
        const OrderedPair cur = decode(code);
        classes_[id].pairs.push_back(cur);
        auto visit = [&](const OrderedPair& next) {
          const auto k = index(next);
          if (class_[k] >= 0 || !is_delta_pair(l, next) || !delta_step(l, cur, next)) return;
          class_[k] = id;
          parent_[k] = code;
          depth_[k] = depth_[code] + 1;
          queue.push_back(static_cast<int>(k));
        };
        for (Vertex w = 0; w < n; ++w) {
          if (w != cur.first) visit({w, cur.second});
          if (w != cur.second) visit({cur.first, w});
        }
      }
    }
  }
  for (auto& c : classes_) {
    const OrderedPair r = c.pairs.front();
    c.inverse = class_[index({r.second, r.first})];
  }
}

int ImplicationClasses::class_of(const OrderedPair& p) const {
  if (p.first < 0 || p.second < 0 || p.first >= n_ || p.second >= n_) return -1;
  return class_[index(p)];
}

std::vector<OrderedPair> ImplicationClasses::chain(const OrderedPair& a,
                                                   const OrderedPair& b) const {
  if (class_of(a) < 0 || class_of(a) != class_of(b)) {
    throw PreconditionError("pairs are not in one implication class");
  }
  const int n = n_;
  auto decode = [n](int code) { return OrderedPair{code / n, code % n}; };
  int x = static_cast<int>(index(a));
  int y = static_cast<int>(index(b));
  std::vector<OrderedPair> head;
  std::vector<OrderedPair> tail;
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

std::vector<Vertex> ImplicationClasses::span(int class_index) const {
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  for (const auto& [a, b] : classes_.at(class_index).pairs) {
    seen[a] = true;
    seen[b] = true;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_; ++v) {
    if (seen[v]) out.push_back(v);
  }
  return out;
}

DeltaInvertiblePair::DeltaInvertiblePair(std::vector<OrderedPair> chain)
    : std::runtime_error("implication class equals its inverse"), chain_(std::move(chain)) {}

namespace {

std::vector<Vertex> order_from_relation(int n, const std::vector<std::uint8_t>& before) {
  std::vector<int> wins(static_cast<std::size_t>(n), 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) wins[u] += before[static_cast<std::size_t>(u) * n + v];
  }
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return wins[a] > wins[b]; });
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      const bool uv = before[static_cast<std::size_t>(u) * n + v] != 0;
      const bool vu = before[static_cast<std::size_t>(v) * n + u] != 0;
      if (uv == vu || (uv && pos[u] > pos[v])) {
        throw InternalError("orientation is not a transitive tournament at " +
                            std::to_string(u) + "," + std::to_string(v));
      }
    }
  }
  return order;
}

void check_uniform(const LabelledGraph& l, const std::vector<Vertex>& module) {
  std::vector<bool> inside(static_cast<std::size_t>(l.size()), false);
  for (Vertex s : module) inside[s] = true;
  const Vertex rep = module.front();
  for (Vertex x = 0; x < l.size(); ++x) {
    if (inside[x]) continue;
    for (Vertex s : module) {
      if (l.label(x, s) != l.label(x, rep) || l.contains(x, s) != l.contains(x, rep)) {
        throw InternalError("vertex " + std::to_string(x) +
                            " sees the module non-uniformly (NonUniformQuotientLabel)");
      }
    }
  }
}

std::vector<Vertex> orient(const LabelledGraph& l);

std::vector<Vertex> orient_mapped(const LabelledGraph& l, const std::vector<Vertex>& vertices) {
  try {
    const auto local = orient(l.induced(vertices));
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(vertices[v]);
    return out;
  } catch (const DeltaInvertiblePair& e) {
    std::vector<OrderedPair> mapped;
    for (const auto& [a, b] : e.chain()) mapped.emplace_back(vertices[a], vertices[b]);
    throw DeltaInvertiblePair(std::move(mapped));
  }
}

std::vector<Vertex> orient(const LabelledGraph& l) {
  const int n = l.size();
  if (n <= 1) return std::vector<Vertex>(static_cast<std::size_t>(n), 0);

  const ImplicationClasses ic(l);
  const auto& classes = ic.classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].inverse == static_cast<int>(c)) {
      const OrderedPair p = classes[c].pairs.front();
      throw DeltaInvertiblePair(ic.chain(p, {p.second, p.first}));
    }
  }

  std::vector<std::uint8_t> before(static_cast<std::size_t>(n) * n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) before[static_cast<std::size_t>(u) * n + v] = l.contains(u, v);
  }
  if (classes.empty()) return order_from_relation(n, before);

  int best = -1;
  std::vector<Vertex> module;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    auto s = ic.span(static_cast<int>(c));
    if (static_cast<int>(s.size()) < n && (best < 0 || s.size() < module.size())) {
      best = static_cast<int>(c);
      module = std::move(s);
    }
  }

  if (best >= 0) {
    check_uniform(l, module);
    const Vertex rep = module.front();
    std::vector<Vertex> quotient;
    for (Vertex v = 0; v < n; ++v) {
      if (v == rep || !std::binary_search(module.begin(), module.end(), v)) quotient.push_back(v);
    }
    const auto outer = orient_mapped(l, quotient);
    const auto inner = orient_mapped(l, module);
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    for (Vertex v : outer) {
      if (v == rep) {
        order.insert(order.end(), inner.begin(), inner.end());
      } else {
        order.push_back(v);
      }
    }
    return order;
  }

  if (classes.size() != 2) {
    throw InternalError("spanning implication classes are not a single class and its inverse");
  }
  for (const auto& [a, b] : classes.front().pairs) before[static_cast<std::size_t>(a) * n + b] = 1;
  return order_from_relation(n, before);
}

}  // namespace

Orientation interval_orientation(const LabelledGraph& l) {
  if (const Check c = l.validate(); !c) throw PreconditionError(c.reason);
  const int n = l.size();
  Orientation out;
  out.order = orient(l);

  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[out.order[i]] = i;
  if (!verify_interval_ordering(l, out.order)) {
    throw InternalError("constructed order is not an interval ordering");
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (l.contains(u, v) && pos[u] > pos[v]) {
        throw InternalError("constructed order contradicts containment");
      }
    }
  }
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (x == y || !l.adjacent(x, y)) continue;
      for (Vertex z = 0; z < n; ++z) {
        if (l.avoids_edge(z, x, y) && pos[x] < pos[z] && pos[z] < pos[y]) {
          throw InternalError("constructed order is not closed under Delta");
        }
      }
    }
  }
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (is_delta_pair(l, {a, b}) && pos[a] < pos[b]) out.orientation.emplace_back(a, b);
    }
  }
  return out;
}

bool verify_interval_ordering(const LabelledGraph& l, std::span<const Vertex> order) {
  const auto m = order.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex a = order[i];
    for (std::size_t j = i + 1; j < m; ++j) {
      const Vertex b = order[j];
      const Label ab = l.label(a, b);
      for (std::size_t k = j + 1; k < m; ++k) {
        const Vertex c = order[k];
        const Label ac = l.label(a, c);
        const Label bc = l.label(b, c);
        if (ab == Label::NonEdge && ac != Label::NonEdge) return false;
        if (ab == Label::Inclusion && ac == Label::NonEdge && bc != Label::NonEdge) return false;
        if (ab == Label::Overlap && ac != Label::NonEdge && bc == Label::NonEdge) return false;
        if (ab == Label::Overlap && bc == Label::Overlap && ac == Label::Inclusion) return false;
        if (ab == Label::Inclusion && bc == Label::Inclusion && ac == Label::Overlap) return false;
      }
    }
  }
  return true;
}

}  // namespace circarc

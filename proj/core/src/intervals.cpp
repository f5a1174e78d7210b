#include "circarc/intervals.hpp"

#include "circarc/errors.hpp"

#include <algorithm>
#include <string>

namespace circarc {
namespace {

struct Token {
  Vertex vertex;
  bool right;
};

}  // namespace

IntervalModel build_intervals(const LabelledGraph& l, std::span<const Vertex> order) {
  const int m = static_cast<int>(order.size());
  if (m != l.size()) throw PreconditionError("order does not list every vertex once");
  std::vector<int> pos(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i) {
    if (order[i] < 0 || order[i] >= m || pos[order[i]] >= 0) {
      throw PreconditionError("order does not list every vertex once");
    }
    pos[order[i]] = i;
  }

  std::vector<Token> tokens;
  tokens.reserve(2 * static_cast<std::size_t>(m));
  auto where = [&](Vertex v, bool right) {
    const auto it = std::find_if(tokens.begin(), tokens.end(),
                                 [&](const Token& t) { return t.vertex == v && t.right == right; });
    return static_cast<std::size_t>(it - tokens.begin());
  };

  for (int i = m - 1; i >= 0; --i) {
    const Vertex x = order[i];
    tokens.insert(tokens.begin(), Token{x, false});
    Vertex y = x;
    for (int j = i + 1; j < m; ++j) {
      if (l.adjacent(x, order[j])) y = order[j];
    }
    std::size_t t = where(y, false);
    for (int j = i + 1; j < m; ++j) {
      if (l.label(x, order[j]) == Label::Inclusion) t = std::max(t, where(order[j], true));
    }
    tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(t) + 1, Token{x, true});
  }

  IntervalModel model(static_cast<std::size_t>(m));
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    auto& iv = model[tokens[k].vertex];
    (tokens[k].right ? iv.right : iv.left) = static_cast<int>(k) + 1;
  }
  return model;
}

Check check_interval_model(const LabelledGraph& l, const IntervalModel& model) {
  const int m = l.size();
  if (static_cast<int>(model.size()) != m) return Check::fail("model size mismatch");
  for (Vertex u = 0; u < m; ++u) {
    if (model[u].left >= model[u].right) return Check::fail("empty interval");
    for (Vertex v = u + 1; v < m; ++v) {
      const Interval& a = model[u];
      const Interval& b = model[v];
      const bool disjoint = a.right < b.left || b.right < a.left;
      const bool u_holds_v = a.left < b.left && b.right < a.right;
      const bool v_holds_u = b.left < a.left && a.right < b.right;
      const std::string at = " at " + std::to_string(u) + "," + std::to_string(v);
      switch (l.label(u, v)) {
        case Label::NonEdge:
          if (!disjoint) return Check::fail("non-edge intervals meet" + at);
          break;
        case Label::Overlap:
          if (disjoint || u_holds_v || v_holds_u) return Check::fail("overlap not crossing" + at);
          break;
        case Label::Inclusion:
          if (l.contains(u, v) ? !u_holds_v : !v_holds_u) {
            return Check::fail("inclusion not nested as labelled" + at);
          }
          break;
      }
    }
  }
  return Check::pass();
}

ArcRepresentation lift_to_circle(const IntervalModel& model, std::span<const Vertex> z_vertices,
                                 const CircularPairing& pairing, int h_size) {
  if (model.size() != z_vertices.size()) throw PreconditionError("model and Z differ in size");
  ArcRepresentation rep;
  rep.circle_size = 8 * static_cast<int>(z_vertices.size()) + 8;
  rep.arcs.assign(static_cast<std::size_t>(h_size), Arc{-1, -1});
  for (std::size_t i = 0; i < z_vertices.size(); ++i) {
    const Vertex u = z_vertices[i];
    const Vertex bar = pairing.partner.at(u);
    if (bar < 0) throw InternalError("vertex of Z has no partner");
    const int l = 4 * model[i].left;
    const int r = 4 * model[i].right;
    rep.arcs[u] = Arc{l, r};
    rep.arcs[bar] = Arc{r + 1, l - 1};
  }
  for (const Arc& a : rep.arcs) {
    if (a.left < 0) throw InternalError("vertex neither in Z nor paired with Z");
  }
  return rep;
}

}  // namespace circarc

#include "circarc/reduction.hpp"

#include "circarc/errors.hpp"

namespace circarc {
namespace {

std::vector<Vertex> survivors(int n, const ReductionTrace& trace) {
  VertexSet alive(static_cast<std::size_t>(n));
  alive.set();
  for (const auto& step : trace) {
    if (step.removed < 0 || step.removed >= n || !alive[step.removed]) {
      throw PreconditionError("reduction step removes an unknown or removed vertex");
    }
    if (step.kind == ReductionStep::Kind::MergeTwins &&
        (step.kept < 0 || step.kept >= n || !alive[step.kept] || step.kept == step.removed)) {
      throw PreconditionError("twin merge keeps an unknown or removed vertex");
    }
    alive.reset(step.removed);
  }
  return members(alive);
}

}  // namespace

Reduction reduce(const Graph& g) {
  const int n = g.size();
  VertexSet alive(static_cast<std::size_t>(n));
  alive.set();
  ReductionTrace trace;

  auto neighborhood = [&](Vertex u) { return g.closed_neighborhood(u) & alive; };

  while (alive.count() >= 2) {
    bool changed = false;
    for (Vertex u : members(alive)) {
      if (neighborhood(u) == alive) {
        trace.push_back({ReductionStep::Kind::RemoveUniversal, u, -1});
        alive.reset(u);
        changed = true;
        break;
      }
    }
    if (changed) continue;

    const auto live = members(alive);
    for (std::size_t i = 0; i < live.size() && !changed; ++i) {
      const VertexSet nu = neighborhood(live[i]);
      for (std::size_t j = i + 1; j < live.size(); ++j) {
        if (nu == neighborhood(live[j])) {
          trace.push_back({ReductionStep::Kind::MergeTwins, live[j], live[i]});
          alive.reset(live[j]);
          changed = true;
          break;
        }
      }
    }
    if (!changed) break;
  }

  Reduction out;
  out.original = members(alive);
  out.graph = g.induced(out.original);
  out.trace = std::move(trace);
  return out;
}

Reduction replay(const Graph& g, const ReductionTrace& trace) {
  Reduction out;
  out.original = survivors(g.size(), trace);
  out.graph = g.induced(out.original);
  out.trace = trace;
  return out;
}

ArcRepresentation expand_arcs(const ReductionTrace& trace, int original_size,
                              const ArcRepresentation& reduced) {
  const auto kept = survivors(original_size, trace);
  if (kept.size() != reduced.arcs.size()) {
    throw PreconditionError("reduced model size does not match the trace");
  }

  ArcRepresentation rep;
  rep.circle_size = reduced.circle_size;
  rep.arcs.assign(static_cast<std::size_t>(original_size), Arc{});
  for (std::size_t i = 0; i < kept.size(); ++i) {
    rep.arcs[kept[i]] = reduced.arcs[i];
  }

  // Arcs of not-yet-restored vertices shift harmlessly until overwritten.
  for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
    if (it->kind == ReductionStep::Kind::RemoveUniversal) {
      insert_slots(rep, 0, 3);
      rep.arcs[it->removed] = Arc{2, 0};
    } else {
      const Arc base = rep.arcs[it->kept];
      insert_slots(rep, base.left);
      insert_slots(rep, rep.arcs[it->kept].right + 1);
      const Arc grown = rep.arcs[it->kept];
      const int m = rep.circle_size;
      rep.arcs[it->removed] = Arc{(grown.left - 1 + m) % m, (grown.right + 1) % m};
    }
  }
  return rep;
}

}  // namespace circarc

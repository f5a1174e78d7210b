#include "circarc/oracle.hpp"

#include "circarc/errors.hpp"
#include "circarc/formats.hpp"
#include "circarc/recognizer.hpp"

#include <json.hpp>

#include <array>
#include <sstream>

namespace circarc {
namespace {

enum class Status { Unknown, Meet, Apart };

class ArcSearch {
 public:
  explicit ArcSearch(const Graph& g) : g_(g), n_(g.size()) {
    left_.fill(-1);
    right_.fill(-1);
  }

  std::optional<EndpointSequence> run() {
    if (n_ == 0) return EndpointSequence{};
    place(0, false);
    if (extend()) return seq_;
    return std::nullopt;
  }

 private:
  void place(Vertex v, bool right) {
    (right ? right_ : left_)[v] = static_cast<int>(seq_.size());
    seq_.push_back({v, right});
  }
  void unplace() {
    const auto s = seq_.back();
    seq_.pop_back();
    (s.right ? right_ : left_)[s.vertex] = -1;
  }

  // Coverage of an already placed position; valid when v has an endpoint.
  bool covered(Vertex v, int pos) const {
    const int l = left_[v];
    const int r = right_[v];
    if (l >= 0 && r >= 0) return l < r ? (l <= pos && pos <= r) : (pos >= l || pos <= r);
    if (l >= 0) return pos >= l;
    return pos <= r;
  }
  bool full(Vertex v) const { return left_[v] >= 0 && right_[v] >= 0; }
  bool started(Vertex v) const { return left_[v] >= 0 || right_[v] >= 0; }
  bool wraps(Vertex v) const { return right_[v] < left_[v]; }

  Status status(Vertex v, Vertex w) const {
    if (!started(v) || !started(w)) {
      if ((full(v) && wraps(v)) || (full(w) && wraps(w))) return Status::Meet;
      return Status::Unknown;
    }
    for (int end : {left_[w], right_[w]}) {
      if (end >= 0 && covered(v, end)) return Status::Meet;
    }
    for (int end : {left_[v], right_[v]}) {
      if (end >= 0 && covered(w, end)) return Status::Meet;
    }
    if (full(v) && full(w)) return Status::Apart;
    if (full(v)) return wraps(v) ? Status::Meet : Status::Apart;
    if (full(w)) return wraps(w) ? Status::Meet : Status::Apart;
    return Status::Unknown;
  }

  bool consistent(Vertex x) const {
    for (Vertex w = 0; w < n_; ++w) {
      if (w == x) continue;
      const Status s = status(x, w);
      if (s != Status::Unknown && (s == Status::Meet) != g_.adjacent(x, w)) return false;
    }
    return true;
  }

  bool extend() {
    if (static_cast<int>(seq_.size()) == 2 * n_) return true;
    for (Vertex v = 0; v < n_; ++v) {
      for (bool right : {false, true}) {
        if ((right ? right_ : left_)[v] >= 0) continue;
        place(v, right);
        if (consistent(v) && extend()) return true;
        unplace();
      }
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::array<int, kOracleMaxVertices> left_{};
  std::array<int, kOracleMaxVertices> right_{};
  EndpointSequence seq_;
};

}  // namespace

std::optional<EndpointSequence> find_arc_model(const Graph& g) {
  if (g.size() > kOracleMaxVertices) {
    throw PreconditionError("oracle handles at most " + std::to_string(kOracleMaxVertices) +
                            " vertices");
  }
  return ArcSearch(g).run();
}

bool oracle_is_circular_arc(const Graph& g) { return find_arc_model(g).has_value(); }

ArcRepresentation arcs_from_sequence(const EndpointSequence& seq, int n) {
  ArcRepresentation rep;
  rep.circle_size = static_cast<int>(seq.size());
  rep.arcs.assign(static_cast<std::size_t>(n), Arc{});
  for (std::size_t i = 0; i < seq.size(); ++i) {
    auto& arc = rep.arcs.at(seq[i].vertex);
    (seq[i].right ? arc.right : arc.left) = static_cast<int>(i);
  }
  return rep;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

std::vector<Graph> enumerate_labelled_graphs(int n) {
  const int pairs = n * (n - 1) / 2;
  if (pairs > 30) throw PreconditionError("too many labelled graphs to enumerate");
  std::vector<Graph> out;
  out.reserve(std::size_t{1} << pairs);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    out.push_back(graph_from_mask(n, mask));
  }
  return out;
}

Graph random_graph(int n, double edge_probability, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(edge_probability);
  Graph g(n);
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (coin(rng)) g.add_edge(i, j);
    }
  }
  return g;
}

std::string CrossCheckReport::to_json_lines() const {
  std::ostringstream out;
  for (const auto& p : problems) {
    nlohmann::json line = {{"graph6", p.graph6},
                           {"recognized", p.recognized_circular_arc},
                           {"oracle", p.oracle_circular_arc},
                           {"certificate_ok", p.certificate_ok},
                           {"detail", p.detail}};
    out << line.dump() << '\n';
  }
  nlohmann::json summary = {{"graphs", graphs_checked}, {"problems", problems.size()}};
  out << summary.dump() << '\n';
  return out.str();
}

namespace {

void check_one(const Graph& g, CrossCheckReport& report) {
  ++report.graphs_checked;
  CrossCheckRecord rec;
  rec.oracle_circular_arc = oracle_is_circular_arc(g);
  try {
    const Certificate cert = recognize(g);
    rec.recognized_circular_arc = cert.circular_arc();
    const Check c = verify_certificate(g, cert);
    rec.certificate_ok = c.ok;
    rec.detail = c.reason;
  } catch (const std::exception& e) {
    rec.recognized_circular_arc = !rec.oracle_circular_arc;
    rec.certificate_ok = false;
    rec.detail = e.what();
  }
  if (rec.recognized_circular_arc != rec.oracle_circular_arc || !rec.certificate_ok) {
    if (rec.detail.empty()) rec.detail = "verdict differs from the oracle";
    rec.graph6 = write_graph6(g);
    report.problems.push_back(std::move(rec));
  }
}

}  // namespace

CrossCheckReport cross_check(int max_n, const std::optional<RandomSpec>& random) {
  CrossCheckReport report;
  for (int n = 1; n <= max_n; ++n) {
    for (const Graph& g : enumerate_labelled_graphs(n)) check_one(g, report);
  }
  if (random) {
    std::mt19937_64 rng(random->seed);
    for (int i = 0; i < random->count; ++i) check_one(random_graph(random->n, random->edge_probability, rng), report);
  }
  return report;
}

}  // namespace circarc

#include "cli.hpp"

#include "circarc/completion.hpp"
#include "circarc/errors.hpp"
#include "circarc/formats.hpp"
#include "circarc/knotting.hpp"
#include "circarc/oracle.hpp"
#include "circarc/recognizer.hpp"
#include "circarc/reduction.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

namespace circarc::cli {
namespace {

// Input or usage problem that maps to the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

Graph load_graph(const std::string& path, const std::string& format) {
  std::string fmt = format;
  if (fmt.empty()) {
    const bool g6 = path.size() >= 3 && (path.ends_with(".g6") || path.ends_with(".graph6"));
    fmt = g6 ? "graph6" : "edgelist";
  }
  const std::string text = slurp(path);
  if (fmt == "graph6") {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
    }
    return parse_graph6(line);
  }
  return parse_edge_list(text);
}

struct Completed {
  Reduction reduction;
  Completion completion;
};

std::optional<Completed> reduce_and_complete(const Graph& g) {
  Reduction red = reduce(g);
  if (red.graph.size() <= 1) return std::nullopt;
  Completion c = complete(TypedGraph::classify(red.graph));
  return Completed{std::move(red), std::move(c)};
}

std::string describe_knotting(const TypedGraph& h, const KnottingGraph& k) {
  std::ostringstream out;
  out << "anchor " << h.graph().name(k.anchor()) << ": knotting graph with " << k.copies().size()
      << " copies and " << k.edge_count() << " edges is ";
  const auto result = bipartite_or_odd_cycle(k);
  if (std::holds_alternative<TwoColoring>(result)) {
    out << "bipartite";
  } else {
    out << "not bipartite; odd cycle:";
    for (int c : std::get<OddCycle>(result).vertices) {
      const auto& copy = k.copies()[c];
      out << ' ' << h.graph().name(copy.vertex) << '/' << copy.component;
    }
  }
  return out.str();
}

std::optional<RandomSpec> parse_random(const std::string& spec) {
  if (spec.empty()) return std::nullopt;
  RandomSpec r;
  char c1 = 0;
  char c2 = 0;
  char c3 = 0;
  std::istringstream in(spec);
  if (!(in >> r.n >> c1 >> r.count >> c2 >> r.edge_probability >> c3 >> r.seed) || c1 != ',' ||
      c2 != ',' || c3 != ',' || !in.eof()) {
    throw UsageError("--random expects N,COUNT,P,SEED");
  }
  if (r.n < 0 || r.n > kOracleMaxVertices || r.count < 0 || r.edge_probability < 0 ||
      r.edge_probability > 1) {
    throw UsageError("--random values out of range");
  }
  return r;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certifying circular-arc graph recognition"};
  app.require_subcommand(1);
  std::string format;

  std::string input;
  std::string out_path;
  auto* recognize_cmd = app.add_subcommand("recognize", "Decide and emit a certificate");
  recognize_cmd->add_option("FILE", input, "Graph file")->required();
  recognize_cmd->add_option("--format", format, "edgelist or graph6")
      ->check(CLI::IsMember({"edgelist", "graph6"}));
  recognize_cmd->add_option("--out", out_path, "Write the certificate here");

  std::string cert_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against a graph");
  verify_cmd->add_option("GRAPH", input, "Graph file")->required();
  verify_cmd->add_option("CERT", cert_path, "Certificate JSON")->required();
  verify_cmd->add_option("--format", format, "edgelist or graph6")
      ->check(CLI::IsMember({"edgelist", "graph6"}));

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force decision for tiny graphs");
  oracle_cmd->add_option("FILE", input, "Graph file")->required();
  oracle_cmd->add_option("--format", format, "edgelist or graph6")
      ->check(CLI::IsMember({"edgelist", "graph6"}));

  int max_n = 5;
  std::string random_spec;
  auto* cross_cmd = app.add_subcommand("crosscheck", "Compare the recognizer with the oracle");
  auto* max_opt = cross_cmd->add_option("--max-n", max_n, "Enumerate all graphs up to this size")
                      ->check(CLI::Range(0, 6));
  cross_cmd->add_option("--random", random_spec, "N,COUNT,P,SEED");

  auto* complete_cmd = app.add_subcommand("complete", "Print the completion of the reduced graph");
  complete_cmd->add_option("FILE", input, "Graph file")->required();
  complete_cmd->add_option("--format", format, "edgelist or graph6")
      ->check(CLI::IsMember({"edgelist", "graph6"}));

  std::string anchor_name;
  std::string dot_path;
  bool all_anchors = false;
  auto* knot_cmd = app.add_subcommand("knotting", "Inspect the anchored knotting graph");
  knot_cmd->add_option("FILE", input, "Graph file")->required();
  knot_cmd->add_option("--format", format, "edgelist or graph6")
      ->check(CLI::IsMember({"edgelist", "graph6"}));
  auto* anchor_opt = knot_cmd->add_option("--anchor", anchor_name, "Anchor vertex of the completion");
  knot_cmd->add_option("--dot", dot_path, "Write the knotting graph as DOT");
  knot_cmd->add_flag("--all-anchors", all_anchors, "Report every anchor");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (recognize_cmd->parsed()) {
      const Graph g = load_graph(input, format);
      const Certificate cert = recognize(g);
      const std::string doc = certificate_to_json(g, cert);
      if (out_path.empty()) {
        out << doc;
      } else {
        spit(out_path, doc);
      }
      return cert.circular_arc() ? kExitCircularArc : kExitNotCircularArc;
    }

    if (verify_cmd->parsed()) {
      const Graph g = load_graph(input, format);
      const std::string text = slurp(cert_path);
      Check result;
      try {
        result = verify_certificate(g, rebind_certificate(parse_certificate_json(text), g));
      } catch (const ParseError& e) {
        result = Check::fail(e.what());
      }
      if (!result) {
        err << "invalid: " << result.reason << '\n';
        return 1;
      }
      out << "valid\n";
      return 0;
    }

    if (oracle_cmd->parsed()) {
      const Graph g = load_graph(input, format);
      const auto seq = find_arc_model(g);
      if (!seq) {
        out << "not-circular-arc\n";
        return kExitNotCircularArc;
      }
      out << "circular-arc:";
      for (const auto& s : *seq) out << ' ' << (s.right ? "R:" : "L:") << g.name(s.vertex);
      out << '\n';
      return kExitCircularArc;
    }

    if (cross_cmd->parsed()) {
      const auto random = parse_random(random_spec);
      const int enumerate_to = (random && max_opt->count() == 0) ? -1 : max_n;
      const CrossCheckReport report = cross_check(enumerate_to, random);
      out << report.to_json_lines();
      return report.clean() ? 0 : 1;
    }

    if (complete_cmd->parsed()) {
      const Graph g = load_graph(input, format);
      const auto done = reduce_and_complete(g);
      if (!done) {
        err << "graph reduces to at most one vertex; nothing to complete\n";
        return 0;
      }
      out << completion_to_json(done->completion);
      return 0;
    }

    if (knot_cmd->parsed()) {
      const Graph g = load_graph(input, format);
      const auto done = reduce_and_complete(g);
      if (!done) throw UsageError("graph reduces to at most one vertex; no knotting graph");
      const TypedGraph& h = done->completion.graph;
      if (all_anchors) {
        for (Vertex z = 0; z < h.size(); ++z) out << describe_knotting(h, KnottingGraph(h, z)) << '\n';
        return 0;
      }
      Vertex z = choose_anchor(h.graph());
      if (anchor_opt->count() > 0) {
        const auto found = h.graph().find(anchor_name);
        if (!found) throw UsageError("no vertex " + anchor_name + " in the completion");
        z = *found;
      }
      const KnottingGraph k(h, z);
      out << describe_knotting(h, k) << '\n';
      if (!dot_path.empty()) spit(dot_path, knotting_to_dot(h, k));
      return 0;
    }
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace circarc::cli

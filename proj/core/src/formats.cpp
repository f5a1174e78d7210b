#include "circarc/formats.hpp"

#include "circarc/errors.hpp"

#include <json.hpp>

#include <map>
#include <sstream>
#include <unordered_map>

namespace circarc {

using nlohmann::json;

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string> names;
  std::unordered_map<std::string, Vertex> index;
  std::vector<Edge> edges;
  auto intern = [&](const std::string& name) {
    const auto [it, fresh] = index.emplace(name, static_cast<Vertex>(names.size()));
    if (fresh) names.push_back(name);
    return it->second;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() > 2) throw ParseError("expected at most two vertex names", number);
    if (tokens.size() == 1) {
      intern(tokens[0]);
      continue;
    }
    if (tokens[0] == tokens[1]) throw ParseError("self-loop at " + tokens[0], number);
    const Vertex u = intern(tokens[0]);
    const Vertex v = intern(tokens[1]);
    edges.emplace_back(u, v);
  }

  Graph g(static_cast<int>(names.size()), edges);
  for (Vertex v = 0; v < g.size(); ++v) g.set_name(v, names[v]);
  return g;
}

Graph parse_graph6(std::string_view line) {
  constexpr std::string_view header = ">>graph6<<";
  if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw ParseError("empty graph6 string");
  for (char ch : line) {
    if (ch < 63 || ch > 126) throw ParseError("graph6 byte out of range");
  }
  const int n = line[0] - 63;
  if (n > 62) throw ParseError("only graph6 short form (n <= 62) is supported");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() != bytes + 1) throw ParseError("graph6 length does not match n");

  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = line[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  for (; k < bytes * 6; ++k) {
    if (((line[1 + k / 6] - 63) >> (5 - k % 6)) & 1) throw ParseError("graph6 padding is not zero");
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.size();
  if (n > 62) throw PreconditionError("only graph6 short form (n <= 62) is supported");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int used = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>(63 + (acc << (6 - used))));
  return out;
}

namespace {

json names_of(const Graph& g, std::span<const Vertex> vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(g.name(v));
  return out;
}

Vertex lookup(const std::map<std::string, Vertex, std::less<>>& index, const json& name) {
  if (!name.is_string()) throw ParseError("vertex name must be a string");
  const auto it = index.find(name.get<std::string>());
  if (it == index.end()) throw ParseError("unknown vertex " + name.get<std::string>());
  return it->second;
}

std::map<std::string, Vertex, std::less<>> index_names(const Graph& g) {
  std::map<std::string, Vertex, std::less<>> out;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!out.emplace(g.name(v), v).second) throw ParseError("duplicate vertex name " + g.name(v));
  }
  return out;
}

}  // namespace

std::string certificate_to_json(const Graph& input, const Certificate& cert) {
  json doc;
  doc["format"] = kCertificateFormat;
  json edges = json::array();
  for (const auto& [u, v] : input.edges()) edges.push_back({input.name(u), input.name(v)});
  std::vector<Vertex> all(static_cast<std::size_t>(input.size()));
  for (Vertex v = 0; v < input.size(); ++v) all[v] = v;
  doc["input"] = {{"n", input.size()}, {"names", names_of(input, all)}, {"edges", edges}};
  doc["verdict"] = cert.circular_arc() ? "circular-arc" : "not-circular-arc";

  json steps = json::array();
  for (const auto& s : cert.reduction) {
    if (s.kind == ReductionStep::Kind::RemoveUniversal) {
      steps.push_back({{"op", "remove-universal"}, {"vertex", input.name(s.removed)}});
    } else {
      steps.push_back({{"op", "merge-twins"}, {"kept", input.name(s.kept)},
                       {"removed", input.name(s.removed)}});
    }
  }
  doc["reduction"] = steps;

  if (cert.circular_arc()) {
    const auto& rep = cert.positive().arcs;
    json arcs = json::object();
    for (Vertex v = 0; v < input.size(); ++v) {
      arcs[input.name(v)] = {rep.arcs[v].left, rep.arcs[v].right};
    }
    doc["positive"] = {{"circle_size", rep.circle_size}, {"arcs", arcs}};
  } else {
    const auto& neg = cert.negative();
    const Graph& h = neg.completion;
    json added = json::array();
    for (Vertex v = neg.base_size; v < h.size(); ++v) {
      json nbrs = json::array();
      for (Vertex u : members(h.closed_neighborhood(v))) {
        if (u != v) nbrs.push_back(h.name(u));
      }
      added.push_back({{"name", h.name(v)},
                       {"partner", h.name(neg.partner[v - neg.base_size])},
                       {"neighbors", nbrs}});
    }
    std::vector<Vertex> base(static_cast<std::size_t>(neg.base_size));
    for (Vertex v = 0; v < neg.base_size; ++v) base[v] = v;
    const auto& ob = neg.obstruction;
    doc["negative"] = {{"completion", {{"base", names_of(h, base)}, {"added", added}}},
                       {"anchor", h.name(ob.anchor)},
                       {"pair", {h.name(ob.first()), h.name(ob.second())}},
                       {"walk_p", names_of(h, ob.walk_p)},
                       {"walk_q", names_of(h, ob.walk_q)}};
  }
  return doc.dump(2) + "\n";
}

CertificateDocument parse_certificate_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("certificate is not JSON: ") + e.what());
  }
  try {
    if (doc.at("format").get<std::string>() != kCertificateFormat) {
      throw ParseError("unsupported certificate format");
    }
    CertificateDocument out;
    const auto& input = doc.at("input");
    const auto names = input.at("names").get<std::vector<std::string>>();
    if (static_cast<int>(names.size()) != input.at("n").get<int>()) {
      throw ParseError("input names do not match n");
    }
    out.input = Graph(static_cast<int>(names.size()));
    for (Vertex v = 0; v < out.input.size(); ++v) out.input.set_name(v, names[v]);
    const auto index = index_names(out.input);
    for (const auto& e : input.at("edges")) {
      out.input.add_edge(lookup(index, e.at(0)), lookup(index, e.at(1)));
    }

    for (const auto& s : doc.at("reduction")) {
      const auto op = s.at("op").get<std::string>();
      if (op == "remove-universal") {
        out.certificate.reduction.push_back(
            {ReductionStep::Kind::RemoveUniversal, lookup(index, s.at("vertex")), -1});
      } else if (op == "merge-twins") {
        out.certificate.reduction.push_back({ReductionStep::Kind::MergeTwins,
                                             lookup(index, s.at("removed")),
                                             lookup(index, s.at("kept"))});
      } else {
        throw ParseError("unknown reduction op " + op);
      }
    }

    const auto verdict = doc.at("verdict").get<std::string>();
    if (verdict == "circular-arc") {
      const auto& pos = doc.at("positive");
      PositiveCertificate body;
      body.arcs.circle_size = pos.at("circle_size").get<int>();
      body.arcs.arcs.assign(names.size(), Arc{-1, -1});
      const auto& arcs = pos.at("arcs");
      if (arcs.size() != names.size()) throw ParseError("arc count does not match n");
      for (const auto& [name, ends] : arcs.items()) {
        body.arcs.arcs[lookup(index, name)] = Arc{ends.at(0).get<int>(), ends.at(1).get<int>()};
      }
      out.certificate.body = body;
    } else if (verdict == "not-circular-arc") {
      const auto& neg = doc.at("negative");
      const Reduction red = replay(out.input, out.certificate.reduction);
      NegativeCertificate body;
      body.completion = red.graph;
      body.base_size = red.graph.size();
      const auto base = neg.at("completion").at("base").get<std::vector<std::string>>();
      if (static_cast<int>(base.size()) != body.base_size) throw ParseError("base size mismatch");
      for (Vertex v = 0; v < body.base_size; ++v) {
        if (base[v] != red.graph.name(v)) throw ParseError("base order differs from the reduction");
      }
      const auto& added = neg.at("completion").at("added");
      for (const auto& a : added) body.completion.add_vertex(a.at("name").get<std::string>());
      const auto h_index = index_names(body.completion);
      Vertex v = body.base_size;
      for (const auto& a : added) {
        const Vertex p = lookup(h_index, a.at("partner"));
        if (p >= body.base_size) throw ParseError("partner must be a base vertex");
        body.partner.push_back(p);
        for (const auto& u : a.at("neighbors")) {
          const Vertex w = lookup(h_index, u);
          if (w == v) throw ParseError("self-loop in completion");
          body.completion.add_edge(v, w);
        }
        ++v;
      }
      auto walk = [&](const json& names_json) {
        std::vector<Vertex> w;
        for (const auto& x : names_json) w.push_back(lookup(h_index, x));
        return w;
      };
      body.obstruction.anchor = lookup(h_index, neg.at("anchor"));
      body.obstruction.walk_p = walk(neg.at("walk_p"));
      body.obstruction.walk_q = walk(neg.at("walk_q"));
      const auto pair = walk(neg.at("pair"));
      if (body.obstruction.walk_p.empty() || body.obstruction.walk_q.empty() || pair.size() != 2 ||
          pair[0] != body.obstruction.first() || pair[1] != body.obstruction.second()) {
        throw ParseError("pair does not match the walks");
      }
      out.certificate.body = std::move(body);
    } else {
      throw ParseError("unknown verdict " + verdict);
    }
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("inconsistent certificate: ") + e.what());
  }
}

Certificate rebind_certificate(const CertificateDocument& doc, const Graph& g) {
  const Graph& src = doc.input;
  if (src.size() != g.size()) throw ParseError("certificate is for a graph of another size");
  const auto target = index_names(g);
  std::vector<Vertex> map(static_cast<std::size_t>(src.size()));
  for (Vertex v = 0; v < src.size(); ++v) map[v] = lookup(target, src.name(v));

  Certificate out;
  for (auto step : doc.certificate.reduction) {
    step.removed = map[step.removed];
    if (step.kept >= 0) step.kept = map[step.kept];
    out.reduction.push_back(step);
  }
  if (doc.certificate.circular_arc()) {
    PositiveCertificate body;
    body.arcs.circle_size = doc.certificate.positive().arcs.circle_size;
    body.arcs.arcs.resize(static_cast<std::size_t>(g.size()));
    for (Vertex v = 0; v < src.size(); ++v) body.arcs.arcs[map[v]] = doc.certificate.positive().arcs.arcs[v];
    out.body = body;
    return out;
  }

  // Base vertices of the completion follow the reduced graph's index order,
  // which can differ between the two graphs.
  const auto& neg = doc.certificate.negative();
  const Reduction red = replay(g, out.reduction);
  const auto old_h = index_names(neg.completion);
  std::vector<Vertex> order;  // new position -> old position
  for (Vertex v = 0; v < red.graph.size(); ++v) order.push_back(lookup(old_h, red.graph.name(v)));
  for (Vertex v = neg.base_size; v < neg.completion.size(); ++v) order.push_back(v);
  if (static_cast<int>(order.size()) != neg.completion.size()) {
    throw ParseError("completion base does not match the graph");
  }
  std::vector<Vertex> inverse(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) inverse[order[i]] = static_cast<Vertex>(i);

  NegativeCertificate body;
  body.completion = neg.completion.induced(order);
  body.base_size = red.graph.size();
  for (Vertex p : neg.partner) body.partner.push_back(inverse[p]);
  body.obstruction.anchor = inverse[neg.obstruction.anchor];
  for (Vertex v : neg.obstruction.walk_p) body.obstruction.walk_p.push_back(inverse[v]);
  for (Vertex v : neg.obstruction.walk_q) body.obstruction.walk_q.push_back(inverse[v]);
  out.body = std::move(body);
  return out;
}

std::string completion_to_json(const Completion& c) {
  const Graph& h = c.graph.graph();
  json vertices = json::array();
  for (Vertex v = 0; v < h.size(); ++v) vertices.push_back(h.name(v));
  json pairs = json::array();
  for (Vertex v = 0; v < h.size(); ++v) {
    if (c.pairing.partner[v] > v) pairs.push_back({h.name(v), h.name(c.pairing.partner[v])});
  }
  json edges = json::array();
  for (const auto& [u, v] : h.edges()) {
    edges.push_back({h.name(u), h.name(v), std::string(to_string(c.graph.type(u, v)))});
  }
  json doc = {{"vertices", vertices}, {"base_size", c.base_size}, {"pairs", pairs}, {"edges", edges}};
  return doc.dump(2) + "\n";
}

std::string knotting_to_dot(const TypedGraph& t, const KnottingGraph& k) {
  std::ostringstream out;
  auto label = [&](int copy) {
    const auto& c = k.copies()[copy];
    return "\"" + t.graph().name(c.vertex) + "/" + std::to_string(c.component) + "\"";
  };
  out << "graph knotting {\n";
  out << "  label=\"anchor " << t.graph().name(k.anchor()) << "\";\n";
  for (std::size_t i = 0; i < k.copies().size(); ++i) out << "  " << label(static_cast<int>(i)) << ";\n";
  for (std::size_t i = 0; i < k.adjacency().size(); ++i) {
    for (int j : k.adjacency()[i]) {
      if (static_cast<int>(i) < j) out << "  " << label(static_cast<int>(i)) << " -- " << label(j) << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace circarc

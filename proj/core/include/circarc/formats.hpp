#pragma once

#include "circarc/completion.hpp"
#include "circarc/graph.hpp"
#include "circarc/knotting.hpp"
#include "circarc/recognizer.hpp"

#include <string>
#include <string_view>

namespace circarc {

// One edge per line as two whitespace-separated names; a lone name declares
// an isolated vertex. '#' starts a comment. Vertices are indexed by first
// appearance. Self-loops are rejected, duplicate edges collapse.
Graph parse_edge_list(std::string_view text);

// Short-form graph6 (n <= 62). Vertex names are decimal indices.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

struct CertificateDocument {
  Graph input;
  Certificate certificate;
};

inline constexpr std::string_view kCertificateFormat = "ca-cert/1";

std::string certificate_to_json(const Graph& input, const Certificate& cert);
CertificateDocument parse_certificate_json(std::string_view text);

// Re-indexes a certificate from doc.input onto g by vertex name.
Certificate rebind_certificate(const CertificateDocument& doc, const Graph& g);

std::string completion_to_json(const Completion& c);

// Copies are labelled "name/component".
std::string knotting_to_dot(const TypedGraph& t, const KnottingGraph& k);

}  // namespace circarc

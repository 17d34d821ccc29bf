#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "resdim/certificates.hpp"
#include "resdim/graph.hpp"

namespace resdim {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Graph files are JSON objects {"n": int, "directed": bool,
// "edges": [[u, v], ...]}; certificates carry either "weights" (one
// integer per vertex) or "set" (vertex indices), plus an optional
// "recipe" tag emitted by the construct subcommand.
struct CertificateFile {
  std::optional<std::vector<int>> weights;
  std::optional<std::vector<int>> set;
  std::string recipe;
};

Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

CertificateFile read_certificate(std::istream& in);
CertificateFile read_certificate_file(const std::string& path);
void write_certificate(std::ostream& out, const CertificateFile& cert);
void write_certificate_file(const std::string& path, const CertificateFile& cert);

}  // namespace resdim

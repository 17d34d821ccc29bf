#include "resdim/io.hpp"

#include <fstream>
#include <ostream>

#include "json.hpp"

namespace resdim {

namespace {

using nlohmann::json;

json parse_stream(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<int> int_list(const json& j, const char* field) {
  if (!j.is_array()) throw ParseError(std::string(field) + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError(std::string(field) + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  return out;
}

}  // namespace

Graph read_graph(std::istream& in) {
  const json j = parse_stream(in);
  if (!j.is_object() || !j.contains("n") || !j.contains("directed") || !j.contains("edges"))
    throw ParseError("graph file needs fields n, directed, edges");
  if (!j["n"].is_number_integer() || !j["directed"].is_boolean())
    throw ParseError("graph file: n must be an integer and directed a boolean");

  Graph g(j["n"].get<int>(), j["directed"].get<bool>());
  if (!j["edges"].is_array()) throw ParseError("edges must be an array of pairs");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair [u, v]");
    try {
      g.add_edge(e[0].get<int>(), e[1].get<int>());
    } catch (const std::invalid_argument& ex) {
      throw ParseError(std::string("bad edge: ") + ex.what());
    }
  }
  return g;
}

Graph read_graph_file(const std::string& path) {
  auto in = open_input(path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  json j;
  j["n"] = g.order();
  j["directed"] = g.is_directed();
  j["edges"] = json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  out << j.dump(2) << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
  auto out = open_output(path);
  write_graph(out, g);
}

CertificateFile read_certificate(std::istream& in) {
  const json j = parse_stream(in);
  if (!j.is_object()) throw ParseError("certificate file must be an object");
  CertificateFile cert;
  if (j.contains("weights")) cert.weights = int_list(j["weights"], "weights");
  if (j.contains("set")) cert.set = int_list(j["set"], "set");
  if (j.contains("recipe")) {
    if (!j["recipe"].is_string()) throw ParseError("recipe must be a string");
    cert.recipe = j["recipe"].get<std::string>();
  }
  if (!cert.weights && !cert.set)
    throw ParseError("certificate file needs a weights or set field");
  if (cert.weights && cert.set)
    throw ParseError("certificate file must not carry both weights and set");
  return cert;
}

CertificateFile read_certificate_file(const std::string& path) {
  auto in = open_input(path);
  return read_certificate(in);
}

void write_certificate(std::ostream& out, const CertificateFile& cert) {
  json j;
  if (cert.weights) j["weights"] = *cert.weights;
  if (cert.set) j["set"] = *cert.set;
  if (!cert.recipe.empty()) j["recipe"] = cert.recipe;
  out << j.dump(2) << '\n';
}

void write_certificate_file(const std::string& path, const CertificateFile& cert) {
  auto out = open_output(path);
  write_certificate(out, cert);
}

}  // namespace resdim

#include "nbwalk/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace nbwalk {

namespace {

std::string format_sig(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return buf;
}

}  // namespace

RegularGraph read_graph_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("bad JSON in " + path + ": " + e.what());
  }
  if (!j.contains("n") || !j.contains("d") || !j.contains("adj")) {
    throw IoError("graph file " + path + " needs fields n, d, adj");
  }
  const int n = j["n"].get<int>();
  const int d = j["d"].get<int>();
  auto adj = j["adj"].get<std::vector<std::vector<VertexId>>>();
  if (static_cast<int>(adj.size()) != n) {
    throw IoError("adjacency length " + std::to_string(adj.size()) +
                  " does not match n=" + std::to_string(n));
  }
  RegularGraph g = RegularGraph::from_adjacency(std::move(adj));
  if (g.degree() != d) {
    throw IoError("declared d=" + std::to_string(d) + " but rows have degree " +
                  std::to_string(g.degree()));
  }
  return g;
}

void write_graph_json(const RegularGraph& g, const std::string& path) {
  std::ostringstream out;
  out << "{\"n\":" << g.n() << ",\"d\":" << g.degree() << ",\"adj\":[";
  for (VertexId v = 0; v < g.n(); ++v) {
    if (v) out << ',';
    out << '[';
    bool first = true;
    for (VertexId w : g.neighbors(v)) {
      if (!first) out << ',';
      out << w;
      first = false;
    }
    out << ']';
  }
  out << "]}\n";
  write_text_file(path, out.str());
}

void write_spectrum_csv(const Spectrum& s, const std::string& path) {
  std::ostringstream out;
  for (int i = 0; i < s.n(); ++i) {
    out << format_sig(s.values[i], 17) << '\n';
  }
  write_text_file(path, out.str());
}

void write_rate_curve_csv(std::span<const RateCurveRow> rows,
                          const std::string& path) {
  std::ostringstream out;
  out << "lambda,rho_simple,rho_nb\n";
  for (const auto& r : rows) {
    out << format_sig(r.lambda, 12) << ',' << format_sig(r.rho_simple, 12)
        << ',' << format_sig(r.rho_nb, 12) << '\n';
  }
  write_text_file(path, out.str());
}

void write_deviations_csv(const MixingReport& rep, const std::string& path) {
  std::ostringstream out;
  out << "k,deviation\n";
  for (std::size_t k = 0; k < rep.deviations.size(); ++k) {
    out << k << ',' << format_sig(rep.deviations[k], 17) << '\n';
  }
  write_text_file(path, out.str());
}

void write_load_csv(const LoadReport& rep, const std::string& path) {
  std::ostringstream out;
  out << "trial,nb_max,simple_max,bins_max\n";
  for (const auto& row : rep.rows) {
    out << row.trial << ',' << row.nb_max << ',' << row.simple_max << ','
        << row.bins_max << '\n';
  }
  write_text_file(path, out.str());
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace nbwalk

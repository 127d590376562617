#pragma once

#include <span>
#include <stdexcept>
#include <string>

#include "nbwalk/evolve.hpp"
#include "nbwalk/graph.hpp"
#include "nbwalk/montecarlo.hpp"
#include "nbwalk/nbtheory.hpp"
#include "nbwalk/spectra.hpp"

namespace nbwalk {

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Graph files: {"n": int, "d": int, "adj": [[sorted ids], ...]}. The writer
// emits exactly this shape with sorted rows, so write/read round-trips are
// byte-stable; the reader funnels through from_adjacency validation.
RegularGraph read_graph_json(const std::string& path);
void write_graph_json(const RegularGraph& g, const std::string& path);

// One eigenvalue per line, 17 significant digits, descending.
void write_spectrum_csv(const Spectrum& s, const std::string& path);

// Header "lambda,rho_simple,rho_nb", 12 significant digits.
void write_rate_curve_csv(std::span<const RateCurveRow> rows,
                          const std::string& path);

// Header "k,deviation".
void write_deviations_csv(const MixingReport& rep, const std::string& path);

// Header "trial,nb_max,simple_max,bins_max".
void write_load_csv(const LoadReport& rep, const std::string& path);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace nbwalk

#ifndef SLBASIS_CONFIG_HPP
#define SLBASIS_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include "slbasis/problem.hpp"

namespace slb {

// Parsed problem configuration (JSON document).
struct Config {
  int grid_size = 256;
  std::string preset = "zero";   // "zero", "linear_antisymmetric", or "samples"
  double preset_param = 0.0;     // slope c for linear_antisymmetric
  std::vector<double> samples;   // explicit potential samples
  RationalHerglotz f;
  RationalHerglotz F;
  int n_max = 20;
  std::optional<std::vector<int>> theta;
  std::optional<std::vector<int>> sizes;

  Potential make_potential() const;
  Problem make_problem() const;
};

Config parse_config(const std::string& json_text);
Config load_config(const std::string& path);

}  // namespace slb

#endif

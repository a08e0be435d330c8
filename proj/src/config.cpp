#include "slbasis/config.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "slbasis/errors.hpp"

namespace slb {

namespace {

using nlohmann::json;

RationalHerglotz parse_herglotz(const json& j) {
  if (j.is_null()) return RationalHerglotz::zero();
  if (!j.is_object()) throw ConfigError("config: boundary coefficient must be an object");
  const double h0 = j.value("h0", 0.0);
  const double h = j.value("h", 0.0);
  std::vector<Pole> poles;
  if (j.contains("poles")) {
    for (const auto& pj : j.at("poles")) {
      if (!pj.is_array() || pj.size() != 2)
        throw ConfigError("config: each pole must be a [location, residue] pair");
      poles.push_back({pj[0].get<double>(), pj[1].get<double>()});
    }
  }
  try {
    return RationalHerglotz(h0, h, std::move(poles));
  } catch (const ConfigError& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

}  // namespace

Potential Config::make_potential() const {
  if (preset == "samples") {
    if (static_cast<int>(samples.size()) != grid_size)
      throw ConfigError("config: sample count must equal grid_size");
    return Potential(samples);
  }
  if (preset == "zero") return Potential::zero(grid_size);
  if (preset == "linear_antisymmetric")
    return Potential::linear_antisymmetric(preset_param, grid_size);
  throw ConfigError("config: unknown potential preset '" + preset + "'");
}

Problem Config::make_problem() const { return Problem(make_potential(), f, F); }

Config parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  Config cfg;
  cfg.grid_size = j.value("grid_size", 256);
  if (cfg.grid_size < 16) throw ConfigError("config: grid_size must be at least 16");

  if (j.contains("potential")) {
    const json& pj = j.at("potential");
    if (pj.is_string()) {
      cfg.preset = pj.get<std::string>();
    } else if (pj.is_array()) {
      cfg.preset = "samples";
      cfg.samples = pj.get<std::vector<double>>();
    } else if (pj.is_object()) {
      cfg.preset = pj.value("preset", "zero");
      cfg.preset_param = pj.value("c", 0.0);
    } else {
      throw ConfigError("config: potential must be a preset name, object, or sample list");
    }
  }

  cfg.f = parse_herglotz(j.contains("f") ? j.at("f") : json());
  cfg.F = parse_herglotz(j.contains("F") ? j.at("F") : json());
  cfg.n_max = j.value("n_max", 20);
  if (cfg.n_max < 0) throw ConfigError("config: n_max must be nonnegative");
  if (j.contains("theta")) cfg.theta = j.at("theta").get<std::vector<int>>();
  if (j.contains("sizes")) cfg.sizes = j.at("sizes").get<std::vector<int>>();
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace slb

#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "chirpmb/atom.hpp"
#include "chirpmb/density_matrix.hpp"
#include "chirpmb/grid.hpp"

namespace chirpmb {

enum class InitialState { kState2, kState1, kCustom };

// Full run specification. Defaults reproduce the reference chirped-pair
// scenario: Gaussian pulses theta_k exp(-tau^2(1/2 + i beta)), medium of
// Lambda atoms initially in |2>.
struct SimulationConfig {
  double theta1 = 15.0;  // peak Rabi amplitude, pulse 1 (1/tau_sigma)
  double theta2 = 13.5;  // peak Rabi amplitude, pulse 2 (1/tau_sigma)
  double beta = 7.0;     // chirp speed (1/tau_sigma^2)
  double alpha = 1.0;    // field-medium coupling per absorption length
  AtomParams atom;
  Grid grid;
  InitialState initial_state = InitialState::kState2;
  DensityMatrix custom_initial;  // used when initial_state == kCustom
  bool lean = false;             // keep only per-xi summaries

  double theta() const { return std::hypot(theta1, theta2); }

  DensityMatrix initial_rho() const {
    switch (initial_state) {
      case InitialState::kState1: return DensityMatrix::ground1();
      case InitialState::kCustom: return custom_initial;
      case InitialState::kState2:
      default: return DensityMatrix::ground2();
    }
  }

  void validate() const {
    if (theta1 < 0.0 || theta2 < 0.0)
      throw std::invalid_argument("pulses: theta1 and theta2 must be >= 0");
    if (theta1 == 0.0 && theta2 == 0.0)
      throw std::invalid_argument("pulses: theta1 and theta2 cannot both be zero");
    if (!std::isfinite(beta)) throw std::invalid_argument("pulses: beta must be finite");
    if (alpha < 0.0 || !std::isfinite(alpha))
      throw std::invalid_argument("medium: alpha must be >= 0 and finite");
    atom.validate();
    grid.validate();
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  auto e = s.find_last_not_of(" \t\r\n");
  return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: " + key + ": not a number: '" + value + "'");
  }
  if (pos != value.size())
    throw std::invalid_argument("config: " + key + ": trailing characters in '" + value + "'");
  return v;
}

inline int parse_int(const std::string& key, const std::string& value) {
  const double v = parse_double(key, value);
  if (v != std::floor(v))
    throw std::invalid_argument("config: " + key + ": expected an integer, got '" + value + "'");
  return static_cast<int>(v);
}

inline bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw std::invalid_argument("config: " + key + ": expected a boolean, got '" + value + "'");
}

}  // namespace detail

// Applies one "section.key = value" assignment. Unknown keys are rejected
// with the full key path.
inline void apply_config_key(SimulationConfig& cfg, const std::string& section,
                             const std::string& key, const std::string& value) {
  using detail::parse_bool;
  using detail::parse_double;
  using detail::parse_int;
  const std::string path = section.empty() ? key : section + "." + key;

  if (section == "pulses") {
    if (key == "theta1") { cfg.theta1 = parse_double(path, value); return; }
    if (key == "theta2") { cfg.theta2 = parse_double(path, value); return; }
    if (key == "beta") { cfg.beta = parse_double(path, value); return; }
  } else if (section == "medium") {
    if (key == "alpha") { cfg.alpha = parse_double(path, value); return; }
    if (key == "gamma") { cfg.atom.gamma = parse_double(path, value); return; }
    if (key == "delta1") { cfg.atom.delta1 = parse_double(path, value); return; }
    if (key == "delta2") { cfg.atom.delta2 = parse_double(path, value); return; }
    if (key == "initial_state") {
      if (value == "state-2") { cfg.initial_state = InitialState::kState2; return; }
      if (value == "state-1") { cfg.initial_state = InitialState::kState1; return; }
      throw std::invalid_argument("config: medium.initial_state: unknown state '" + value + "'");
    }
  } else if (section == "grid") {
    if (key == "tau_min") { cfg.grid.tau_min = parse_double(path, value); return; }
    if (key == "tau_max") { cfg.grid.tau_max = parse_double(path, value); return; }
    if (key == "n_tau") {
      cfg.grid.n_tau = parse_int(path, value);
      if (cfg.grid.n_tau < 2) throw std::invalid_argument("config: grid.n_tau must be >= 2");
      return;
    }
    if (key == "xi_max") { cfg.grid.xi_max = parse_double(path, value); return; }
    if (key == "n_xi") {
      cfg.grid.n_xi = parse_int(path, value);
      if (cfg.grid.n_xi < 1) throw std::invalid_argument("config: grid.n_xi must be >= 1");
      return;
    }
    if (key == "store_every") {
      cfg.grid.store_every = parse_int(path, value);
      if (cfg.grid.store_every < 1)
        throw std::invalid_argument("config: grid.store_every must be >= 1");
      return;
    }
  } else if (section == "output") {
    if (key == "lean") { cfg.lean = parse_bool(path, value); return; }
  } else {
    throw std::invalid_argument("config: unknown section [" + section + "]");
  }
  throw std::invalid_argument("config: unknown key '" + path + "'");
}

// Parses a sectioned key=value document ([pulses]/[medium]/[grid]/[output],
// '#' or ';' comments). An empty document yields the default configuration.
inline SimulationConfig parse_config_text(const std::string& text) {
  SimulationConfig cfg;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                    ": malformed section header");
      section = detail::trim(line.substr(1, line.size() - 2));
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                  ": expected key = value");
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    apply_config_key(cfg, section, key, value);
  }
  cfg.validate();
  return cfg;
}

inline SimulationConfig parse_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("config: cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str());
}

// Canonical "section.key=value" listing of every effective parameter, sorted
// by key. Hashing this makes the config hash independent of key order in the
// source document.
inline std::map<std::string, std::string> canonical_items(const SimulationConfig& cfg) {
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  std::map<std::string, std::string> m;
  m["pulses.theta1"] = num(cfg.theta1);
  m["pulses.theta2"] = num(cfg.theta2);
  m["pulses.beta"] = num(cfg.beta);
  m["medium.alpha"] = num(cfg.alpha);
  m["medium.gamma"] = num(cfg.atom.gamma);
  m["medium.delta1"] = num(cfg.atom.delta1);
  m["medium.delta2"] = num(cfg.atom.delta2);
  m["medium.initial_state"] =
      cfg.initial_state == InitialState::kState1 ? "state-1"
      : cfg.initial_state == InitialState::kCustom ? "custom"
                                                   : "state-2";
  m["grid.tau_min"] = num(cfg.grid.tau_min);
  m["grid.tau_max"] = num(cfg.grid.tau_max);
  m["grid.n_tau"] = std::to_string(cfg.grid.n_tau);
  m["grid.xi_max"] = num(cfg.grid.xi_max);
  m["grid.n_xi"] = std::to_string(cfg.grid.n_xi);
  m["grid.store_every"] = std::to_string(cfg.grid.store_every);
  m["output.lean"] = cfg.lean ? "true" : "false";
  return m;
}

// FNV-1a over the canonical item list.
inline std::string config_hash(const SimulationConfig& cfg) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  for (const auto& [k, v] : canonical_items(cfg)) {
    mix(k);
    mix("=");
    mix(v);
    mix("\n");
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace chirpmb

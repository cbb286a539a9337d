#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "chirpmb/common.hpp"

namespace chirpmb {

// Retarded-time / depth discretization. tau in units of the pulse duration
// tau_sigma, xi in absorption lengths.
struct Grid {
  double tau_min = -6.0;
  double tau_max = 8.0;
  int n_tau = 2801;
  double xi_max = 60.0;
  int n_xi = 240;       // number of spatial steps from 0 to xi_max
  int store_every = 4;  // spatial decimation of stored slices

  double d_tau() const { return (tau_max - tau_min) / (n_tau - 1); }
  double d_xi() const { return n_xi > 0 ? xi_max / n_xi : 0.0; }
  double tau(int i) const { return tau_min + i * d_tau(); }

  std::vector<double> tau_axis() const {
    std::vector<double> t(static_cast<std::size_t>(n_tau));
    for (int i = 0; i < n_tau; ++i) t[static_cast<std::size_t>(i)] = tau(i);
    return t;
  }

  void validate() const {
    if (!(tau_min < tau_max)) throw std::invalid_argument("grid: tau_min must be < tau_max");
    if (n_tau < 2) throw std::invalid_argument("grid: n_tau must be >= 2");
    if (xi_max < 0.0) throw std::invalid_argument("grid: xi_max must be >= 0");
    if (n_xi < 1) throw std::invalid_argument("grid: n_xi must be >= 1");
    if (store_every < 1) throw std::invalid_argument("grid: store_every must be >= 1");
  }
};

// Complex Rabi-frequency envelopes of the two pulses sampled on the tau grid.
struct FieldSlice {
  std::vector<cplx> omega1;
  std::vector<cplx> omega2;

  FieldSlice() = default;
  explicit FieldSlice(std::size_t n) : omega1(n), omega2(n) {}

  std::size_t size() const { return omega1.size(); }

  bool finite() const {
    for (std::size_t i = 0; i < omega1.size(); ++i) {
      if (!std::isfinite(omega1[i].real()) || !std::isfinite(omega1[i].imag()) ||
          !std::isfinite(omega2[i].real()) || !std::isfinite(omega2[i].imag()))
        return false;
    }
    return true;
  }

  void check_matches(const Grid& grid) const {
    if (omega1.size() != omega2.size() ||
        omega1.size() != static_cast<std::size_t>(grid.n_tau))
      throw std::invalid_argument("FieldSlice: sample count does not match grid");
  }
};

}  // namespace chirpmb

#pragma once

#include <stdexcept>
#include <vector>

#include "chirpmb/atom.hpp"
#include "chirpmb/density_matrix.hpp"
#include "chirpmb/grid.hpp"

namespace chirpmb {

// Integrates the master equation over the tau grid at fixed depth with
// classical fixed-step RK4. Fields are taken linear between samples, so the
// half-step value is the midpoint of adjacent samples. Returns rho at every
// grid node, starting with rho0.
inline std::vector<DensityMatrix> evolve_slice(const DensityMatrix& rho0,
                                               const FieldSlice& fields,
                                               const AtomParams& atom,
                                               const Grid& grid) {
  grid.validate();
  fields.check_matches(grid);
  if (!fields.finite())
    throw std::invalid_argument("evolve_slice: non-finite field sample");
  if (!rho0.finite())
    throw std::invalid_argument("evolve_slice: non-finite initial state");

  const int n = grid.n_tau;
  const double h = grid.d_tau();
  std::vector<DensityMatrix> out;
  out.reserve(static_cast<std::size_t>(n));
  out.push_back(rho0);

  DensityMatrix rho = rho0;
  for (int i = 0; i + 1 < n; ++i) {
    const cplx o1a = fields.omega1[static_cast<std::size_t>(i)];
    const cplx o2a = fields.omega2[static_cast<std::size_t>(i)];
    const cplx o1b = fields.omega1[static_cast<std::size_t>(i) + 1];
    const cplx o2b = fields.omega2[static_cast<std::size_t>(i) + 1];
    const cplx o1m = 0.5 * (o1a + o1b);
    const cplx o2m = 0.5 * (o2a + o2b);

    const auto ha = hamiltonian_rwa(o1a, o2a, atom);
    const auto hm = hamiltonian_rwa(o1m, o2m, atom);
    const auto hb = hamiltonian_rwa(o1b, o2b, atom);

    const DensityMatrix k1 = master_rhs(rho, ha, atom);
    const DensityMatrix k2 = master_rhs(rho + (0.5 * h) * k1, hm, atom);
    const DensityMatrix k3 = master_rhs(rho + (0.5 * h) * k2, hm, atom);
    const DensityMatrix k4 = master_rhs(rho + h * k3, hb, atom);

    rho = rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    out.push_back(rho);
  }
  return out;
}

}  // namespace chirpmb

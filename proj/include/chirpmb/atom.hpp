#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "chirpmb/common.hpp"
#include "chirpmb/density_matrix.hpp"

namespace chirpmb {

// Atomic constants in pulse-duration units (rates in 1/tau_sigma).
struct AtomParams {
  double gamma = 0.04;   // longitudinal relaxation rate of |0> into each ground state
  double delta1 = 0.0;   // detuning of pulse 1 from the |0>-|1> transition
  double delta2 = 0.0;   // detuning of pulse 2 from the |0>-|2> transition

  void validate() const {
    if (gamma < 0.0) throw std::invalid_argument("AtomParams: gamma must be >= 0");
    if (!std::isfinite(gamma) || !std::isfinite(delta1) || !std::isfinite(delta2))
      throw std::invalid_argument("AtomParams: non-finite parameter");
  }
};

// Rotating-wave Hamiltonian (units hbar/tau_sigma):
//   H = -[ -delta1|1><1| - delta2|2><2| + (Omega1|0><1| + Omega2|0><2| + h.c.) ]
inline Eigen::Matrix3cd hamiltonian_rwa(cplx omega1, cplx omega2,
                                        const AtomParams& atom) {
  Eigen::Matrix3cd h = Eigen::Matrix3cd::Zero();
  h(1, 1) = atom.delta1;
  h(2, 2) = atom.delta2;
  h(0, 1) = -omega1;
  h(1, 0) = -std::conj(omega1);
  h(0, 2) = -omega2;
  h(2, 0) = -std::conj(omega2);
  return h;
}

// Right-hand side of the dissipative master equation,
//   d rho/d tau = -i[H, rho] - 2 Gamma |0><0| rho00
//                 + sum_k [ Gamma rho00 |k><k| - (Gamma rho_0k |0><k| + h.c.) ],
// for a general Hermitian H. The ground-state coherence rho_12 does not decay.
// The returned derivative is traceless (the decay terms cancel exactly; the
// commutator diagonal is assembled from shared pair terms).
inline DensityMatrix master_rhs(const DensityMatrix& rho,
                                const Eigen::Matrix3cd& h,
                                const AtomParams& atom) {
  const cplx h01 = h(0, 1);
  const cplx h02 = h(0, 2);
  const cplx h12 = h(1, 2);
  const double e0 = h(0, 0).real();
  const double e1 = h(1, 1).real();
  const double e2 = h(2, 2).real();
  const cplx i{0.0, 1.0};

  const double t01 = std::imag(h01 * std::conj(rho.c01));
  const double t02 = std::imag(h02 * std::conj(rho.c02));
  const double t12 = std::imag(h12 * std::conj(rho.c12));

  DensityMatrix d;
  d.p0 = 2.0 * t01 + 2.0 * t02;
  d.p1 = -2.0 * t01 + 2.0 * t12;
  d.p2 = -2.0 * t02 - 2.0 * t12;

  const cplx comm01 = (e0 - e1) * rho.c01 + h01 * (rho.p1 - rho.p0) +
                      h02 * std::conj(rho.c12) - rho.c02 * std::conj(h12);
  const cplx comm02 = (e0 - e2) * rho.c02 + h02 * (rho.p2 - rho.p0) +
                      h01 * rho.c12 - rho.c01 * h12;
  const cplx comm12 = (e1 - e2) * rho.c12 + h12 * (rho.p2 - rho.p1) +
                      std::conj(h01) * rho.c02 - std::conj(rho.c01) * h02;
  d.c01 = -i * comm01;
  d.c02 = -i * comm02;
  d.c12 = -i * comm12;

  const double g = atom.gamma * rho.p0;
  d.p0 -= g + g;
  d.p1 += g;
  d.p2 += g;
  d.c01 -= atom.gamma * rho.c01;
  d.c02 -= atom.gamma * rho.c02;
  return d;
}

}  // namespace chirpmb

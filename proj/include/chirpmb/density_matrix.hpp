#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "chirpmb/common.hpp"

namespace chirpmb {

// Space-averaged single-atom state on the {|0>,|1>,|2>} basis (|0> excited,
// |1>,|2> metastable ground states). Only the upper triangle is stored, so
// rho_lk == conj(rho_kl) holds exactly by construction.
struct DensityMatrix {
  double p0 = 0.0, p1 = 0.0, p2 = 0.0;  // populations <k|rho|k>
  cplx c01{0.0, 0.0};                   // <0|rho|1>
  cplx c02{0.0, 0.0};                   // <0|rho|2>
  cplx c12{0.0, 0.0};                   // <1|rho|2>

  static DensityMatrix ground1() {
    DensityMatrix r;
    r.p1 = 1.0;
    return r;
  }

  static DensityMatrix ground2() {
    DensityMatrix r;
    r.p2 = 1.0;
    return r;
  }

  static DensityMatrix excited() {
    DensityMatrix r;
    r.p0 = 1.0;
    return r;
  }

  // |psi><psi| for amplitudes (a0, a1, a2); the input need not be normalized.
  static DensityMatrix pure(const Eigen::Vector3cd& a) {
    DensityMatrix r;
    r.p0 = std::norm(a(0));
    r.p1 = std::norm(a(1));
    r.p2 = std::norm(a(2));
    r.c01 = a(0) * std::conj(a(1));
    r.c02 = a(0) * std::conj(a(2));
    r.c12 = a(1) * std::conj(a(2));
    return r;
  }

  Eigen::Matrix3cd matrix() const {
    Eigen::Matrix3cd m;
    m(0, 0) = p0;
    m(1, 1) = p1;
    m(2, 2) = p2;
    m(0, 1) = c01;
    m(1, 0) = std::conj(c01);
    m(0, 2) = c02;
    m(2, 0) = std::conj(c02);
    m(1, 2) = c12;
    m(2, 1) = std::conj(c12);
    return m;
  }

  // Reconstructs from a full matrix, enforcing Hermiticity: diagonals take
  // their real parts, off-diagonals the mean of the two conjugate entries.
  static DensityMatrix from_matrix(const Eigen::Matrix3cd& m) {
    DensityMatrix r;
    r.p0 = m(0, 0).real();
    r.p1 = m(1, 1).real();
    r.p2 = m(2, 2).real();
    r.c01 = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
    r.c02 = 0.5 * (m(0, 2) + std::conj(m(2, 0)));
    r.c12 = 0.5 * (m(1, 2) + std::conj(m(2, 1)));
    return r;
  }

  double trace() const { return p0 + p1 + p2; }

  double population(int k) const {
    switch (k) {
      case 0: return p0;
      case 1: return p1;
      case 2: return p2;
      default: throw std::out_of_range("DensityMatrix::population: level index");
    }
  }

  // Smallest eigenvalue; >= -1e-8 is the positivity tolerance used by the
  // integrator diagnostics.
  double min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> es;
    es.computeDirect(matrix(), Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
  }

  // Expectation <psi|rho|psi> for a (normalized) state vector.
  double expectation(const Eigen::Vector3cd& psi) const {
    const Eigen::Vector3cd v = matrix() * psi;
    return psi.dot(v).real();
  }

  bool finite() const {
    return std::isfinite(p0) && std::isfinite(p1) && std::isfinite(p2) &&
           std::isfinite(c01.real()) && std::isfinite(c01.imag()) &&
           std::isfinite(c02.real()) && std::isfinite(c02.imag()) &&
           std::isfinite(c12.real()) && std::isfinite(c12.imag());
  }
};

// Linear-space operations used by the time stepper. Derivatives share the
// storage layout (they are Hermitian, traceless).
inline DensityMatrix operator+(const DensityMatrix& a, const DensityMatrix& b) {
  DensityMatrix r;
  r.p0 = a.p0 + b.p0;
  r.p1 = a.p1 + b.p1;
  r.p2 = a.p2 + b.p2;
  r.c01 = a.c01 + b.c01;
  r.c02 = a.c02 + b.c02;
  r.c12 = a.c12 + b.c12;
  return r;
}

inline DensityMatrix operator*(double s, const DensityMatrix& a) {
  DensityMatrix r;
  r.p0 = s * a.p0;
  r.p1 = s * a.p1;
  r.p2 = s * a.p2;
  r.c01 = s * a.c01;
  r.c02 = s * a.c02;
  r.c12 = s * a.c12;
  return r;
}

}  // namespace chirpmb

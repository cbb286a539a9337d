#pragma once

#include <complex>
#include <numbers>

namespace chirpmb {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

}  // namespace chirpmb

#pragma once

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

#include "error.hpp"

namespace rgbp {

using cplx = std::complex<double>;

// Admissible parameter window  -delta1*n + 3/2 <= a <= delta2*n.
struct Admissibility {
  double delta1 = 0.9;
  double delta2 = 10.0;
};

struct ProblemParams {
  int n = 0;
  double a = 0.0;
  double u = 0.0;      // n + 1/2
  double alpha = 0.0;  // (a - 2)/u
  double sigma = 0.0;  // sqrt(1 + alpha)
  cplx z1;             // i*sigma - alpha/2, upper turning point
  cplx z2;             // conj(z1)

  // Number of zeros with nonnegative imaginary part.
  int upper_count() const noexcept { return (n + 1) / 2; }
};

inline ProblemParams make_params(int n, double a, const Admissibility& adm = {}) {
  if (!(adm.delta1 > 0.0 && adm.delta1 < 1.0) || !(adm.delta2 > 0.0)) {
    throw std::invalid_argument("admissibility requires 0 < delta1 < 1 and delta2 > 0");
  }
  if (n < 1) {
    throw InvalidDegree("degree n must be >= 1, got " + std::to_string(n));
  }
  const double lo = -adm.delta1 * n + 1.5;
  const double hi = adm.delta2 * n;
  if (!std::isfinite(a) || a < lo || a > hi) {
    std::ostringstream os;
    os << "a = " << a << " outside [" << lo << ", " << hi << "] for n = " << n;
    throw ParameterOutOfRange(os.str());
  }
  ProblemParams p;
  p.n = n;
  p.a = a;
  p.u = n + 0.5;
  p.alpha = (a - 2.0) / p.u;
  p.sigma = std::sqrt(1.0 + p.alpha);
  p.z1 = cplx(-0.5 * p.alpha, p.sigma);
  p.z2 = std::conj(p.z1);
  return p;
}

}  // namespace rgbp

#pragma once

#include <cmath>

#include "bivec/types.hpp"

namespace bivec {

/// Matrix exponential by scaling-and-squaring with a truncated Taylor
/// series. Works for real and complex fixed-size Eigen matrices; the
/// series is summed until the term drops below machine epsilon relative
/// to the partial sum.
template <typename Mat>
Mat expm(const Mat& x) {
  const double norm = x.cwiseAbs().rowwise().sum().maxCoeff();  // inf-norm
  int squarings = 0;
  if (norm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  }
  const Mat a = x / std::pow(2.0, squarings);

  Mat sum = Mat::Identity();
  Mat term = Mat::Identity();
  for (int k = 1; k <= 40; ++k) {
    term = (term * a / static_cast<double>(k)).eval();
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18 * sum.cwiseAbs().maxCoeff()) break;
  }
  for (int s = 0; s < squarings; ++s) sum = (sum * sum).eval();
  return sum;
}

}  // namespace bivec

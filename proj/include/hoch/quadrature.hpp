#pragma once

#include <vector>

namespace hoch {

struct GaussRule {
  std::vector<double> x;  // nodes on [-1, 1]
  std::vector<double> w;
};

// q-point Gauss-Legendre rule, exact for degree 2q - 1
const GaussRule& gauss_legendre(int q);

}  // namespace hoch

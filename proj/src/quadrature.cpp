#include "hoch/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace hoch {

const GaussRule& gauss_legendre(int q) {
  if (q < 1) throw std::domain_error("gauss_legendre: q >= 1");
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return *it->second;

  auto rule = std::make_unique<GaussRule>();
  rule->x.resize(q);
  rule->w.resize(q);
  for (int i = 0; i < q; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (q + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= q; ++k) {
        double p2 = ((2.0 * k - 1) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = q * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule->x[q - 1 - i] = x;
    rule->w[q - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return *cache.emplace(q, std::move(rule)).first->second;
}

}  // namespace hoch

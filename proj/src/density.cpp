#include "opnkit/density.hpp"

#include <set>
#include <stdexcept>

namespace opnkit {

Int squarefull_count(const Int& limit) {
  if (limit < 1) throw std::invalid_argument("squarefull_count: limit >= 1");
  std::set<Int> seen;
  for (Int b = 1; b * b * b <= limit; ++b) {
    Int b3 = b * b * b;
    for (Int a = 1; a * a * b3 <= limit; ++a) seen.insert(a * a * b3);
  }
  return Int(seen.size());
}

DensityEstimate prime_product_density(const std::vector<Int>& bounds) {
  if (bounds.empty())
    throw std::invalid_argument("prime_product_density: bounds must be nonempty");
  BigFloat v(1ul);
  for (const Int& b : bounds) {
    if (b < 2)
      throw std::invalid_argument("prime_product_density: bounds must be >= 2");
    v = v / BigFloat(b).log();
  }
  return DensityEstimate{bounds, unsigned(bounds.size()), v};
}

DensityEstimate opn_density_bound(const Int& interval_start,
                                  unsigned factor_count, bool exclude_three) {
  if (interval_start < 2)
    throw std::invalid_argument("opn_density_bound: interval_start >= 2");
  if (factor_count < 8)
    throw std::invalid_argument("opn_density_bound: factor_count >= 8");

  std::vector<Int> bounds = {Int(1000000), Int(10000), Int(100)};
  unsigned long p = exclude_three ? 5 : 3;
  while (bounds.size() < factor_count) {
    while (!is_prime(Int(p))) p += 2;
    bounds.push_back(Int(p));
    p += 2;
  }

  BigFloat rho = prime_product_density(bounds).value;
  BigFloat mean_squarefull = BigFloat(1ul) / BigFloat(interval_start).sqrt();
  return DensityEstimate{bounds, factor_count, mean_squarefull * rho * rho};
}

}  // namespace opnkit

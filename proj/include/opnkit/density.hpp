// Square-full counting by exact enumeration and the heuristic density
// bounds over prime-floor lists, carried in 256-bit floats.
#ifndef OPNKIT_DENSITY_HPP
#define OPNKIT_DENSITY_HPP

#include <vector>

#include "opnkit/bigfloat.hpp"
#include "opnkit/core_arith.hpp"

namespace opnkit {

struct DensityEstimate {
  std::vector<Int> prime_floor_bounds;
  unsigned factor_count;
  BigFloat value;
};

// |{ m <= limit : p | m implies p^2 | m }| by enumerating a^2 b^3 with
// deduplication. Exact.
Int squarefull_count(const Int& limit);

// prod_i 1 / ln(bound_i): the density of integers with one prime factor
// above each floor, every log taken at 256-bit precision.
DensityEstimate prime_product_density(const std::vector<Int>& bounds);

// Heuristic upper bound for Euler-form candidates near interval_start whose
// assembled divisor-sum product is square-full: the mean square-full density
// below the interval start (leading term N^{-1/2}) times the prime-product
// density squared, once for the prime support of the candidate and once for
// the product it must assemble. Floors: 10^6, 10^4, 10^2, then the smallest
// odd primes (from 5 when exclude_three) up to factor_count entries.
DensityEstimate opn_density_bound(const Int& interval_start,
                                  unsigned factor_count, bool exclude_three);

}  // namespace opnkit

#endif

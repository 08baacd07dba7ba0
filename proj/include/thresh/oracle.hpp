#pragma once

// Slow exact references. Nothing here shares code with the recurrence or
// product-tree paths it is used to check.

#include <gmpxx.h>

#include "thresh/graph.hpp"
#include "thresh/poly.hpp"

namespace thresh::oracle {

/// Fraction-free Gaussian elimination; every division is exact.
mpz_class bareiss_det(const DenseIntMatrix& m);

/// det(lambda I - m) by Faddeev-LeVerrier. Throws CapExceeded past oracle_cap().
IntPoly dense_charpoly(const DenseIntMatrix& m);

/// Evaluates chi at 0..n with charpoly_eval and rebuilds the polynomial by
/// Newton interpolation over the rationals.
IntPoly charpoly_interpolation(const ThresholdGraph& g);

/// Number of fixed-point-free permutations of k elements.
mpz_class derangements(unsigned long k);

}  // namespace thresh::oracle

#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "thresh/graph.hpp"
#include "thresh/poly.hpp"

namespace thresh {

/// Symmetric matrix with entry b_min(i,j) off the diagonal and d_i on it.
/// Adjacency matrices of threshold graphs are the case d = 0, b in {0,1}.
class WeightedThresholdMatrix {
 public:
  /// Requires d.size() >= 1 and b.size() == d.size() - 1, else DomainError.
  WeightedThresholdMatrix(std::vector<mpz_class> b, std::vector<mpz_class> d);

  static WeightedThresholdMatrix adjacency(const ThresholdGraph& g);

  [[nodiscard]] std::size_t size() const noexcept { return d_.size(); }
  [[nodiscard]] const std::vector<mpz_class>& off_diagonal() const noexcept { return b_; }
  [[nodiscard]] const std::vector<mpz_class>& diagonal() const noexcept { return d_; }
  /// Entry (i, j), 1-based.
  [[nodiscard]] mpz_class at(std::size_t i, std::size_t j) const;

  DenseIntMatrix to_dense(std::size_t cap) const;
  DenseIntMatrix to_dense() const;

 private:
  std::vector<mpz_class> b_;
  std::vector<mpz_class> d_;
};

/// Determinant via the two-term recurrence
///   D_0 = 1, D_1 = d_1,
///   D_k = (d_k + d_{k-1} - 2 b_{k-1}) D_{k-1} - (b_{k-1} - d_{k-1})^2 D_{k-2}.
/// O(n) big-integer operations.
mpz_class det_weighted(const WeightedThresholdMatrix& m);

/// chi(G, x) = det(xI - A), evaluated in O(n) operations.
mpz_class charpoly_eval(const ThresholdGraph& g, const mpz_class& x);

/// One step of the determinant recurrence as a 2x2 polynomial matrix:
///   [D_k; D_{k-1}] = [[d_k + d_{k-1} - 2 b_{k-1}, -(b_{k-1} - d_{k-1})^2], [1, 0]] [D_{k-1}; D_{k-2}]
/// with b, d themselves polynomials in lambda.
PolyMatrix2 recurrence_factor(const IntPoly& b_prev, const IntPoly& d_prev, const IntPoly& d_cur);

/// Factor for one creation bit in det(lambda I - A): recurrence_factor with
/// b -> -bit and d -> lambda, i.e. [[2 lambda + 2 bit, -(lambda + bit)^2], [1, 0]].
PolyMatrix2 build_factor(int bit);

/// Ordered product f[0] * f[1] * ... * f[m-1] by rounds of adjacent pairwise
/// multiplication. The list is first padded on the left with identities up to
/// a power of two. threads > 1 runs the pairs of a round concurrently; the
/// result does not depend on it.
PolyMatrix2 balanced_product(std::vector<PolyMatrix2> factors, unsigned threads = 1);

/// Quadratic-time polynomial version of the determinant recurrence.
IntPoly charpoly_quadratic(const ThresholdGraph& g);

/// B_{n-1} ... B_1 applied to (lambda, 1) through balanced_product.
/// threads == 0 picks std::thread::hardware_concurrency().
IntPoly charpoly_balanced(const ThresholdGraph& g, unsigned threads = 1);

/// det(lambda I - M) via the balanced product of general recurrence factors.
IntPoly charpoly_weighted(const WeightedThresholdMatrix& m, unsigned threads = 1);

enum class Algorithm { Auto, Quadratic, Balanced, Oracle, Interpolation };

/// n below which Algorithm::Auto runs the quadratic recurrence. Default 512,
/// or THRESH_AUTO_CROSSOVER from the environment.
std::size_t auto_crossover();
void set_auto_crossover(std::size_t n);

/// Dispatches to one of the algorithms. Oracle and Interpolation live in
/// oracle.hpp; Oracle is subject to oracle_cap().
IntPoly charpoly(const ThresholdGraph& g, Algorithm algo, unsigned threads = 1);

}  // namespace thresh

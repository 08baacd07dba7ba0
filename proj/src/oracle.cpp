#include "thresh/oracle.hpp"

#include <string>
#include <utility>
#include <vector>

#include "thresh/charpoly.hpp"
#include "thresh/errors.hpp"

namespace thresh::oracle {

mpz_class bareiss_det(const DenseIntMatrix& input) {
  DenseIntMatrix m = input;
  const std::size_t n = m.size();
  int sign = 1;
  mpz_class pivot_prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(m(r, k)) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        if (!mpz_divisible_p(t.get_mpz_t(), pivot_prev.get_mpz_t())) {
          throw ArithmeticInvariantError("bareiss: inexact division");
        }
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), pivot_prev.get_mpz_t());
      }
    }
    pivot_prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntPoly dense_charpoly(const DenseIntMatrix& a) {
  const std::size_t n = a.size();
  if (n > oracle_cap()) {
    throw CapExceeded("dense charpoly for n = " + std::to_string(n) + " exceeds oracle cap " +
                      std::to_string(oracle_cap()));
  }
  // Faddeev-LeVerrier: M_1 = I, c_{n-k} = -tr(A M_k) / k, M_{k+1} = A M_k + c_{n-k} I.
  std::vector<mpz_class> c(n + 1);
  c[n] = 1;
  DenseIntMatrix m = DenseIntMatrix::identity(n);
  DenseIntMatrix am(n);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        mpz_class s = 0;
        for (std::size_t t = 0; t < n; ++t) {
          if (sgn(a(i, t)) != 0) mpz_addmul(s.get_mpz_t(), a(i, t).get_mpz_t(), m(t, j).get_mpz_t());
        }
        am(i, j) = std::move(s);
      }
    }
    mpz_class trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    const mpz_class kk = static_cast<unsigned long>(k);
    if (!mpz_divisible_p(trace.get_mpz_t(), kk.get_mpz_t())) {
      throw ArithmeticInvariantError("faddeev-leverrier: trace not divisible by k");
    }
    mpz_divexact(c[n - k].get_mpz_t(), trace.get_mpz_t(), kk.get_mpz_t());
    c[n - k] = -c[n - k];
    m = am;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k];
  }
  return IntPoly(std::move(c));
}

IntPoly charpoly_interpolation(const ThresholdGraph& g) {
  const std::size_t n = g.vertex_count();
  // Nodes x_j = j, j = 0..n. Newton divided differences in place.
  std::vector<mpq_class> dd(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    dd[j] = charpoly_eval(g, mpz_class(static_cast<unsigned long>(j)));
  }
  for (std::size_t level = 1; level <= n; ++level) {
    for (std::size_t i = n; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / mpq_class(static_cast<unsigned long>(level));
    }
  }

  // sum_k dd[k] * prod_{j<k} (lambda - j)
  std::vector<mpq_class> result(n + 1);
  std::vector<mpq_class> basis{mpq_class(1)};
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t t = 0; t < basis.size(); ++t) result[t] += dd[k] * basis[t];
    if (k == n) break;
    std::vector<mpq_class> next(basis.size() + 1);
    const mpq_class root(static_cast<unsigned long>(k));
    for (std::size_t t = 0; t < basis.size(); ++t) {
      next[t + 1] += basis[t];
      next[t] -= root * basis[t];
    }
    basis = std::move(next);
  }

  std::vector<mpz_class> coeffs;
  coeffs.reserve(result.size());
  for (auto& q : result) {
    q.canonicalize();
    if (q.get_den() != 1) {
      throw ArithmeticInvariantError("interpolation produced non-integral coefficient " +
                                     q.get_str());
    }
    coeffs.push_back(q.get_num());
  }
  return IntPoly(std::move(coeffs));
}

mpz_class derangements(unsigned long k) {
  if (k == 0) return 1;
  mpz_class older = 1;  // D(0)
  mpz_class prev = 0;   // D(1)
  for (unsigned long i = 2; i <= k; ++i) {
    mpz_class next = (i - 1) * (prev + older);
    older = std::move(prev);
    prev = std::move(next);
  }
  return prev;
}

}  // namespace thresh::oracle

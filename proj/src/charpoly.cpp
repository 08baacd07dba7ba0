#include "thresh/charpoly.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <string>
#include <thread>

#include "thresh/errors.hpp"
#include "thresh/oracle.hpp"

namespace thresh {

WeightedThresholdMatrix::WeightedThresholdMatrix(std::vector<mpz_class> b, std::vector<mpz_class> d)
    : b_(std::move(b)), d_(std::move(d)) {
  if (d_.empty()) throw DomainError("weighted threshold matrix needs n >= 1 diagonal entries");
  if (b_.size() + 1 != d_.size()) {
    throw DomainError("weighted threshold matrix: expected " + std::to_string(d_.size() - 1) +
                      " off-diagonal values for n = " + std::to_string(d_.size()) + ", got " +
                      std::to_string(b_.size()));
  }
}

WeightedThresholdMatrix WeightedThresholdMatrix::adjacency(const ThresholdGraph& g) {
  const auto& bits = g.sequence().bits();
  std::vector<mpz_class> b(bits.begin(), bits.end());
  return WeightedThresholdMatrix(std::move(b), std::vector<mpz_class>(g.vertex_count()));
}

mpz_class WeightedThresholdMatrix::at(std::size_t i, std::size_t j) const {
  const std::size_t n = size();
  if (i < 1 || i > n || j < 1 || j > n) throw DomainError("matrix index out of range");
  if (i == j) return d_[i - 1];
  return b_[std::min(i, j) - 1];
}

DenseIntMatrix WeightedThresholdMatrix::to_dense(std::size_t cap) const {
  const std::size_t n = size();
  if (n > cap) {
    throw CapExceeded("dense expansion for n = " + std::to_string(n) + " exceeds oracle cap " +
                      std::to_string(cap));
  }
  DenseIntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = d_[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = b_[i];
      m(j, i) = b_[i];
    }
  }
  return m;
}

DenseIntMatrix WeightedThresholdMatrix::to_dense() const { return to_dense(oracle_cap()); }

mpz_class det_weighted(const WeightedThresholdMatrix& m) {
  const auto& b = m.off_diagonal();
  const auto& d = m.diagonal();
  mpz_class older = 1;     // D_{k-2}
  mpz_class prev = d[0];   // D_{k-1}
  mpz_class lead, tail;
  for (std::size_t k = 2; k <= d.size(); ++k) {
    lead = d[k - 1] + d[k - 2] - 2 * b[k - 2];
    tail = b[k - 2] - d[k - 2];
    tail *= tail;
    mpz_class next = lead * prev - tail * older;
    older = std::move(prev);
    prev = std::move(next);
  }
  return prev;
}

mpz_class charpoly_eval(const ThresholdGraph& g, const mpz_class& x) {
  // det(xI - A): off-diagonal -b_i, diagonal x.
  const auto& bits = g.sequence().bits();
  mpz_class older = 1;
  mpz_class prev = x;
  for (std::size_t k = 2; k <= g.vertex_count(); ++k) {
    const long b = bits[k - 2];
    mpz_class lead = 2 * x + 2 * b;
    mpz_class tail = x + b;
    tail *= tail;
    mpz_class next = lead * prev - tail * older;
    older = std::move(prev);
    prev = std::move(next);
  }
  return prev;
}

PolyMatrix2 recurrence_factor(const IntPoly& b_prev, const IntPoly& d_prev, const IntPoly& d_cur) {
  const IntPoly gap = b_prev - d_prev;
  return {
      d_cur + d_prev - poly_scale(b_prev, 2),
      -(gap * gap),
      IntPoly{1},
      IntPoly{},
  };
}

PolyMatrix2 build_factor(int bit) {
  if (bit != 0 && bit != 1) throw DomainError("creation bit must be 0 or 1");
  return recurrence_factor(IntPoly{-bit}, IntPoly::lambda(), IntPoly::lambda());
}

PolyMatrix2 balanced_product(std::vector<PolyMatrix2> factors, unsigned threads) {
  if (factors.empty()) return PolyMatrix2::identity();
  const std::size_t padded = std::bit_ceil(factors.size());
  factors.insert(factors.begin(), padded - factors.size(), PolyMatrix2::identity());

  while (factors.size() > 1) {
    const std::size_t pairs = factors.size() / 2;
    std::vector<PolyMatrix2> next(pairs);
    auto reduce = [&](std::size_t first, std::size_t last) {
      for (std::size_t i = first; i < last; ++i) {
        next[i] = matmul2(factors[2 * i], factors[2 * i + 1]);
      }
    };
    const std::size_t workers = std::min<std::size_t>(threads, pairs);
    if (workers <= 1) {
      reduce(0, pairs);
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back(reduce, pairs * w / workers, pairs * (w + 1) / workers);
      }
    }
    factors = std::move(next);
  }
  return std::move(factors.front());
}

IntPoly charpoly_quadratic(const ThresholdGraph& g) {
  // d_i = lambda, b_i -> -b_i:
  //   D_k = (2 lambda + 2 b) D_{k-1} - (lambda + b)^2 D_{k-2}
  const auto& bits = g.sequence().bits();
  IntPoly older{1};
  IntPoly prev = IntPoly::lambda();
  for (std::size_t k = 2; k <= g.vertex_count(); ++k) {
    const long b = bits[k - 2];
    const IntPoly lead{2 * b, 2};
    const IntPoly tail{b * b, 2 * b, 1};
    IntPoly next = poly_mul_schoolbook(lead, prev) - poly_mul_schoolbook(tail, older);
    older = std::move(prev);
    prev = std::move(next);
  }
  return prev;
}

namespace {

unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

IntPoly charpoly_balanced(const ThresholdGraph& g, unsigned threads) {
  const std::size_t n = g.vertex_count();
  // B_{n-1} B_{n-2} ... B_1, leftmost factor first.
  std::vector<PolyMatrix2> factors;
  factors.reserve(n - 1);
  for (std::size_t i = n - 1; i >= 1; --i) factors.push_back(build_factor(g.sequence().bit(i)));
  const PolyMatrix2 product = balanced_product(std::move(factors), resolve_threads(threads));
  return apply_to_vector(product, {IntPoly::lambda(), IntPoly{1}}).first;
}

IntPoly charpoly_weighted(const WeightedThresholdMatrix& m, unsigned threads) {
  // lambda I - M is the weighted matrix with off-diagonal -b_k and diagonal
  // lambda - d_k. Substituting into recurrence_factor, step k -> k+1 is
  //   e11 = 2 lambda - d_k - d_{k+1} + 2 b_k
  //   e12 = -(lambda - d_k + b_k)^2
  // and the base vector is (D_1, D_0) = (lambda - d_1, 1).
  const auto& b = m.off_diagonal();
  const auto& d = m.diagonal();
  const std::size_t n = m.size();
  auto shifted = [](const mpz_class& dk) {
    return IntPoly(std::vector<mpz_class>{-dk, mpz_class(1)});
  };
  std::vector<PolyMatrix2> factors;
  factors.reserve(n - 1);
  for (std::size_t k = n - 1; k >= 1; --k) {
    factors.push_back(recurrence_factor(IntPoly::constant(-b[k - 1]), shifted(d[k - 1]),
                                        shifted(d[k])));
  }
  const PolyMatrix2 product = balanced_product(std::move(factors), resolve_threads(threads));
  return apply_to_vector(product, {shifted(d[0]), IntPoly{1}}).first;
}

namespace {

std::size_t env_crossover() {
  if (const char* v = std::getenv("THRESH_AUTO_CROSSOVER"); v != nullptr && *v != '\0') {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end != v && *end == '\0') return static_cast<std::size_t>(parsed);
  }
  return 512;
}

std::atomic<std::size_t>& crossover_storage() {
  static std::atomic<std::size_t> value{env_crossover()};
  return value;
}

}  // namespace

std::size_t auto_crossover() { return crossover_storage().load(std::memory_order_relaxed); }

void set_auto_crossover(std::size_t n) { crossover_storage().store(n, std::memory_order_relaxed); }

IntPoly charpoly(const ThresholdGraph& g, Algorithm algo, unsigned threads) {
  switch (algo) {
    case Algorithm::Auto:
      return g.vertex_count() < auto_crossover() ? charpoly_quadratic(g)
                                                 : charpoly_balanced(g, threads);
    case Algorithm::Quadratic:
      return charpoly_quadratic(g);
    case Algorithm::Balanced:
      return charpoly_balanced(g, threads);
    case Algorithm::Oracle:
      return oracle::dense_charpoly(to_dense_adjacency(g));
    case Algorithm::Interpolation:
      return oracle::charpoly_interpolation(g);
  }
  throw DomainError("unknown algorithm");
}

}  // namespace thresh

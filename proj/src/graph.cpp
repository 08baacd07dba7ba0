#include "thresh/graph.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>

#include "thresh/errors.hpp"

namespace thresh {

DenseIntMatrix::DenseIntMatrix(std::size_t n) : n_(n), entries_(n * n) {
  if (n == 0) throw DomainError("dense matrix must have dimension >= 1");
}

DenseIntMatrix DenseIntMatrix::identity(std::size_t n) {
  DenseIntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

CreationSequence::CreationSequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] > 1) {
      throw DomainError("creation bit b_" + std::to_string(i + 1) + " is not 0 or 1");
    }
  }
}

int CreationSequence::bit(std::size_t i) const {
  if (i < 1 || i > bits_.size()) {
    throw DomainError("creation bit index " + std::to_string(i) + " outside [1, " +
                      std::to_string(bits_.size()) + "]");
  }
  return bits_[i - 1];
}

std::string CreationSequence::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

CreationSequence parse_sequence(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '0' && c != '1') {
      throw ParseError("creation sequence: invalid character '" + std::string(1, c) +
                       "' at position " + std::to_string(i + 1));
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return CreationSequence(std::move(bits));
}

bool ThresholdGraph::edge_query(std::size_t i, std::size_t j) const {
  const std::size_t n = vertex_count();
  if (i < 1 || i > n || j < 1 || j > n) {
    throw DomainError("vertex out of range [1, " + std::to_string(n) + "]");
  }
  if (i == j) throw DomainError("edge query needs two distinct vertices");
  return seq_.bit(std::min(i, j)) == 1;
}

std::uint64_t ThresholdGraph::edge_count() const noexcept {
  const std::size_t n = vertex_count();
  std::uint64_t edges = 0;
  const auto& bits = seq_.bits();
  for (std::size_t i = 1; i < n; ++i) {
    if (bits[i - 1]) edges += n - i;
  }
  return edges;
}

namespace {

constexpr std::size_t kDefaultOracleCap = 2048;

std::size_t env_oracle_cap() {
  if (const char* v = std::getenv("THRESH_ORACLE_CAP"); v != nullptr && *v != '\0') {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end != v && *end == '\0') return static_cast<std::size_t>(parsed);
  }
  return kDefaultOracleCap;
}

std::atomic<std::size_t>& oracle_cap_storage() {
  static std::atomic<std::size_t> cap{env_oracle_cap()};
  return cap;
}

}  // namespace

std::size_t oracle_cap() { return oracle_cap_storage().load(std::memory_order_relaxed); }

void set_oracle_cap(std::size_t cap) { oracle_cap_storage().store(cap, std::memory_order_relaxed); }

DenseIntMatrix to_dense_adjacency(const ThresholdGraph& g, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  if (n > cap) {
    throw CapExceeded("dense adjacency for n = " + std::to_string(n) +
                      " exceeds oracle cap " + std::to_string(cap));
  }
  DenseIntMatrix a(n);
  const auto& bits = g.sequence().bits();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!bits[i]) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = 1;
      a(j, i) = 1;
    }
  }
  return a;
}

DenseIntMatrix to_dense_adjacency(const ThresholdGraph& g) {
  return to_dense_adjacency(g, oracle_cap());
}

}  // namespace thresh

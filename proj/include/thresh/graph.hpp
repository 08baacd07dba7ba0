#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace thresh {

/// Explicit n x n integer matrix, row-major. Only oracles consume these.
class DenseIntMatrix {
 public:
  explicit DenseIntMatrix(std::size_t n);

  [[nodiscard]] std::size_t size() const noexcept { return n_; }

  mpz_class& operator()(std::size_t row, std::size_t col) { return entries_[row * n_ + col]; }
  const mpz_class& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * n_ + col];
  }

  static DenseIntMatrix identity(std::size_t n);

  friend bool operator==(const DenseIntMatrix&, const DenseIntMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<mpz_class> entries_;
};

/// Creation sequence b_1 ... b_{n-1} of a threshold graph on n >= 1 vertices.
///
/// Vertex i < j is adjacent to j iff b_i = 1, so vertex n is the first one
/// created and vertex 1 the last. All public indices are 1-based.
class CreationSequence {
 public:
  /// Single vertex graph.
  CreationSequence() = default;
  /// Throws DomainError if any entry is not 0 or 1.
  explicit CreationSequence(std::vector<std::uint8_t> bits);

  [[nodiscard]] std::size_t vertex_count() const noexcept { return bits_.size() + 1; }
  /// b_i for 1 <= i <= n-1.
  [[nodiscard]] int bit(std::size_t i) const;
  [[nodiscard]] const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const CreationSequence&, const CreationSequence&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Parses a string over {0,1}; the empty string is the one-vertex graph.
/// Throws ParseError naming the 1-based position of the first bad character.
CreationSequence parse_sequence(std::string_view text);

class ThresholdGraph {
 public:
  explicit ThresholdGraph(CreationSequence seq) : seq_(std::move(seq)) {}

  [[nodiscard]] std::size_t vertex_count() const noexcept { return seq_.vertex_count(); }
  [[nodiscard]] const CreationSequence& sequence() const noexcept { return seq_; }

  /// Adjacency of vertices i != j, both in [1, n]. Throws DomainError otherwise.
  [[nodiscard]] bool edge_query(std::size_t i, std::size_t j) const;
  [[nodiscard]] std::uint64_t edge_count() const noexcept;

  // Equal sequences <=> isomorphic graphs.
  friend bool operator==(const ThresholdGraph&, const ThresholdGraph&) = default;

 private:
  CreationSequence seq_;
};

/// Size cap applied to every dense (oracle-only) materialization.
/// Defaults to 2048, or THRESH_ORACLE_CAP when set in the environment.
std::size_t oracle_cap();
void set_oracle_cap(std::size_t cap);

/// Throws CapExceeded when n > cap.
DenseIntMatrix to_dense_adjacency(const ThresholdGraph& g, std::size_t cap);
DenseIntMatrix to_dense_adjacency(const ThresholdGraph& g);

}  // namespace thresh

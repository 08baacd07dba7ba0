#pragma once

#include <cstddef>
#include <cstdint>

#include "thresh/graph.hpp"

namespace thresh {

/// Uniform random creation sequence for an n-vertex graph.
///
/// Bits are the top bits of successive std::mt19937_64 outputs, seeded through
/// std::seed_seq{lo32(seed), hi32(seed), lo32(n), hi32(n)}. Both engines are
/// fully specified by the standard, so the sequence is identical on every
/// conforming platform.
CreationSequence random_sequence(std::uint64_t seed, std::size_t n);

}  // namespace thresh

#include "thresh/random.hpp"

#include <random>
#include <vector>

namespace thresh {

CreationSequence random_sequence(std::uint64_t seed, std::size_t n) {
  std::seed_seq sseq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                     static_cast<std::uint32_t>(n),
                     static_cast<std::uint32_t>(static_cast<std::uint64_t>(n) >> 32)};
  std::mt19937_64 rng(sseq);
  std::vector<std::uint8_t> bits(n > 0 ? n - 1 : 0);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() >> 63);
  return CreationSequence(std::move(bits));
}

}  // namespace thresh

#include "qasforge/rng.hpp"

namespace qasforge {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

Rng make_stream(std::uint64_t seed, std::string_view name) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(fnv1a64(name)),
                    static_cast<std::uint32_t>(fnv1a64(name) >> 32)};
  return Rng(seq);
}

}  // namespace qasforge

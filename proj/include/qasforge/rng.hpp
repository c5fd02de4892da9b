#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace qasforge {

using Rng = std::mt19937_64;

// Stable 64-bit FNV-1a, used for seed splitting and config hashing.
std::uint64_t fnv1a64(std::string_view data);

// Derives an independent, reproducible stream from (seed, name). Adding a new
// named consumer never perturbs the streams of existing ones.
Rng make_stream(std::uint64_t seed, std::string_view name);

}  // namespace qasforge

#pragma once

#include <cstdint>
#include <random>

#include "outer/free_group.hpp"

namespace outer {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

/// Independent stream for instance `index` of a run seeded with `seed`.
Rng instance_rng(std::uint64_t seed, std::uint64_t index);

/// Uniform integer in [lo, hi].
int uniform_int(Rng& rng, int lo, int hi);

/// Uniformly random reduced word of the given length.
Word random_word(Rng& rng, int rank, int length);

/// Product of `moves` random elementary Nielsen moves.
Automorphism random_automorphism(Rng& rng, int rank, int moves);

}  // namespace outer

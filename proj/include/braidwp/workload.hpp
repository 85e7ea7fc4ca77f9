#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "braidwp/braid.hpp"
#include "braidwp/free_word.hpp"

namespace braidwp {

// Independent, reproducible stream `stream` of the run seeded with `seed`.
std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream);

// Uniform letters sigma_i^{+-1}, 1 <= i < strands.  Empty for strands < 2.
BraidWord random_braid_word(std::mt19937_64& rng, int strands, std::size_t length);

// A reduced Q^{-1} gamma_m Q with |Q| = prefix_length and a positive core.
FGWord random_conjugate_word(std::mt19937_64& rng, int rank, std::size_t prefix_length);

}  // namespace braidwp

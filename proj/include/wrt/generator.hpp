#pragma once

#include "wrt/random.hpp"
#include "wrt/tree.hpp"
#include "wrt/weights.hpp"

#include <cstdint>

namespace wrt {

// Samples a weighted recursive tree: node j attaches to i < j with
// probability w_i / S(j-1). Each step draws u uniform on [0, S(j-1)) and
// binary-searches the prefix-sum table; a boundary hit u = S(i) selects
// index i+1. O(n log n) time, O(n) memory. n = 1 consumes no randomness.
RecursiveTree generate(const WeightSequence& seq, std::uint64_t n,
                       RandomSource& rng);

// Same, reusing the tree's storage across replications.
void generate_into(const WeightSequence& seq, std::uint64_t n,
                   RandomSource& rng, RecursiveTree& out);

// w_i / S(j-1) for 1 <= i < j.
double attachment_prob(const WeightSequence& seq, std::uint64_t i,
                       std::uint64_t j);

}  // namespace wrt

#ifndef JETPROLONG_ORACLES_HPP
#define JETPROLONG_ORACLES_HPP

// Slow reference computations that share no code path with the engines they check.

#include <vector>

#include <jetprolong/combinatorics.hpp>
#include <jetprolong/faa_di_bruno.hpp>

namespace jetprolong::oracle
{

// Sum over all set partitions of the index positions and all argument choices per block.
FaaPolynomial faa_partitions(const Dims &dims, const std::vector<int> &indices);

// Every permutation h of the W slots (as slot -> slot maps) that leaves the monomial shape unchanged,
// found by testing all W! permutations. Intended for W <= 8.
std::vector<std::vector<int>> stabilizer_elements(const WeightSpec &spec);

// Orbit label of a slot_of_position permutation under left composition with the stabilizer:
// the lexicographically smallest h o sigma.
std::vector<int> orbit_key(const std::vector<std::vector<int>> &stabilizer, const std::vector<int> &slot_of_position);

// Number of distinct orbits among all W! permutations.
std::size_t orbit_count(const WeightSpec &spec);

// All tau in S_p increasing on both blocks, found by filtering p! permutations.
std::vector<std::vector<int>> shuffles_by_filter(int p, int q);

} // namespace jetprolong::oracle

#endif

#pragma once

// Straightforward serial implementations kept as oracles for the optimized
// kernels. They share no code path with nc_partition.cpp or transform.hpp
// beyond the value types.

#include "fpt/functional.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace fpt::reference {

/// 0-based blocks, sorted by minimum.
using Blocks = std::vector<std::vector<int>>;

/// All set partitions of [n] filtered by a quadruple crossing test, sorted.
std::vector<Blocks> noncrossing_partitions(int n);

bool refines(const Blocks& pi, const Blocks& sigma);

/// mu(pi, sigma) for every comparable pair of NC(n), by inverting zeta over
/// the whole lattice in a fixed linear extension.
std::map<std::pair<Blocks, Blocks>, std::int64_t> mobius_table(int n);

MomentFunctional cumulants_to_moments(const CumulantFunctional& cf);
CumulantFunctional moments_to_cumulants(const MomentFunctional& mf);

/// phi(w) through the first-block recursion: the block V containing the first
/// letter splits the remaining positions into independent gaps.
Rational moment_by_first_block(const CumulantFunctional& cf, const Word& word);

}  // namespace fpt::reference

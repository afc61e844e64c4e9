#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "rookdual/diagrams.hpp"

namespace rookdual {

/// Product in the composition semigroup C_k together with the number of
/// middle-tier components that were discarded.
struct CompositionResult {
  SetPartition diagram;
  std::size_t garbage_count = 0;
};

// (alpha o beta)(d) = alpha(beta(d)); maps compose right to left.
PartialInjection compose(const PartialInjection& alpha, const PartialInjection& beta);

// Identity on `subset`, undefined elsewhere.
PartialInjection epsilon(int n, const std::set<int>& subset);

// Transposition (1 2), the cycle (1 2 ... n) and epsilon of {1..n-1};
// {identity, zero} for n = 1. Together with the identity they generate IS_n.
std::vector<PartialInjection> is_generators(int n);

// Both factors must cover all 2k points. Identifies alpha's K' with beta's K
// and keeps the components that reach the outer rows.
CompositionResult multiply_composition(const SetPartition& alpha, const SetPartition& beta);

// Product in I*_k. Throws std::invalid_argument unless both are I*_k elements.
SetPartition multiply_istar(const SetPartition& alpha, const SetPartition& beta);

// Product in PI*_k: a glued component survives only if it contains no point
// left undefined by either factor.
SetPartition multiply_pistar(const SetPartition& alpha, const SetPartition& beta);

// Product in hat-PI*_k. Non-zero exactly when the K'-traces of alpha's
// blocks coincide with the K-traces of beta's blocks, in which case it is
// the PI*_k product.
HatElement star_multiply(const HatElement& a, const HatElement& b);

// True iff {A n K'} = {(B n K)'} over the blocks A of alpha, B of beta.
bool traces_match(const SetPartition& alpha, const SetPartition& beta);

// Product in tilde-PI*_k: keeps (A n K) u (B n K') for each pair of blocks
// with A n K' = (B n K)'.
SetPartition bullet_multiply(const SetPartition& alpha, const SetPartition& beta);

}  // namespace rookdual

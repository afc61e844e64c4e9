#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rookdual/algebra.hpp"

namespace rookdual {

// phi(alpha) = sum of all beta with alpha <= beta, read in the hat algebra.
AlgebraElement phi(const SetPartition& alpha);
// Inverse of phi by solving the unitriangular system phi(x) = alpha.
AlgebraElement phi_inverse(const SetPartition& alpha);
// Inverse of phi by the closed Moebius formula on the up-set of alpha.
AlgebraElement phi_inverse_mobius(const SetPartition& alpha);

// psi(alpha) = sum over all sub-collections of alpha's blocks.
AlgebraElement psi(const SetPartition& alpha);
AlgebraElement psi_inverse(const SetPartition& alpha);

// Linear extensions; the carrier of the argument must be the map's domain.
AlgebraElement phi(const AlgebraElement& x);
AlgebraElement phi_inverse(const AlgebraElement& x);
AlgebraElement psi(const AlgebraElement& x);
AlgebraElement psi_inverse(const AlgebraElement& x);

enum class MorphismMap { phi, psi };

const char* morphism_name(MorphismMap m);

struct MorphismReport {
  int n = 0;
  int k = 0;
  MorphismMap map = MorphismMap::phi;
  std::size_t pairs_checked = 0;
  bool homomorphism_ok = true;
  bool inverse_ok = true;
  // Named sub-checks in evaluation order.
  std::vector<std::pair<std::string, bool>> checks;

  bool all_ok() const;
};

// Checks map(a*b) = map(a) star map(b). sample == 0 runs every pair of
// PI*_k, otherwise that many pairs drawn with a fixed seed.
MorphismReport verify_homomorphism(MorphismMap map, int k, std::size_t sample = 0, std::uint64_t seed = 1);

// Round trips in both directions on every element; for phi also compares the
// two inverse formulas.
MorphismReport verify_inverse(MorphismMap map, int k);

// Proposition checks on U^k for every PI*_k element and every basis index,
// together with the homomorphism and inverse checks of the map involved.
// Throws SizeGuardError beyond n, k = 3 under Guard::enforce.
MorphismReport verify_prop3(int n, int k, Guard guard = Guard::enforce);
MorphismReport verify_prop4(int n, int k, Guard guard = Guard::enforce);

}  // namespace rookdual

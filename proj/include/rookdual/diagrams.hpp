#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rookdual {

// Raised when a computation would exceed the desk-scale size limits.
class SizeGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

enum class Guard { enforce, skip };

enum class Side : std::uint8_t { unprimed, primed };

// A point of {1..k} (unprimed) or {1'..k'} (primed). The defaulted ordering
// puts every unprimed point before every primed one.
struct BoundaryPoint {
  Side side = Side::unprimed;
  int index = 1;

  auto operator<=>(const BoundaryPoint&) const = default;

  // 0..k-1 for unprimed points, k..2k-1 for primed points.
  std::size_t ordinal(int k) const {
    return static_cast<std::size_t>(index - 1 + (side == Side::primed ? k : 0));
  }
  static BoundaryPoint from_ordinal(std::size_t ord, int k);
};

inline BoundaryPoint unprimed(int i) { return {Side::unprimed, i}; }
inline BoundaryPoint primed(int i) { return {Side::primed, i}; }

using Block = std::vector<BoundaryPoint>;

/// An element of IS_n: a partial injection of {1..n}. Image values are
/// 1-based; an undefined point stores 0.
class PartialInjection {
 public:
  static constexpr int undefined = 0;

  explicit PartialInjection(std::vector<int> images);

  static PartialInjection identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  std::optional<int> operator()(int point) const;
  std::span<const int> images() const { return images_; }
  int rank() const;
  std::set<int> domain() const;

  auto operator<=>(const PartialInjection&) const = default;

 private:
  std::vector<int> images_;
};

/// A partition of a subset of the 2k boundary points, held in canonical
/// form: points sorted inside each block, blocks sorted by least point.
/// Points absent from every block are undefined.
class SetPartition {
 public:
  // Canonicalizes; throws std::invalid_argument on out-of-range points,
  // points repeated across blocks, or empty blocks.
  SetPartition(int k, std::vector<Block> blocks);

  static SetPartition identity(int k);
  static SetPartition empty(int k);

  int degree() const { return k_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t num_blocks() const { return blocks_.size(); }
  bool covers_all() const;
  std::vector<BoundaryPoint> domain() const;

  // Block id per ordinal (see BoundaryPoint::ordinal), -1 for undefined.
  std::vector<int> labels() const;

  // The C_k embedding: every undefined point becomes its own block.
  SetPartition completed() const;

  auto operator<=>(const SetPartition&) const = default;

 private:
  int k_;
  std::vector<Block> blocks_;
};

// Either a PI*_k diagram or the adjoined zero of hat-PI*_k.
class HatElement {
 public:
  static HatElement zero(int k) { return HatElement(k); }
  // Throws std::invalid_argument unless is_partial_dual_element(p).
  explicit HatElement(SetPartition p);

  bool is_zero() const { return !diagram_.has_value(); }
  int degree() const { return k_; }
  const SetPartition& diagram() const;

  auto operator<=>(const HatElement&) const = default;

 private:
  explicit HatElement(int k) : k_(k) {}
  int k_;
  std::optional<SetPartition> diagram_;
};

SetPartition canonicalize(std::vector<Block> blocks, int k);

// Member of I*_k: covers all 2k points, every block meets K and K'.
bool is_dual_element(const SetPartition& p);

// Member of PI*_k: every block meets K and K'.
bool is_partial_dual_element(const SetPartition& p);

// alpha <= beta: every block of beta is a union of blocks of alpha.
// Blocks of alpha that lie outside the domain of beta are dropped, so on
// PI*_k this is the natural partial order of the inverse semigroup; on
// same-domain partitions it is plain block merging.
bool coarser_leq(const SetPartition& alpha, const SetPartition& beta);

// beta |- alpha: every block of beta is a block of alpha.
bool subblocks_leq(const SetPartition& beta, const SetPartition& alpha);

// True iff the C_k embedding of p has at most j blocks.
bool block_count_at_most(const SetPartition& p, std::size_t j);

// Enumerators. Output is sorted, each element exactly once.
std::vector<PartialInjection> enumerate_is(int n, Guard guard = Guard::enforce);
std::vector<SetPartition> enumerate_istar(int k, Guard guard = Guard::enforce);
std::vector<SetPartition> enumerate_pistar(int k, Guard guard = Guard::enforce);

// Calls f(labels, num_blocks) for every set partition of {0..m-1}, encoded
// as a restricted growth string.
template <class F>
void for_each_set_partition(std::size_t m, F&& f) {
  std::vector<int> rgs(m, 0);
  if (m == 0) {
    f(std::span<const int>(rgs), std::size_t{0});
    return;
  }
  // prefix[i] = max(rgs[0..i-1])
  std::vector<int> prefix(m, 0);
  while (true) {
    int top = std::max(prefix[m - 1], rgs[m - 1]);
    f(std::span<const int>(rgs), static_cast<std::size_t>(top + 1));
    std::size_t i = m - 1;
    while (i > 0 && rgs[i] == prefix[i] + 1) --i;
    if (i == 0) return;
    ++rgs[i];
    for (std::size_t j = i + 1; j < m; ++j) {
      rgs[j] = 0;
      prefix[j] = std::max(prefix[j - 1], rgs[j - 1]);
    }
  }
}

}  // namespace rookdual

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "rookdual/diagrams.hpp"
#include "rookdual/linalg.hpp"

namespace rookdual {

enum class SpaceKind { V, U };

// How a PI*_k diagram acts on U^k: plain match sets, or the distinct-value
// variants of the hat and tilde deformations.
enum class UVariant { plain, hat, tilde };

/// Basis index (i_1..i_k) of a tensor power. Entry 0 is the basis vector of
/// the trivial summand and only occurs in U.
struct TensorIndex {
  std::vector<int> entries;
  auto operator<=>(const TensorIndex&) const = default;
};

inline constexpr std::size_t kMaxActionDimension = 4096;

/// V^k (entries 1..n) or U^k (entries 0..n). Basis vectors are numbered in
/// mixed radix with i_1 most significant.
class ActionSpace {
 public:
  ActionSpace(SpaceKind kind, int n, int k);

  SpaceKind kind() const { return kind_; }
  int n() const { return n_; }
  int k() const { return k_; }
  int low() const { return kind_ == SpaceKind::V ? 1 : 0; }
  std::size_t dimension() const { return dimension_; }

  std::size_t ordinal(const TensorIndex& i) const;
  TensorIndex index_at(std::size_t ordinal) const;
  bool contains(const TensorIndex& i) const;

  // Throws SizeGuardError if the dimension exceeds kMaxActionDimension.
  void check_guard(Guard guard) const;

 private:
  SpaceKind kind_;
  int n_;
  int k_;
  std::size_t dimension_;
};

// M(alpha, i) for a C_k element; partial diagrams are completed with
// singletons first. Blocks without unprimed points take every value 1..n.
std::vector<TensorIndex> match_set_c(const SetPartition& alpha, const TensorIndex& i, int n);

// Match sets on U. Each has at most one element.
std::optional<TensorIndex> match_set_partial(const SetPartition& alpha, const TensorIndex& i);
std::optional<TensorIndex> match_set_hat(const HatElement& a, const TensorIndex& i);
std::optional<TensorIndex> match_set_tilde(const SetPartition& alpha, const TensorIndex& i);

// Column v_i of each matrix is the sum of v_l over the match set. Diagram
// actions are right actions: matrix(a*b) = matrix(b) * matrix(a).
ExactMatrix action_matrix_v(const SetPartition& alpha, const ActionSpace& space, Guard guard = Guard::enforce);
ExactMatrix action_matrix_u(const SetPartition& alpha, const ActionSpace& space, UVariant variant,
                            Guard guard = Guard::enforce);
ExactMatrix action_matrix_u(const HatElement& a, const ActionSpace& space, Guard guard = Guard::enforce);

// Entrywise action of IS_n, a left action. On U the entry 0 is fixed.
ExactMatrix rook_action_matrix(const PartialInjection& pi, const ActionSpace& space, Guard guard = Guard::enforce);

}  // namespace rookdual

#include "rookdual/actions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace rookdual {

namespace {

// Value carried by each block, read off the unprimed points; nullopt when
// two unprimed points of one block disagree. Blocks without unprimed points
// get -1.
std::optional<std::vector<int>> block_values(const SetPartition& alpha, const TensorIndex& i) {
  std::vector<int> values;
  values.reserve(alpha.num_blocks());
  for (const auto& block : alpha.blocks()) {
    int value = -1;
    for (const auto& pt : block) {
      if (pt.side != Side::unprimed) break;
      int entry = i.entries[static_cast<std::size_t>(pt.index - 1)];
      if (value >= 0 && entry != value) return std::nullopt;
      value = entry;
    }
    values.push_back(value);
  }
  return values;
}

void require_degree(const SetPartition& alpha, const TensorIndex& i) {
  if (i.entries.size() != static_cast<std::size_t>(alpha.degree())) {
    throw std::invalid_argument("tensor index length " + std::to_string(i.entries.size()) +
                                " does not match diagram degree " + std::to_string(alpha.degree()));
  }
}

enum class Distinct { none, all, nonzero };

// Shared by the three U match sets: undefined unprimed positions must hold 0
// and undefined primed positions receive 0.
std::optional<TensorIndex> match_partial(const SetPartition& alpha, const TensorIndex& i, Distinct distinct) {
  require_degree(alpha, i);
  auto values = block_values(alpha, i);
  if (!values) return std::nullopt;
  if (distinct != Distinct::none) {
    std::set<int> seen;
    for (int v : *values) {
      if (v == 0) {
        if (distinct == Distinct::all) return std::nullopt;
        continue;
      }
      if (!seen.insert(v).second) return std::nullopt;
    }
  }
  auto k = static_cast<std::size_t>(alpha.degree());
  auto labels = alpha.labels();
  for (std::size_t a = 0; a < k; ++a) {
    if (labels[a] < 0 && i.entries[a] != 0) return std::nullopt;
  }
  TensorIndex l{std::vector<int>(k, 0)};
  for (std::size_t b = 0; b < k; ++b) {
    int label = labels[k + b];
    if (label >= 0) l.entries[b] = (*values)[static_cast<std::size_t>(label)];
  }
  return l;
}

void require_space(const ActionSpace& space, SpaceKind kind, int k) {
  if (space.kind() != kind) throw std::invalid_argument("action built on the wrong tensor space");
  if (space.k() != k) {
    throw std::invalid_argument("diagram degree " + std::to_string(k) + " does not match space k = " +
                                std::to_string(space.k()));
  }
}

template <class Match>
ExactMatrix single_match_matrix(const ActionSpace& space, Match&& match) {
  ExactMatrix m(space.dimension(), space.dimension());
  for (std::size_t col = 0; col < space.dimension(); ++col) {
    if (auto l = match(space.index_at(col))) m.set(space.ordinal(*l), col, 1);
  }
  return m;
}

}  // namespace

ActionSpace::ActionSpace(SpaceKind kind, int n, int k) : kind_(kind), n_(n), k_(k), dimension_(1) {
  if (n < 1 || k < 1) throw std::invalid_argument("tensor space needs n >= 1 and k >= 1");
  auto base = static_cast<std::size_t>(n + 1 - low());
  for (int j = 0; j < k; ++j) {
    // Saturate instead of overflowing; the guard rejects such spaces anyway.
    if (dimension_ > (std::size_t{1} << 40)) break;
    dimension_ *= base;
  }
}

void ActionSpace::check_guard(Guard guard) const {
  if (guard == Guard::enforce && dimension_ > kMaxActionDimension) {
    throw SizeGuardError("tensor space dimension " + std::to_string(dimension_) + " exceeds the size guard " +
                         std::to_string(kMaxActionDimension));
  }
}

bool ActionSpace::contains(const TensorIndex& i) const {
  if (i.entries.size() != static_cast<std::size_t>(k_)) return false;
  for (int e : i.entries) {
    if (e < low() || e > n_) return false;
  }
  return true;
}

std::size_t ActionSpace::ordinal(const TensorIndex& i) const {
  if (!contains(i)) throw std::invalid_argument("tensor index outside the space");
  auto base = static_cast<std::size_t>(n_ + 1 - low());
  std::size_t ord = 0;
  for (int e : i.entries) ord = ord * base + static_cast<std::size_t>(e - low());
  return ord;
}

TensorIndex ActionSpace::index_at(std::size_t ord) const {
  if (ord >= dimension_) throw std::out_of_range("basis ordinal out of range");
  auto base = static_cast<std::size_t>(n_ + 1 - low());
  TensorIndex i{std::vector<int>(static_cast<std::size_t>(k_))};
  for (auto e = i.entries.rbegin(); e != i.entries.rend(); ++e) {
    *e = static_cast<int>(ord % base) + low();
    ord /= base;
  }
  return i;
}

std::vector<TensorIndex> match_set_c(const SetPartition& partial, const TensorIndex& i, int n) {
  require_degree(partial, i);
  auto alpha = partial.completed();
  auto values = block_values(alpha, i);
  if (!values) return {};
  std::vector<std::size_t> free_blocks;
  for (std::size_t b = 0; b < values->size(); ++b) {
    if ((*values)[b] < 0) free_blocks.push_back(b);
  }
  auto k = static_cast<std::size_t>(alpha.degree());
  auto labels = alpha.labels();
  std::vector<TensorIndex> result;
  // Odometer over the values of the free blocks.
  for (auto b : free_blocks) (*values)[b] = 1;
  while (true) {
    TensorIndex l{std::vector<int>(k)};
    for (std::size_t b = 0; b < k; ++b) l.entries[b] = (*values)[static_cast<std::size_t>(labels[k + b])];
    result.push_back(std::move(l));
    std::size_t pos = free_blocks.size();
    while (pos > 0 && (*values)[free_blocks[pos - 1]] == n) (*values)[free_blocks[--pos]] = 1;
    if (pos == 0) break;
    ++(*values)[free_blocks[pos - 1]];
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::optional<TensorIndex> match_set_partial(const SetPartition& alpha, const TensorIndex& i) {
  return match_partial(alpha, i, Distinct::none);
}

std::optional<TensorIndex> match_set_hat(const HatElement& a, const TensorIndex& i) {
  if (a.is_zero()) return std::nullopt;
  return match_partial(a.diagram(), i, Distinct::all);
}

std::optional<TensorIndex> match_set_tilde(const SetPartition& alpha, const TensorIndex& i) {
  return match_partial(alpha, i, Distinct::nonzero);
}

ExactMatrix action_matrix_v(const SetPartition& alpha, const ActionSpace& space, Guard guard) {
  require_space(space, SpaceKind::V, alpha.degree());
  space.check_guard(guard);
  ExactMatrix m(space.dimension(), space.dimension());
  for (std::size_t col = 0; col < space.dimension(); ++col) {
    for (const auto& l : match_set_c(alpha, space.index_at(col), space.n())) m.add(space.ordinal(l), col, 1);
  }
  return m;
}

ExactMatrix action_matrix_u(const SetPartition& alpha, const ActionSpace& space, UVariant variant, Guard guard) {
  require_space(space, SpaceKind::U, alpha.degree());
  space.check_guard(guard);
  if (!is_partial_dual_element(alpha)) throw std::invalid_argument("U action needs a PI*_k element");
  Distinct distinct = variant == UVariant::plain ? Distinct::none
                      : variant == UVariant::hat ? Distinct::all
                                                 : Distinct::nonzero;
  return single_match_matrix(space, [&](const TensorIndex& i) { return match_partial(alpha, i, distinct); });
}

ExactMatrix action_matrix_u(const HatElement& a, const ActionSpace& space, Guard guard) {
  if (a.is_zero()) {
    require_space(space, SpaceKind::U, a.degree());
    space.check_guard(guard);
    return ExactMatrix(space.dimension(), space.dimension());
  }
  return action_matrix_u(a.diagram(), space, UVariant::hat, guard);
}

ExactMatrix rook_action_matrix(const PartialInjection& pi, const ActionSpace& space, Guard guard) {
  if (pi.degree() != space.n()) {
    throw std::invalid_argument("IS_n degree " + std::to_string(pi.degree()) + " does not match space n = " +
                                std::to_string(space.n()));
  }
  space.check_guard(guard);
  return single_match_matrix(space, [&](TensorIndex i) -> std::optional<TensorIndex> {
    for (int& e : i.entries) {
      if (e == 0) continue;
      auto target = pi(e);
      if (!target) return std::nullopt;
      e = *target;
    }
    return i;
  });
}

}  // namespace rookdual

#include "rookdual/dualities.hpp"

#include <algorithm>
#include <set>

#include "rookdual/semigroups.hpp"

namespace rookdual {

namespace {

bool all_distinct(const std::vector<ExactMatrix>& mats) {
  std::set<ExactMatrix> seen(mats.begin(), mats.end());
  return seen.size() == mats.size();
}

bool all_in_span(const std::vector<ExactMatrix>& targets, const std::vector<ExactMatrix>& basis, std::size_t length) {
  EchelonBasis echelon(length);
  for (const auto& m : basis) echelon.insert(vectorize(m));
  return std::all_of(targets.begin(), targets.end(), [&](const ExactMatrix& t) { return echelon.contains(vectorize(t)); });
}

CentralizerSide compare(const std::vector<ExactMatrix>& generators, const std::vector<ExactMatrix>& other_side,
                        std::size_t d, Guard guard) {
  CentralizerSide side;
  auto commutant = commutant_basis(generators, d, guard);
  side.commutant_dim = commutant.size();
  side.span_dim = span_dimension(other_side);
  side.span_in_commutant = all_in_span(other_side, commutant, d * d);
  side.commutant_in_span = all_in_span(commutant, other_side, d * d);
  return side;
}

}  // namespace

const char* space_name(SpaceKind s) { return s == SpaceKind::V ? "V" : "U"; }

std::vector<ExactMatrix> left_images(int n, int k, SpaceKind space, Guard guard) {
  ActionSpace sp(space, n, k);
  sp.check_guard(guard);
  std::vector<ExactMatrix> out;
  for (const auto& pi : enumerate_is(n, guard)) out.push_back(rook_action_matrix(pi, sp, guard));
  return out;
}

std::vector<ExactMatrix> left_generator_images(int n, int k, SpaceKind space, Guard guard) {
  ActionSpace sp(space, n, k);
  sp.check_guard(guard);
  std::vector<ExactMatrix> out{ExactMatrix::identity(sp.dimension())};
  for (const auto& pi : is_generators(n)) out.push_back(rook_action_matrix(pi, sp, guard));
  return out;
}

std::vector<ExactMatrix> right_images(int n, int k, SpaceKind space, Guard guard) {
  ActionSpace sp(space, n, k);
  sp.check_guard(guard);
  std::vector<ExactMatrix> out;
  if (space == SpaceKind::V) {
    for (const auto& alpha : enumerate_istar(k, guard)) out.push_back(action_matrix_v(alpha, sp, guard));
  } else {
    for (const auto& alpha : enumerate_pistar(k, guard)) out.push_back(action_matrix_u(alpha, sp, UVariant::plain, guard));
  }
  return out;
}

bool verify_commutation(int n, int k, SpaceKind space, Guard guard) {
  auto left = left_generator_images(n, k, space, guard);
  auto right = right_images(n, k, space, guard);
  for (const auto& g : left) {
    for (const auto& r : right) {
      if (g * r != r * g) return false;
    }
  }
  return true;
}

CentralizerResult verify_centralizer(int n, int k, SpaceKind space, Guard guard) {
  ActionSpace sp(space, n, k);
  sp.check_guard(guard);
  auto d = sp.dimension();
  auto right = right_images(n, k, space, guard);
  CentralizerResult result;
  result.of_left = compare(left_generator_images(n, k, space, guard), right, d, guard);
  result.of_right = compare(right, left_images(n, k, space, guard), d, guard);
  return result;
}

bool verify_semigroup_faithfulness(int n, int k, SemigroupCase which, Guard guard) {
  switch (which) {
    case SemigroupCase::is_on_V:
      return all_distinct(left_images(n, k, SpaceKind::V, guard));
    case SemigroupCase::istar_on_V:
      return all_distinct(right_images(n, k, SpaceKind::V, guard));
    case SemigroupCase::is_on_U:
      return all_distinct(left_images(n, k, SpaceKind::U, guard));
    case SemigroupCase::pistar_on_U:
      return all_distinct(right_images(n, k, SpaceKind::U, guard));
  }
  return false;
}

bool verify_algebra_faithfulness(int n, int k, AlgebraCase which, Guard guard) {
  std::vector<ExactMatrix> images;
  switch (which) {
    case AlgebraCase::contracted_is_on_V: {
      // The contracted algebra has the non-zero elements as a basis.
      ActionSpace sp(SpaceKind::V, n, k);
      sp.check_guard(guard);
      auto zero = epsilon(n, {});
      for (const auto& pi : enumerate_is(n, guard)) {
        if (pi != zero) images.push_back(rook_action_matrix(pi, sp, guard));
      }
      break;
    }
    case AlgebraCase::istar_on_V:
      images = right_images(n, k, SpaceKind::V, guard);
      break;
    case AlgebraCase::is_on_U:
      images = left_images(n, k, SpaceKind::U, guard);
      break;
    case AlgebraCase::pistar_on_U:
      images = right_images(n, k, SpaceKind::U, guard);
      break;
  }
  return span_dimension(images) == images.size();
}

bool predict_semigroup_faithfulness(int n, int k, SemigroupCase which) {
  return which == SemigroupCase::istar_on_V ? (n >= 2 || k == 1) : true;
}

bool predict_algebra_faithfulness(int n, int k, AlgebraCase which) {
  switch (which) {
    case AlgebraCase::contracted_is_on_V:
    case AlgebraCase::is_on_U:
      return k >= n;
    case AlgebraCase::istar_on_V:
    case AlgebraCase::pistar_on_U:
      return k <= n;
  }
  return false;
}

DualityReport run_report(int n, int k, SpaceKind space, Guard guard) {
  DualityReport r;
  r.n = n;
  r.k = k;
  r.space = space;
  ActionSpace sp(space, n, k);
  sp.check_guard(guard);
  bool on_v = space == SpaceKind::V;
  auto left_semigroup = on_v ? SemigroupCase::is_on_V : SemigroupCase::is_on_U;
  auto right_semigroup = on_v ? SemigroupCase::istar_on_V : SemigroupCase::pistar_on_U;
  auto left_algebra = on_v ? AlgebraCase::contracted_is_on_V : AlgebraCase::is_on_U;
  auto right_algebra = on_v ? AlgebraCase::istar_on_V : AlgebraCase::pistar_on_U;

  r.computed.commute = verify_commutation(n, k, space, guard);
  r.computed.semigroup_faithful_left = verify_semigroup_faithfulness(n, k, left_semigroup, guard);
  r.computed.semigroup_faithful_right = verify_semigroup_faithfulness(n, k, right_semigroup, guard);
  r.computed.algebra_faithful_left = verify_algebra_faithfulness(n, k, left_algebra, guard);
  r.computed.algebra_faithful_right = verify_algebra_faithfulness(n, k, right_algebra, guard);

  r.predicted.commute = true;
  r.predicted.semigroup_faithful_left = predict_semigroup_faithfulness(n, k, left_semigroup);
  r.predicted.semigroup_faithful_right = predict_semigroup_faithfulness(n, k, right_semigroup);
  r.predicted.algebra_faithful_left = predict_algebra_faithfulness(n, k, left_algebra);
  r.predicted.algebra_faithful_right = predict_algebra_faithfulness(n, k, right_algebra);

  r.span_of_left = span_dimension(left_images(n, k, space, guard));
  r.span_of_right = span_dimension(right_images(n, k, space, guard));
  if (sp.dimension() <= kMaxFullCentralizerDimension) r.centralizer = verify_centralizer(n, k, space, guard);

  r.match = r.computed == r.predicted;
  if (r.centralizer) r.match = r.match && r.centralizer->of_left.equal() && r.centralizer->of_right.equal();
  return r;
}

std::vector<DualityReport> run_full_report(int n, int k, Guard guard) {
  return {run_report(n, k, SpaceKind::V, guard), run_report(n, k, SpaceKind::U, guard)};
}

std::vector<GridCell> default_grid(int max_n, int max_k, bool thm1, bool thm2) {
  std::vector<GridCell> cells;
  auto keep = [&](int n, int k, SpaceKind s) {
    if (n <= max_n && k <= max_k) cells.push_back({n, k, s});
  };
  if (thm1) {
    for (int n = 1; n <= 3; ++n) {
      for (int k = 1; k <= 3; ++k) keep(n, k, SpaceKind::V);
    }
    keep(4, 2, SpaceKind::V);
    keep(2, 4, SpaceKind::V);
    keep(4, 4, SpaceKind::V);
  }
  if (thm2) {
    for (int n = 1; n <= 2; ++n) {
      for (int k = 1; k <= 2; ++k) keep(n, k, SpaceKind::U);
    }
    keep(3, 2, SpaceKind::U);
    keep(2, 3, SpaceKind::U);
  }
  return cells;
}

}  // namespace rookdual

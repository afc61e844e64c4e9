#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rookdual/actions.hpp"
#include "rookdual/linalg.hpp"

namespace rookdual {

// Right-hand semigroup of each space: I*_k on V, PI*_k (plain action) on U.
const char* space_name(SpaceKind s);

// Action matrices of every element, in enumeration order.
std::vector<ExactMatrix> left_images(int n, int k, SpaceKind space, Guard guard = Guard::enforce);
std::vector<ExactMatrix> right_images(int n, int k, SpaceKind space, Guard guard = Guard::enforce);
// is_generators(n) plus the identity.
std::vector<ExactMatrix> left_generator_images(int n, int k, SpaceKind space, Guard guard = Guard::enforce);

bool verify_commutation(int n, int k, SpaceKind space, Guard guard = Guard::enforce);

// Commutant of one side against the span of the other side's images.
struct CentralizerSide {
  std::size_t commutant_dim = 0;
  std::size_t span_dim = 0;
  bool span_in_commutant = false;
  bool commutant_in_span = false;

  bool equal() const { return commutant_dim == span_dim && span_in_commutant && commutant_in_span; }
};

struct CentralizerResult {
  CentralizerSide of_left;   // commutant(IS_n) vs span(right images)
  CentralizerSide of_right;  // commutant(right images) vs span(IS_n images)
};

CentralizerResult verify_centralizer(int n, int k, SpaceKind space, Guard guard = Guard::enforce);

enum class SemigroupCase { is_on_V, istar_on_V, is_on_U, pistar_on_U };
enum class AlgebraCase { contracted_is_on_V, istar_on_V, is_on_U, pistar_on_U };

bool verify_semigroup_faithfulness(int n, int k, SemigroupCase which, Guard guard = Guard::enforce);
bool verify_algebra_faithfulness(int n, int k, AlgebraCase which, Guard guard = Guard::enforce);
bool predict_semigroup_faithfulness(int n, int k, SemigroupCase which);
bool predict_algebra_faithfulness(int n, int k, AlgebraCase which);

struct DualityFlags {
  bool commute = false;
  bool semigroup_faithful_left = false;
  bool semigroup_faithful_right = false;
  bool algebra_faithful_left = false;
  bool algebra_faithful_right = false;

  bool operator==(const DualityFlags&) const = default;
};

struct DualityReport {
  int n = 0;
  int k = 0;
  SpaceKind space = SpaceKind::V;
  // Full solve when the space is small enough, otherwise only the spans.
  std::optional<CentralizerResult> centralizer;
  std::size_t span_of_left = 0;
  std::size_t span_of_right = 0;
  DualityFlags computed;
  DualityFlags predicted;
  // computed == predicted, and both centralizer equalities hold if solved.
  bool match = false;
};

// Largest space dimension that gets full commutant solves in reports.
inline constexpr std::size_t kMaxFullCentralizerDimension = 27;

DualityReport run_report(int n, int k, SpaceKind space, Guard guard = Guard::enforce);
// One report per space.
std::vector<DualityReport> run_full_report(int n, int k, Guard guard = Guard::enforce);

struct GridCell {
  int n;
  int k;
  SpaceKind space;
};

// Default verification grid: V for 1 <= n,k <= 3 plus (4,2), (2,4), (4,4);
// U for 1 <= n,k <= 2 plus (3,2), (2,3). Cells beyond max_n/max_k are dropped.
std::vector<GridCell> default_grid(int max_n, int max_k, bool thm1, bool thm2);

}  // namespace rookdual

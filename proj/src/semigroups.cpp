#include "rookdual/semigroups.hpp"

#include <map>
#include <string>

#include "union_find.hpp"

namespace rookdual {

namespace {

void require_same_degree(int a, int b) {
  if (a != b) {
    throw std::invalid_argument("degree mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

// Node layout for gluing two diagrams: [0,k) alpha's K, [k,2k) the shared
// middle row, [2k,3k) beta's K'.
struct Glued {
  int k;
  detail::UnionFind uf;
  std::vector<bool> undefined;

  Glued(const SetPartition& alpha, const SetPartition& beta)
      : k(alpha.degree()), uf(3 * static_cast<std::size_t>(k)), undefined(3 * static_cast<std::size_t>(k), true) {
    attach(alpha, 0);
    attach(beta, static_cast<std::size_t>(k));
  }

  void attach(const SetPartition& p, std::size_t offset) {
    for (const auto& block : p.blocks()) {
      std::size_t first = offset + block.front().ordinal(k);
      for (const auto& pt : block) {
        std::size_t node = offset + pt.ordinal(k);
        undefined[node] = false;
        uf.unite(first, node);
      }
    }
  }

  BoundaryPoint outer_point(std::size_t node) const {
    auto kk = static_cast<std::size_t>(k);
    if (node < kk) return unprimed(static_cast<int>(node) + 1);
    return primed(static_cast<int>(node - 2 * kk) + 1);
  }

  bool is_outer(std::size_t node) const {
    auto kk = static_cast<std::size_t>(k);
    return node < kk || node >= 2 * kk;
  }
};

std::vector<int> trace(const Block& block, Side side) {
  std::vector<int> result;
  for (const auto& pt : block) {
    if (pt.side == side) result.push_back(pt.index);
  }
  return result;
}

void require_partial_dual(const SetPartition& p) {
  if (!is_partial_dual_element(p)) throw std::invalid_argument("operand is not a PI*_k element");
}

}  // namespace

PartialInjection compose(const PartialInjection& alpha, const PartialInjection& beta) {
  require_same_degree(alpha.degree(), beta.degree());
  std::vector<int> images(static_cast<std::size_t>(alpha.degree()), PartialInjection::undefined);
  for (int d = 1; d <= beta.degree(); ++d) {
    if (auto mid = beta(d)) {
      if (auto target = alpha(*mid)) images[static_cast<std::size_t>(d - 1)] = *target;
    }
  }
  return PartialInjection(std::move(images));
}

PartialInjection epsilon(int n, const std::set<int>& subset) {
  if (n < 1) throw std::invalid_argument("IS_n degree must be positive");
  std::vector<int> images(static_cast<std::size_t>(n), PartialInjection::undefined);
  for (int a : subset) {
    if (a < 1 || a > n) throw std::invalid_argument("epsilon point " + std::to_string(a) + " outside 1.." + std::to_string(n));
    images[static_cast<std::size_t>(a - 1)] = a;
  }
  return PartialInjection(std::move(images));
}

std::vector<PartialInjection> is_generators(int n) {
  if (n < 1) throw std::invalid_argument("IS_n degree must be positive");
  if (n == 1) return {PartialInjection::identity(1), epsilon(1, {})};
  std::vector<int> swap(static_cast<std::size_t>(n)), cycle(static_cast<std::size_t>(n));
  std::set<int> all_but_last;
  for (int d = 1; d <= n; ++d) {
    swap[static_cast<std::size_t>(d - 1)] = d;
    cycle[static_cast<std::size_t>(d - 1)] = d % n + 1;
    if (d < n) all_but_last.insert(d);
  }
  std::swap(swap[0], swap[1]);
  std::vector<PartialInjection> result{PartialInjection(swap)};
  if (n > 2) result.emplace_back(cycle);
  result.push_back(epsilon(n, all_but_last));
  return result;
}

CompositionResult multiply_composition(const SetPartition& alpha, const SetPartition& beta) {
  require_same_degree(alpha.degree(), beta.degree());
  if (!alpha.covers_all() || !beta.covers_all()) {
    throw std::invalid_argument("C_k product needs partitions of all 2k points");
  }
  Glued g(alpha, beta);
  auto kk = static_cast<std::size_t>(g.k);
  std::map<std::size_t, Block> components;
  for (std::size_t node = 0; node < 3 * kk; ++node) {
    if (g.is_outer(node)) components[g.uf.find(node)].push_back(g.outer_point(node));
  }
  CompositionResult result{SetPartition::empty(g.k), 0};
  std::set<std::size_t> garbage;
  for (std::size_t node = kk; node < 2 * kk; ++node) {
    auto root = g.uf.find(node);
    if (!components.contains(root)) garbage.insert(root);
  }
  result.garbage_count = garbage.size();
  std::vector<Block> blocks;
  for (auto& [root, block] : components) blocks.push_back(std::move(block));
  result.diagram = SetPartition(g.k, std::move(blocks));
  return result;
}

SetPartition multiply_istar(const SetPartition& alpha, const SetPartition& beta) {
  if (!is_dual_element(alpha) || !is_dual_element(beta)) throw std::invalid_argument("operand is not an I*_k element");
  auto result = multiply_composition(alpha, beta);
  if (result.garbage_count != 0) throw std::logic_error("I*_k product produced garbage");
  return result.diagram;
}

SetPartition multiply_pistar(const SetPartition& alpha, const SetPartition& beta) {
  require_same_degree(alpha.degree(), beta.degree());
  require_partial_dual(alpha);
  require_partial_dual(beta);
  Glued g(alpha, beta);
  auto kk = static_cast<std::size_t>(g.k);
  // Any point left undefined by a factor is a one-element block of its
  // completion and breaks the component containing it.
  std::vector<bool> broken(3 * kk, false);
  for (std::size_t node = 0; node < 3 * kk; ++node) {
    if (g.is_outer(node) && g.undefined[node]) broken[g.uf.find(node)] = true;
  }
  // The middle row is shared, so check each factor's side separately.
  auto alpha_labels = alpha.labels();
  auto beta_labels = beta.labels();
  for (std::size_t i = 0; i < kk; ++i) {
    if (alpha_labels[kk + i] < 0 || beta_labels[i] < 0) broken[g.uf.find(kk + i)] = true;
  }
  std::map<std::size_t, Block> components;
  for (std::size_t node = 0; node < 3 * kk; ++node) {
    if (!g.is_outer(node)) continue;
    auto root = g.uf.find(node);
    if (!broken[root]) components[root].push_back(g.outer_point(node));
  }
  std::vector<Block> blocks;
  for (auto& [root, block] : components) blocks.push_back(std::move(block));
  return SetPartition(g.k, std::move(blocks));
}

bool traces_match(const SetPartition& alpha, const SetPartition& beta) {
  if (alpha.degree() != beta.degree()) return false;
  std::set<std::vector<int>> lower, upper;
  for (const auto& block : alpha.blocks()) lower.insert(trace(block, Side::primed));
  for (const auto& block : beta.blocks()) upper.insert(trace(block, Side::unprimed));
  return lower == upper;
}

HatElement star_multiply(const HatElement& a, const HatElement& b) {
  require_same_degree(a.degree(), b.degree());
  if (a.is_zero() || b.is_zero()) return HatElement::zero(a.degree());
  if (!traces_match(a.diagram(), b.diagram())) return HatElement::zero(a.degree());
  return HatElement(multiply_pistar(a.diagram(), b.diagram()));
}

SetPartition bullet_multiply(const SetPartition& alpha, const SetPartition& beta) {
  require_same_degree(alpha.degree(), beta.degree());
  require_partial_dual(alpha);
  require_partial_dual(beta);
  std::vector<Block> blocks;
  for (const auto& a : alpha.blocks()) {
    auto middle = trace(a, Side::primed);
    for (const auto& b : beta.blocks()) {
      if (trace(b, Side::unprimed) != middle) continue;
      Block c;
      for (const auto& pt : a) {
        if (pt.side == Side::unprimed) c.push_back(pt);
      }
      for (const auto& pt : b) {
        if (pt.side == Side::primed) c.push_back(pt);
      }
      blocks.push_back(std::move(c));
    }
  }
  return SetPartition(alpha.degree(), std::move(blocks));
}

}  // namespace rookdual

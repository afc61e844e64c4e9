#include "rookdual/diagrams.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rookdual {

namespace {

constexpr int kMaxIsDegree = 6;
constexpr int kMaxIstarDegree = 5;
constexpr int kMaxPistarDegree = 4;

void require_positive(int value, const char* what) {
  if (value < 1) {
    throw std::invalid_argument(std::string(what) + " must be positive, got " + std::to_string(value));
  }
}

void check_guard(Guard guard, int value, int limit, const char* what) {
  if (guard == Guard::enforce && value > limit) {
    throw SizeGuardError(std::string(what) + " = " + std::to_string(value) + " exceeds the size guard " +
                         std::to_string(limit));
  }
}

bool meets_both_sides(const Block& block) {
  // Blocks are sorted, so unprimed points come first.
  return block.front().side == Side::unprimed && block.back().side == Side::primed;
}

// Emits blocks pairing the parts of `left` (over the chosen K points) with
// the parts of `right` (over the chosen K' points) through every bijection.
template <class Out>
void pair_partitions(int k, const std::vector<int>& left_points, const std::vector<int>& right_points,
                     Out&& out) {
  for_each_set_partition(left_points.size(), [&](std::span<const int> left, std::size_t m) {
    for_each_set_partition(right_points.size(), [&](std::span<const int> right, std::size_t m2) {
      if (m != m2) return;
      std::vector<std::size_t> perm(m);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<Block> blocks(m);
        for (std::size_t i = 0; i < left.size(); ++i) {
          blocks[static_cast<std::size_t>(left[i])].push_back(unprimed(left_points[i]));
        }
        for (std::size_t i = 0; i < right.size(); ++i) {
          blocks[perm[static_cast<std::size_t>(right[i])]].push_back(primed(right_points[i]));
        }
        out(SetPartition(k, std::move(blocks)));
      } while (std::next_permutation(perm.begin(), perm.end()));
    });
  });
}

}  // namespace

BoundaryPoint BoundaryPoint::from_ordinal(std::size_t ord, int k) {
  auto kk = static_cast<std::size_t>(k);
  if (ord < kk) return unprimed(static_cast<int>(ord) + 1);
  return primed(static_cast<int>(ord - kk) + 1);
}

PartialInjection::PartialInjection(std::vector<int> images) : images_(std::move(images)) {
  int n = degree();
  require_positive(n, "IS_n degree");
  std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
  for (int target : images_) {
    if (target < 0 || target > n) {
      throw std::invalid_argument("partial injection target " + std::to_string(target) + " outside 1.." +
                                  std::to_string(n));
    }
    if (target == undefined) continue;
    if (hit[static_cast<std::size_t>(target)]) {
      throw std::invalid_argument("partial injection repeats target " + std::to_string(target));
    }
    hit[static_cast<std::size_t>(target)] = true;
  }
}

PartialInjection PartialInjection::identity(int n) {
  require_positive(n, "IS_n degree");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return PartialInjection(std::move(images));
}

std::optional<int> PartialInjection::operator()(int point) const {
  if (point < 1 || point > degree()) {
    throw std::out_of_range("point " + std::to_string(point) + " outside 1.." + std::to_string(degree()));
  }
  int target = images_[static_cast<std::size_t>(point - 1)];
  if (target == undefined) return std::nullopt;
  return target;
}

int PartialInjection::rank() const {
  return static_cast<int>(std::count_if(images_.begin(), images_.end(), [](int t) { return t != undefined; }));
}

std::set<int> PartialInjection::domain() const {
  std::set<int> result;
  for (int d = 1; d <= degree(); ++d) {
    if (images_[static_cast<std::size_t>(d - 1)] != undefined) result.insert(d);
  }
  return result;
}

SetPartition canonicalize(std::vector<Block> blocks, int k) { return SetPartition(k, std::move(blocks)); }

SetPartition::SetPartition(int k, std::vector<Block> blocks) : k_(k), blocks_(std::move(blocks)) {
  require_positive(k, "diagram degree k");
  bool canonical = true;
  std::vector<bool> seen(2 * static_cast<std::size_t>(k), false);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto& block = blocks_[b];
    if (block.empty()) throw std::invalid_argument("empty block");
    for (std::size_t i = 0; i < block.size(); ++i) {
      const auto& pt = block[i];
      if (pt.index < 1 || pt.index > k) {
        throw std::invalid_argument("boundary point index " + std::to_string(pt.index) + " outside 1.." +
                                    std::to_string(k));
      }
      auto ord = pt.ordinal(k);
      if (seen[ord]) {
        throw std::invalid_argument("boundary point " + std::to_string(pt.index) +
                                    (pt.side == Side::primed ? "'" : "") + " appears twice");
      }
      seen[ord] = true;
      if (i > 0 && !(block[i - 1] < pt)) canonical = false;
    }
    if (b > 0 && !(blocks_[b - 1].front() < block.front())) canonical = false;
  }
  if (!canonical) {
    for (auto& block : blocks_) std::sort(block.begin(), block.end());
    std::sort(blocks_.begin(), blocks_.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
  }
}

SetPartition SetPartition::identity(int k) {
  std::vector<Block> blocks;
  for (int i = 1; i <= k; ++i) blocks.push_back({unprimed(i), primed(i)});
  return SetPartition(k, std::move(blocks));
}

SetPartition SetPartition::empty(int k) { return SetPartition(k, {}); }

bool SetPartition::covers_all() const {
  std::size_t total = 0;
  for (const auto& block : blocks_) total += block.size();
  return total == 2 * static_cast<std::size_t>(k_);
}

std::vector<BoundaryPoint> SetPartition::domain() const {
  std::vector<BoundaryPoint> points;
  for (const auto& block : blocks_) points.insert(points.end(), block.begin(), block.end());
  std::sort(points.begin(), points.end());
  return points;
}

std::vector<int> SetPartition::labels() const {
  std::vector<int> result(2 * static_cast<std::size_t>(k_), -1);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (const auto& pt : blocks_[b]) result[pt.ordinal(k_)] = static_cast<int>(b);
  }
  return result;
}

SetPartition SetPartition::completed() const {
  auto blocks = blocks_;
  auto lab = labels();
  for (std::size_t ord = 0; ord < lab.size(); ++ord) {
    if (lab[ord] < 0) blocks.push_back({BoundaryPoint::from_ordinal(ord, k_)});
  }
  return canonicalize(std::move(blocks), k_);
}

HatElement::HatElement(SetPartition p) : k_(p.degree()) {
  if (!is_partial_dual_element(p)) {
    throw std::invalid_argument("hat element diagram has a block missing K or K'");
  }
  diagram_ = std::move(p);
}

const SetPartition& HatElement::diagram() const {
  if (!diagram_) throw std::logic_error("the zero of hat-PI*_k has no diagram");
  return *diagram_;
}

bool is_dual_element(const SetPartition& p) { return p.covers_all() && is_partial_dual_element(p); }

bool is_partial_dual_element(const SetPartition& p) {
  return std::all_of(p.blocks().begin(), p.blocks().end(), meets_both_sides);
}

bool coarser_leq(const SetPartition& alpha, const SetPartition& beta) {
  if (alpha.degree() != beta.degree()) return false;
  int k = alpha.degree();
  auto alpha_labels = alpha.labels();
  auto beta_labels = beta.labels();
  for (std::size_t b = 0; b < beta.num_blocks(); ++b) {
    for (const auto& pt : beta.blocks()[b]) {
      int a = alpha_labels[pt.ordinal(k)];
      if (a < 0) return false;
      for (const auto& q : alpha.blocks()[static_cast<std::size_t>(a)]) {
        if (beta_labels[q.ordinal(k)] != static_cast<int>(b)) return false;
      }
    }
  }
  return true;
}

bool subblocks_leq(const SetPartition& beta, const SetPartition& alpha) {
  if (alpha.degree() != beta.degree()) return false;
  // Blocks of one partition have distinct least points, so the canonical
  // order is also the lexicographic order.
  return std::includes(alpha.blocks().begin(), alpha.blocks().end(), beta.blocks().begin(), beta.blocks().end());
}

bool block_count_at_most(const SetPartition& p, std::size_t j) {
  std::size_t undefined_points = 2 * static_cast<std::size_t>(p.degree()) - p.domain().size();
  return p.num_blocks() + undefined_points <= j;
}

std::vector<PartialInjection> enumerate_is(int n, Guard guard) {
  require_positive(n, "IS_n degree");
  check_guard(guard, n, kMaxIsDegree, "n");
  std::vector<PartialInjection> result;
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == images.size()) {
      result.emplace_back(images);
      return;
    }
    images[pos] = PartialInjection::undefined;
    self(self, pos + 1);
    for (int t = 1; t <= n; ++t) {
      if (used[static_cast<std::size_t>(t)]) continue;
      used[static_cast<std::size_t>(t)] = true;
      images[pos] = t;
      self(self, pos + 1);
      used[static_cast<std::size_t>(t)] = false;
    }
  };
  recurse(recurse, 0);
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<SetPartition> enumerate_istar(int k, Guard guard) {
  require_positive(k, "I*_k degree");
  check_guard(guard, k, kMaxIstarDegree, "k");
  std::vector<int> all(static_cast<std::size_t>(k));
  std::iota(all.begin(), all.end(), 1);
  std::vector<SetPartition> result;
  pair_partitions(k, all, all, [&](SetPartition p) { result.push_back(std::move(p)); });
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<SetPartition> enumerate_pistar(int k, Guard guard) {
  require_positive(k, "PI*_k degree");
  check_guard(guard, k, kMaxPistarDegree, "k");
  std::vector<SetPartition> result;
  for (unsigned left_mask = 0; left_mask < (1u << k); ++left_mask) {
    for (unsigned right_mask = 0; right_mask < (1u << k); ++right_mask) {
      std::vector<int> left, right;
      for (int i = 0; i < k; ++i) {
        if (left_mask & (1u << i)) left.push_back(i + 1);
        if (right_mask & (1u << i)) right.push_back(i + 1);
      }
      pair_partitions(k, left, right, [&](SetPartition p) { result.push_back(std::move(p)); });
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace rookdual

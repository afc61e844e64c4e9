#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "rookdual/diagrams.hpp"

using namespace rookdual;
using testing::P;

namespace {

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }
long binomial(int n, int r) { return factorial(n) / (factorial(r) * factorial(n - r)); }
long stirling2(int n, int m) {
  if (n == 0 && m == 0) return 1;
  if (n == 0 || m == 0) return 0;
  return m * stirling2(n - 1, m) + stirling2(n - 1, m - 1);
}

}  // namespace

TEST_CASE("canonical form sorts points and blocks") {
  auto a = SetPartition(2, {{primed(1), unprimed(1)}, {unprimed(2), primed(2)}});
  CHECK(a.blocks() == std::vector<Block>{{unprimed(1), primed(1)}, {unprimed(2), primed(2)}});
  CHECK(SetPartition(2, {}).num_blocks() == 0);
  auto b = SetPartition(2, {{unprimed(2), primed(1)}, {unprimed(1), primed(2)}});
  CHECK(b.blocks() == std::vector<Block>{{unprimed(1), primed(2)}, {unprimed(2), primed(1)}});
}

TEST_CASE("canonicalize is idempotent and ignores presentation order") {
  std::vector<Block> raw{{primed(3), unprimed(2)}, {primed(1), unprimed(3), unprimed(1)}, {primed(2)}};
  auto once = canonicalize(raw, 3);
  CHECK(canonicalize(once.blocks(), 3) == once);
  std::vector<Block> shuffled{{primed(2)}, {unprimed(1), primed(1), unprimed(3)}, {unprimed(2), primed(3)}};
  CHECK(canonicalize(shuffled, 3) == once);
}

TEST_CASE("canonicalize rejects malformed input") {
  CHECK_THROWS_AS(SetPartition(2, {{unprimed(3)}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition(2, {{unprimed(0)}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition(2, {{unprimed(1)}, {unprimed(1), primed(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition(2, {{unprimed(1)}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition(0, {}), std::invalid_argument);
}

TEST_CASE("partial injections validate injectivity and range") {
  CHECK_THROWS_AS(PartialInjection({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PartialInjection({3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PartialInjection({}), std::invalid_argument);
  PartialInjection a({2, 0, 3, 5, 0});
  CHECK(a.rank() == 3);
  CHECK(a.domain() == std::set<int>{1, 3, 4});
  CHECK(a(1) == 2);
  CHECK_FALSE(a(2).has_value());
}

TEST_CASE("dual element predicates") {
  CHECK(is_dual_element(P(2, "{1,1'}|{2,2'}")));
  CHECK_FALSE(is_dual_element(P(2, "{1,2}|{1',2'}")));
  CHECK_FALSE(is_dual_element(P(2, "{1,1'}")));
  CHECK(is_partial_dual_element(P(2, "{1,1'}")));
  CHECK(is_partial_dual_element(P(2, "{}")));
  CHECK_FALSE(is_partial_dual_element(P(2, "{1,2}")));
}

TEST_CASE("coarser_leq examples") {
  CHECK(coarser_leq(P(2, "{1,1'}|{2,2'}"), P(2, "{1,2,1',2'}")));
  CHECK_FALSE(coarser_leq(P(2, "{1,1'}"), P(2, "{1,2,1',2'}")));
  for (const auto& a : enumerate_pistar(2)) CHECK(coarser_leq(a, a));
  // Blocks of alpha may be dropped: this is the natural order of PI*_k.
  CHECK(coarser_leq(P(2, "{1,1'}|{2,2'}"), P(2, "{1,1'}")));
  CHECK(coarser_leq(P(2, "{1,1'}|{2,2'}"), P(2, "{}")));
  CHECK_FALSE(coarser_leq(P(2, "{1,1'}"), P(2, "{1,1'}|{2,2'}")));
  CHECK_FALSE(coarser_leq(P(2, "{1,2,1',2'}"), P(2, "{1,1'}|{2,2'}")));
}

TEST_CASE("coarser_leq agrees with the set-theoretic oracle on PI*_3") {
  auto all = enumerate_pistar(3);
  for (const auto& a : all) {
    for (const auto& b : all) REQUIRE(coarser_leq(a, b) == oracle::is_coarsening(a, b));
  }
}

TEST_CASE("coarser_leq is a partial order on same-domain partitions, k <= 3") {
  for (int k = 1; k <= 3; ++k) {
    auto all = oracle::all_partial_partitions(k);
    std::map<std::vector<BoundaryPoint>, std::vector<SetPartition>> by_domain;
    for (const auto& p : all) by_domain[p.domain()].push_back(p);
    for (const auto& [dom, ps] : by_domain) {
      for (const auto& a : ps) {
        CHECK(coarser_leq(a, a));
        for (const auto& b : ps) {
          if (coarser_leq(a, b) && coarser_leq(b, a)) CHECK(a == b);
          if (!coarser_leq(a, b)) continue;
          for (const auto& c : ps) {
            if (coarser_leq(b, c)) CHECK(coarser_leq(a, c));
          }
        }
      }
    }
  }
}

TEST_CASE("coarser_leq is a partial order on all of PI*_3") {
  auto all = enumerate_pistar(3);
  for (const auto& a : all) {
    for (const auto& b : all) {
      if (a != b && coarser_leq(a, b)) CHECK_FALSE(coarser_leq(b, a));
    }
  }
}

TEST_CASE("subblocks_leq") {
  CHECK(subblocks_leq(P(2, "{1,1'}"), P(2, "{1,1'}|{2,2'}")));
  for (const auto& a : enumerate_pistar(2)) CHECK(subblocks_leq(P(2, "{}"), a));
  CHECK_FALSE(subblocks_leq(P(2, "{1,2,1',2'}"), P(2, "{1,1'}|{2,2'}")));
  auto all = enumerate_pistar(3);
  for (const auto& a : all) {
    for (const auto& b : all) {
      std::set<Block> ba(a.blocks().begin(), a.blocks().end());
      bool expected = std::all_of(b.blocks().begin(), b.blocks().end(), [&](const Block& x) { return ba.count(x) > 0; });
      REQUIRE(subblocks_leq(b, a) == expected);
      if (a != b && subblocks_leq(b, a)) CHECK_FALSE(subblocks_leq(a, b));
    }
  }
}

TEST_CASE("enumerate_is counts and oracle") {
  CHECK(enumerate_is(1).size() == 2);
  CHECK(enumerate_is(2).size() == 7);
  CHECK(enumerate_is(3).size() == 34);
  for (int n = 1; n <= 6; ++n) {
    long expected = 0;
    for (int r = 0; r <= n; ++r) expected += binomial(n, r) * binomial(n, r) * factorial(r);
    CHECK(static_cast<long>(enumerate_is(n).size()) == expected);
  }
  for (int n = 1; n <= 4; ++n) {
    auto ours = enumerate_is(n);
    auto brute = oracle::all_partial_injections(n);
    std::sort(brute.begin(), brute.end());
    CHECK(ours == brute);
  }
  CHECK_THROWS_AS(enumerate_is(7), SizeGuardError);
  CHECK(enumerate_is(7, Guard::skip).size() == 130922);
}

TEST_CASE("enumerate_istar counts and oracle") {
  CHECK(enumerate_istar(1).size() == 1);
  CHECK(enumerate_istar(2).size() == 3);
  CHECK(enumerate_istar(3).size() == 25);
  for (int k = 1; k <= 5; ++k) {
    long expected = 0;
    for (int m = 1; m <= k; ++m) expected += stirling2(k, m) * stirling2(k, m) * factorial(m);
    CHECK(static_cast<long>(enumerate_istar(k).size()) == expected);
  }
  for (int k = 1; k <= 3; ++k) {
    auto brute = oracle::all_dual(k);
    std::sort(brute.begin(), brute.end());
    CHECK(enumerate_istar(k) == brute);
    for (const auto& p : enumerate_istar(k)) CHECK(is_dual_element(p));
  }
  CHECK_THROWS_AS(enumerate_istar(6), SizeGuardError);
}

TEST_CASE("enumerate_pistar counts and oracle") {
  CHECK(enumerate_pistar(1).size() == 2);
  CHECK(enumerate_pistar(2).size() == 12);
  CHECK(enumerate_pistar(3).size() == 128);
  for (int k = 1; k <= 3; ++k) {
    auto brute = oracle::all_partial_dual(k);
    std::sort(brute.begin(), brute.end());
    CHECK(enumerate_pistar(k) == brute);
    for (const auto& p : enumerate_pistar(k)) CHECK(is_partial_dual_element(p));
  }
  auto all = enumerate_pistar(4);
  CHECK(std::set<SetPartition>(all.begin(), all.end()).size() == all.size());
  CHECK_THROWS_AS(enumerate_pistar(5), SizeGuardError);
}

TEST_CASE("block_count_at_most") {
  CHECK(block_count_at_most(P(2, "{1,2,1',2'}"), 1));
  CHECK_FALSE(block_count_at_most(P(2, "{1,1'}|{2,2'}"), 1));
  CHECK(block_count_at_most(P(2, "{1,1'}"), 3));
  CHECK_FALSE(block_count_at_most(P(2, "{1,1'}"), 2));
  for (const auto& p : oracle::all_partial_partitions(2)) {
    CHECK(block_count_at_most(p, p.completed().num_blocks()));
    CHECK_FALSE(block_count_at_most(p, p.completed().num_blocks() - 1));
  }
}

TEST_CASE("set partition iterator yields Bell numbers") {
  const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
  for (std::size_t m = 0; m < 8; ++m) {
    std::size_t count = 0;
    std::set<std::vector<int>> seen;
    for_each_set_partition(m, [&](std::span<const int> rgs, std::size_t parts) {
      ++count;
      seen.insert(std::vector<int>(rgs.begin(), rgs.end()));
      int top = -1;
      for (int r : rgs) {
        CHECK(r <= top + 1);
        top = std::max(top, r);
      }
      CHECK(parts == static_cast<std::size_t>(top + 1));
    });
    CHECK(count == bell[m]);
    CHECK(seen.size() == bell[m]);
  }
}

TEST_CASE("hat elements") {
  auto z = HatElement::zero(2);
  CHECK(z.is_zero());
  CHECK_THROWS(z.diagram());
  CHECK_THROWS_AS(HatElement(P(2, "{1,2}")), std::invalid_argument);
  CHECK(HatElement(P(2, "{}")) != z);
}

TEST_CASE("boundary point ordinals round trip") {
  for (int k = 1; k <= 4; ++k) {
    for (std::size_t ord = 0; ord < static_cast<std::size_t>(2 * k); ++ord) {
      CHECK(BoundaryPoint::from_ordinal(ord, k).ordinal(k) == ord);
    }
  }
  CHECK(unprimed(3) < primed(1));
}

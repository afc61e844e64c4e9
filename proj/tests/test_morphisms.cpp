#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "rookdual/morphisms.hpp"
#include "rookdual/semigroups.hpp"

using namespace rookdual;
using testing::P;

namespace {

AlgebraElement sum_of(Carrier c, int k, std::initializer_list<std::pair<const char*, int>> terms) {
  AlgebraElement x(c, k);
  for (const auto& [text, coeff] : terms) x.add(P(k, text), coeff);
  return x;
}

// phi built from the set-theoretic coarsening test instead of the up-set walk.
AlgebraElement phi_by_scan(const SetPartition& alpha) {
  AlgebraElement x(Carrier::hat, alpha.degree());
  for (const auto& b : enumerate_pistar(alpha.degree())) {
    if (oracle::is_coarsening(alpha, b)) x.add(b, 1);
  }
  return x;
}

// Solves phi(x) = alpha by dense Gauss-Jordan on the full |PI*_k| system.
AlgebraElement phi_inverse_dense(const SetPartition& alpha) {
  auto all = enumerate_pistar(alpha.degree());
  std::size_t m = all.size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t r = 0; r < m; ++r) {
      if (oracle::is_coarsening(all[c], all[r])) a[r][c] = 1;
    }
  }
  for (std::size_t r = 0; r < m; ++r) a[r][m] = all[r] == alpha ? 1 : 0;
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    Rational p = a[col][col];
    for (auto& v : a[col]) v /= p;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t c = col; c <= m; ++c) a[r][c] -= f * a[col][c];
    }
  }
  AlgebraElement x(Carrier::pistar, alpha.degree());
  for (std::size_t r = 0; r < m; ++r) x.add(all[r], a[r][m]);
  return x;
}

bool check_named(const MorphismReport& r, const std::string& prefix) {
  bool seen = false;
  for (const auto& [name, ok] : r.checks) {
    if (name.rfind(prefix, 0) == 0) {
      seen = true;
      if (!ok) return false;
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("phi examples") {
  CHECK(phi(P(1, "{1,1'}")) == sum_of(Carrier::hat, 1, {{"{1,1'}", 1}, {"{}", 1}}));
  CHECK(phi(P(2, "{}")) == sum_of(Carrier::hat, 2, {{"{}", 1}}));
  // Under the natural order of PI*_2 blocks may also be dropped, so the
  // up-set of the identity has five members.
  CHECK(phi(SetPartition::identity(2)) == sum_of(Carrier::hat, 2,
                                                 {{"{1,1'}|{2,2'}", 1},
                                                  {"{1,2,1',2'}", 1},
                                                  {"{1,1'}", 1},
                                                  {"{2,2'}", 1},
                                                  {"{}", 1}}));
  CHECK(phi(P(2, "{1,2,1',2'}")) == sum_of(Carrier::hat, 2, {{"{1,2,1',2'}", 1}, {"{}", 1}}));
  for (int k = 1; k <= 3; ++k) {
    for (const auto& a : enumerate_pistar(k)) REQUIRE(phi(a) == phi_by_scan(a));
  }
}

TEST_CASE("phi inverse examples") {
  CHECK(phi_inverse(P(1, "{1,1'}")) == sum_of(Carrier::pistar, 1, {{"{1,1'}", 1}, {"{}", -1}}));
  CHECK(phi_inverse(P(1, "{}")) == sum_of(Carrier::pistar, 1, {{"{}", 1}}));
  CHECK(phi_inverse(P(2, "{1,2,1',2'}")) == sum_of(Carrier::pistar, 2, {{"{1,2,1',2'}", 1}, {"{}", -1}}));
  CHECK(phi_inverse(SetPartition::identity(2)) == sum_of(Carrier::pistar, 2,
                                                         {{"{1,1'}|{2,2'}", 1},
                                                          {"{1,2,1',2'}", -1},
                                                          {"{1,1'}", -1},
                                                          {"{2,2'}", -1},
                                                          {"{}", 2}}));
}

TEST_CASE("phi inverse agrees with a dense solve and the Moebius formula") {
  for (int k = 1; k <= 3; ++k) {
    for (const auto& a : enumerate_pistar(k)) {
      auto tri = phi_inverse(a);
      REQUIRE(tri == phi_inverse_mobius(a));
      if (k <= 2) REQUIRE(tri == phi_inverse_dense(a));
      REQUIRE(phi(tri) == AlgebraElement::basis(Carrier::hat, a));
      REQUIRE(phi_inverse(phi(AlgebraElement::basis(Carrier::pistar, a))) == AlgebraElement::basis(Carrier::pistar, a));
    }
  }
}

TEST_CASE("psi examples") {
  CHECK(psi(SetPartition::identity(2)) ==
        sum_of(Carrier::hat, 2, {{"{}", 1}, {"{1,1'}", 1}, {"{2,2'}", 1}, {"{1,1'}|{2,2'}", 1}}));
  CHECK(psi(P(2, "{}")) == sum_of(Carrier::hat, 2, {{"{}", 1}}));
  CHECK(psi_inverse(SetPartition::identity(2)) ==
        sum_of(Carrier::tilde, 2, {{"{1,1'}|{2,2'}", 1}, {"{1,1'}", -1}, {"{2,2'}", -1}, {"{}", 1}}));
  CHECK(psi_inverse(P(2, "{}")) == sum_of(Carrier::tilde, 2, {{"{}", 1}}));
  for (int k = 1; k <= 3; ++k) {
    for (const auto& a : enumerate_pistar(k)) {
      auto image = psi(a);
      REQUIRE(image.size() == (std::size_t{1} << a.num_blocks()));
      for (const auto& [b, c] : image.terms()) REQUIRE(subblocks_leq(b, a));
      REQUIRE(psi(psi_inverse(a)) == AlgebraElement::basis(Carrier::hat, a));
      REQUIRE(psi_inverse(psi(AlgebraElement::basis(Carrier::tilde, a))) == AlgebraElement::basis(Carrier::tilde, a));
    }
  }
}

TEST_CASE("linear extensions check the carrier") {
  auto x = AlgebraElement::basis(Carrier::hat, SetPartition::identity(2));
  CHECK_THROWS_AS(phi(x), std::invalid_argument);
  CHECK_THROWS_AS(psi(x), std::invalid_argument);
  CHECK_THROWS_AS(phi_inverse(AlgebraElement::basis(Carrier::pistar, SetPartition::identity(2))), std::invalid_argument);
}

TEST_CASE("phi and psi are homomorphisms into the hat algebra, k <= 2 exhaustive") {
  std::size_t pairs = 0;
  for (int k = 1; k <= 2; ++k) {
    auto all = enumerate_pistar(k);
    for (const auto& a : all) {
      for (const auto& b : all) {
        ++pairs;
        REQUIRE(phi_by_scan(multiply_pistar(a, b)) == phi_by_scan(a) * phi_by_scan(b));
        REQUIRE(psi(bullet_multiply(a, b)) == psi(a) * psi(b));
      }
    }
  }
  CHECK(pairs == 4 + 144);
  auto rp = verify_homomorphism(MorphismMap::phi, 2);
  auto rs = verify_homomorphism(MorphismMap::psi, 2);
  CHECK(rp.pairs_checked == 144);
  CHECK(rs.pairs_checked == 144);
  CHECK(rp.homomorphism_ok);
  CHECK(rs.homomorphism_ok);
}

TEST_CASE("phi and psi are homomorphisms at k = 3, sampled") {
  auto rp = verify_homomorphism(MorphismMap::phi, 3, 10000, 7);
  auto rs = verify_homomorphism(MorphismMap::psi, 3, 10000, 7);
  CHECK(rp.pairs_checked == 10000);
  CHECK(rs.pairs_checked == 10000);
  CHECK(rp.homomorphism_ok);
  CHECK(rs.homomorphism_ok);

  std::mt19937_64 rng(41);
  for (int t = 0; t < 300; ++t) {
    auto a = oracle::random_partial_dual(3, rng);
    auto b = oracle::random_partial_dual(3, rng);
    REQUIRE(phi_by_scan(oracle::product_pistar(a, b)) == phi_by_scan(a) * phi_by_scan(b));
  }
}

TEST_CASE("a wrong map is caught") {
  // The identity map PI*_2 -> hat is not multiplicative.
  bool broken = false;
  auto all = enumerate_pistar(2);
  for (const auto& a : all) {
    for (const auto& b : all) {
      auto lhs = AlgebraElement::basis(Carrier::hat, multiply_pistar(a, b));
      auto rhs = AlgebraElement::basis(Carrier::hat, a) * AlgebraElement::basis(Carrier::hat, b);
      if (lhs != rhs) broken = true;
    }
  }
  CHECK(broken);
}

TEST_CASE("inverse reports") {
  for (int k = 1; k <= 3; ++k) {
    auto rp = verify_inverse(MorphismMap::phi, k);
    auto rs = verify_inverse(MorphismMap::psi, k);
    CHECK(rp.inverse_ok);
    CHECK(rs.inverse_ok);
    CHECK(check_named(rp, "phi inverse: triangular solve = Moebius formula"));
  }
}

TEST_CASE("proposition checks") {
  for (auto [n, k] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 2}}) {
    auto r3 = verify_prop3(n, k);
    auto r4 = verify_prop4(n, k);
    CAPTURE(n);
    CAPTURE(k);
    CHECK(r3.all_ok());
    CHECK(r4.all_ok());
    CHECK(check_named(r3, "up-set: plain zero"));
    CHECK(check_named(r3, "up-set: plain non-zero"));
    CHECK(check_named(r3, "phi inverse: hat action"));
    CHECK(check_named(r4, "psi: tilde action"));
  }
  CHECK_THROWS_AS(verify_prop3(4, 2), SizeGuardError);
  CHECK_THROWS_AS(verify_prop4(2, 4), SizeGuardError);
}

TEST_CASE("hat and tilde actions through phi inverse and psi as matrix identities") {
  ActionSpace s(SpaceKind::U, 2, 2);
  for (const auto& a : enumerate_pistar(2)) {
    auto hat = action_matrix_u(HatElement(a), s);
    REQUIRE(hat == action_matrix(phi_inverse(a), s));
    REQUIRE(action_matrix_u(a, s, UVariant::tilde) == action_matrix(psi(a), s));
  }
  auto empty = action_matrix_u(P(2, "{}"), s, UVariant::tilde);
  CHECK(empty.nonzeros() == 1);
  CHECK(empty.get(0, 0) == 1);
  CHECK(action_matrix(psi(P(2, "{}")), s) == empty);
}

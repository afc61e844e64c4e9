#include "rookdual/morphisms.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "rookdual/semigroups.hpp"

namespace rookdual {

namespace {

constexpr int kMaxPropDegree = 3;

// Calls f(beta, mu) for every beta >= alpha. The up-set is parametrized by
// set partitions of alpha's blocks plus a marker: the marker's part is
// dropped, every other part is merged into one block. mu is the Moebius
// value, the product of (-1)^(s-1) (s-1)! over part sizes s.
template <class F>
void for_each_coarsening(const SetPartition& alpha, F&& f) {
  const auto& blocks = alpha.blocks();
  std::size_t m = blocks.size();
  for_each_set_partition(m + 1, [&](std::span<const int> rgs, std::size_t parts) {
    auto marker = static_cast<std::size_t>(rgs[m]);
    std::vector<Block> merged(parts);
    std::vector<long> sizes(parts, 0);
    for (std::size_t i = 0; i <= m; ++i) {
      auto p = static_cast<std::size_t>(rgs[i]);
      ++sizes[p];
      if (i < m && p != marker) merged[p].insert(merged[p].end(), blocks[i].begin(), blocks[i].end());
    }
    Integer mu = 1;
    for (long s : sizes) {
      for (long j = 2; j < s; ++j) mu *= j;
      if (s % 2 == 0) mu = -mu;
    }
    merged.erase(merged.begin() + static_cast<std::ptrdiff_t>(marker));
    f(SetPartition(alpha.degree(), std::move(merged)), Rational(mu));
  });
}

void require_carrier(const AlgebraElement& x, Carrier expected) {
  if (x.carrier() != expected) {
    throw std::invalid_argument(std::string("expected an element of the ") + carrier_name(expected) + " algebra");
  }
}

template <class Map>
AlgebraElement extend(const AlgebraElement& x, Carrier target, Map&& map) {
  AlgebraElement out(target, x.degree());
  for (const auto& [alpha, c] : x.terms()) out = out + c * map(alpha);
  return out;
}

void require_partial_dual(const SetPartition& alpha) {
  if (!is_partial_dual_element(alpha)) throw std::invalid_argument("argument is not a PI*_k element");
}

void check_prop_guard(int n, int k, Guard guard) {
  if (n < 1 || k < 1) throw std::invalid_argument("n and k must be positive");
  if (guard == Guard::enforce && (n > kMaxPropDegree || k > kMaxPropDegree)) {
    throw SizeGuardError("proposition checks are limited to n, k <= " + std::to_string(kMaxPropDegree));
  }
}

void absorb(MorphismReport& into, const MorphismReport& part) {
  into.pairs_checked += part.pairs_checked;
  into.homomorphism_ok = into.homomorphism_ok && part.homomorphism_ok;
  into.inverse_ok = into.inverse_ok && part.inverse_ok;
  into.checks.insert(into.checks.end(), part.checks.begin(), part.checks.end());
}

}  // namespace

AlgebraElement phi(const SetPartition& alpha) {
  require_partial_dual(alpha);
  AlgebraElement out(Carrier::hat, alpha.degree());
  for_each_coarsening(alpha, [&](const SetPartition& beta, const Rational&) { out.add(beta, 1); });
  return out;
}

AlgebraElement phi_inverse_mobius(const SetPartition& alpha) {
  require_partial_dual(alpha);
  AlgebraElement out(Carrier::pistar, alpha.degree());
  for_each_coarsening(alpha, [&](const SetPartition& beta, const Rational& mu) { out.add(beta, mu); });
  return out;
}

AlgebraElement phi_inverse(const SetPartition& alpha) {
  require_partial_dual(alpha);
  // Coefficient of delta in phi(x) is the sum of x over gamma <= delta, so
  // solve from the finest element of the up-set towards the coarsest.
  std::vector<SetPartition> up;
  for (auto& beta : enumerate_pistar(alpha.degree(), Guard::skip)) {
    if (coarser_leq(alpha, beta)) up.push_back(std::move(beta));
  }
  std::stable_sort(up.begin(), up.end(),
                   [](const SetPartition& a, const SetPartition& b) { return a.num_blocks() > b.num_blocks(); });
  std::vector<Rational> coeff(up.size());
  AlgebraElement out(Carrier::pistar, alpha.degree());
  for (std::size_t d = 0; d < up.size(); ++d) {
    if (up[d] == alpha) {
      coeff[d] = 1;
    } else {
      for (std::size_t g = 0; g < d; ++g) {
        if (coarser_leq(up[g], up[d])) coeff[d] -= coeff[g];
      }
    }
    out.add(up[d], coeff[d]);
  }
  return out;
}

AlgebraElement psi(const SetPartition& alpha) {
  require_partial_dual(alpha);
  AlgebraElement out(Carrier::hat, alpha.degree());
  std::size_t m = alpha.num_blocks();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<Block> chosen;
    for (std::size_t b = 0; b < m; ++b) {
      if (mask & (std::size_t{1} << b)) chosen.push_back(alpha.blocks()[b]);
    }
    out.add(SetPartition(alpha.degree(), std::move(chosen)), 1);
  }
  return out;
}

AlgebraElement psi_inverse(const SetPartition& alpha) {
  require_partial_dual(alpha);
  AlgebraElement out(Carrier::tilde, alpha.degree());
  std::size_t m = alpha.num_blocks();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<Block> chosen;
    for (std::size_t b = 0; b < m; ++b) {
      if (mask & (std::size_t{1} << b)) chosen.push_back(alpha.blocks()[b]);
    }
    bool odd = (m - chosen.size()) % 2 == 1;
    out.add(SetPartition(alpha.degree(), std::move(chosen)), odd ? -1 : 1);
  }
  return out;
}

AlgebraElement phi(const AlgebraElement& x) {
  require_carrier(x, Carrier::pistar);
  return extend(x, Carrier::hat, [](const SetPartition& a) { return phi(a); });
}

AlgebraElement phi_inverse(const AlgebraElement& x) {
  require_carrier(x, Carrier::hat);
  return extend(x, Carrier::pistar, [](const SetPartition& a) { return phi_inverse(a); });
}

AlgebraElement psi(const AlgebraElement& x) {
  require_carrier(x, Carrier::tilde);
  return extend(x, Carrier::hat, [](const SetPartition& a) { return psi(a); });
}

AlgebraElement psi_inverse(const AlgebraElement& x) {
  require_carrier(x, Carrier::hat);
  return extend(x, Carrier::tilde, [](const SetPartition& a) { return psi_inverse(a); });
}

const char* morphism_name(MorphismMap m) { return m == MorphismMap::phi ? "phi" : "psi"; }

bool MorphismReport::all_ok() const {
  return homomorphism_ok && inverse_ok &&
         std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

MorphismReport verify_homomorphism(MorphismMap map, int k, std::size_t sample, std::uint64_t seed) {
  MorphismReport report;
  report.k = k;
  report.map = map;
  auto elements = enumerate_pistar(k);
  std::vector<AlgebraElement> images;
  images.reserve(elements.size());
  for (const auto& e : elements) images.push_back(map == MorphismMap::phi ? phi(e) : psi(e));

  auto check_pair = [&](std::size_t a, std::size_t b) {
    const auto& x = elements[a];
    const auto& y = elements[b];
    auto product = map == MorphismMap::phi ? phi(multiply_pistar(x, y)) : psi(bullet_multiply(x, y));
    if (product != images[a] * images[b]) report.homomorphism_ok = false;
    ++report.pairs_checked;
  };
  if (sample == 0) {
    for (std::size_t a = 0; a < elements.size(); ++a) {
      for (std::size_t b = 0; b < elements.size(); ++b) check_pair(a, b);
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
    for (std::size_t s = 0; s < sample; ++s) {
      auto a = pick(rng);
      check_pair(a, pick(rng));
    }
  }
  report.checks.emplace_back(std::string(morphism_name(map)) + " homomorphism", report.homomorphism_ok);
  return report;
}

MorphismReport verify_inverse(MorphismMap map, int k) {
  MorphismReport report;
  report.k = k;
  report.map = map;
  bool mobius_ok = true;
  for (const auto& alpha : enumerate_pistar(k)) {
    if (map == MorphismMap::phi) {
      auto inv = phi_inverse(alpha);
      if (phi(inv) != AlgebraElement::basis(Carrier::hat, alpha)) report.inverse_ok = false;
      if (phi_inverse(phi(AlgebraElement::basis(Carrier::pistar, alpha))) != AlgebraElement::basis(Carrier::pistar, alpha)) {
        report.inverse_ok = false;
      }
      if (phi_inverse_mobius(alpha) != inv) mobius_ok = false;
    } else {
      if (psi(psi_inverse(alpha)) != AlgebraElement::basis(Carrier::hat, alpha)) report.inverse_ok = false;
      if (psi_inverse(psi(AlgebraElement::basis(Carrier::tilde, alpha))) != AlgebraElement::basis(Carrier::tilde, alpha)) {
        report.inverse_ok = false;
      }
    }
  }
  report.checks.emplace_back(std::string(morphism_name(map)) + " inverse round trip", report.inverse_ok);
  if (map == MorphismMap::phi) report.checks.emplace_back("phi inverse: triangular solve = Moebius formula", mobius_ok);
  return report;
}

MorphismReport verify_prop3(int n, int k, Guard guard) {
  check_prop_guard(n, k, guard);
  MorphismReport report;
  report.n = n;
  report.k = k;
  report.map = MorphismMap::phi;
  ActionSpace space(SpaceKind::U, n, k);
  bool part1 = true, part2 = true, part3 = true;
  for (const auto& alpha : enumerate_pistar(k, guard)) {
    auto up = phi(alpha);
    for (std::size_t col = 0; col < space.dimension(); ++col) {
      auto i = space.index_at(col);
      std::size_t alive = 0;
      for (const auto& [beta, c] : up.terms()) {
        if (match_set_hat(HatElement(beta), i)) ++alive;
      }
      if (match_set_partial(alpha, i)) {
        part2 = part2 && alive == 1;
      } else {
        part1 = part1 && alive == 0;
      }
    }
    auto hat = action_matrix_u(alpha, space, UVariant::hat, guard);
    part3 = part3 && hat == action_matrix(phi_inverse(alpha), space, guard);
  }
  report.checks.emplace_back("up-set: plain zero implies hat zero on the up-set", part1);
  report.checks.emplace_back("up-set: plain non-zero implies one live element of the up-set", part2);
  report.checks.emplace_back("phi inverse: hat action of alpha = plain action of phi^-1(alpha)", part3);
  absorb(report, verify_homomorphism(MorphismMap::phi, k, k <= 2 ? 0 : 10000));
  absorb(report, verify_inverse(MorphismMap::phi, k));
  return report;
}

MorphismReport verify_prop4(int n, int k, Guard guard) {
  check_prop_guard(n, k, guard);
  MorphismReport report;
  report.n = n;
  report.k = k;
  report.map = MorphismMap::psi;
  ActionSpace space(SpaceKind::U, n, k);
  bool ok = true;
  for (const auto& alpha : enumerate_pistar(k, guard)) {
    auto tilde = action_matrix_u(alpha, space, UVariant::tilde, guard);
    ok = ok && tilde == action_matrix(psi(alpha), space, guard);
  }
  report.checks.emplace_back("psi: tilde action of alpha = hat action of psi(alpha)", ok);
  absorb(report, verify_homomorphism(MorphismMap::psi, k, k <= 2 ? 0 : 10000));
  absorb(report, verify_inverse(MorphismMap::psi, k));
  return report;
}

}  // namespace rookdual

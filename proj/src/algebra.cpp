#include "rookdual/algebra.hpp"

#include <stdexcept>

#include "rookdual/semigroups.hpp"

namespace rookdual {

const char* carrier_name(Carrier c) {
  switch (c) {
    case Carrier::pistar:
      return "pistar";
    case Carrier::hat:
      return "hat";
    case Carrier::tilde:
      return "tilde";
  }
  return "?";
}

AlgebraElement::AlgebraElement(Carrier carrier, int k) : carrier_(carrier), k_(k) {
  if (k < 1) throw std::invalid_argument("algebra degree must be positive");
}

AlgebraElement AlgebraElement::basis(Carrier carrier, const SetPartition& alpha, const Rational& coefficient) {
  AlgebraElement e(carrier, alpha.degree());
  e.add(alpha, coefficient);
  return e;
}

Rational AlgebraElement::coefficient(const SetPartition& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add(const SetPartition& alpha, const Rational& coefficient) {
  if (alpha.degree() != k_) throw std::invalid_argument("term degree does not match the algebra");
  if (!is_partial_dual_element(alpha)) throw std::invalid_argument("algebra term is not a PI*_k element");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(alpha, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

void AlgebraElement::require_compatible(const AlgebraElement& other) const {
  if (carrier_ != other.carrier_ || k_ != other.k_) {
    throw std::invalid_argument("algebra elements live in different algebras");
  }
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
  a.require_compatible(b);
  for (const auto& [alpha, c] : b.terms_) a.add(alpha, c);
  return a;
}

AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
  a.require_compatible(b);
  for (const auto& [alpha, c] : b.terms_) a.add(alpha, -c);
  return a;
}

AlgebraElement operator*(const Rational& s, AlgebraElement a) {
  if (s == 0) {
    a.terms_.clear();
    return a;
  }
  for (auto& [alpha, c] : a.terms_) c *= s;
  return a;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  a.require_compatible(b);
  AlgebraElement out(a.carrier_, a.k_);
  for (const auto& [x, cx] : a.terms_) {
    for (const auto& [y, cy] : b.terms_) {
      switch (a.carrier_) {
        case Carrier::pistar:
          out.add(multiply_pistar(x, y), cx * cy);
          break;
        case Carrier::hat:
          if (traces_match(x, y)) out.add(multiply_pistar(x, y), cx * cy);
          break;
        case Carrier::tilde:
          out.add(bullet_multiply(x, y), cx * cy);
          break;
      }
    }
  }
  return out;
}

AlgebraElement with_carrier(AlgebraElement a, Carrier carrier) {
  a.carrier_ = carrier;
  return a;
}

ExactMatrix action_matrix(const AlgebraElement& a, const ActionSpace& space, Guard guard) {
  space.check_guard(guard);
  UVariant variant = a.carrier() == Carrier::pistar ? UVariant::plain
                     : a.carrier() == Carrier::hat  ? UVariant::hat
                                                    : UVariant::tilde;
  ExactMatrix total(space.dimension(), space.dimension());
  for (const auto& [alpha, c] : a.terms()) total = total + c * action_matrix_u(alpha, space, variant, guard);
  return total;
}

}  // namespace rookdual

#pragma once

#include <map>

#include "rookdual/actions.hpp"
#include "rookdual/diagrams.hpp"
#include "rookdual/linalg.hpp"

namespace rookdual {

// Which product a formal combination of PI*_k diagrams multiplies with:
// break-down (.), star on the contracted hat algebra, or bullet.
enum class Carrier { pistar, hat, tilde };

const char* carrier_name(Carrier c);

/// Finite Q-linear combination of PI*_k diagrams. Zero coefficients are never
/// stored. For the hat carrier the adjoined zero is identified with 0, as in
/// the contracted semigroup algebra.
class AlgebraElement {
 public:
  using Terms = std::map<SetPartition, Rational>;

  AlgebraElement(Carrier carrier, int k);
  static AlgebraElement basis(Carrier carrier, const SetPartition& alpha, const Rational& coefficient = 1);

  Carrier carrier() const { return carrier_; }
  int degree() const { return k_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const SetPartition& alpha) const;

  void add(const SetPartition& alpha, const Rational& coefficient);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);
  friend AlgebraElement operator*(const Rational& s, AlgebraElement a);
  // Bilinear extension of the carrier's product.
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
  // Same terms, read in another algebra.
  friend AlgebraElement with_carrier(AlgebraElement a, Carrier carrier);

 private:
  void require_compatible(const AlgebraElement& other) const;

  Carrier carrier_;
  int k_;
  Terms terms_;
};

// Sum of coefficient * action matrix on U, using the carrier's variant.
ExactMatrix action_matrix(const AlgebraElement& a, const ActionSpace& space, Guard guard = Guard::enforce);

}  // namespace rookdual

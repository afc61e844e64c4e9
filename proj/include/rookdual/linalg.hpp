#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "rookdual/diagrams.hpp"

namespace rookdual {

using Rational = mpq_class;
using Integer = mpz_class;

/// Sparse matrix over Q stored by columns. Each column is a list of
/// (row, value) pairs sorted by row with no stored zeros.
class ExactMatrix {
 public:
  using Entry = std::pair<std::size_t, Rational>;
  using Column = std::vector<Entry>;
  using Triplet = std::tuple<std::size_t, std::size_t, Rational>;

  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  static ExactMatrix identity(std::size_t d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const Column& column(std::size_t c) const { return columns_.at(c); }

  Rational get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);
  void add(std::size_t r, std::size_t c, const Rational& value);

  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }
  ExactMatrix transpose() const;

  // Sorted by (row, col).
  std::vector<Triplet> triplets() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const Rational& s, const ExactMatrix& a);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;
  // Arbitrary but total; lets matrices key ordered containers.
  friend bool operator<(const ExactMatrix& a, const ExactMatrix& b);

 private:
  void check_index(std::size_t r, std::size_t c) const;

  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

/// Sparse integer vector sorted by index, no stored zeros.
using IntVector = std::vector<std::pair<std::size_t, Integer>>;

/// Row echelon basis over Z built incrementally. Reduction is fraction free:
/// v <- p*v - c*row followed by division by the content gcd, so entries stay
/// integral and small.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t length) : length_(length) {}

  // Adds v; returns true if it was independent of the basis.
  bool insert(IntVector v);
  // True iff v lies in the current span.
  bool contains(IntVector v) const;
  std::size_t dimension() const { return rows_.size(); }
  std::size_t length() const { return length_; }

  // Fully reduced rows (each pivot column is zero in every other row).
  std::vector<IntVector> reduced_rows() const;

 private:
  // Eliminates every leading entry that hits a pivot; the result is either
  // empty or has a leading index that is not a pivot.
  void reduce(IntVector& v) const;

  std::size_t length_;
  std::map<std::size_t, IntVector> rows_;  // keyed by pivot column
};

// Scales a rational vector to a primitive integer vector.
IntVector to_integer_vector(const std::vector<std::pair<std::size_t, Rational>>& v);

// Column-major vectorization of a matrix.
IntVector vectorize(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

// Dimension of the span of the matrices viewed as vectors. Throws
// std::invalid_argument on shape mismatch.
std::size_t span_dimension(const std::vector<ExactMatrix>& mats);

bool in_span(const ExactMatrix& target, const std::vector<ExactMatrix>& basis);

// Basis of {X : XG = GX for every generator G}, all generators d x d.
// Throws SizeGuardError when d*d exceeds the unknown limit under Guard::enforce.
std::vector<ExactMatrix> commutant_basis(const std::vector<ExactMatrix>& generators, std::size_t d,
                                         Guard guard = Guard::enforce);

inline constexpr std::size_t kMaxCommutantUnknowns = 70000;

}  // namespace rookdual

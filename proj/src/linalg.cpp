#include "rookdual/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rookdual {

namespace {

// a*x - b*y over sparse vectors.
IntVector combine(const Integer& a, const IntVector& x, const Integer& b, const IntVector& y) {
  IntVector out;
  out.reserve(x.size() + y.size());
  auto xi = x.begin();
  auto yi = y.begin();
  while (xi != x.end() || yi != y.end()) {
    if (yi == y.end() || (xi != x.end() && xi->first < yi->first)) {
      out.emplace_back(xi->first, a * xi->second);
      ++xi;
    } else if (xi == x.end() || yi->first < xi->first) {
      out.emplace_back(yi->first, -b * yi->second);
      ++yi;
    } else {
      Integer value = a * xi->second - b * yi->second;
      if (value != 0) out.emplace_back(xi->first, std::move(value));
      ++xi;
      ++yi;
    }
  }
  return out;
}

void remove_content(IntVector& v) {
  if (v.empty()) return;
  Integer g = 0;
  for (const auto& [i, value] : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), value.get_mpz_t());
    if (g == 1) break;
  }
  if (v.front().second < 0) g = -g;
  if (g == 1) return;
  for (auto& [i, value] : v) mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), g.get_mpz_t());
}

// Eliminates column `col` of v using `row`, whose entry at `col` is non-zero.
void eliminate(IntVector& v, const IntVector& row, std::size_t col) {
  auto vi = std::lower_bound(v.begin(), v.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  if (vi == v.end() || vi->first != col) return;
  auto ri = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  Integer g = gcd(ri->second, vi->second);
  Integer a = ri->second / g;
  Integer b = vi->second / g;
  v = combine(a, v, b, row);
  remove_content(v);
}

void require_same_shape(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("shape mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

ExactMatrix ExactMatrix::identity(std::size_t d) {
  ExactMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m.columns_[i].emplace_back(i, Rational(1));
  return m;
}

void ExactMatrix::check_index(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= columns_.size()) {
    throw std::out_of_range("matrix index (" + std::to_string(r) + "," + std::to_string(c) + ") out of range");
  }
}

Rational ExactMatrix::get(std::size_t r, std::size_t c) const {
  check_index(r, c);
  const auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t row) { return e.first < row; });
  if (it != col.end() && it->first == r) return it->second;
  return 0;
}

void ExactMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
  check_index(r, c);
  auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t row) { return e.first < row; });
  bool present = it != col.end() && it->first == r;
  if (value == 0) {
    if (present) col.erase(it);
  } else if (present) {
    it->second = value;
  } else {
    col.emplace(it, r, value);
  }
}

void ExactMatrix::add(std::size_t r, std::size_t c, const Rational& value) { set(r, c, get(r, c) + value); }

std::size_t ExactMatrix::nonzeros() const {
  std::size_t total = 0;
  for (const auto& col : columns_) total += col.size();
  return total;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols(), rows_);
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (const auto& [r, value] : columns_[c]) t.columns_[r].emplace_back(c, value);
  }
  return t;
}

std::vector<ExactMatrix::Triplet> ExactMatrix::triplets() const {
  std::vector<Triplet> out;
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (const auto& [r, value] : columns_[c]) out.emplace_back(r, c, value);
  }
  std::sort(out.begin(), out.end(), [](const Triplet& a, const Triplet& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  ExactMatrix out(a.rows(), b.cols());
  std::map<std::size_t, Rational> acc;
  for (std::size_t j = 0; j < b.cols(); ++j) {
    acc.clear();
    for (const auto& [l, blj] : b.columns_[j]) {
      for (const auto& [i, ail] : a.columns_[l]) acc[i] += ail * blj;
    }
    for (auto& [i, value] : acc) {
      if (value != 0) out.columns_[j].emplace_back(i, std::move(value));
    }
  }
  return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_shape(a, b);
  ExactMatrix out(a.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [i, v] : a.columns_[j]) acc[i] += v;
    for (const auto& [i, v] : b.columns_[j]) acc[i] += v;
    for (auto& [i, value] : acc) {
      if (value != 0) out.columns_[j].emplace_back(i, std::move(value));
    }
  }
  return out;
}

ExactMatrix operator*(const Rational& s, const ExactMatrix& a) {
  ExactMatrix out(a.rows(), a.cols());
  if (s == 0) return out;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (const auto& [i, v] : a.columns_[j]) out.columns_[j].emplace_back(i, s * v);
  }
  return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) { return a + Rational(-1) * b; }

bool operator<(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const auto& x = a.columns_[j];
    const auto& y = b.columns_[j];
    for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
      if (x[i].first != y[i].first) return x[i].first < y[i].first;
      if (x[i].second != y[i].second) return x[i].second < y[i].second;
    }
    if (x.size() != y.size()) return x.size() < y.size();
  }
  return false;
}

void EchelonBasis::reduce(IntVector& v) const {
  while (!v.empty()) {
    auto it = rows_.find(v.front().first);
    if (it == rows_.end()) return;
    eliminate(v, it->second, it->first);
  }
}

bool EchelonBasis::insert(IntVector v) {
  reduce(v);
  if (v.empty()) return false;
  remove_content(v);
  auto pivot = v.front().first;
  if (pivot >= length_) throw std::out_of_range("vector index beyond basis length");
  rows_.emplace(pivot, std::move(v));
  return true;
}

bool EchelonBasis::contains(IntVector v) const {
  reduce(v);
  return v.empty();
}

std::vector<IntVector> EchelonBasis::reduced_rows() const {
  std::map<std::size_t, IntVector> done;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    IntVector row = it->second;
    // Rows already in `done` have larger pivots and are zero on each
    // other's pivots, so eliminating one never reintroduces another.
    for (const auto& [pivot, other] : done) eliminate(row, other, pivot);
    done.emplace(it->first, std::move(row));
  }
  std::vector<IntVector> out;
  for (auto& [pivot, row] : done) out.push_back(std::move(row));
  return out;
}

IntVector to_integer_vector(const std::vector<std::pair<std::size_t, Rational>>& v) {
  Integer denom = 1;
  for (const auto& [i, value] : v) denom = lcm(denom, value.get_den());
  IntVector out;
  for (const auto& [i, value] : v) {
    if (value == 0) continue;
    Integer scaled = value.get_num() * (denom / value.get_den());
    out.emplace_back(i, std::move(scaled));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  remove_content(out);
  return out;
}

IntVector vectorize(const ExactMatrix& m) {
  std::vector<std::pair<std::size_t, Rational>> flat;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& [r, value] : m.column(c)) flat.emplace_back(c * m.rows() + r, value);
  }
  return to_integer_vector(flat);
}

std::size_t rank(const ExactMatrix& m) {
  EchelonBasis basis(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::vector<std::pair<std::size_t, Rational>> col(m.column(c).begin(), m.column(c).end());
    basis.insert(to_integer_vector(col));
  }
  return basis.dimension();
}

std::size_t span_dimension(const std::vector<ExactMatrix>& mats) {
  if (mats.empty()) return 0;
  EchelonBasis basis(mats.front().rows() * mats.front().cols());
  for (const auto& m : mats) {
    require_same_shape(mats.front(), m);
    basis.insert(vectorize(m));
  }
  return basis.dimension();
}

bool in_span(const ExactMatrix& target, const std::vector<ExactMatrix>& basis) {
  EchelonBasis echelon(target.rows() * target.cols());
  for (const auto& m : basis) {
    require_same_shape(target, m);
    echelon.insert(vectorize(m));
  }
  return echelon.contains(vectorize(target));
}

std::vector<ExactMatrix> commutant_basis(const std::vector<ExactMatrix>& generators, std::size_t d, Guard guard) {
  std::size_t unknowns = d * d;
  if (guard == Guard::enforce && unknowns > kMaxCommutantUnknowns) {
    throw SizeGuardError("commutant system has " + std::to_string(unknowns) + " unknowns, above the guard " +
                         std::to_string(kMaxCommutantUnknowns));
  }
  for (const auto& g : generators) {
    if (g.rows() != d || g.cols() != d) throw std::invalid_argument("commutant generator is not d x d");
  }
  // Unknown X(a,b) sits at b*d + a, matching vectorize().
  EchelonBasis system(unknowns);
  std::map<std::size_t, Rational> equation;
  for (const auto& g : generators) {
    auto gt = g.transpose();
    for (std::size_t i = 0; i < d && system.dimension() < unknowns; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        // (XG - GX)(i,j) = sum_l X(i,l) G(l,j) - sum_l G(i,l) X(l,j)
        equation.clear();
        for (const auto& [l, value] : g.column(j)) equation[l * d + i] += value;
        for (const auto& [l, value] : gt.column(i)) equation[j * d + l] -= value;
        std::vector<std::pair<std::size_t, Rational>> row(equation.begin(), equation.end());
        auto v = to_integer_vector(row);
        if (!v.empty()) system.insert(std::move(v));
      }
    }
  }
  auto rows = system.reduced_rows();
  std::vector<bool> is_pivot(unknowns, false);
  for (const auto& row : rows) is_pivot[row.front().first] = true;
  // Free unknown f gives the null vector with x_f = 1 and x_p = -row_p[f] / row_p[p].
  std::map<std::size_t, ExactMatrix> vectors;
  for (std::size_t f = 0; f < unknowns; ++f) {
    if (is_pivot[f]) continue;
    ExactMatrix x(d, d);
    x.set(f % d, f / d, 1);
    vectors.emplace(f, std::move(x));
  }
  for (const auto& row : rows) {
    std::size_t p = row.front().first;
    const Integer& lead = row.front().second;
    for (std::size_t e = 1; e < row.size(); ++e) {
      auto f = row[e].first;
      Rational value(Integer(-row[e].second), lead);
      value.canonicalize();
      vectors.at(f).set(p % d, p / d, value);
    }
  }
  std::vector<ExactMatrix> basis;
  for (auto& [f, x] : vectors) basis.push_back(std::move(x));
  return basis;
}

}  // namespace rookdual

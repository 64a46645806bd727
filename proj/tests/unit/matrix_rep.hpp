#pragma once
// Exact matrix images of Clifford algebras over diag(+-1, ...), built as a
// Jordan-Wigner style Kronecker product. Independent of the product code in
// the library: multivectors are mapped term by term to matrix products.

#include "eph/cliffalg/multivector.hpp"

#include <stdexcept>
#include <vector>

namespace eph::testing {

using sym::Rational;

struct QMat {
  std::size_t n = 0;
  std::vector<Rational> a;

  static QMat zero(std::size_t n) { return QMat{n, std::vector<Rational>(n * n)}; }
  static QMat identity(std::size_t n) {
    QMat m = zero(n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }
  Rational &operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const Rational &operator()(std::size_t i, std::size_t j) const {
    return a[i * n + j];
  }
  friend bool operator==(const QMat &x, const QMat &y) { return x.a == y.a; }
};

inline QMat operator*(const QMat &x, const QMat &y) {
  QMat r = QMat::zero(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t k = 0; k < x.n; ++k) {
      if (x(i, k) == 0)
        continue;
      for (std::size_t j = 0; j < x.n; ++j)
        r(i, j) += x(i, k) * y(k, j);
    }
  return r;
}

inline QMat operator+(const QMat &x, const QMat &y) {
  QMat r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i)
    r.a[i] += y.a[i];
  return r;
}

inline QMat scaled(const Rational &s, const QMat &x) {
  QMat r = x;
  for (auto &v : r.a)
    v *= s;
  return r;
}

inline QMat transpose(const QMat &x) {
  QMat r = QMat::zero(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t j = 0; j < x.n; ++j)
      r(j, i) = x(i, j);
  return r;
}

inline QMat kron(const QMat &x, const QMat &y) {
  QMat r = QMat::zero(x.n * y.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t j = 0; j < x.n; ++j)
      for (std::size_t k = 0; k < y.n; ++k)
        for (std::size_t l = 0; l < y.n; ++l)
          r(i * y.n + k, j * y.n + l) = x(i, j) * y(k, l);
  return r;
}

// Rank over Q by elimination on the rows given.
inline std::size_t rank(std::vector<std::vector<Rational>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0)
      ++p;
    if (p == rows.size())
      continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0)
        continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j)
        rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

class MatrixRep {
public:
  // signs[k] is e_k^2, each +1 or -1
  explicit MatrixRep(std::vector<int> signs) : signs_(std::move(signs)) {
    const std::size_t n = signs_.size();
    QMat I = QMat::identity(2);
    QMat Z = QMat::zero(2);
    Z(0, 0) = 1;
    Z(1, 1) = -1;
    QMat X = QMat::zero(2);
    X(0, 1) = 1;
    X(1, 0) = 1;
    QMat J = QMat::zero(2);
    J(0, 1) = -1;
    J(1, 0) = 1;
    for (std::size_t k = 0; k < n; ++k) {
      if (signs_[k] != 1 && signs_[k] != -1)
        throw std::invalid_argument("MatrixRep: signs must be +-1");
      QMat g = QMat::identity(1);
      for (std::size_t p = 0; p < n; ++p) {
        const QMat &f = p < k ? Z : p == k ? (signs_[k] > 0 ? X : J) : I;
        g = kron(g, f);
      }
      gammas_.push_back(g);
    }
    size_ = std::size_t{1} << n;
  }

  std::size_t size() const { return size_; }
  const QMat &gamma(std::size_t k) const { return gammas_[k]; }

  QMat blade(cliff::Blade b) const {
    QMat m = QMat::identity(size_);
    for (unsigned i : b.indices())
      m = m * gammas_[i];
    return m;
  }

  QMat operator()(const cliff::Multivector &mv) const {
    QMat m = QMat::zero(size_);
    for (const auto &[b, c] : mv.terms()) {
      if (!c.is_constant())
        throw std::invalid_argument("MatrixRep: symbolic coefficient");
      m = m + scaled(c.value(), blade(b));
    }
    return m;
  }

  // Reversal: gamma_k^T = e_k^2 gamma_k, so the transpose of the image of
  // sum c_S (prod_{i in S} e_i^2) e_S is the image of the reversed element.
  QMat reversed(const cliff::Multivector &mv) const {
    QMat m = QMat::zero(size_);
    for (const auto &[b, c] : mv.terms()) {
      int s = 1;
      for (unsigned i : b.indices())
        s *= signs_[i];
      m = m + scaled(c.value() * s, blade(b));
    }
    return transpose(m);
  }

  // Grade involution: odd blades change sign.
  QMat graded(const cliff::Multivector &mv) const {
    QMat m = QMat::zero(size_);
    for (const auto &[b, c] : mv.terms())
      m = m + scaled(b.grade() % 2 ? Rational(-c.value()) : c.value(), blade(b));
    return m;
  }

  std::size_t blade_rank() const {
    std::vector<std::vector<Rational>> rows;
    for (std::uint32_t mask = 0; mask < size_; ++mask)
      rows.push_back(blade(cliff::Blade{mask}).a);
    return rank(rows);
  }

private:
  std::vector<int> signs_;
  std::vector<QMat> gammas_;
  std::size_t size_ = 1;
};

} // namespace eph::testing

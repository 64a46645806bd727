#pragma once

#include "eph/cliffalg/errors.hpp"
#include "eph/cliffalg/metric.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace eph::cliff {

// Set of generator indices, bit i standing for e_i. The empty blade is ONE.
struct Blade {
  std::uint32_t mask = 0;

  static Blade of(std::initializer_list<unsigned> indices);

  unsigned grade() const;
  std::vector<unsigned> indices() const;
  std::string str() const; // "e0e2", "ONE"

  friend bool operator==(Blade a, Blade b) { return a.mask == b.mask; }
  friend bool operator!=(Blade a, Blade b) { return a.mask != b.mask; }
};

// Grade first, then lexicographic on the increasing index lists.
struct BladeLess {
  bool operator()(Blade a, Blade b) const;
};

class Multivector {
public:
  using Terms = std::map<Blade, Expr, BladeLess>;

  explicit Multivector(MetricSpec metric);
  Multivector(MetricSpec metric, Terms terms);
  static Multivector scalar(MetricSpec metric, const Expr &value);
  static Multivector one(MetricSpec metric) { return scalar(metric, 1); }

  const MetricSpec &metric() const { return metric_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;

  // Zero when the blade is absent.
  Expr coefficient(Blade b) const;
  Expr scalar_part() const { return coefficient(Blade{}); }
  Multivector grade_part(unsigned g) const;

  Multivector map_coefficients(const std::function<Expr(const Expr &)> &f) const;

  // "c * e0e1 + ..."
  std::string str() const;

  friend bool operator==(const Multivector &a, const Multivector &b);
  friend bool operator!=(const Multivector &a, const Multivector &b) {
    return !(a == b);
  }

private:
  void add_term(Blade b, const Expr &c);

  MetricSpec metric_;
  Terms terms_;

  friend Multivector operator+(const Multivector &, const Multivector &);
  friend Multivector operator*(const Multivector &, const Multivector &);
  friend Multivector operator*(const Expr &, const Multivector &);
};

std::ostream &operator<<(std::ostream &os, const Multivector &m);

Multivector operator+(const Multivector &a, const Multivector &b);
Multivector operator-(const Multivector &a, const Multivector &b);
Multivector operator-(const Multivector &a);
Multivector operator*(const Multivector &a, const Multivector &b);
Multivector operator*(const Expr &s, const Multivector &m);
inline Multivector operator*(const Multivector &m, const Expr &s) {
  return s * m;
}
Multivector operator/(const Multivector &m, const Expr &s);

inline Multivector mul(const Multivector &a, const Multivector &b) {
  return a * b;
}

Multivector clifford_unit(std::size_t k, const MetricSpec &metric);

Multivector clifford_prime(const Multivector &m);
Multivector clifford_star(const Multivector &m);
Multivector clifford_bar(const Multivector &m);

// Scalar of m * bar(m), with every other blade checked to vanish.
Expr clifford_norm_squared(const Multivector &m);
Expr clifford_norm(const Multivector &m);
Multivector clifford_inverse(const Multivector &m);

Multivector lst_to_clifford(const std::vector<Expr> &v,
                            const std::vector<Multivector> &units);

// With `algebraic` the components come from the anticommutator with each
// unit; units of zero or non-numeric square switch to plain coefficient
// extraction.
std::vector<Expr> clifford_to_lst(const Multivector &m,
                                  const std::vector<Multivector> &units,
                                  bool algebraic = true);

Expr remove_dirac_ONE(const Multivector &m);

// normal() applied to every coefficient; vanishing terms are dropped.
Multivector normal(const Multivector &m);

} // namespace eph::cliff

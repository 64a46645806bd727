#pragma once
// Random multivectors and group elements over exact coefficients.

#include "eph/moebius/moebius.hpp"

#include "random_expr.hpp"

#include <random>

namespace eph::testing {

using cliff::Blade;
using cliff::MetricSpec;
using cliff::Multivector;
using moebius::CMat2;

inline MetricSpec signs_metric(const std::vector<int> &signs) {
  std::vector<Expr> d;
  for (int v : signs)
    d.emplace_back(v);
  return MetricSpec::diagonal(d);
}

inline Multivector random_mv(std::mt19937_64 &rng, const MetricSpec &m,
                             unsigned max_grade = 16) {
  Multivector::Terms t;
  const std::uint32_t count = 1u << m.dimension();
  std::bernoulli_distribution keep(0.7);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    if (Blade{mask}.grade() > max_grade || !keep(rng))
      continue;
    t.emplace(Blade{mask}, Expr(random_rational(rng)));
  }
  return Multivector(m, t);
}

// Pool of exact group elements: diagonal, unipotent, rotation with
// Pythagorean cos/sin, and the Cayley-type matrices.
class RandomMatrices {
public:
  RandomMatrices(std::mt19937_64 &rng, MetricSpec m, int sigma)
      : rng_(rng), m_(std::move(m)), sigma_(sigma) {}

  CMat2 generator() {
    const Multivector one = Multivector::one(m_);
    auto e0 = cliff::clifford_unit(0, m_), e1 = cliff::clifford_unit(1, m_);
    std::uniform_int_distribution<int> pick(0, 4);
    switch (pick(rng_)) {
    case 0: {
      sym::Rational s = random_nonzero_rational(rng_, 5, 3);
      if (s < 0)
        s = -s;
      return CMat2::scalars(m_, s, 0, 0, sym::Rational(1 / s));
    }
    case 1: {
      Expr s(random_rational(rng_));
      return CMat2(one, s * e0, Multivector(m_), one);
    }
    case 2: {
      sym::Rational q = random_rational(rng_, 5, 4);
      sym::Rational c = (1 - q * q) / (1 + q * q), s = 2 * q / (1 + q * q);
      return CMat2(Expr(c) * one, Expr(s) * e0, Expr(s) * e0, Expr(c) * one);
    }
    case 3:
      if (sigma_ == 0) {
        const Expr half = Expr(sym::make_rational(-1, 2));
        return CMat2(one, half * e1, half * e1, one);
      }
      return CMat2(one, -e1, Expr(sigma_) * e1, one);
    default:
      return CMat2(one, e0, e0, one);
    }
  }

  CMat2 element() {
    std::uniform_int_distribution<int> len(1, 3);
    CMat2 g = generator();
    for (int k = len(rng_) - 1; k > 0; --k)
      g = g * generator();
    return g;
  }

private:
  std::mt19937_64 &rng_;
  MetricSpec m_;
  int sigma_;
};

} // namespace eph::testing

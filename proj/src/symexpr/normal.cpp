#include "eph/symexpr/normal.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <unordered_map>

namespace eph::sym {

namespace {

struct Factor {
  Expr atom;
  Rational exp;
};

bool operator==(const Factor &a, const Factor &b) {
  return a.exp == b.exp && a.atom == b.atom;
}

// Sorted by atom; exponents nonzero; at most one exp() atom, with exponent 1.
using Monomial = std::vector<Factor>;

bool is_exp_atom(const Expr &a) {
  return a.kind() == Kind::Function && a.fn() == Fn::Exp;
}

bool is_composite_atom(const Expr &a) {
  return a.kind() == Kind::Sum || a.kind() == Kind::Product ||
         a.kind() == Kind::Power;
}

// Lexicographic monomial order: atoms in term order, larger exponent wins.
int mono_compare(const Monomial &a, const Monomial &b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size())
      c = 1;
    else if (j == b.size())
      c = -1;
    else
      c = compare(a[i].atom, b[j].atom);
    if (c == 0) {
      int e = cmp(a[i].exp, b[j].exp);
      if (e != 0)
        return e < 0 ? -1 : 1;
      ++i;
      ++j;
    } else if (c < 0) {
      // atom present only in a; b has exponent 0 there
      return a[i].exp > 0 ? 1 : -1;
    } else {
      return b[j].exp > 0 ? -1 : 1;
    }
  }
  return 0;
}

struct MonoLess {
  bool operator()(const Monomial &a, const Monomial &b) const {
    return mono_compare(a, b) < 0;
  }
};

using Poly = std::map<Monomial, Rational, MonoLess>;

struct Ctx {
  bool root_atoms = false;
};

struct RatFunc {
  Poly num;
  Poly den;
};

Expr normal_once(const Expr &e, Ctx &ctx);

Poly poly_constant(const Rational &c) {
  Poly p;
  if (c != 0)
    p.emplace(Monomial{}, c);
  return p;
}

bool poly_is_one(const Poly &p) {
  return p.size() == 1 && p.begin()->first.empty() && p.begin()->second == 1;
}

bool poly_has_exp(const Poly &p) {
  for (const auto &[m, c] : p)
    for (const auto &f : m)
      if (is_exp_atom(f.atom))
        return true;
  return false;
}

// Multiplies two monomials; returns the rational factor produced by folding
// constant atoms that reach an integer exponent.
std::pair<Rational, Monomial> mono_mul(const Monomial &a, const Monomial &b,
                                       Ctx &ctx) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size())
      c = 1;
    else if (j == b.size())
      c = -1;
    else
      c = compare(a[i].atom, b[j].atom);
    if (c == 0) {
      Rational e = a[i].exp + b[j].exp;
      if (e != 0)
        out.push_back({a[i].atom, e});
      ++i;
      ++j;
    } else if (c < 0) {
      out.push_back(a[i++]);
    } else {
      out.push_back(b[j++]);
    }
  }

  Rational coeff = 1;
  std::vector<Expr> exp_args;
  Monomial result;
  result.reserve(out.size());
  for (auto &f : out) {
    if (is_exp_atom(f.atom)) {
      exp_args.push_back(f.exp * f.atom.operands()[0]);
      continue;
    }
    if (f.atom.is_constant() && is_integer(f.exp)) {
      coeff *= pow(f.atom, f.exp).value();
      continue;
    }
    result.push_back(std::move(f));
  }
  if (!exp_args.empty()) {
    Expr arg = exp_args.size() == 1 ? exp_args.front()
                                    : Expr::sum(std::move(exp_args));
    Expr narg = normal_once(arg, ctx);
    Expr ex = exp(narg);
    if (ex.is_constant()) {
      coeff *= ex.value();
    } else {
      Factor ef{ex, Rational(1)};
      auto pos = std::lower_bound(
          result.begin(), result.end(), ef, [](const Factor &x, const Factor &y) {
            return compare(x.atom, y.atom) < 0;
          });
      result.insert(pos, std::move(ef));
    }
  }
  return {coeff, std::move(result)};
}

void poly_add_term(Poly &p, const Monomial &m, const Rational &c) {
  if (c == 0)
    return;
  auto [it, inserted] = p.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      p.erase(it);
  }
}

Poly poly_add(const Poly &a, const Poly &b, const Rational &scale = 1) {
  Poly r = a;
  for (const auto &[m, c] : b)
    poly_add_term(r, m, scale * c);
  return r;
}

Poly poly_scale(const Poly &a, const Rational &s) {
  if (s == 0)
    return {};
  Poly r;
  for (const auto &[m, c] : a)
    r.emplace_hint(r.end(), m, c * s);
  return r;
}

Poly poly_mul(const Poly &a, const Poly &b, Ctx &ctx) {
  if (a.empty() || b.empty())
    return {};
  if (poly_is_one(a))
    return b;
  if (poly_is_one(b))
    return a;
  Poly r;
  for (const auto &[ma, ca] : a)
    for (const auto &[mb, cb] : b) {
      auto [k, m] = mono_mul(ma, mb, ctx);
      poly_add_term(r, m, ca * cb * k);
    }
  return r;
}

Poly poly_mul_mono(const Poly &a, const Monomial &m, Ctx &ctx) {
  if (m.empty())
    return a;
  Poly r;
  for (const auto &[ma, ca] : a) {
    auto [k, mm] = mono_mul(ma, m, ctx);
    poly_add_term(r, mm, ca * k);
  }
  return r;
}

Poly poly_pow(const Poly &a, unsigned long k, Ctx &ctx) {
  Poly result = poly_constant(Rational(1));
  Poly base = a;
  while (k > 0) {
    if (k & 1u)
      result = poly_mul(result, base, ctx);
    k >>= 1u;
    if (k > 0)
      base = poly_mul(base, base, ctx);
  }
  return result;
}

Monomial mono_inverse(const Monomial &m, Ctx &ctx) {
  Monomial r;
  r.reserve(m.size());
  for (const auto &f : m) {
    if (is_exp_atom(f.atom)) {
      Expr ex = exp(normal_once(-f.atom.operands()[0], ctx));
      if (!ex.is_constant())
        r.push_back({ex, Rational(1)});
    } else {
      r.push_back({f.atom, -f.exp});
    }
  }
  std::sort(r.begin(), r.end(), [](const Factor &x, const Factor &y) {
    return compare(x.atom, y.atom) < 0;
  });
  return r;
}

// Largest monomial dividing every term (exponent-wise minimum, absent = 0),
// plus the exp() atom when every term carries the same one.
Monomial mono_content(const Poly &p) {
  std::map<Expr, Rational, ExprLess> mins;
  std::map<Expr, std::size_t, ExprLess> counts;
  std::optional<Expr> common_exp;
  bool exp_common = true;
  bool first = true;
  for (const auto &[m, c] : p) {
    std::optional<Expr> this_exp;
    for (const auto &f : m) {
      if (is_exp_atom(f.atom)) {
        this_exp = f.atom;
        continue;
      }
      auto [it, inserted] = mins.emplace(f.atom, f.exp);
      if (!inserted && f.exp < it->second)
        it->second = f.exp;
      ++counts[f.atom];
    }
    if (first)
      common_exp = this_exp;
    else if (!(this_exp && common_exp && *this_exp == *common_exp))
      exp_common = false;
    first = false;
  }
  Monomial g;
  for (auto &[a, e] : mins) {
    if (counts[a] < p.size() && e > 0)
      e = 0;
    if (e != 0)
      g.push_back({a, e});
  }
  if (common_exp && exp_common) {
    Factor ef{*common_exp, Rational(1)};
    auto pos = std::lower_bound(
        g.begin(), g.end(), ef, [](const Factor &x, const Factor &y) {
          return compare(x.atom, y.atom) < 0;
        });
    g.insert(pos, ef);
  }
  return g;
}

std::optional<Poly> poly_divide_exact(const Poly &n, const Poly &d, Ctx &ctx) {
  if (d.empty() || poly_has_exp(n) || poly_has_exp(d))
    return std::nullopt;
  const auto &[dm, dc] = *d.rbegin();
  for (const auto &f : dm)
    if (f.exp < 0)
      return std::nullopt;
  Poly q, r = n;
  std::size_t steps = 0;
  while (!r.empty()) {
    if (++steps > 4096)
      return std::nullopt;
    const auto &[rm, rc] = *r.rbegin();
    // does dm divide rm?
    Monomial t;
    std::size_t i = 0, j = 0;
    bool ok = true;
    while (i < rm.size() || j < dm.size()) {
      int c;
      if (i == rm.size())
        c = 1;
      else if (j == dm.size())
        c = -1;
      else
        c = compare(rm[i].atom, dm[j].atom);
      if (c == 0) {
        Rational e = rm[i].exp - dm[j].exp;
        if (e < 0) {
          ok = false;
          break;
        }
        if (e != 0)
          t.push_back({rm[i].atom, e});
        ++i;
        ++j;
      } else if (c < 0) {
        if (rm[i].exp < 0) {
          ok = false;
          break;
        }
        t.push_back(rm[i++]);
      } else {
        ok = false;
        break;
      }
    }
    if (!ok)
      return std::nullopt;
    Rational coeff = rc / dc;
    poly_add_term(q, t, coeff);
    Poly sub = poly_mul_mono(d, t, ctx);
    r = poly_add(r, sub, -coeff);
  }
  return q;
}

void cancel(RatFunc &f, Ctx &ctx) {
  if (f.num.empty()) {
    f.den = poly_constant(Rational(1));
    return;
  }
  if (f.den.empty())
    throw std::domain_error("division by zero");

  Monomial gn = mono_content(f.num);
  Monomial gd = mono_content(f.den);
  if (!gn.empty())
    f.num = poly_mul_mono(f.num, mono_inverse(gn, ctx), ctx);
  if (!gd.empty())
    f.den = poly_mul_mono(f.den, mono_inverse(gd, ctx), ctx);
  auto [k, ratio] = mono_mul(gn, mono_inverse(gd, ctx), ctx);
  Monomial up, down;
  for (const auto &fac : ratio) {
    if (is_exp_atom(fac.atom) || fac.exp > 0)
      up.push_back(fac);
    else
      down.push_back({fac.atom, -fac.exp});
  }
  f.num = poly_scale(poly_mul_mono(f.num, up, ctx), k);
  f.den = poly_mul_mono(f.den, down, ctx);

  Rational lc = f.den.rbegin()->second;
  if (lc != 1) {
    f.num = poly_scale(f.num, 1 / lc);
    f.den = poly_scale(f.den, 1 / lc);
  }
  if (poly_is_one(f.den))
    return;
  if (auto q = poly_divide_exact(f.num, f.den, ctx)) {
    f.num = std::move(*q);
    f.den = poly_constant(Rational(1));
    return;
  }
  if (f.num.size() > 1) {
    if (auto q = poly_divide_exact(f.den, f.num, ctx)) {
      Rational qlc = q->rbegin()->second;
      f.num = poly_constant(1 / qlc);
      f.den = poly_scale(*q, 1 / qlc);
    }
  }
}

RatFunc from_poly(Poly p) { return {std::move(p), poly_constant(Rational(1))}; }

RatFunc from_atom(const Expr &atom, const Rational &e, Ctx &ctx) {
  if (atom.is_constant() && is_integer(e))
    return from_poly(poly_constant(pow(atom, e).value()));
  if (is_exp_atom(atom) && e != 1) {
    Expr ex = exp(normal_once(e * atom.operands()[0], ctx));
    if (ex.is_constant())
      return from_poly(poly_constant(ex.value()));
    return from_atom(ex, Rational(1), ctx);
  }
  if (is_composite_atom(atom))
    ctx.root_atoms = true;
  Poly p;
  if (e < 0 && !is_exp_atom(atom)) {
    // negative fractional power: keep the atom positive in the denominator
    p.emplace(Monomial{{atom, -e}}, Rational(1));
    return {poly_constant(Rational(1)), std::move(p)};
  }
  p.emplace(Monomial{{atom, e}}, Rational(1));
  return from_poly(std::move(p));
}

RatFunc rf_mul(const RatFunc &a, const RatFunc &b, Ctx &ctx) {
  return {poly_mul(a.num, b.num, ctx), poly_mul(a.den, b.den, ctx)};
}

RatFunc rf_add(const RatFunc &a, const RatFunc &b, Ctx &ctx) {
  if (a.num.empty())
    return b;
  if (b.num.empty())
    return a;
  if (a.den == b.den)
    return {poly_add(a.num, b.num), a.den};
  if (poly_is_one(a.den))
    return {poly_add(poly_mul(a.num, b.den, ctx), b.num), b.den};
  if (poly_is_one(b.den))
    return {poly_add(a.num, poly_mul(b.num, a.den, ctx)), a.den};
  if (auto q = poly_divide_exact(b.den, a.den, ctx))
    return {poly_add(poly_mul(a.num, *q, ctx), b.num), b.den};
  if (auto q = poly_divide_exact(a.den, b.den, ctx))
    return {poly_add(a.num, poly_mul(b.num, *q, ctx)), a.den};
  return {poly_add(poly_mul(a.num, b.den, ctx), poly_mul(b.num, a.den, ctx)),
          poly_mul(a.den, b.den, ctx)};
}

class Converter {
public:
  explicit Converter(Ctx &ctx) : ctx_(ctx) {}

  RatFunc convert(const Expr &e) {
    auto it = memo_.find(e.node_ptr());
    if (it != memo_.end())
      return it->second;
    RatFunc r = convert_uncached(e);
    memo_.emplace(e.node_ptr(), r);
    keep_.push_back(e);
    return r;
  }

private:
  RatFunc convert_uncached(const Expr &e) {
    switch (e.kind()) {
    case Kind::Constant:
      return from_poly(poly_constant(e.value()));
    case Kind::Symbol:
      return from_atom(e, Rational(1), ctx_);
    case Kind::Function: {
      Expr arg = normal_once(e.operands()[0], ctx_);
      Expr f = Expr::function(e.fn(), arg);
      if (f.is_constant())
        return from_poly(poly_constant(f.value()));
      return from_atom(f, Rational(1), ctx_);
    }
    case Kind::Power: {
      const Rational &q = e.exponent();
      if (is_integer(q)) {
        RatFunc b = convert(e.base());
        unsigned long k = Rational(abs(q)).get_num().get_ui();
        RatFunc r{poly_pow(b.num, k, ctx_), poly_pow(b.den, k, ctx_)};
        if (q < 0) {
          if (r.num.empty())
            throw std::domain_error("division by zero");
          std::swap(r.num, r.den);
        }
        cancel(r, ctx_);
        return r;
      }
      Expr nb = normal_once(e.base(), ctx_);
      Expr p = pow(nb, q);
      if (p.kind() != Kind::Power)
        return convert(p);
      return from_atom(p.base(), p.exponent(), ctx_);
    }
    case Kind::Product: {
      RatFunc r = from_poly(poly_constant(e.value()));
      for (const auto &f : e.operands())
        r = rf_mul(r, convert(f), ctx_);
      cancel(r, ctx_);
      return r;
    }
    case Kind::Sum: {
      RatFunc r = from_poly(poly_constant(e.value()));
      for (const auto &t : e.operands())
        r = rf_add(r, convert(t), ctx_);
      cancel(r, ctx_);
      return r;
    }
    }
    return from_poly({});
  }

  Ctx &ctx_;
  std::unordered_map<const detail::Node *, RatFunc> memo_;
  std::vector<Expr> keep_;
};

Expr poly_to_expr(const Poly &p) {
  std::vector<Expr> terms;
  terms.reserve(p.size());
  for (const auto &[m, c] : p) {
    std::vector<Expr> factors;
    factors.reserve(m.size() + 1);
    factors.push_back(Expr(c));
    for (const auto &f : m)
      factors.push_back(pow(f.atom, f.exp));
    terms.push_back(Expr::product(std::move(factors)));
  }
  return Expr::sum(std::move(terms));
}

Expr normal_once(const Expr &e, Ctx &ctx) {
  if (e.kind() == Kind::Constant || e.kind() == Kind::Symbol)
    return e;
  Converter conv(ctx);
  RatFunc r = conv.convert(e);
  cancel(r, ctx);
  Expr num = poly_to_expr(r.num);
  if (poly_is_one(r.den))
    return num;
  return num * pow(poly_to_expr(r.den), Rational(-1));
}

} // namespace

Expr normal(const Expr &e) {
  Ctx ctx;
  Expr r = normal_once(e, ctx);
  for (int pass = 0; pass < 4 && ctx.root_atoms; ++pass) {
    ctx.root_atoms = false;
    Expr next = normal_once(r, ctx);
    if (next == r)
      break;
    r = std::move(next);
  }
  return r;
}

bool is_identically_zero(const Expr &e) { return normal(e).is_zero(); }

} // namespace eph::sym

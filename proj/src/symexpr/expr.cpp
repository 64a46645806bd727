#include "eph/symexpr/expr.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace eph::sym {

namespace detail {

struct Node {
  Kind kind = Kind::Constant;
  Fn fn = Fn::Sin;
  bool positive = false;
  std::size_t hash = 0;
  std::size_t count = 1;
  // One bit per symbol-name hash; a cheap negative answer for has().
  std::uint64_t symmask = 0;
  Rational value;
  std::string name;
  std::vector<Expr> ops;
};

} // namespace detail

using detail::Node;

struct ExprAccess {
  static const Node &node(const Expr &e) { return *e.node_; }
  static Expr wrap(std::shared_ptr<const Node> n) { return Expr(std::move(n)); }
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t hash_rational(const Rational &q) {
  std::size_t h = static_cast<std::size_t>(mpz_get_si(q.get_num_mpz_t()));
  return mix(h, static_cast<std::size_t>(mpz_get_si(q.get_den_mpz_t())));
}

std::uint64_t symbol_bit(std::string_view name) {
  return std::uint64_t{1} << (std::hash<std::string_view>{}(name) % 64);
}

const Node &N(const Expr &e) { return ExprAccess::node(e); }

void finish(Node &n) {
  std::size_t h = static_cast<std::size_t>(n.kind) * 1000003u;
  h = mix(h, static_cast<std::size_t>(n.fn));
  h = mix(h, hash_rational(n.value));
  if (!n.name.empty())
    h = mix(h, std::hash<std::string>{}(n.name));
  h = mix(h, n.positive ? 1u : 0u);
  n.count = 1;
  n.symmask = 0;
  for (const auto &op : n.ops) {
    h = mix(h, op.hash());
    n.count += op.node_count();
    n.symmask |= N(op).symmask;
  }
  if (n.kind == Kind::Symbol)
    n.symmask = symbol_bit(n.name);
  n.hash = h;
}

Expr make_node(Kind kind, Rational value, std::vector<Expr> ops,
               Fn fn = Fn::Sin) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->fn = fn;
  n->value = std::move(value);
  n->ops = std::move(ops);
  finish(*n);
  return ExprAccess::wrap(std::move(n));
}

Expr make_constant(const Rational &v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  n->value = v;
  finish(*n);
  return ExprAccess::wrap(std::move(n));
}

const Expr &zero_expr() {
  static const Expr z = make_constant(Rational(0));
  return z;
}

const Expr &one_expr() {
  static const Expr o = make_constant(Rational(1));
  return o;
}

Expr constant(const Rational &v) {
  if (v == 0)
    return zero_expr();
  if (v == 1)
    return one_expr();
  return make_constant(v);
}

int cmp_rational(const Rational &a, const Rational &b) {
  int c = cmp(a, b);
  return (c > 0) - (c < 0);
}

// Product with coefficient 1 built from already canonical, sorted factors.
Expr raw_product(const Rational &coeff, std::vector<Expr> factors) {
  return make_node(Kind::Product, coeff, std::move(factors));
}

// Splits a non-constant, non-sum term into (numeric coefficient, rest).
std::pair<Rational, Expr> split_coeff(const Expr &t) {
  const Node &n = N(t);
  if (n.kind == Kind::Product && n.value != 1) {
    if (n.ops.size() == 1)
      return {n.value, n.ops.front()};
    return {n.value, raw_product(Rational(1), n.ops)};
  }
  return {Rational(1), t};
}

Expr scale_term(const Expr &rest, const Rational &c) {
  if (c == 1)
    return rest;
  const Node &n = N(rest);
  if (n.kind == Kind::Product)
    return raw_product(c * n.value, n.ops);
  return raw_product(c, {rest});
}

Rational rational_pow(const Rational &base, long e) {
  if (base == 0 && e < 0)
    throw std::domain_error("division by zero");
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), k);
  Rational r = e < 0 ? Rational(den, num) : Rational(num, den);
  r.canonicalize();
  return r;
}

} // namespace

std::optional<Rational> exact_root(const Rational &value, unsigned long q) {
  if (value < 0)
    return std::nullopt;
  if (q == 1)
    return value;
  mpz_class num, den;
  bool exact_num =
      mpz_root(num.get_mpz_t(), value.get_num_mpz_t(), q) != 0;
  bool exact_den =
      mpz_root(den.get_mpz_t(), value.get_den_mpz_t(), q) != 0;
  if (!exact_num || !exact_den)
    return std::nullopt;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string_view fn_name(Fn fn) {
  switch (fn) {
  case Fn::Sin:
    return "sin";
  case Fn::Cos:
    return "cos";
  case Fn::Exp:
    return "exp";
  case Fn::Cosh:
    return "cosh";
  case Fn::Sinh:
    return "sinh";
  }
  return "?";
}

Expr::Expr() : Expr(zero_expr()) {}
Expr::Expr(long value) : Expr(constant(Rational(value))) {}
Expr::Expr(const Rational &value) : Expr(constant(value)) {}

Expr Expr::symbol(std::string name, bool positive) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Symbol;
  n->name = std::move(name);
  n->positive = positive;
  finish(*n);
  return Expr(std::move(n));
}

Kind Expr::kind() const { return node_->kind; }
bool Expr::is_zero() const {
  return node_->kind == Kind::Constant && node_->value == 0;
}
bool Expr::is_one() const {
  return node_->kind == Kind::Constant && node_->value == 1;
}
const Rational &Expr::value() const { return node_->value; }
const std::string &Expr::name() const { return node_->name; }
bool Expr::is_positive_symbol() const {
  return node_->kind == Kind::Symbol && node_->positive;
}
Fn Expr::fn() const { return node_->fn; }
const std::vector<Expr> &Expr::operands() const { return node_->ops; }
std::size_t Expr::hash() const { return node_->hash; }
std::size_t Expr::node_count() const { return node_->count; }

bool Expr::has(std::string_view symbol_name) const {
  if ((node_->symmask & symbol_bit(symbol_name)) == 0)
    return false;
  if (node_->kind == Kind::Symbol)
    return node_->name == symbol_name;
  return std::any_of(node_->ops.begin(), node_->ops.end(),
                     [&](const Expr &op) { return op.has(symbol_name); });
}

void Expr::collect_symbols(std::set<std::string> &out) const {
  if (node_->kind == Kind::Symbol) {
    out.insert(node_->name);
    return;
  }
  for (const auto &op : node_->ops)
    op.collect_symbols(out);
}

int compare(const Expr &a, const Expr &b) {
  const Node &x = N(a);
  const Node &y = N(b);
  if (&x == &y)
    return 0;
  if (x.kind != y.kind)
    return x.kind < y.kind ? -1 : 1;
  switch (x.kind) {
  case Kind::Constant:
    return cmp_rational(x.value, y.value);
  case Kind::Symbol:
    if (int c = x.name.compare(y.name); c != 0)
      return c < 0 ? -1 : 1;
    return static_cast<int>(x.positive) - static_cast<int>(y.positive);
  case Kind::Function:
    if (x.fn != y.fn)
      return x.fn < y.fn ? -1 : 1;
    return compare(x.ops[0], y.ops[0]);
  case Kind::Power:
    if (int c = compare(x.ops[0], y.ops[0]); c != 0)
      return c;
    return cmp_rational(x.value, y.value);
  case Kind::Product:
  case Kind::Sum: {
    std::size_t n = std::min(x.ops.size(), y.ops.size());
    for (std::size_t i = 0; i < n; ++i)
      if (int c = compare(x.ops[i], y.ops[i]); c != 0)
        return c;
    if (x.ops.size() != y.ops.size())
      return x.ops.size() < y.ops.size() ? -1 : 1;
    return cmp_rational(x.value, y.value);
  }
  }
  return 0;
}

bool operator==(const Expr &a, const Expr &b) {
  if (a.node_ == b.node_)
    return true;
  if (a.node_->hash != b.node_->hash)
    return false;
  return compare(a, b) == 0;
}

Expr Expr::function(Fn fn, const Expr &arg) {
  if (arg.is_zero()) {
    switch (fn) {
    case Fn::Sin:
    case Fn::Sinh:
      return zero_expr();
    case Fn::Cos:
    case Fn::Cosh:
    case Fn::Exp:
      return one_expr();
    }
  }
  return make_node(Kind::Function, Rational(0), {arg}, fn);
}

namespace {
// x or x^p with x a symbol declared positive
bool positive_base(const Expr &f) {
  const Node &n = N(f);
  if (n.kind == Kind::Power)
    return N(n.ops[0]).positive;
  return n.positive;
}
} // namespace

Expr Expr::power(const Expr &base, const Rational &e) {
  if (e == 0)
    return one_expr();
  if (e == 1)
    return base;
  const Node &b = N(base);
  const bool integral = is_integer(e);
  switch (b.kind) {
  case Kind::Constant: {
    if (integral) {
      auto k = to_small_int(e);
      if (!k)
        throw std::overflow_error("integer exponent too large");
      return constant(rational_pow(b.value, *k));
    }
    if (b.value == 0) {
      if (e < 0)
        throw std::domain_error("division by zero");
      return zero_expr();
    }
    if (b.value > 0 && e.get_den().fits_ulong_p()) {
      if (auto root = exact_root(b.value, e.get_den().get_ui())) {
        auto p = to_small_int(Rational(e.get_num()));
        if (p)
          return constant(rational_pow(*root, *p));
      }
    }
    return make_node(Kind::Power, e, {base});
  }
  case Kind::Power:
    if (integral || N(b.ops[0]).positive)
      return power(b.ops[0], b.value * e);
    return make_node(Kind::Power, e, {base});
  case Kind::Product:
    if (integral || (b.value > 0 && std::all_of(b.ops.begin(), b.ops.end(),
                                                positive_base))) {
      std::vector<Expr> factors;
      factors.reserve(b.ops.size() + 1);
      factors.push_back(power(constant(b.value), e));
      for (const auto &f : b.ops)
        factors.push_back(power(f, e));
      return product(std::move(factors));
    }
    return make_node(Kind::Power, e, {base});
  default:
    return make_node(Kind::Power, e, {base});
  }
}

Expr Expr::sum(std::vector<Expr> terms) {
  Rational constant_part = 0;
  std::vector<std::pair<Expr, Rational>> parts;
  std::function<void(const Expr &, const Rational &)> add =
      [&](const Expr &t, const Rational &scale) {
        const Node &n = N(t);
        switch (n.kind) {
        case Kind::Constant:
          constant_part += scale * n.value;
          break;
        case Kind::Sum:
          constant_part += scale * n.value;
          for (const auto &op : n.ops)
            add(op, scale);
          break;
        default: {
          auto [c, rest] = split_coeff(t);
          parts.emplace_back(std::move(rest), scale * c);
        }
        }
      };
  for (const auto &t : terms)
    add(t, Rational(1));

  std::sort(parts.begin(), parts.end(), [](const auto &a, const auto &b) {
    return compare(a.first, b.first) < 0;
  });
  std::vector<Expr> out;
  for (std::size_t i = 0; i < parts.size();) {
    Rational c = parts[i].second;
    std::size_t j = i + 1;
    while (j < parts.size() && parts[j].first == parts[i].first)
      c += parts[j++].second;
    if (c != 0)
      out.push_back(scale_term(parts[i].first, c));
    i = j;
  }
  if (out.empty())
    return constant(constant_part);
  if (out.size() == 1 && constant_part == 0)
    return out.front();
  return make_node(Kind::Sum, constant_part, std::move(out));
}

Expr Expr::product(std::vector<Expr> factors) {
  Rational coeff = 1;
  std::vector<std::pair<Expr, Rational>> parts;
  std::function<void(const Expr &)> add = [&](const Expr &f) {
    const Node &n = N(f);
    switch (n.kind) {
    case Kind::Constant:
      coeff *= n.value;
      break;
    case Kind::Product:
      coeff *= n.value;
      for (const auto &op : n.ops)
        add(op);
      break;
    case Kind::Power:
      parts.emplace_back(n.ops[0], n.value);
      break;
    default:
      parts.emplace_back(f, Rational(1));
    }
  };
  for (const auto &f : factors)
    add(f);
  if (coeff == 0)
    return zero_expr();

  std::sort(parts.begin(), parts.end(), [](const auto &a, const auto &b) {
    return compare(a.first, b.first) < 0;
  });
  std::vector<Expr> out;
  std::vector<Expr> composite;
  for (std::size_t i = 0; i < parts.size();) {
    Rational e = parts[i].second;
    std::size_t j = i + 1;
    while (j < parts.size() && parts[j].first == parts[i].first)
      e += parts[j++].second;
    if (e != 0) {
      Expr p = power(parts[i].first, e);
      switch (p.kind()) {
      case Kind::Constant:
        coeff *= p.value();
        break;
      case Kind::Product:
        composite.push_back(std::move(p));
        break;
      default:
        out.push_back(std::move(p));
      }
    }
    i = j;
  }
  if (coeff == 0)
    return zero_expr();
  if (!composite.empty()) {
    // A merged power expanded into a product; re-canonicalize once.
    composite.insert(composite.end(), out.begin(), out.end());
    composite.push_back(constant(coeff));
    return product(std::move(composite));
  }
  if (out.empty())
    return constant(coeff);
  std::sort(out.begin(), out.end(), ExprLess{});
  if (out.size() == 1) {
    if (coeff == 1)
      return out.front();
    if (out.front().kind() == Kind::Sum) {
      const Node &s = N(out.front());
      std::vector<Expr> terms;
      terms.reserve(s.ops.size() + 1);
      terms.push_back(constant(coeff * s.value));
      for (const auto &t : s.ops)
        terms.push_back(product({constant(coeff), t}));
      return sum(std::move(terms));
    }
  }
  return make_node(Kind::Product, coeff, std::move(out));
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Precedence levels: 0 = free standing, 1 = factor of a product,
// 2 = base of a power.
void print(std::ostream &os, const Expr &e, int prec);

void print_rational(std::ostream &os, const Rational &q, int prec) {
  bool wrap = prec >= 1 && (q < 0 || !is_integer(q));
  if (wrap)
    os << '(';
  os << q.get_str();
  if (wrap)
    os << ')';
}

void print_product_body(std::ostream &os, const Node &n, bool drop_sign) {
  Rational c = drop_sign ? Rational(abs(n.value)) : n.value;
  bool first = true;
  if (c == -1) {
    os << '-';
  } else if (c != 1) {
    print_rational(os, c, 1);
    first = false;
  }
  for (const auto &f : n.ops) {
    if (!first)
      os << '*';
    print(os, f, 1);
    first = false;
  }
}

void print(std::ostream &os, const Expr &e, int prec) {
  const Node &n = N(e);
  switch (n.kind) {
  case Kind::Constant:
    print_rational(os, n.value, prec);
    return;
  case Kind::Symbol:
    os << n.name;
    return;
  case Kind::Function:
    os << fn_name(n.fn) << '(';
    print(os, n.ops[0], 0);
    os << ')';
    return;
  case Kind::Power:
    print(os, n.ops[0], 2);
    os << '^';
    if (is_integer(n.value) && n.value > 0)
      os << n.value.get_str();
    else
      os << '(' << n.value.get_str() << ')';
    return;
  case Kind::Product: {
    bool wrap = prec >= 2 || (prec >= 1 && n.value < 0);
    if (wrap)
      os << '(';
    print_product_body(os, n, false);
    if (wrap)
      os << ')';
    return;
  }
  case Kind::Sum: {
    bool wrap = prec >= 1;
    if (wrap)
      os << '(';
    bool first = true;
    for (const auto &t : n.ops) {
      const Node &tn = N(t);
      bool negative = tn.kind == Kind::Product && tn.value < 0;
      if (!first)
        os << (negative ? " - " : " + ");
      else if (negative)
        os << '-';
      if (negative)
        print_product_body(os, tn, true);
      else
        print(os, t, 0);
      first = false;
    }
    if (n.value != 0) {
      os << (n.value < 0 ? " - " : " + ");
      print_rational(os, abs(n.value), 0);
    }
    if (wrap)
      os << ')';
    return;
  }
  }
}

} // namespace

std::string Expr::str() const {
  std::ostringstream os;
  print(os, *this, 0);
  return os.str();
}

std::ostream &operator<<(std::ostream &os, const Expr &e) {
  print(os, e, 0);
  return os;
}

// ---------------------------------------------------------------------------
// Arithmetic

Expr operator+(const Expr &a, const Expr &b) { return Expr::sum({a, b}); }
Expr operator-(const Expr &a, const Expr &b) {
  return Expr::sum({a, Expr::product({Expr(-1), b})});
}
Expr operator*(const Expr &a, const Expr &b) { return Expr::product({a, b}); }
Expr operator/(const Expr &a, const Expr &b) {
  return Expr::product({a, Expr::power(b, Rational(-1))});
}
Expr operator-(const Expr &a) { return Expr::product({Expr(-1), a}); }

Expr pow(const Expr &base, const Rational &exponent) {
  return Expr::power(base, exponent);
}
Expr sqrt(const Expr &e) { return Expr::power(e, make_rational(1, 2)); }
Expr sin(const Expr &e) { return Expr::function(Fn::Sin, e); }
Expr cos(const Expr &e) { return Expr::function(Fn::Cos, e); }
Expr exp(const Expr &e) { return Expr::function(Fn::Exp, e); }
Expr cosh(const Expr &e) { return Expr::function(Fn::Cosh, e); }
Expr sinh(const Expr &e) { return Expr::function(Fn::Sinh, e); }

// ---------------------------------------------------------------------------
// Binding / NumericEnv

Binding::Binding(std::initializer_list<std::pair<Expr, Expr>> pairs) {
  for (const auto &[s, v] : pairs)
    bind(s, v);
}

void Binding::bind(const Expr &symbol, const Expr &value) {
  if (!symbol.is_symbol())
    throw std::invalid_argument("binding target is not a symbol: " +
                                symbol.str());
  bind(symbol.name(), value);
}

void Binding::bind(const std::string &name, const Expr &value) {
  if (!values_.emplace(name, value).second)
    throw std::invalid_argument("symbol '" + name + "' bound twice");
}

const Expr *Binding::find(const std::string &name) const {
  auto it = values_.find(name);
  return it == values_.end() ? nullptr : &it->second;
}

const Expr &Binding::at(const std::string &name) const {
  auto it = values_.find(name);
  if (it == values_.end())
    throw std::out_of_range("symbol '" + name + "' not bound");
  return it->second;
}

NumericEnv::NumericEnv(
    std::initializer_list<std::pair<std::string, double>> values) {
  for (const auto &[k, v] : values)
    set(k, v);
}

void NumericEnv::set(const std::string &name, double value) {
  for (auto &[k, v] : values_) {
    if (k == name) {
      v = value;
      return;
    }
  }
  values_.emplace_back(name, value);
}

const double *NumericEnv::find(std::string_view name) const {
  for (const auto &[k, v] : values_)
    if (k == name)
      return &v;
  return nullptr;
}

// ---------------------------------------------------------------------------
// diff / subs / evalf

namespace {

Expr diff_once(const Expr &e, const std::string &s) {
  const Node &n = N(e);
  if (!e.has(s))
    return Expr(0);
  switch (n.kind) {
  case Kind::Constant:
    return Expr(0);
  case Kind::Symbol:
    return Expr(n.name == s ? 1 : 0);
  case Kind::Function: {
    const Expr &a = n.ops[0];
    Expr da = diff_once(a, s);
    switch (n.fn) {
    case Fn::Sin:
      return cos(a) * da;
    case Fn::Cos:
      return -sin(a) * da;
    case Fn::Exp:
      return e * da;
    case Fn::Cosh:
      return sinh(a) * da;
    case Fn::Sinh:
      return cosh(a) * da;
    }
    return Expr(0);
  }
  case Kind::Power: {
    const Expr &b = n.ops[0];
    return Expr::product(
        {Expr(n.value), Expr::power(b, n.value - 1), diff_once(b, s)});
  }
  case Kind::Product: {
    std::vector<Expr> terms;
    for (std::size_t i = 0; i < n.ops.size(); ++i) {
      if (!n.ops[i].has(s))
        continue;
      std::vector<Expr> factors;
      factors.reserve(n.ops.size() + 1);
      factors.push_back(Expr(n.value));
      for (std::size_t j = 0; j < n.ops.size(); ++j)
        factors.push_back(j == i ? diff_once(n.ops[j], s) : n.ops[j]);
      terms.push_back(Expr::product(std::move(factors)));
    }
    return Expr::sum(std::move(terms));
  }
  case Kind::Sum: {
    std::vector<Expr> terms;
    terms.reserve(n.ops.size());
    for (const auto &t : n.ops)
      terms.push_back(diff_once(t, s));
    return Expr::sum(std::move(terms));
  }
  }
  return Expr(0);
}

Expr subs_rec(const Expr &e, const Binding &b, std::uint64_t mask) {
  const Node &n = N(e);
  if ((n.symmask & mask) == 0)
    return e;
  switch (n.kind) {
  case Kind::Constant:
    return e;
  case Kind::Symbol: {
    const Expr *v = b.find(n.name);
    return v ? *v : e;
  }
  case Kind::Function:
    return Expr::function(n.fn, subs_rec(n.ops[0], b, mask));
  case Kind::Power:
    return Expr::power(subs_rec(n.ops[0], b, mask), n.value);
  case Kind::Product: {
    std::vector<Expr> f;
    f.reserve(n.ops.size() + 1);
    f.push_back(Expr(n.value));
    for (const auto &op : n.ops)
      f.push_back(subs_rec(op, b, mask));
    return Expr::product(std::move(f));
  }
  case Kind::Sum: {
    std::vector<Expr> t;
    t.reserve(n.ops.size() + 1);
    t.push_back(Expr(n.value));
    for (const auto &op : n.ops)
      t.push_back(subs_rec(op, b, mask));
    return Expr::sum(std::move(t));
  }
  }
  return e;
}

double rational_to_double(const Rational &q) {
  constexpr double limit = 9007199254740992.0; // 2^53
  const mpz_class &num = q.get_num();
  const mpz_class &den = q.get_den();
  if (num.fits_slong_p() && den.fits_slong_p()) {
    double nd = static_cast<double>(num.get_si());
    double dd = static_cast<double>(den.get_si());
    if (std::abs(nd) <= limit && dd <= limit)
      return nd / dd;
  }
  return q.get_d();
}

template <typename Lookup> double eval_rec(const Expr &e, const Lookup &look) {
  const Node &n = N(e);
  switch (n.kind) {
  case Kind::Constant:
    return rational_to_double(n.value);
  case Kind::Symbol:
    return look(n.name);
  case Kind::Function: {
    double a = eval_rec(n.ops[0], look);
    switch (n.fn) {
    case Fn::Sin:
      return std::sin(a);
    case Fn::Cos:
      return std::cos(a);
    case Fn::Exp:
      return std::exp(a);
    case Fn::Cosh:
      return std::cosh(a);
    case Fn::Sinh:
      return std::sinh(a);
    }
    return 0.0;
  }
  case Kind::Power: {
    double b = eval_rec(n.ops[0], look);
    if (n.value == -1)
      return 1.0 / b;
    if (n.value == 2)
      return b * b;
    return std::pow(b, rational_to_double(n.value));
  }
  case Kind::Product: {
    double r = rational_to_double(n.value);
    for (const auto &op : n.ops)
      r *= eval_rec(op, look);
    return r;
  }
  case Kind::Sum: {
    double r = rational_to_double(n.value);
    for (const auto &op : n.ops)
      r += eval_rec(op, look);
    return r;
  }
  }
  return 0.0;
}

} // namespace

Expr diff(const Expr &e, const Expr &symbol, unsigned order) {
  if (!symbol.is_symbol())
    throw std::invalid_argument("diff: not a symbol: " + symbol.str());
  return diff(e, symbol.name(), order);
}

Expr diff(const Expr &e, std::string_view symbol_name, unsigned order) {
  if (order == 0)
    throw std::invalid_argument("diff: order must be positive");
  std::string s(symbol_name);
  Expr r = e;
  for (unsigned i = 0; i < order; ++i)
    r = diff_once(r, s);
  return r;
}

Expr subs(const Expr &e, const Binding &binding) {
  if (binding.empty())
    return e;
  std::uint64_t mask = 0;
  for (const auto &[name, value] : binding)
    mask |= symbol_bit(name);
  return subs_rec(e, binding, mask);
}

double evalf(const Expr &e) {
  return eval_rec(e, [](const std::string &name) -> double {
    throw FreeSymbolError(name);
  });
}

double evalf(const Expr &e, const NumericEnv &env) {
  return eval_rec(e, [&](const std::string &name) -> double {
    if (const double *v = env.find(name))
      return *v;
    throw FreeSymbolError(name);
  });
}

} // namespace eph::sym

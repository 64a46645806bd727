#include "eph/cliffalg/multivector.hpp"

#include "metric_data.hpp"

#include "eph/symexpr/normal.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace eph::cliff {

namespace {

void require_same(const MetricSpec &a, const MetricSpec &b, const char *op) {
  if (a != b)
    throw MetricMismatch(std::string(op) + ": operands over different metrics");
}

int reversal_sign(unsigned g) { return (g * (g - 1) / 2) % 2 ? -1 : 1; }
int grade_sign(unsigned g) { return g % 2 ? -1 : 1; }

Multivector from_sums(const MetricSpec &metric,
                      std::map<Blade, std::vector<Expr>, BladeLess> &parts) {
  Multivector::Terms terms;
  for (auto &[blade, list] : parts) {
    Expr c = list.size() == 1 ? list.front() : Expr::sum(std::move(list));
    if (!c.is_zero())
      terms.emplace(blade, std::move(c));
  }
  return Multivector(metric, std::move(terms));
}

bool known_positive(const Expr &e) {
  using sym::Fn;
  using sym::Kind;
  switch (e.kind()) {
  case Kind::Constant:
    return e.value() > 0;
  case Kind::Symbol:
    return e.is_positive_symbol();
  case Kind::Function:
    return e.fn() == Fn::Exp || e.fn() == Fn::Cosh;
  case Kind::Power:
    return known_positive(e.base());
  case Kind::Product:
    return e.value() > 0 &&
           std::all_of(e.operands().begin(), e.operands().end(), known_positive);
  case Kind::Sum:
    return e.value() >= 0 &&
           std::all_of(e.operands().begin(), e.operands().end(), known_positive);
  }
  return false;
}

} // namespace

Blade Blade::of(std::initializer_list<unsigned> indices) {
  Blade b;
  unsigned last = 0;
  bool first = true;
  for (unsigned i : indices) {
    if (i >= MetricSpec::max_dimension || (!first && i <= last))
      throw std::invalid_argument("Blade: indices must increase and be < 16");
    b.mask |= 1u << i;
    last = i;
    first = false;
  }
  return b;
}

unsigned Blade::grade() const { return std::popcount(mask); }

std::vector<unsigned> Blade::indices() const {
  std::vector<unsigned> out;
  for (std::uint32_t r = mask; r; r &= r - 1)
    out.push_back(std::countr_zero(r));
  return out;
}

std::string Blade::str() const {
  if (mask == 0)
    return "ONE";
  std::string s;
  for (unsigned i : indices())
    s += "e" + std::to_string(i);
  return s;
}

bool BladeLess::operator()(Blade a, Blade b) const {
  const unsigned ga = a.grade(), gb = b.grade();
  if (ga != gb)
    return ga < gb;
  if (a.mask == b.mask)
    return false;
  // the smaller list owns the lowest index where the two differ
  const std::uint32_t diff = a.mask ^ b.mask;
  return (a.mask & diff & (~diff + 1)) != 0;
}

Multivector::Multivector(MetricSpec metric) : metric_(std::move(metric)) {}

Multivector::Multivector(MetricSpec metric, Terms terms)
    : metric_(std::move(metric)) {
  const std::uint32_t limit = metric_.dimension() >= 32
                                  ? ~0u
                                  : (1u << metric_.dimension()) - 1;
  for (auto &[b, c] : terms) {
    if (b.mask & ~limit)
      throw IndexOutOfRange("Multivector: blade " + b.str() +
                            " outside the metric dimension");
    if (!c.is_zero())
      terms_.emplace(b, c);
  }
}

Multivector Multivector::scalar(MetricSpec metric, const Expr &value) {
  Multivector m(std::move(metric));
  m.add_term(Blade{}, value);
  return m;
}

bool Multivector::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.mask == 0);
}

Expr Multivector::coefficient(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Expr(0) : it->second;
}

Multivector Multivector::grade_part(unsigned g) const {
  Multivector out(metric_);
  for (const auto &[b, c] : terms_)
    if (b.grade() == g)
      out.terms_.emplace(b, c);
  return out;
}

Multivector Multivector::map_coefficients(
    const std::function<Expr(const Expr &)> &f) const {
  Multivector out(metric_);
  for (const auto &[b, c] : terms_)
    out.add_term(b, f(c));
  return out;
}

void Multivector::add_term(Blade b, const Expr &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    Expr sum = it->second + c;
    if (sum.is_zero())
      terms_.erase(it);
    else
      it->second = std::move(sum);
  }
}

std::string Multivector::str() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[b, c] : terms_) {
    if (!first)
      out += " + ";
    first = false;
    if (b.mask == 0) {
      out += c.str();
      continue;
    }
    if (c.is_one()) {
      out += b.str();
      continue;
    }
    std::string cs = c.str();
    if (c.kind() == sym::Kind::Sum)
      cs = "(" + cs + ")";
    out += cs + " * " + b.str();
  }
  return out;
}

bool operator==(const Multivector &a, const Multivector &b) {
  return a.metric_ == b.metric_ && a.terms_.size() == b.terms_.size() &&
         std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                    [](const auto &x, const auto &y) {
                      return x.first == y.first && x.second == y.second;
                    });
}

std::ostream &operator<<(std::ostream &os, const Multivector &m) {
  return os << m.str();
}

Multivector operator+(const Multivector &a, const Multivector &b) {
  require_same(a.metric(), b.metric(), "add");
  Multivector out = a;
  for (const auto &[bl, c] : b.terms())
    out.add_term(bl, c);
  return out;
}

Multivector operator-(const Multivector &a) {
  return a.map_coefficients([](const Expr &c) { return -c; });
}

Multivector operator-(const Multivector &a, const Multivector &b) {
  return a + (-b);
}

Multivector operator*(const Expr &s, const Multivector &m) {
  if (s.is_zero())
    return Multivector(m.metric());
  return m.map_coefficients([&](const Expr &c) { return s * c; });
}

Multivector operator/(const Multivector &m, const Expr &s) {
  return (Expr(1) / s) * m;
}

Multivector operator*(const Multivector &a, const Multivector &b) {
  require_same(a.metric(), b.metric(), "mul");
  const auto &data = a.metric().data();
  std::map<Blade, std::vector<Expr>, BladeLess> parts;
  for (const auto &[ba, ca] : a.terms())
    for (const auto &[bb, cb] : b.terms()) {
      const Expr cab = ca * cb;
      for (const auto &[mask, c] : data.blade_product(ba.mask, bb.mask))
        parts[Blade{mask}].push_back(c.is_one() ? cab : cab * c);
    }
  return from_sums(a.metric(), parts);
}

Multivector clifford_unit(std::size_t k, const MetricSpec &metric) {
  if (k >= metric.dimension())
    throw IndexOutOfRange("clifford_unit: index " + std::to_string(k) +
                          " outside dimension " +
                          std::to_string(metric.dimension()));
  return Multivector(metric, {{Blade{1u << k}, Expr(1)}});
}

Multivector clifford_prime(const Multivector &m) {
  Multivector::Terms t;
  for (const auto &[b, c] : m.terms())
    t.emplace(b, grade_sign(b.grade()) < 0 ? -c : c);
  return Multivector(m.metric(), std::move(t));
}

Multivector clifford_star(const Multivector &m) {
  if (m.metric().is_anticommuting()) {
    Multivector::Terms t;
    for (const auto &[b, c] : m.terms())
      t.emplace(b, reversal_sign(b.grade()) < 0 ? -c : c);
    return Multivector(m.metric(), std::move(t));
  }
  const auto &data = m.metric().data();
  std::map<Blade, std::vector<Expr>, BladeLess> parts;
  for (const auto &[b, c] : m.terms()) {
    std::vector<unsigned char> word;
    for (unsigned i : b.indices())
      word.push_back(static_cast<unsigned char>(i));
    std::reverse(word.begin(), word.end());
    for (const auto &[mask, k] : data.canonicalize(std::move(word)))
      parts[Blade{mask}].push_back(c * k);
  }
  return from_sums(m.metric(), parts);
}

Multivector clifford_bar(const Multivector &m) {
  return clifford_prime(clifford_star(m));
}

Expr clifford_norm_squared(const Multivector &m) {
  const Multivector p = m * clifford_bar(m);
  for (const auto &[b, c] : p.terms())
    if (b.mask != 0 && !sym::is_identically_zero(c))
      throw NonScalarSquare("clifford_norm: m * bar(m) has a " + b.str() +
                            " component");
  return sym::normal(p.scalar_part());
}

Expr clifford_norm(const Multivector &m) {
  const Expr n2 = clifford_norm_squared(m);
  if (n2.is_constant()) {
    if (n2.value() < 0)
      throw NegativeNormSquare("clifford_norm: norm squared is " + n2.str());
    return sym::sqrt(n2);
  }
  if (!known_positive(n2))
    throw NegativeNormSquare("clifford_norm: cannot show " + n2.str() +
                             " is nonnegative");
  return sym::sqrt(n2);
}

Multivector clifford_inverse(const Multivector &m) {
  const Expr n2 = clifford_norm_squared(m);
  if (n2.is_zero())
    throw ZeroNorm("clifford_inverse: " + m.str() + " has zero norm");
  return clifford_bar(m) / n2;
}

Multivector lst_to_clifford(const std::vector<Expr> &v,
                            const std::vector<Multivector> &units) {
  if (v.size() != units.size())
    throw LengthMismatch("lst_to_clifford: " + std::to_string(v.size()) +
                         " components for " + std::to_string(units.size()) +
                         " units");
  if (units.empty())
    throw LengthMismatch("lst_to_clifford: no units");
  Multivector out(units.front().metric());
  for (std::size_t k = 0; k < v.size(); ++k) {
    require_same(out.metric(), units[k].metric(), "lst_to_clifford");
    out = out + v[k] * units[k];
  }
  return out;
}

std::vector<Expr> clifford_to_lst(const Multivector &m,
                                  const std::vector<Multivector> &units,
                                  bool algebraic) {
  for (const auto &u : units)
    require_same(m.metric(), u.metric(), "clifford_to_lst");

  std::vector<Expr> squares;
  if (algebraic && m.metric().is_anticommuting()) {
    for (const auto &u : units) {
      const Multivector sq = u * u;
      if (!sq.is_scalar() || !sq.scalar_part().is_constant() ||
          sq.scalar_part().is_zero()) {
        squares.clear();
        break;
      }
      squares.push_back(sq.scalar_part());
    }
  }

  std::vector<Expr> v;
  v.reserve(units.size());
  if (squares.size() == units.size() && !units.empty()) {
    for (std::size_t k = 0; k < units.size(); ++k) {
      const Multivector ac = m * units[k] + units[k] * m;
      v.push_back(ac.scalar_part() / (Expr(2) * squares[k]));
    }
  } else {
    for (const auto &u : units) {
      if (u.terms().size() != 1 || u.terms().begin()->first.grade() != 1)
        throw std::invalid_argument("clifford_to_lst: unit " + u.str() +
                                    " is not a single generator");
      const auto &[blade, c] = *u.terms().begin();
      v.push_back(m.coefficient(blade) / c);
    }
  }

  const Multivector residual = m - lst_to_clifford(v, units);
  for (const auto &[b, c] : residual.terms())
    if (!sym::is_identically_zero(c))
      throw NotAVector("clifford_to_lst: " + b.str() +
                       " component remains after extraction");
  return v;
}

Expr remove_dirac_ONE(const Multivector &m) {
  for (const auto &[b, c] : m.terms())
    if (b.mask != 0 && !sym::is_identically_zero(c))
      throw NotScalar("remove_dirac_ONE: " + m.str() + " is not a scalar");
  return m.scalar_part();
}

Multivector normal(const Multivector &m) {
  return m.map_coefficients([](const Expr &c) { return sym::normal(c); });
}

} // namespace eph::cliff

#pragma once

#include "eph/symexpr/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eph::sym {

// Node kinds, listed in term order: constants sort before symbols, symbols
// before function calls, and so on up to sums.
enum class Kind : std::uint8_t {
  Constant = 0,
  Symbol = 1,
  Function = 2,
  Power = 3,
  Product = 4,
  Sum = 5,
};

enum class Fn : std::uint8_t { Sin, Cos, Exp, Cosh, Sinh };

std::string_view fn_name(Fn fn);

class FreeSymbolError : public std::runtime_error {
public:
  explicit FreeSymbolError(const std::string &name)
      : std::runtime_error("free symbol '" + name + "' in numeric evaluation"),
        symbol_(name) {}
  const std::string &symbol() const noexcept { return symbol_; }

private:
  std::string symbol_;
};

class Expr;

namespace detail {
struct Node;
}

// Immutable symbolic scalar. Construction always yields the canonical form:
// sums and products are flattened, like terms and like bases are collected,
// and operands are sorted under the fixed term order.
class Expr {
public:
  Expr();
  Expr(long value); // NOLINT(google-explicit-constructor)
  Expr(int value) : Expr(static_cast<long>(value)) {} // NOLINT
  Expr(const Rational &value); // NOLINT(google-explicit-constructor)

  static Expr symbol(std::string name, bool positive = false);
  static Expr function(Fn fn, const Expr &arg);
  static Expr power(const Expr &base, const Rational &exponent);
  static Expr product(std::vector<Expr> factors);
  static Expr sum(std::vector<Expr> terms);

  Kind kind() const;
  bool is_constant() const { return kind() == Kind::Constant; }
  bool is_symbol() const { return kind() == Kind::Symbol; }
  bool is_zero() const;
  bool is_one() const;

  // Constant value, numeric coefficient of a product, or constant term of a
  // sum. Exponent for powers.
  const Rational &value() const;
  const Rational &exponent() const { return value(); }
  const std::string &name() const;
  bool is_positive_symbol() const;
  Fn fn() const;
  // Function argument, power base, product factors, or non-constant sum terms.
  const std::vector<Expr> &operands() const;
  const Expr &base() const { return operands().front(); }

  std::size_t hash() const;
  std::size_t node_count() const;

  bool has(std::string_view symbol_name) const;
  void collect_symbols(std::set<std::string> &out) const;

  std::string str() const;

  friend bool operator==(const Expr &a, const Expr &b);
  friend bool operator!=(const Expr &a, const Expr &b) { return !(a == b); }

  const detail::Node *node_ptr() const { return node_.get(); }

private:
  explicit Expr(std::shared_ptr<const detail::Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const detail::Node> node_;

  friend struct ExprAccess;
};

// Three-way structural comparison under the term order.
int compare(const Expr &a, const Expr &b);

struct ExprLess {
  bool operator()(const Expr &a, const Expr &b) const {
    return compare(a, b) < 0;
  }
};

std::ostream &operator<<(std::ostream &os, const Expr &e);

Expr operator+(const Expr &a, const Expr &b);
Expr operator-(const Expr &a, const Expr &b);
Expr operator*(const Expr &a, const Expr &b);
Expr operator/(const Expr &a, const Expr &b);
Expr operator-(const Expr &a);
inline Expr &operator+=(Expr &a, const Expr &b) { return a = a + b; }
inline Expr &operator-=(Expr &a, const Expr &b) { return a = a - b; }
inline Expr &operator*=(Expr &a, const Expr &b) { return a = a * b; }
inline Expr &operator/=(Expr &a, const Expr &b) { return a = a / b; }

Expr pow(const Expr &base, const Rational &exponent);
inline Expr pow(const Expr &base, long exponent) {
  return pow(base, Rational(exponent));
}
Expr sqrt(const Expr &e);
Expr sin(const Expr &e);
Expr cos(const Expr &e);
Expr exp(const Expr &e);
Expr cosh(const Expr &e);
Expr sinh(const Expr &e);

// Simultaneous substitution map. Binding a symbol twice is an error.
class Binding {
public:
  Binding() = default;
  Binding(std::initializer_list<std::pair<Expr, Expr>> pairs);

  void bind(const Expr &symbol, const Expr &value);
  void bind(const std::string &name, const Expr &value);

  bool contains(const std::string &name) const {
    return values_.count(name) != 0;
  }
  const Expr *find(const std::string &name) const;
  const Expr &at(const std::string &name) const;
  bool empty() const { return values_.empty(); }
  std::size_t size() const { return values_.size(); }

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

private:
  std::map<std::string, Expr> values_;
};

// Numeric assignment used for fast evaluation of symbolic families.
class NumericEnv {
public:
  NumericEnv() = default;
  NumericEnv(std::initializer_list<std::pair<std::string, double>> values);

  void set(const std::string &name, double value);
  const double *find(std::string_view name) const;

private:
  std::vector<std::pair<std::string, double>> values_;
};

Expr diff(const Expr &e, const Expr &symbol, unsigned order = 1);
Expr diff(const Expr &e, std::string_view symbol_name, unsigned order = 1);

Expr subs(const Expr &e, const Binding &binding);

// IEEE evaluation. Throws FreeSymbolError when a symbol remains unbound.
double evalf(const Expr &e);
double evalf(const Expr &e, const NumericEnv &env);

} // namespace eph::sym

template <> struct std::hash<eph::sym::Expr> {
  std::size_t operator()(const eph::sym::Expr &e) const noexcept {
    return e.hash();
  }
};

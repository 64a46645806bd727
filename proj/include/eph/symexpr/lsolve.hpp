#pragma once

#include "eph/symexpr/expr.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace eph::sym {

class SingularSystem : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NonLinear : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// lhs == rhs
struct Equation {
  Expr lhs;
  Expr rhs;
};

// Gaussian elimination over Expr. Every equation must be affine in `vars`;
// the coefficients may carry other symbols. Throws SingularSystem when the
// system has no unique solution (zero pivot or inconsistent extra rows).
Binding lsolve(const std::vector<Equation> &equations,
               const std::vector<Expr> &vars);

} // namespace eph::sym

#pragma once

#include "eph/cliffalg/metric.hpp"

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

namespace eph::cliff::detail {

using BladeTerms = std::vector<std::pair<std::uint32_t, Expr>>;

struct MetricData {
  std::size_t n = 0;
  std::vector<Expr> b;   // row-major
  std::vector<Expr> sym; // B(i,j) + B(j,i)
  bool symmetric = false;
  bool diagonal = false;
  bool anticommuting = false;

  const Expr &at(std::size_t i, std::size_t j) const { return b[i * n + j]; }
  const Expr &sym_at(std::size_t i, std::size_t j) const {
    return sym[i * n + j];
  }

  // e_A e_B expanded over canonical blades. Cached per pair.
  const BladeTerms &blade_product(std::uint32_t a, std::uint32_t b) const;
  // Canonical expansion of an arbitrary word of generators.
  BladeTerms canonicalize(std::vector<unsigned char> word) const;

private:
  mutable std::mutex mu_;
  mutable std::unordered_map<std::uint64_t, BladeTerms> cache_;
};

} // namespace eph::cliff::detail

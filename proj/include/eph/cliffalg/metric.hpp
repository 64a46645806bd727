#pragma once

#include "eph/symexpr/expr.hpp"

#include <cstddef>
#include <memory>
#include <vector>

namespace eph::cliff {

using sym::Expr;

namespace detail {
struct MetricData;
}

// Bilinear form B(i,j) on the generators. Entries are stored after normal();
// the symmetry flags are derived from them once, at construction.
class MetricSpec {
public:
  static constexpr std::size_t max_dimension = 16;

  // Row-major n x n entries.
  explicit MetricSpec(std::vector<std::vector<Expr>> entries);
  static MetricSpec diagonal(const std::vector<Expr> &squares);

  std::size_t dimension() const;
  const Expr &operator()(std::size_t i, std::size_t j) const;
  // normal(B(i,j) + B(j,i))
  const Expr &symmetric_sum(std::size_t i, std::size_t j) const;

  bool is_symmetric() const;
  bool is_diagonal() const;
  bool is_anticommuting() const;

  // Same object, or equal entries.
  friend bool operator==(const MetricSpec &a, const MetricSpec &b);
  friend bool operator!=(const MetricSpec &a, const MetricSpec &b) {
    return !(a == b);
  }

  const detail::MetricData &data() const { return *data_; }

private:
  std::shared_ptr<const detail::MetricData> data_;
};

} // namespace eph::cliff

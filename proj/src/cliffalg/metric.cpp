#include "metric_data.hpp"

#include "eph/symexpr/normal.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace eph::cliff {

namespace detail {

BladeTerms MetricData::canonicalize(std::vector<unsigned char> word) const {
  std::map<std::uint32_t, std::vector<Expr>> acc;
  std::vector<std::pair<std::vector<unsigned char>, Expr>> work;
  work.emplace_back(std::move(word), Expr(1));
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    std::size_t i = 0;
    while (i + 1 < w.size() && w[i] < w[i + 1])
      ++i;
    if (i + 1 >= w.size()) {
      std::uint32_t mask = 0;
      for (auto g : w)
        mask |= 1u << g;
      acc[mask].push_back(c);
      continue;
    }
    const unsigned a = w[i], bb = w[i + 1];
    std::vector<unsigned char> shorter;
    shorter.reserve(w.size() - 2);
    shorter.insert(shorter.end(), w.begin(), w.begin() + i);
    shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
    if (a == bb) {
      const Expr &sq = at(a, a);
      if (!sq.is_zero())
        work.emplace_back(std::move(shorter), c * sq);
      continue;
    }
    // e_a e_b with a > b
    const Expr &s = sym_at(a, bb);
    if (!s.is_zero())
      work.emplace_back(std::move(shorter), c * s);
    std::swap(w[i], w[i + 1]);
    work.emplace_back(std::move(w), -c);
  }
  BladeTerms out;
  for (auto &[mask, parts] : acc) {
    Expr c = sym::normal(Expr::sum(std::move(parts)));
    if (!c.is_zero())
      out.emplace_back(mask, std::move(c));
  }
  return out;
}

const BladeTerms &MetricData::blade_product(std::uint32_t a,
                                            std::uint32_t bmask) const {
  const std::uint64_t key = (std::uint64_t{a} << 32) | bmask;
  {
    std::lock_guard lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end())
      return it->second;
  }
  BladeTerms result;
  if (diagonal) {
    int swaps = 0;
    for (std::uint32_t rest = bmask; rest; rest &= rest - 1) {
      unsigned j = std::countr_zero(rest);
      std::uint32_t above = j + 1 >= 32 ? 0u : (~0u << (j + 1));
      swaps += std::popcount(a & above);
    }
    Expr c(swaps % 2 ? -1 : 1);
    for (std::uint32_t common = a & bmask; common; common &= common - 1)
      c = c * at(std::countr_zero(common), std::countr_zero(common));
    c = sym::normal(c);
    if (!c.is_zero())
      result.emplace_back(a ^ bmask, std::move(c));
  } else {
    std::vector<unsigned char> word;
    for (std::uint32_t r = a; r; r &= r - 1)
      word.push_back(static_cast<unsigned char>(std::countr_zero(r)));
    for (std::uint32_t r = bmask; r; r &= r - 1)
      word.push_back(static_cast<unsigned char>(std::countr_zero(r)));
    result = canonicalize(std::move(word));
  }
  std::lock_guard lock(mu_);
  return cache_.try_emplace(key, std::move(result)).first->second;
}

} // namespace detail

MetricSpec::MetricSpec(std::vector<std::vector<Expr>> entries) {
  const std::size_t n = entries.size();
  if (n == 0 || n > max_dimension)
    throw std::invalid_argument("MetricSpec: dimension must be in 1..16");
  auto d = std::make_shared<detail::MetricData>();
  d->n = n;
  d->b.reserve(n * n);
  for (auto &row : entries) {
    if (row.size() != n)
      throw std::invalid_argument("MetricSpec: entries are not square");
    for (auto &e : row)
      d->b.push_back(sym::normal(e));
  }
  d->sym.resize(n * n);
  d->symmetric = d->diagonal = d->anticommuting = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      d->sym[i * n + j] = sym::normal(d->at(i, j) + d->at(j, i));
      if (i == j)
        continue;
      if (!d->at(i, j).is_zero())
        d->diagonal = false;
      if (!sym::is_identically_zero(d->at(i, j) - d->at(j, i)))
        d->symmetric = false;
      if (!d->sym_at(i, j).is_zero())
        d->anticommuting = false;
    }
  data_ = std::move(d);
}

MetricSpec MetricSpec::diagonal(const std::vector<Expr> &squares) {
  const std::size_t n = squares.size();
  std::vector<std::vector<Expr>> rows(n, std::vector<Expr>(n, Expr(0)));
  for (std::size_t i = 0; i < n; ++i)
    rows[i][i] = squares[i];
  return MetricSpec(std::move(rows));
}

std::size_t MetricSpec::dimension() const { return data_->n; }

const Expr &MetricSpec::operator()(std::size_t i, std::size_t j) const {
  if (i >= data_->n || j >= data_->n)
    throw std::out_of_range("MetricSpec: index out of range");
  return data_->at(i, j);
}

const Expr &MetricSpec::symmetric_sum(std::size_t i, std::size_t j) const {
  if (i >= data_->n || j >= data_->n)
    throw std::out_of_range("MetricSpec: index out of range");
  return data_->sym_at(i, j);
}

bool MetricSpec::is_symmetric() const { return data_->symmetric; }
bool MetricSpec::is_diagonal() const { return data_->diagonal; }
bool MetricSpec::is_anticommuting() const { return data_->anticommuting; }

bool operator==(const MetricSpec &a, const MetricSpec &b) {
  return a.data_ == b.data_ || a.data_->b == b.data_->b;
}

} // namespace eph::cliff

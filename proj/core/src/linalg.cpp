#include <cliffalg/linalg.hpp>

namespace cliffalg {

namespace {

void subtract_multiple(SparseVector& v, const Rational& factor, const SparseVector& row) {
  for (const auto& [col, val] : row) {
    auto [it, inserted] = v.try_emplace(col, -factor * val);
    if (!inserted) {
      it->second -= factor * val;
      if (sgn(it->second) == 0) v.erase(it);
    }
  }
}

}  // namespace

bool SparseSpan::insert(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  // Clear the new pivot from existing rows so every row stays zero on the
  // other rows' pivots.
  const auto pivot = r.begin()->first;
  const Rational inv = 1 / r.begin()->second;
  for (auto& [col, val] : r) val *= inv;
  for (auto& [p, row] : rows_) {
    auto it = row.find(pivot);
    if (it == row.end()) continue;
    const Rational factor = it->second;
    subtract_multiple(row, factor, r);
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

SparseVector SparseSpan::reduce(SparseVector v) const {
  std::erase_if(v, [](const auto& kv) { return sgn(kv.second) == 0; });
  auto it = v.begin();
  while (it != v.end()) {
    const auto col = it->first;
    auto row = rows_.find(col);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const Rational factor = it->second;
    subtract_multiple(v, factor, row->second);
    it = v.upper_bound(col);
  }
  return v;
}

}  // namespace cliffalg

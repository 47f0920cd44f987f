#include "qcgeom/bitvec.hpp"

#include <utility>

namespace qcgeom {

namespace {

// Reduced row echelon form; returns pivot columns, rows[0..pivots.size()) are the basis.
std::vector<std::size_t> reduce(std::vector<BitVec>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < ncols && next < rows.size(); ++col) {
    std::size_t pivot = next;
    while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[next], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != next && rows[i].get(col)) rows[i] ^= rows[next];
    }
    pivots.push_back(col);
    ++next;
  }
  return pivots;
}

}  // namespace

std::size_t gf2_rank(std::vector<BitVec> rows) {
  if (rows.empty()) return 0;
  return reduce(rows, rows.front().size()).size();
}

std::vector<BitVec> gf2_nullspace(std::vector<BitVec> rows, std::size_t ncols) {
  const auto pivots = reduce(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<BitVec> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    BitVec v(ncols);
    v.set(free);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (rows[i].get(free)) v.set(pivots[i]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qcgeom

#pragma once

#include <utility>
#include <vector>

#include "gca/rational.hpp"

namespace gca {

// Sparse rational vector: (index, value) pairs sorted by index, no zeros.
struct SparseVec {
  std::vector<std::pair<int, Rational>> entries;

  bool isZero() const { return entries.empty(); }
  int leadIndex() const { return entries.empty() ? -1 : entries.front().first; }
};

// Basis of { x : sum_j x_j * columns[j] = 0 }, computed by fraction-free
// Gaussian elimination on primitive integer rows. The result is the
// canonical reduced-echelon kernel basis (free coordinate = 1), ordered by
// free column, so it is reproducible regardless of internal pivot order.
std::vector<SparseVec> kernelBasis(const std::vector<SparseVec>& columns,
                                   int ambientDim);

// Reduced row-echelon basis of the span of the given vectors: leading
// entry 1, leading columns strictly increasing, each leading column zero
// in every other row. Canonical for the span.
std::vector<SparseVec> rrefRows(const std::vector<SparseVec>& rows);

// Incremental row space with exact membership queries.
class SpanBasis {
 public:
  // Returns true when the vector enlarged the span.
  bool add(const SparseVec& v);
  bool contains(const SparseVec& v) const;
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  struct Row {
    std::vector<std::pair<int, Integer>> entries;  // primitive, lead positive
  };
  // Reduces v against the stored rows; the remainder is primitive.
  Row reduce(const SparseVec& v) const;
  std::vector<Row> rows_;  // sorted by leading index
};

}  // namespace gca

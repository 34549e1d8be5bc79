#include "gca/nullspace.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gca/errors.hpp"

namespace gca {

namespace {

using IntRow = std::vector<std::pair<int, Integer>>;

// Divides by the content and makes the leading entry positive.
void makePrimitive(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [idx, val] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), val.get_mpz_t());
  }
  if (sgn(row.front().second) < 0) g = -g;
  if (g != 1) {
    for (auto& [idx, val] : row) val /= g;
  }
}

IntRow toIntRow(const SparseVec& v) {
  Integer lcm = 1;
  for (const auto& [idx, val] : v.entries)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), val.get_den_mpz_t());
  IntRow row;
  row.reserve(v.entries.size());
  for (const auto& [idx, val] : v.entries) {
    Rational scaled = val * Rational(lcm);
    scaled.canonicalize();
    row.emplace_back(idx, scaled.get_num());
  }
  makePrimitive(row);
  return row;
}

// r := pivotLead * r - a * pivot where a = r[pivot.lead]; result primitive.
IntRow eliminate(const IntRow& r, const IntRow& pivot, const Integer& a) {
  const Integer& lead = pivot.front().second;
  IntRow out;
  out.reserve(r.size() + pivot.size());
  std::size_t x = 0, y = 0;
  while (x < r.size() || y < pivot.size()) {
    if (y == pivot.size() || (x < r.size() && r[x].first < pivot[y].first)) {
      out.emplace_back(r[x].first, lead * r[x].second);
      ++x;
    } else if (x == r.size() || pivot[y].first < r[x].first) {
      out.emplace_back(pivot[y].first, -a * pivot[y].second);
      ++y;
    } else {
      Integer v = lead * r[x].second - a * pivot[y].second;
      if (v != 0) out.emplace_back(r[x].first, std::move(v));
      ++x;
      ++y;
    }
  }
  makePrimitive(out);
  return out;
}

const Integer* entryAt(const IntRow& row, int col) {
  auto it = std::lower_bound(
      row.begin(), row.end(), col,
      [](const std::pair<int, Integer>& e, int c) { return e.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

// Row echelon keyed by leading column.
class Echelon {
 public:
  void insert(IntRow row) {
    makePrimitive(row);
    while (!row.empty()) {
      const int lead = row.front().first;
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        pivots_.emplace(lead, std::move(row));
        return;
      }
      row = eliminate(row, it->second, row.front().second);
    }
  }

  // Eliminates every pivot column from every other pivot row.
  void backReduce() {
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      IntRow& row = it->second;
      std::vector<int> cols;
      for (const auto& [c, v] : row)
        if (c != it->first && pivots_.count(c)) cols.push_back(c);
      for (int c : cols) {
        const Integer* a = entryAt(row, c);
        if (a) row = eliminate(row, pivots_.at(c), *a);
      }
    }
  }

  const std::map<int, IntRow>& pivots() const { return pivots_; }

 private:
  std::map<int, IntRow> pivots_;
};

SparseVec toRational(const IntRow& row) {
  SparseVec out;
  out.entries.reserve(row.size());
  const Integer& lead = row.front().second;
  for (const auto& [idx, val] : row) {
    Rational q = Rational(val) / Rational(lead);
    q.canonicalize();
    out.entries.emplace_back(idx, std::move(q));
  }
  return out;
}

}  // namespace

std::vector<SparseVec> kernelBasis(const std::vector<SparseVec>& columns,
                                   int ambientDim) {
  // Transpose the columns into constraint rows. Only whole rows may be
  // rescaled: scaling a column would rescale its unknown.
  std::map<int, SparseVec> rowsByIndex;
  for (int j = 0; j < static_cast<int>(columns.size()); ++j) {
    for (const auto& [r, val] : columns[static_cast<std::size_t>(j)].entries)
      rowsByIndex[r].entries.emplace_back(j, val);
  }
  Echelon ech;
  for (auto& [r, row] : rowsByIndex) {
    std::sort(row.entries.begin(), row.entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    ech.insert(toIntRow(row));
  }
  ech.backReduce();

  const auto& pivots = ech.pivots();
  std::vector<SparseVec> kernel;
  for (int f = 0; f < static_cast<int>(columns.size()); ++f) {
    if (pivots.count(f)) continue;
    SparseVec x;
    x.entries.emplace_back(f, Rational(1));
    for (const auto& [p, row] : pivots) {
      const Integer* a = entryAt(row, f);
      if (!a) continue;
      Rational q = Rational(-*a) / Rational(row.front().second);
      q.canonicalize();
      x.entries.emplace_back(p, std::move(q));
    }
    std::sort(x.entries.begin(), x.entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    kernel.push_back(std::move(x));
  }
  (void)ambientDim;
  return kernel;
}

std::vector<SparseVec> rrefRows(const std::vector<SparseVec>& rows) {
  Echelon ech;
  for (const SparseVec& r : rows) ech.insert(toIntRow(r));
  ech.backReduce();
  std::vector<SparseVec> out;
  out.reserve(ech.pivots().size());
  for (const auto& [lead, row] : ech.pivots()) out.push_back(toRational(row));
  return out;
}

bool SpanBasis::add(const SparseVec& v) {
  Row r = reduce(v);
  if (r.entries.empty()) return false;
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), r.entries.front().first,
                              [](const Row& a, int lead) {
                                return a.entries.front().first < lead;
                              });
  rows_.insert(pos, std::move(r));
  return true;
}

bool SpanBasis::contains(const SparseVec& v) const {
  return reduce(v).entries.empty();
}

SpanBasis::Row SpanBasis::reduce(const SparseVec& v) const {
  IntRow row = toIntRow(v);
  while (!row.empty()) {
    const int lead = row.front().first;
    auto it = std::lower_bound(rows_.begin(), rows_.end(), lead,
                               [](const Row& a, int l) {
                                 return a.entries.front().first < l;
                               });
    if (it == rows_.end() || it->entries.front().first != lead) break;
    row = eliminate(row, it->entries, row.front().second);
  }
  Row out;
  out.entries = std::move(row);
  return out;
}

}  // namespace gca

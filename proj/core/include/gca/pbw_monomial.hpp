#pragma once

#include <string>

#include "gca/generator.hpp"
#include "gca/partition.hpp"

namespace gca {

// Canonical basis word J^j I^i H^h L^l acting on the cyclic vector.
// Partition parts are nonnegative; a part k stands for the mode -k factor.
struct PBWMonomial {
  Partition j, i, h, l;

  long weight() const {
    return j.weight() + i.weight() + h.weight() + l.weight();
  }
  unsigned zeroCount() const {
    return j.zeroCount() + i.zeroCount() + h.zeroCount() + l.zeroCount();
  }
  unsigned length() const {
    return j.length() + i.length() + h.length() + l.length();
  }
  bool isUnit() const {
    return j.empty() && i.empty() && h.empty() && l.empty();
  }

  // Canonical key: graded lexicographic on (weight, zeroCount, j, i, h, l).
  int compare(const PBWMonomial& o) const;
  bool operator==(const PBWMonomial& o) const {
    return j == o.j && i == o.i && h == o.h && l == o.l;
  }
  bool operator<(const PBWMonomial& o) const { return compare(o) < 0; }

  // The generator word, blocks in J, I, H, L order, parts nonincreasing
  // inside each block.
  Word word() const;

  // "J[-2]^1 I[0]^2 H[-1]^3 L[0]^1"; the unit monomial prints as "1".
  std::string str() const;
};

// Rebuilds the monomial from a canonically sorted word of nonpositive-mode
// generators. Throws EngineError when the word is not canonical.
PBWMonomial monomialFromWord(const Word& w);

}  // namespace gca

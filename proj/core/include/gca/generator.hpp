#pragma once

#include <compare>
#include <string>
#include <vector>

namespace gca {

enum class Family : unsigned char { L, H, I, J };

char familyChar(Family f);

// Position of a family inside a canonical PBW word (J before I before H
// before L).
int blockIndex(Family f);

// One basis element of the algebra: a modal generator (family, mode) or a
// central charge C1/C2/C3.
class GeneratorId {
 public:
  static GeneratorId modal(Family f, int mode);
  static GeneratorId central(int index);  // 1..3

  bool isCentral() const { return central_ != 0; }
  Family family() const;
  int mode() const;
  int centralIndex() const;

  // "L[-3]", "H[0]", "C2"
  std::string str() const;

  bool operator==(const GeneratorId& o) const {
    return central_ == o.central_ && fam_ == o.fam_ && mode_ == o.mode_;
  }
  // Display order: modal generators (family L<H<I<J, then mode) before
  // central charges (C1<C2<C3).
  bool operator<(const GeneratorId& o) const;

 private:
  GeneratorId() = default;
  signed char central_ = 0;
  Family fam_ = Family::L;
  int mode_ = 0;
};

using Word = std::vector<GeneratorId>;

}  // namespace gca

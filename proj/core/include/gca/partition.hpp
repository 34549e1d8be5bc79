#pragma once

#include <initializer_list>
#include <map>
#include <vector>

namespace gca {

// Multiset of nonnegative parts, stored as part -> multiplicity with only
// nonzero multiplicities. The empty table is the zero partition.
class Partition {
 public:
  Partition() = default;
  static Partition fromParts(std::initializer_list<unsigned> parts);

  unsigned count(unsigned part) const;
  // |p| = sum of parts (zero parts contribute nothing).
  long weight() const;
  // Number of parts, zero parts included.
  unsigned length() const;
  unsigned zeroCount() const { return count(0); }
  bool empty() const { return mult_.empty(); }

  void addPart(unsigned part, unsigned times = 1);
  // Removes one copy of the part; the part must be present.
  void removePart(unsigned part);

  // Parts in nonincreasing order, multiplicities expanded.
  std::vector<unsigned> parts() const;

  // Lexicographic comparison of the nonincreasing part sequences.
  int compare(const Partition& o) const;
  bool operator==(const Partition& o) const { return mult_ == o.mult_; }
  bool operator<(const Partition& o) const { return compare(o) < 0; }

  const std::map<unsigned, unsigned>& mult() const { return mult_; }

 private:
  std::map<unsigned, unsigned> mult_;
};

}  // namespace gca

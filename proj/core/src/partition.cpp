#include "gca/partition.hpp"

#include "gca/errors.hpp"

namespace gca {

Partition Partition::fromParts(std::initializer_list<unsigned> parts) {
  Partition p;
  for (unsigned k : parts) p.addPart(k);
  return p;
}

unsigned Partition::count(unsigned part) const {
  auto it = mult_.find(part);
  return it == mult_.end() ? 0u : it->second;
}

long Partition::weight() const {
  long w = 0;
  for (const auto& [part, count] : mult_) w += long(part) * long(count);
  return w;
}

unsigned Partition::length() const {
  unsigned n = 0;
  for (const auto& [part, count] : mult_) n += count;
  return n;
}

void Partition::addPart(unsigned part, unsigned times) {
  if (times == 0) return;
  mult_[part] += times;
}

void Partition::removePart(unsigned part) {
  auto it = mult_.find(part);
  if (it == mult_.end()) throw DomainError("part not present in partition");
  if (--it->second == 0) mult_.erase(it);
}

std::vector<unsigned> Partition::parts() const {
  std::vector<unsigned> out;
  out.reserve(length());
  for (auto it = mult_.rbegin(); it != mult_.rend(); ++it)
    for (unsigned t = 0; t < it->second; ++t) out.push_back(it->first);
  return out;
}

int Partition::compare(const Partition& o) const {
  // Run-length comparison of the nonincreasing sequences.
  auto a = mult_.rbegin(), aEnd = mult_.rend();
  auto b = o.mult_.rbegin(), bEnd = o.mult_.rend();
  while (a != aEnd && b != bEnd) {
    if (a->first != b->first) return a->first < b->first ? -1 : 1;
    if (a->second != b->second) {
      // Equal part, unequal run: the longer run stays on the larger value
      // while the shorter one moves on to a smaller part (or ends).
      return a->second < b->second ? -1 : 1;
    }
    ++a;
    ++b;
  }
  if (a == aEnd && b == bEnd) return 0;
  return a == aEnd ? -1 : 1;
}

}  // namespace gca

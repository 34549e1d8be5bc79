#include "gca/pbw_monomial.hpp"

#include <sstream>

#include "gca/errors.hpp"

namespace gca {

int PBWMonomial::compare(const PBWMonomial& o) const {
  const long wa = weight(), wb = o.weight();
  if (wa != wb) return wa < wb ? -1 : 1;
  const unsigned za = zeroCount(), zb = o.zeroCount();
  if (za != zb) return za < zb ? -1 : 1;
  if (int c = j.compare(o.j)) return c;
  if (int c = i.compare(o.i)) return c;
  if (int c = h.compare(o.h)) return c;
  return l.compare(o.l);
}

namespace {

void appendBlock(Word& w, Family f, const Partition& p) {
  for (unsigned part : p.parts())
    w.push_back(GeneratorId::modal(f, -static_cast<int>(part)));
}

void printBlock(std::ostringstream& os, bool& first, Family f, const Partition& p) {
  // Multiplicity runs, largest part first.
  for (auto it = p.mult().rbegin(); it != p.mult().rend(); ++it) {
    if (!first) os << ' ';
    first = false;
    os << familyChar(f) << '[' << -static_cast<int>(it->first) << "]^"
       << it->second;
  }
}

}  // namespace

Word PBWMonomial::word() const {
  Word w;
  w.reserve(length());
  appendBlock(w, Family::J, j);
  appendBlock(w, Family::I, i);
  appendBlock(w, Family::H, h);
  appendBlock(w, Family::L, l);
  return w;
}

std::string PBWMonomial::str() const {
  if (isUnit()) return "1";
  std::ostringstream os;
  bool first = true;
  printBlock(os, first, Family::J, j);
  printBlock(os, first, Family::I, i);
  printBlock(os, first, Family::H, h);
  printBlock(os, first, Family::L, l);
  return os.str();
}

PBWMonomial monomialFromWord(const Word& w) {
  PBWMonomial m;
  int lastBlock = -1;
  int lastMode = 0;
  for (const GeneratorId& g : w) {
    if (g.isCentral() || g.mode() > 0)
      throw EngineError("non-canonical word: " + g.str());
    const int block = blockIndex(g.family());
    if (block < lastBlock || (block == lastBlock && g.mode() < lastMode))
      throw EngineError("word out of canonical order at " + g.str());
    lastBlock = block;
    lastMode = g.mode();
    const unsigned part = static_cast<unsigned>(-g.mode());
    switch (g.family()) {
      case Family::J: m.j.addPart(part); break;
      case Family::I: m.i.addPart(part); break;
      case Family::H: m.h.addPart(part); break;
      case Family::L: m.l.addPart(part); break;
    }
  }
  return m;
}

}  // namespace gca

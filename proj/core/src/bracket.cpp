#include "gca/bracket.hpp"

#include <sstream>

namespace gca {

LieElement LieElement::term(GeneratorId g, const Rational& coeff) {
  LieElement e;
  e.add(g, coeff);
  return e;
}

void LieElement::add(GeneratorId g, const Rational& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    terms_.emplace(g, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

LieElement& LieElement::operator+=(const LieElement& o) {
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

LieElement& LieElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, c] : terms_) c *= s;
  return *this;
}

LieElement LieElement::operator-() const {
  LieElement out(*this);
  for (auto& [g, c] : out.terms_) c = -c;
  return out;
}

std::string LieElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << toString(c) << '*' << g.str();
  }
  return os.str();
}

namespace {

// Bracket with both arguments modal and the first family not after the
// second in L < H < I < J order.
LieElement orderedBracket(AlgebraKind kind, Family fa, long n, Family fb, long m) {
  const bool central = kind == AlgebraKind::Central && m + n == 0;
  LieElement out;
  if (fa == Family::L && fb == Family::L) {
    out.add(GeneratorId::modal(Family::L, int(m + n)), Rational(m - n));
    if (central) out.add(GeneratorId::central(1), Rational(n * n * n));
  } else if (fa == Family::L && fb == Family::H) {
    out.add(GeneratorId::modal(Family::H, int(m + n)), Rational(m));
    if (central) out.add(GeneratorId::central(2), Rational(n * n));
  } else if (fa == Family::L && fb == Family::I) {
    out.add(GeneratorId::modal(Family::I, int(m + n)), Rational(m - n));
  } else if (fa == Family::L && fb == Family::J) {
    out.add(GeneratorId::modal(Family::J, int(m + n)), Rational(m - n));
  } else if (fa == Family::H && fb == Family::H) {
    if (central) out.add(GeneratorId::central(3), Rational(n));
  } else if (fa == Family::H && fb == Family::I) {
    out.add(GeneratorId::modal(Family::I, int(m + n)), Rational(1));
  } else if (fa == Family::H && fb == Family::J) {
    out.add(GeneratorId::modal(Family::J, int(m + n)), Rational(-1));
  }
  // [I,I], [I,J], [J,J] are zero.
  return out;
}

}  // namespace

LieElement bracketGen(AlgebraKind kind, GeneratorId a, GeneratorId b) {
  if (a.isCentral() || b.isCentral()) return {};
  Family fa = a.family(), fb = b.family();
  long n = a.mode(), m = b.mode();
  if (int(fa) <= int(fb)) return orderedBracket(kind, fa, n, fb, m);
  LieElement flipped = orderedBracket(kind, fb, m, fa, n);
  return -flipped;
}

LieElement bracketElem(AlgebraKind kind, const LieElement& x, const LieElement& y) {
  LieElement out;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      LieElement br = bracketGen(kind, a, b);
      br *= ca * cb;
      out += br;
    }
  }
  return out;
}

}  // namespace gca

#include "gca/module_vector.hpp"

#include <sstream>

namespace gca {

ModuleVector ModuleVector::unit() {
  return term(PBWMonomial{}, Rational(1));
}

ModuleVector ModuleVector::term(const PBWMonomial& m, const CentralPoly& coeff) {
  ModuleVector v;
  v.add(m, coeff);
  return v;
}

ModuleVector ModuleVector::term(const PBWMonomial& m, const Rational& coeff) {
  return term(m, CentralPoly(coeff));
}

void ModuleVector::add(const PBWMonomial& m, const CentralPoly& coeff) {
  if (coeff.isZero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.isZero()) terms_.erase(it);
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

ModuleVector& ModuleVector::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

ModuleVector& ModuleVector::operator*=(const CentralPoly& p) {
  if (p.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= p;
  return *this;
}

CentralPoly ModuleVector::coeff(const PBWMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CentralPoly() : it->second;
}

std::optional<long> ModuleVector::maxdeg() const {
  if (terms_.empty()) return std::nullopt;
  long best = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    (void)c;
    const long w = m.weight();
    if (first || w > best) best = w;
    first = false;
  }
  return best;
}

std::optional<unsigned> ModuleVector::maxLH(unsigned s) const {
  if (terms_.empty()) return std::nullopt;
  unsigned best = 0;
  for (const auto& [m, c] : terms_) {
    (void)c;
    const unsigned v = m.l.count(s) + m.h.count(s);
    if (v > best) best = v;
  }
  return best;
}

std::string ModuleVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c.isConstant())
      os << toString(c.constantValue());
    else
      os << '(' << c.str() << ')';
    os << " * " << m.str();
  }
  return os.str();
}

}  // namespace gca

#include "gca/central_poly.hpp"

#include <sstream>

#include "gca/errors.hpp"

namespace gca {

CentralPoly::CentralPoly(const Rational& constant) {
  addTerm({0, 0, 0}, constant);
}

CentralPoly CentralPoly::generator(int index) {
  if (index < 1 || index > 3) throw DomainError("central index out of range");
  Exponent alpha{0, 0, 0};
  alpha[static_cast<std::size_t>(index - 1)] = 1;
  return monomial(alpha, Rational(1));
}

CentralPoly CentralPoly::monomial(const Exponent& alpha, const Rational& coeff) {
  CentralPoly p;
  p.addTerm(alpha, coeff);
  return p;
}

CentralPoly CentralPoly::fromTerms(const TermMap& terms) {
  CentralPoly p;
  for (const auto& [alpha, coeff] : terms) p.addTerm(alpha, coeff);
  return p;
}

bool CentralPoly::isConstant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0, 0});
}

Rational CentralPoly::constantValue() const {
  if (!isConstant()) throw DomainError("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int CentralPoly::totalDegree() const {
  int deg = -1;
  for (const auto& [alpha, coeff] : terms_) {
    (void)coeff;
    const int d = static_cast<int>(alpha[0] + alpha[1] + alpha[2]);
    if (d > deg) deg = d;
  }
  return deg;
}

void CentralPoly::addTerm(const Exponent& alpha, const Rational& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(alpha);
  if (it == terms_.end()) {
    terms_.emplace(alpha, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

CentralPoly& CentralPoly::operator+=(const CentralPoly& q) {
  for (const auto& [alpha, coeff] : q.terms_) addTerm(alpha, coeff);
  return *this;
}

CentralPoly& CentralPoly::operator-=(const CentralPoly& q) {
  for (const auto& [alpha, coeff] : q.terms_) addTerm(alpha, -coeff);
  return *this;
}

CentralPoly operator*(const CentralPoly& p, const CentralPoly& q) {
  CentralPoly out;
  for (const auto& [a, ca] : p.terms_) {
    for (const auto& [b, cb] : q.terms_) {
      CentralPoly::Exponent sum{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
      out.addTerm(sum, ca * cb);
    }
  }
  return out;
}

CentralPoly& CentralPoly::operator*=(const CentralPoly& q) {
  *this = *this * q;
  return *this;
}

CentralPoly& CentralPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, coeff] : terms_) coeff *= s;
  return *this;
}

CentralPoly CentralPoly::operator-() const {
  CentralPoly out(*this);
  for (auto& [alpha, coeff] : out.terms_) coeff = -coeff;
  return out;
}

CentralPoly operator*(const Rational& s, const CentralPoly& p) { return p * s; }

Rational CentralPoly::substitute(const std::array<Rational, 3>& xi) const {
  Rational acc(0);
  for (const auto& [alpha, coeff] : terms_) {
    Rational term = coeff;
    for (std::size_t s = 0; s < 3; ++s) term *= pow(xi[s], alpha[s]);
    acc += term;
  }
  return acc;
}

std::string CentralPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << toString(it->second);
    const Exponent& alpha = it->first;
    for (std::size_t s = 0; s < 3; ++s) {
      if (alpha[s] == 0) continue;
      os << "*C" << (s + 1);
      if (alpha[s] > 1) os << '^' << alpha[s];
    }
  }
  return os.str();
}

}  // namespace gca

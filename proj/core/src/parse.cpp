#include "gca/parse.hpp"

#include <cctype>

#include "gca/errors.hpp"

namespace gca {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skipSpace() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }
  bool done() {
    skipSpace();
    return pos_ >= text_.size();
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }
  // " + " separator between terms (spaces optional).
  bool consumePlus() {
    skipSpace();
    if (!consume('+')) return false;
    skipSpace();
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_);
  }
  std::size_t pos() const { return pos_; }

  long parseInt() {
    std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == digits) fail("expected integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  unsigned long parseUInt() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected nonnegative integer");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  Rational parseRat() {
    std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == digits) fail("expected rational");
    if (peek() == '/') {
      ++pos_;
      std::size_t den = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (pos_ == den) fail("expected denominator");
    }
    return parseRational(text_.substr(start, pos_ - start));
  }

  GeneratorId parseGen() {
    skipSpace();
    const char c = peek();
    if (c == 'C') {
      ++pos_;
      const char idx = peek();
      if (idx < '1' || idx > '3') fail("expected central index 1..3");
      ++pos_;
      return GeneratorId::central(idx - '0');
    }
    Family f;
    switch (c) {
      case 'L': f = Family::L; break;
      case 'H': f = Family::H; break;
      case 'I': f = Family::I; break;
      case 'J': f = Family::J; break;
      default: fail("expected generator family L, H, I, J or C");
    }
    ++pos_;
    expect('[');
    const long mode = parseInt();
    expect(']');
    return GeneratorId::modal(f, static_cast<int>(mode));
  }

  // One monomial block "F[-k]^e"; returns false when the next token is not
  // a block.
  bool tryParseBlock(PBWMonomial& m) {
    skipSpace();
    const char c = peek();
    if (c != 'L' && c != 'H' && c != 'I' && c != 'J') return false;
    const GeneratorId g = parseGen();
    if (g.mode() > 0) fail("monomial mode must be nonpositive");
    expect('^');
    const unsigned long count = parseUInt();
    if (count == 0) fail("monomial exponent must be positive");
    const unsigned part = static_cast<unsigned>(-g.mode());
    switch (g.family()) {
      case Family::J: m.j.addPart(part, static_cast<unsigned>(count)); break;
      case Family::I: m.i.addPart(part, static_cast<unsigned>(count)); break;
      case Family::H: m.h.addPart(part, static_cast<unsigned>(count)); break;
      case Family::L: m.l.addPart(part, static_cast<unsigned>(count)); break;
    }
    return true;
  }

  PBWMonomial parseMono() {
    skipSpace();
    if (peek() == '1') {
      ++pos_;
      return PBWMonomial{};
    }
    PBWMonomial m;
    if (!tryParseBlock(m)) fail("expected monomial");
    while (true) {
      skipSpace();
      if (!tryParseBlock(m)) break;
    }
    return m;
  }

  CentralPoly parsePolyTerm() {
    const Rational coeff = parseRat();
    CentralPoly::Exponent alpha{0, 0, 0};
    while (true) {
      std::size_t save = pos_;
      if (!consume('*')) break;
      if (peek() != 'C') {
        pos_ = save;
        break;
      }
      ++pos_;
      const char idx = peek();
      if (idx < '1' || idx > '3') fail("expected central index 1..3");
      ++pos_;
      unsigned long e = 1;
      if (consume('^')) e = parseUInt();
      alpha[static_cast<std::size_t>(idx - '1')] += static_cast<unsigned>(e);
    }
    return CentralPoly::monomial(alpha, coeff);
  }

  CentralPoly parsePoly() {
    CentralPoly p = parsePolyTerm();
    while (consumePlus()) p += parsePolyTerm();
    return p;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GeneratorId parseGenerator(std::string_view text) {
  Cursor c(text);
  GeneratorId g = c.parseGen();
  if (!c.done()) c.fail("trailing characters");
  return g;
}

LieElement parseLieElement(std::string_view text) {
  Cursor c(text);
  c.skipSpace();
  LieElement out;
  if (c.peek() == '0') {
    Cursor probe = c;
    probe.expect('0');
    if (probe.done()) return out;
  }
  do {
    c.skipSpace();
    const Rational coeff = c.parseRat();
    c.expect('*');
    out.add(c.parseGen(), coeff);
  } while (c.consumePlus());
  if (!c.done()) c.fail("trailing characters");
  return out;
}

PBWMonomial parseMonomial(std::string_view text) {
  Cursor c(text);
  PBWMonomial m = c.parseMono();
  if (!c.done()) c.fail("trailing characters");
  return m;
}

CentralPoly parseCentralPoly(std::string_view text) {
  Cursor c(text);
  c.skipSpace();
  CentralPoly p = c.parsePoly();
  if (!c.done()) c.fail("trailing characters");
  return p;
}

ModuleVector parseModuleVector(std::string_view text) {
  Cursor c(text);
  c.skipSpace();
  ModuleVector out;
  if (c.peek() == '0') {
    Cursor probe = c;
    probe.expect('0');
    if (probe.done()) return out;
  }
  do {
    c.skipSpace();
    CentralPoly coeff;
    if (c.consume('(')) {
      coeff = c.parsePoly();
      c.expect(')');
    } else {
      coeff = CentralPoly(c.parseRat());
    }
    c.skipSpace();
    c.expect('*');
    c.skipSpace();
    out.add(c.parseMono(), coeff);
  } while (c.consumePlus());
  if (!c.done()) c.fail("trailing characters");
  return out;
}

}  // namespace gca

#include "gca/generator.hpp"

#include <sstream>
#include <tuple>

#include "gca/errors.hpp"

namespace gca {

char familyChar(Family f) {
  switch (f) {
    case Family::L: return 'L';
    case Family::H: return 'H';
    case Family::I: return 'I';
    case Family::J: return 'J';
  }
  return '?';
}

int blockIndex(Family f) {
  switch (f) {
    case Family::J: return 0;
    case Family::I: return 1;
    case Family::H: return 2;
    case Family::L: return 3;
  }
  return -1;
}

GeneratorId GeneratorId::modal(Family f, int mode) {
  GeneratorId g;
  g.fam_ = f;
  g.mode_ = mode;
  return g;
}

GeneratorId GeneratorId::central(int index) {
  if (index < 1 || index > 3) throw DomainError("central index out of range");
  GeneratorId g;
  g.central_ = static_cast<signed char>(index);
  return g;
}

Family GeneratorId::family() const {
  if (isCentral()) throw DomainError("central generator has no family");
  return fam_;
}

int GeneratorId::mode() const {
  if (isCentral()) throw DomainError("central generator has no mode");
  return mode_;
}

int GeneratorId::centralIndex() const {
  if (!isCentral()) throw DomainError("modal generator has no central index");
  return central_;
}

std::string GeneratorId::str() const {
  if (isCentral()) return std::string("C") + std::to_string(int(central_));
  std::ostringstream os;
  os << familyChar(fam_) << '[' << mode_ << ']';
  return os.str();
}

bool GeneratorId::operator<(const GeneratorId& o) const {
  return std::make_tuple(central_ != 0, int(central_), int(fam_), mode_) <
         std::make_tuple(o.central_ != 0, int(o.central_), int(o.fam_), o.mode_);
}

}  // namespace gca

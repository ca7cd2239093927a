#include "coulomb/group.hpp"

#include "coulomb/error.hpp"

namespace coulomb {

GaugeGroup::GaugeGroup(Family family, int n) : family_(family), n_(n) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidGroup, "group dimension must be positive, got " + std::to_string(n));
  }
  if (family == Family::Symplectic && n % 2 != 0) {
    throw Error(ErrorCode::InvalidGroup, "USp(n) requires even n, got " + std::to_string(n));
  }
}

int GaugeGroup::rank() const noexcept {
  return family_ == Family::Unitary ? n_ : n_ / 2;
}

std::string GaugeGroup::label() const {
  return std::string(family_tag(family_)) + "(" + std::to_string(n_) + ")";
}

const char* family_tag(Family family) noexcept {
  switch (family) {
    case Family::Unitary: return "U";
    case Family::Orthogonal: return "SO";
    case Family::Symplectic: return "USp";
  }
  return "?";
}

Family parse_family(const std::string& tag) {
  if (tag == "U") return Family::Unitary;
  if (tag == "SO") return Family::Orthogonal;
  if (tag == "USp") return Family::Symplectic;
  throw Error(ErrorCode::InvalidGroup, "unknown group family '" + tag + "'");
}

}  // namespace coulomb

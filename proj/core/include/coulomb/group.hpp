#pragma once

#include <string>

namespace coulomb {

enum class Family { Unitary, Orthogonal, Symplectic };

/// A classical compact group U(n), SO(n) or USp(n).
///
/// Physics notation is used throughout: USp(n) = Sp(n/2), so n must be even
/// for the symplectic family.
class GaugeGroup {
 public:
  GaugeGroup(Family family, int n);

  static GaugeGroup U(int n) { return {Family::Unitary, n}; }
  static GaugeGroup SO(int n) { return {Family::Orthogonal, n}; }
  static GaugeGroup USp(int n) { return {Family::Symplectic, n}; }

  Family family() const noexcept { return family_; }
  int n() const noexcept { return n_; }
  int rank() const noexcept;
  bool is_unitary() const noexcept { return family_ == Family::Unitary; }
  bool is_orthosymplectic() const noexcept { return family_ != Family::Unitary; }

  /// "U(3)", "SO(4)", "USp(2)".
  std::string label() const;

  bool operator==(const GaugeGroup&) const = default;

 private:
  Family family_;
  int n_;
};

const char* family_tag(Family family) noexcept;  // "U" / "SO" / "USp"
Family parse_family(const std::string& tag);

}  // namespace coulomb

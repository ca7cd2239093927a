#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "coulomb/numeric.hpp"

namespace coulomb {

/// Sparse Laurent polynomial in a fixed, ordered set of fugacities with
/// big-integer coefficients. Zero coefficients are never stored.
class LaurentMultinomial {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, BigInt>;

  LaurentMultinomial() = default;

  static LaurentMultinomial constant(const BigInt& c, std::size_t variables);
  static LaurentMultinomial monomial(Exponents exponents, const BigInt& c = 1);

  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }

  void add_term(const Exponents& exponents, const BigInt& c);

  /// Terms whose exponent in `variable` is zero.
  LaurentMultinomial constant_part(std::size_t variable) const;
  /// Value with every fugacity set to 1.
  BigInt evaluate_at_one() const;
  /// Multiplies by the monomial z^shift.
  LaurentMultinomial shifted(const Exponents& shift) const;

  LaurentMultinomial& operator+=(const LaurentMultinomial& other);
  LaurentMultinomial& operator-=(const LaurentMultinomial& other);
  friend LaurentMultinomial operator+(LaurentMultinomial a, const LaurentMultinomial& b) { return a += b; }
  friend LaurentMultinomial operator-(LaurentMultinomial a, const LaurentMultinomial& b) { return a -= b; }
  friend LaurentMultinomial operator*(const LaurentMultinomial& a, const LaurentMultinomial& b);

  bool operator==(const LaurentMultinomial& other) const = default;

 private:
  Terms terms_;
};

}  // namespace coulomb

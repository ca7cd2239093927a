#include "coulomb/laurent.hpp"

#include "coulomb/error.hpp"

namespace coulomb {

LaurentMultinomial LaurentMultinomial::constant(const BigInt& c, std::size_t variables) {
  LaurentMultinomial out;
  out.add_term(Exponents(variables, 0), c);
  return out;
}

LaurentMultinomial LaurentMultinomial::monomial(Exponents exponents, const BigInt& c) {
  LaurentMultinomial out;
  out.add_term(exponents, c);
  return out;
}

void LaurentMultinomial::add_term(const Exponents& exponents, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentMultinomial LaurentMultinomial::constant_part(std::size_t variable) const {
  LaurentMultinomial out;
  for (const auto& [e, c] : terms_) {
    if (variable >= e.size()) throw Error(ErrorCode::UnknownFugacity, "fugacity index out of range");
    if (e[variable] == 0) out.terms_.emplace(e, c);
  }
  return out;
}

BigInt LaurentMultinomial::evaluate_at_one() const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

LaurentMultinomial LaurentMultinomial::shifted(const Exponents& shift) const {
  LaurentMultinomial out;
  for (const auto& [e, c] : terms_) {
    if (e.size() != shift.size()) throw Error(ErrorCode::FugacityMismatch, "exponent vector length mismatch");
    Exponents moved = e;
    for (std::size_t i = 0; i < moved.size(); ++i) moved[i] += shift[i];
    out.terms_.emplace(std::move(moved), c);
  }
  return out;
}

LaurentMultinomial& LaurentMultinomial::operator+=(const LaurentMultinomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentMultinomial& LaurentMultinomial::operator-=(const LaurentMultinomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentMultinomial operator*(const LaurentMultinomial& a, const LaurentMultinomial& b) {
  LaurentMultinomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      if (ea.size() != eb.size()) throw Error(ErrorCode::FugacityMismatch, "exponent vector length mismatch");
      LaurentMultinomial::Exponents e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

}  // namespace coulomb

#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coulomb/error.hpp"
#include "coulomb/laurent.hpp"
#include "coulomb/numeric.hpp"

namespace coulomb {

template <class C>
struct coefficient_traits;

template <>
struct coefficient_traits<BigInt> {
  static BigInt one(std::size_t) { return 1; }
  static bool is_zero(const BigInt& c) { return c == 0; }
};

template <>
struct coefficient_traits<Rational> {
  static Rational one(std::size_t) { return 1; }
  static bool is_zero(const Rational& c) { return c == 0; }
};

template <>
struct coefficient_traits<LaurentMultinomial> {
  static LaurentMultinomial one(std::size_t variables) { return LaurentMultinomial::constant(1, variables); }
  static bool is_zero(const LaurentMultinomial& c) { return c.is_zero(); }
};

/// Power series in t truncated at an inclusive order K. Coefficients of
/// t^0..t^K are stored densely; everything above K is unknown, so binary
/// operations produce the smaller of the two orders.
///
/// `fugacities` names the variables of LaurentMultinomial coefficients and
/// is empty for plain integer or rational series.
template <class C>
class Series {
 public:
  using Coefficient = C;

  explicit Series(int order, std::vector<std::string> fugacities = {})
      : order_(order), fugacities_(std::move(fugacities)) {
    if (order < 0) throw Error(ErrorCode::InvalidArgument, "series order must be non-negative");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
  }

  static Series one(int order, std::vector<std::string> fugacities = {}) {
    Series s(order, std::move(fugacities));
    s.coeffs_[0] = coefficient_traits<C>::one(s.variables());
    return s;
  }

  /// c * t^exponent (zero if exponent > order).
  static Series monomial(int exponent, C c, int order, std::vector<std::string> fugacities = {}) {
    Series s(order, std::move(fugacities));
    if (exponent < 0) throw Error(ErrorCode::InvalidArgument, "negative t exponent");
    if (exponent <= order) s.coeffs_[static_cast<std::size_t>(exponent)] = std::move(c);
    return s;
  }

  int order() const noexcept { return order_; }
  const std::vector<std::string>& fugacities() const noexcept { return fugacities_; }
  std::size_t variables() const noexcept { return fugacities_.size(); }
  const std::vector<C>& coefficients() const noexcept { return coeffs_; }

  const C& at(int k) const {
    check_index(k);
    return coeffs_[static_cast<std::size_t>(k)];
  }

  void set(int k, C c) {
    check_index(k);
    coeffs_[static_cast<std::size_t>(k)] = std::move(c);
  }

  /// Adds c to the t^k coefficient; terms beyond the order are dropped.
  void add_to(int k, const C& c) {
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative t exponent");
    if (k <= order_) coeffs_[static_cast<std::size_t>(k)] += c;
  }

  Series truncated(int order) const {
    if (order > order_) {
      throw Error(ErrorCode::OrderExceeded, "cannot extend a series of order " + std::to_string(order_) + " to " +
                                                std::to_string(order));
    }
    Series s(order, fugacities_);
    std::copy_n(coeffs_.begin(), static_cast<std::size_t>(order) + 1, s.coeffs_.begin());
    return s;
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const C& c) { return coefficient_traits<C>::is_zero(c); });
  }

  Series& operator+=(const Series& other) { return accumulate(other, +1); }
  Series& operator-=(const Series& other) { return accumulate(other, -1); }

  friend Series operator+(const Series& a, const Series& b) {
    Series out = a.truncated(std::min(a.order_, b.order_));
    out += b;
    return out;
  }
  friend Series operator-(const Series& a, const Series& b) {
    Series out = a.truncated(std::min(a.order_, b.order_));
    out -= b;
    return out;
  }

  friend Series operator*(const Series& a, const Series& b) {
    a.check_context(b);
    const int order = std::min(a.order_, b.order_);
    Series out(order, a.fugacities_);
    for (int i = 0; i <= order; ++i) {
      const C& x = a.coeffs_[static_cast<std::size_t>(i)];
      if (coefficient_traits<C>::is_zero(x)) continue;
      for (int j = 0; i + j <= order; ++j) {
        const C& y = b.coeffs_[static_cast<std::size_t>(j)];
        if (coefficient_traits<C>::is_zero(y)) continue;
        out.coeffs_[static_cast<std::size_t>(i + j)] += x * y;
      }
    }
    return out;
  }

  bool operator==(const Series& other) const = default;

 private:
  void check_index(int k) const {
    if (k < 0 || k > order_) {
      throw Error(ErrorCode::OrderExceeded,
                  "coefficient t^" + std::to_string(k) + " requested from a series of order " + std::to_string(order_));
    }
  }

  void check_context(const Series& other) const {
    if (fugacities_ != other.fugacities_) {
      throw Error(ErrorCode::FugacityMismatch, "series carry different fugacity sets");
    }
  }

  Series& accumulate(const Series& other, int sign) {
    check_context(other);
    if (other.order_ < order_) {
      order_ = other.order_;
      coeffs_.resize(static_cast<std::size_t>(order_) + 1);
    }
    for (int k = 0; k <= order_; ++k) {
      if (sign > 0) {
        coeffs_[static_cast<std::size_t>(k)] += other.coeffs_[static_cast<std::size_t>(k)];
      } else {
        coeffs_[static_cast<std::size_t>(k)] -= other.coeffs_[static_cast<std::size_t>(k)];
      }
    }
    return *this;
  }

  int order_;
  std::vector<std::string> fugacities_;
  std::vector<C> coeffs_;
};

using TruncatedSeries = Series<BigInt>;
using RationalSeries = Series<Rational>;
using RefinedSeries = Series<LaurentMultinomial>;

template <class C>
Series<C> series_add(const Series<C>& a, const Series<C>& b) {
  return a + b;
}

template <class C>
Series<C> series_mul(const Series<C>& a, const Series<C>& b) {
  return a * b;
}

template <class C>
const C& coefficient(const Series<C>& s, int k) {
  return s.at(k);
}

/// 1 / (1 - t^d) expanded to order K.
TruncatedSeries expand_inverse(int d, int order);

/// Integer series from a list of coefficients starting at t^0; the order is
/// coeffs.size() - 1 unless given.
TruncatedSeries make_series(const std::vector<long>& coeffs, int order = -1);

/// Keeps the z-exponent-zero part of every coefficient and removes the
/// fugacity from the series context.
RefinedSeries constant_term(const RefinedSeries& s, std::string_view fugacity);

/// Every fugacity set to 1.
TruncatedSeries evaluate_at_one(const RefinedSeries& s);

/// Requires an empty fugacity context (e.g. after constant_term over all).
TruncatedSeries to_unrefined(const RefinedSeries& s);

RefinedSeries to_refined(const TruncatedSeries& s, std::vector<std::string> fugacities = {});
RationalSeries to_rational(const TruncatedSeries& s);

/// Throws NonIntegralResult if a coefficient is not an integer.
TruncatedSeries to_integral(const RationalSeries& s);

// ---------------------------------------------------------------------------
// Text and JSON forms. Big integers are written as decimal strings in JSON.
// ---------------------------------------------------------------------------

std::string to_text(const TruncatedSeries& s);
std::string to_text(const RationalSeries& s);
std::string to_text(const RefinedSeries& s);

std::string to_json(const TruncatedSeries& s);
std::string to_json(const RationalSeries& s);
std::string to_json(const RefinedSeries& s);

TruncatedSeries truncated_series_from_json(std::string_view text);
RationalSeries rational_series_from_json(std::string_view text);
RefinedSeries refined_series_from_json(std::string_view text);

}  // namespace coulomb

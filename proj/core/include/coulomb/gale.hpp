#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "coulomb/error.hpp"
#include "coulomb/numeric.hpp"

namespace coulomb {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols = 0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transposed() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  bool is_zero() const;
  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

/// Row Hermite normal form: echelon rows, positive pivots, entries above a
/// pivot reduced into [0, pivot). Zero rows are dropped.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// n x d matrix U whose columns u_1..u_d define beta: Z^d -> Z^n.
struct ToricConfig {
  IntMatrix u;

  std::size_t n() const noexcept { return u.rows(); }
  std::size_t d() const noexcept { return u.cols(); }

  static ToricConfig from_columns(std::size_t n, const std::vector<std::vector<long>>& columns);
  bool operator==(const ToricConfig&) const = default;
};

/// Throws RankDeficient unless n <= d and U has rank n.
void validate(const ToricConfig& c);

/// (d-n) x d basis of ker U over Z, in Hermite normal form.
IntMatrix kernel_lattice(const ToricConfig& c);

ToricConfig gale_dual(const ToricConfig& c);

struct DualityReport {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t dim_primal = 0;
  std::size_t dim_dual = 0;
  std::size_t fi_primal = 0;
  std::size_t fi_dual = 0;
  std::size_t isometry_rank_primal = 0;
  std::size_t isometry_rank_dual = 0;
  /// [Z^n : U Z^d]; 1 when the columns generate Z^n.
  BigInt image_index = 1;
  /// Columns whose entries have gcd != 1.
  std::vector<std::size_t> non_primitive_columns;
};

DualityReport duality_report(const ToricConfig& c);

/// True iff the row lattice of b is the integer kernel of a. Throws
/// DimensionMismatch when d differs.
bool is_gale_dual_pair(const ToricConfig& a, const ToricConfig& b);

/// Same row lattice (equal Hermite normal forms).
bool same_row_lattice(const IntMatrix& a, const IntMatrix& b);

/// {"n":..,"d":..,"columns":[[..],..]}; entries may be integers or decimal strings.
ToricConfig toric_config_from_json(std::string_view text);
/// Entries are written as decimal strings.
std::string to_json(const ToricConfig& c);

}  // namespace coulomb

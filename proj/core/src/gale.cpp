#include "coulomb/gale.hpp"

#include <json.hpp>

#include <algorithm>
#include <utility>

namespace coulomb {
namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// g = gcd(a, b) = x*a + y*b.
void extended_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& x, BigInt& y) {
  BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const BigInt q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  g = old_r;
  x = old_s;
  y = old_t;
}

// Replaces (col_a, col_b) by a unimodular combination that puts gcd in
// col_a and zero in col_b at row i. Applied to both matrices in lockstep.
void combine_columns(IntMatrix& m, IntMatrix& v, std::size_t i, std::size_t a, std::size_t b) {
  const BigInt p = m(i, a);
  const BigInt q = m(i, b);
  if (q == 0) return;
  BigInt g, x, y;
  extended_gcd(p, q, g, x, y);
  const BigInt pa = p / g;
  const BigInt qb = q / g;
  for (IntMatrix* mat : {&m, &v}) {
    for (std::size_t r = 0; r < mat->rows(); ++r) {
      const BigInt ca = (*mat)(r, a);
      const BigInt cb = (*mat)(r, b);
      (*mat)(r, a) = x * ca + y * cb;
      (*mat)(r, b) = -qb * ca + pa * cb;
    }
  }
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

BigInt column_gcd(const IntMatrix& m, std::size_t j) {
  BigInt g = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) g = gcd(g, m(i, j));
  return g;
}

}  // namespace

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shapes differ");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

IntMatrix hermite_normal_form(const IntMatrix& input) {
  IntMatrix m = input;
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    // Euclid down the column until a single nonzero entry remains.
    for (;;) {
      std::size_t best = m.rows();
      for (std::size_t r = pivot_row; r < m.rows(); ++r) {
        if (m(r, col) != 0 && (best == m.rows() || abs(m(r, col)) < abs(m(best, col)))) best = r;
      }
      if (best == m.rows()) break;
      swap_rows(m, pivot_row, best);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < m.rows(); ++r) {
        if (m(r, col) == 0) continue;
        const BigInt q = m(r, col) / m(pivot_row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(r, j) -= q * m(pivot_row, j);
        if (m(r, col) != 0) done = false;
      }
      if (done) break;
    }
    if (m(pivot_row, col) == 0) continue;
    if (m(pivot_row, col) < 0) {
      for (std::size_t j = col; j < m.cols(); ++j) m(pivot_row, j) = -m(pivot_row, j);
    }
    for (std::size_t r = 0; r < pivot_row; ++r) {
      const BigInt q = floor_div(m(r, col), m(pivot_row, col));
      if (q == 0) continue;
      for (std::size_t j = col; j < m.cols(); ++j) m(r, j) -= q * m(pivot_row, j);
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }
  IntMatrix out(pivot_row, m.cols());
  for (std::size_t i = 0; i < pivot_row; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

std::size_t rank(const IntMatrix& m) { return hermite_normal_form(m).rows(); }

ToricConfig ToricConfig::from_columns(std::size_t n, const std::vector<std::vector<long>>& columns) {
  ToricConfig c{IntMatrix(n, columns.size())};
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "column " + std::to_string(j) + " has " +
                                                    std::to_string(columns[j].size()) + " entries, expected " +
                                                    std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) c.u(i, j) = columns[j][i];
  }
  return c;
}

void validate(const ToricConfig& c) {
  if (c.n() > c.d()) {
    throw Error(ErrorCode::RankDeficient, std::to_string(c.d()) + " vectors cannot span Z^" + std::to_string(c.n()));
  }
  const std::size_t r = rank(c.u);
  if (r != c.n()) {
    throw Error(ErrorCode::RankDeficient,
                "columns span rank " + std::to_string(r) + ", expected " + std::to_string(c.n()));
  }
}

namespace {

// Unimodular column reduction U V = [H | 0] with H lower triangular; returns
// (U V, V).
std::pair<IntMatrix, IntMatrix> column_reduce(const ToricConfig& c) {
  IntMatrix m = c.u;
  IntMatrix v(c.d(), c.d());
  for (std::size_t i = 0; i < c.d(); ++i) v(i, i) = 1;
  std::size_t pivot = 0;
  for (std::size_t i = 0; i < c.n() && pivot < c.d(); ++i) {
    for (std::size_t j = pivot + 1; j < c.d(); ++j) combine_columns(m, v, i, pivot, j);
    if (m(i, pivot) != 0) ++pivot;
  }
  return {std::move(m), std::move(v)};
}

}  // namespace

IntMatrix kernel_lattice(const ToricConfig& c) {
  validate(c);
  const auto [reduced, v] = column_reduce(c);
  const std::size_t k = c.d() - c.n();
  IntMatrix basis(k, c.d());
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t j = 0; j < c.d(); ++j) basis(r, j) = v(j, c.n() + r);
  }
  return hermite_normal_form(basis);
}

ToricConfig gale_dual(const ToricConfig& c) {
  IntMatrix k = kernel_lattice(c);
  if (k.rows() == 0) return ToricConfig{IntMatrix(0, c.d())};
  return ToricConfig{std::move(k)};
}

DualityReport duality_report(const ToricConfig& c) {
  validate(c);
  DualityReport r;
  r.n = c.n();
  r.d = c.d();
  r.dim_primal = 4 * r.n;
  r.dim_dual = 4 * (r.d - r.n);
  r.fi_primal = r.d - r.n;
  r.fi_dual = r.n;
  r.isometry_rank_primal = r.n;
  r.isometry_rank_dual = r.d - r.n;

  const auto [reduced, v] = column_reduce(c);
  BigInt index = 1;
  for (std::size_t i = 0; i < c.n(); ++i) index *= abs(reduced(i, i));
  r.image_index = index;
  for (std::size_t j = 0; j < c.d(); ++j) {
    if (column_gcd(c.u, j) != 1) r.non_primitive_columns.push_back(j);
  }
  return r;
}

bool same_row_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) return false;
  return hermite_normal_form(a) == hermite_normal_form(b);
}

bool is_gale_dual_pair(const ToricConfig& a, const ToricConfig& b) {
  if (a.d() != b.d()) {
    throw Error(ErrorCode::DimensionMismatch,
                "configurations have " + std::to_string(a.d()) + " and " + std::to_string(b.d()) + " vectors");
  }
  const IntMatrix k = kernel_lattice(a);
  return hermite_normal_form(b.u) == k;
}

ToricConfig toric_config_from_json(std::string_view text) {
  using Json = nlohmann::json;
  auto fail = [](const std::string& what) -> void { throw Error(ErrorCode::ParseError, what); };
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("matrix: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("matrix: expected an object");
  for (const char* key : {"n", "d"}) {
    if (!doc.contains(key) || !doc.at(key).is_number_integer() || doc.at(key).get<long>() < 0) {
      fail(std::string("matrix.") + key + ": expected a non-negative integer");
    }
  }
  const std::size_t n = doc.at("n").get<std::size_t>();
  const std::size_t d = doc.at("d").get<std::size_t>();
  if (!doc.contains("columns") || !doc.at("columns").is_array()) fail("matrix.columns: expected an array");
  const Json& cols = doc.at("columns");
  if (cols.size() != d) {
    fail("matrix.columns: " + std::to_string(cols.size()) + " columns but d = " + std::to_string(d));
  }
  ToricConfig c{IntMatrix(n, d)};
  for (std::size_t j = 0; j < d; ++j) {
    const std::string where = "columns[" + std::to_string(j) + "]";
    if (!cols[j].is_array() || cols[j].size() != n) fail(where + ": expected " + std::to_string(n) + " entries");
    for (std::size_t i = 0; i < n; ++i) {
      const Json& x = cols[j][i];
      try {
        if (x.is_number_integer()) {
          c.u(i, j) = x.get<long long>();
          continue;
        }
        if (x.is_string()) {
          c.u(i, j) = BigInt(x.get<std::string>());
          continue;
        }
      } catch (const std::exception&) {
      }
      fail(where + "[" + std::to_string(i) + "]: expected an integer");
    }
  }
  return c;
}

std::string to_json(const ToricConfig& c) {
  nlohmann::ordered_json doc;
  doc["n"] = c.n();
  doc["d"] = c.d();
  nlohmann::ordered_json cols = nlohmann::ordered_json::array();
  for (std::size_t j = 0; j < c.d(); ++j) {
    nlohmann::ordered_json col = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < c.n(); ++i) col.push_back(c.u(i, j).str());
    cols.push_back(col);
  }
  doc["columns"] = cols;
  return doc.dump();
}

}  // namespace coulomb

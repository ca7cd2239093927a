#include "coulomb/lie.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <map>

#include "coulomb/error.hpp"

namespace coulomb {
namespace {

bool non_increasing(std::span<const int> m) {
  return std::is_sorted(m.begin(), m.end(), [](int x, int y) { return x > y; });
}

std::string charge_text(std::span<const int> m) {
  std::string out = "(";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(m[i]);
  }
  return out + ")";
}

bool is_so2(const GaugeGroup& g) { return g.family() == Family::Orthogonal && g.n() == 2; }

}  // namespace

bool in_chamber(const GaugeGroup& g, std::span<const int> m, const LieConventions& conv) {
  const int r = g.rank();
  if (static_cast<int>(m.size()) != r) return false;
  if (r == 0) return true;
  switch (g.family()) {
    case Family::Unitary:
      return non_increasing(m);
    case Family::Symplectic:
      return non_increasing(m) && m.back() >= 0;
    case Family::Orthogonal:
      if (g.n() % 2 == 1) return non_increasing(m) && m.back() >= 0;
      if (r == 1) return !conv.so2_as_o2 || m[0] >= 0;
      return non_increasing(m.first(r - 1)) && m[r - 2] >= std::abs(m[r - 1]);
  }
  return false;
}

void require_chamber(const GaugeGroup& g, std::span<const int> m, const LieConventions& conv) {
  if (!in_chamber(g, m, conv)) {
    throw Error(ErrorCode::ChamberViolation, charge_text(m) + " is not a dominant charge of " + g.label());
  }
}

std::vector<int> positive_root_values(const GaugeGroup& g, std::span<const int> m) {
  require_chamber(g, m, {.so2_as_o2 = false});
  std::vector<int> out;
  const std::size_t r = m.size();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      out.push_back(std::abs(m[i] - m[j]));
      if (g.is_orthosymplectic()) out.push_back(std::abs(m[i] + m[j]));
    }
  }
  if (g.family() == Family::Symplectic) {
    for (int x : m) out.push_back(std::abs(2 * x));
  } else if (g.family() == Family::Orthogonal && g.n() % 2 == 1) {
    for (int x : m) out.push_back(std::abs(x));
  }
  return out;
}

std::vector<WeightedValue> matter_weight_values(const GaugeGroup& a, std::span<const int> ma, const GaugeGroup& b,
                                                std::span<const int> mb, bool b_is_background,
                                                const LieConventions& conv) {
  const bool unitary = a.is_unitary() && b.is_unitary();
  const bool ortho = (a.family() == Family::Orthogonal && b.family() == Family::Symplectic) ||
                     (a.family() == Family::Symplectic && b.family() == Family::Orthogonal);
  if (!unitary && !ortho) {
    throw Error(ErrorCode::MixedFamilyEdge, "no bifundamental between " + a.label() + " and " + b.label());
  }
  if (static_cast<int>(ma.size()) != a.rank()) {
    throw Error(ErrorCode::ChamberViolation, "charge length does not match " + a.label());
  }
  const std::vector<int> zeros(static_cast<std::size_t>(b.rank()), 0);
  if (b_is_background) {
    mb = zeros;
  } else if (static_cast<int>(mb.size()) != b.rank()) {
    throw Error(ErrorCode::ChamberViolation, "charge length does not match " + b.label());
  }

  std::vector<WeightedValue> out;
  if (unitary) {
    if (b_is_background) {
      for (int x : ma) out.push_back({std::abs(x), Rational(b.n())});
    } else {
      for (int x : ma)
        for (int y : mb) out.push_back({std::abs(x - y), Rational(1)});
    }
    return out;
  }

  const Rational w = conv.half_hyper == HalfHyperWeight::Quarter ? Rational(1) : Rational(1, 2);
  const bool a_is_so = a.family() == Family::Orthogonal;
  const std::span<const int> so_charge = a_is_so ? ma : mb;
  const std::span<const int> usp_charge = a_is_so ? mb : ma;
  const GaugeGroup& so_group = a_is_so ? a : b;
  for (int x : so_charge) {
    for (int y : usp_charge) {
      out.push_back({std::abs(x + y), w});
      out.push_back({std::abs(x - y), w});
    }
  }
  if (so_group.n() % 2 == 1) {
    // Zero weight of the odd-dimensional vector representation.
    for (int y : usp_charge) out.push_back({std::abs(y), w});
  }
  return out;
}

std::vector<GaugeGroup> residual_stabilizer(const GaugeGroup& g, std::span<const int> m,
                                            const LieConventions& conv) {
  require_chamber(g, m, conv);
  if (std::all_of(m.begin(), m.end(), [](int x) { return x == 0; })) return {g};

  std::vector<GaugeGroup> out;
  if (g.is_unitary()) {
    for (std::size_t i = 0; i < m.size();) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      out.push_back(GaugeGroup::U(static_cast<int>(j - i)));
      i = j;
    }
    return out;
  }

  // Orthosymplectic: zero block keeps the family, each nonzero |value| class gives U(k).
  const int zeros = static_cast<int>(std::count(m.begin(), m.end(), 0));
  if (zeros > 0) {
    if (g.family() == Family::Symplectic) {
      out.push_back(GaugeGroup::USp(2 * zeros));
    } else {
      out.push_back(GaugeGroup::SO(2 * zeros + (g.n() % 2)));
    }
  }
  std::map<int, int, std::greater<>> classes;
  for (int x : m) {
    if (x != 0) ++classes[std::abs(x)];
  }
  for (const auto& [value, count] : classes) out.push_back(GaugeGroup::U(count));
  return out;
}

std::vector<int> casimir_degrees(const GaugeGroup& g) {
  std::vector<int> out;
  const int r = g.rank();
  switch (g.family()) {
    case Family::Unitary:
      for (int k = 1; k <= r; ++k) out.push_back(k);
      break;
    case Family::Symplectic:
      for (int k = 1; k <= r; ++k) out.push_back(2 * k);
      break;
    case Family::Orthogonal:
      if (g.n() % 2 == 1) {
        for (int k = 1; k <= r; ++k) out.push_back(2 * k);
      } else if (r == 1) {
        out.push_back(1);
      } else {
        for (int k = 1; k < r; ++k) out.push_back(2 * k);
        out.push_back(r);  // Pfaffian
        std::sort(out.begin(), out.end());
      }
      break;
  }
  return out;
}

std::vector<int> dressing_degrees(const GaugeGroup& g, std::span<const int> m, const LieConventions& conv) {
  if (conv.so2_as_o2 && is_so2(g)) {
    require_chamber(g, m, conv);
    // O(2) at zero flux: the Z_2 flips the sign of the U(1) Casimir.
    return {m[0] == 0 ? 2 : 1};
  }
  std::vector<int> out;
  for (const GaugeGroup& piece : residual_stabilizer(g, m, conv)) {
    for (int d : casimir_degrees(piece)) out.push_back(d);
  }
  return out;
}

namespace {

void fill_non_increasing(int length, int lo, int hi, DominantCharge& prefix, std::vector<DominantCharge>& out) {
  if (length == 0) {
    out.push_back(prefix);
    return;
  }
  const int top = prefix.empty() ? hi : std::min(hi, prefix.back());
  for (int x = lo; x <= top; ++x) {
    prefix.push_back(x);
    fill_non_increasing(length - 1, lo, hi, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<DominantCharge> dominant_charges_in_box(const GaugeGroup& g, int lo, int hi,
                                                    const LieConventions& conv) {
  std::vector<DominantCharge> out;
  const int r = g.rank();
  DominantCharge prefix;
  if (r == 0) return {DominantCharge{}};
  if (g.is_unitary()) {
    if (lo <= hi) fill_non_increasing(r, lo, hi, prefix, out);
    return out;
  }
  if (hi < 0) return out;
  if (g.family() == Family::Orthogonal && g.n() % 2 == 0) {
    if (r == 1) {
      for (int x = conv.so2_as_o2 ? 0 : -hi; x <= hi; ++x) out.push_back({x});
      return out;
    }
    std::vector<DominantCharge> heads;
    fill_non_increasing(r - 1, 0, hi, prefix, heads);
    for (DominantCharge& head : heads) {
      const int last = head.back();
      for (int x = -last; x <= last; ++x) {
        DominantCharge m = head;
        m.push_back(x);
        out.push_back(std::move(m));
      }
    }
    return out;
  }
  fill_non_increasing(r, 0, hi, prefix, out);
  return out;
}

std::vector<DominantCharge> dominant_charges(const GaugeGroup& g, int bound, const LieConventions& conv) {
  if (bound < 0) throw Error(ErrorCode::InvalidArgument, "charge bound must be non-negative");
  return dominant_charges_in_box(g, -bound, bound, conv);
}

// ---------------------------------------------------------------------------

DominantCharge dominant_representative(const GaugeGroup& g, std::span<const int> m, const LieConventions& conv) {
  DominantCharge out(m.begin(), m.end());
  if (g.is_unitary()) {
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
  }
  if (is_so2(g)) {
    if (conv.so2_as_o2) out[0] = std::abs(out[0]);
    return out;
  }
  const long negatives = std::count_if(out.begin(), out.end(), [](int x) { return x < 0; });
  for (int& x : out) x = std::abs(x);
  std::sort(out.begin(), out.end(), std::greater<>());
  // SO(2r) only has even sign changes; an odd count survives on the last entry.
  if (g.family() == Family::Orthogonal && g.n() % 2 == 0 && negatives % 2 == 1) out.back() = -out.back();
  return out;
}

std::vector<DominantCharge> weyl_orbit(const GaugeGroup& g, std::span<const int> m, const LieConventions& conv) {
  std::vector<DominantCharge> out;
  DominantCharge base(m.begin(), m.end());
  std::sort(base.begin(), base.end());
  const std::size_t r = base.size();
  const bool signs = g.is_orthosymplectic() && !(is_so2(g) && !conv.so2_as_o2);
  const bool even_only = g.family() == Family::Orthogonal && g.n() % 2 == 0 && !is_so2(g);
  do {
    const std::size_t patterns = signs ? (std::size_t{1} << r) : 1;
    for (std::size_t mask = 0; mask < patterns; ++mask) {
      if (even_only && std::popcount(mask) % 2 == 1) continue;
      DominantCharge w = base;
      for (std::size_t i = 0; i < r; ++i) {
        if (mask >> i & 1U) w[i] = -w[i];
      }
      out.push_back(std::move(w));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

long vector_quarter_delta(const GaugeGroup& g, std::span<const int> m) {
  long sum = 0;
  const std::size_t r = m.size();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      sum += std::abs(m[i] - m[j]);
      if (g.is_orthosymplectic()) sum += std::abs(m[i] + m[j]);
    }
  }
  if (g.family() == Family::Symplectic) {
    for (int x : m) sum += 2L * std::abs(x);
  } else if (g.family() == Family::Orthogonal && g.n() % 2 == 1) {
    for (int x : m) sum += std::abs(x);
  }
  return -4 * sum;
}

long edge_quarter_delta(const GaugeGroup& a, std::span<const int> ma, const GaugeGroup& b, std::span<const int> mb,
                        int multiplicity, const LieConventions& conv) {
  long sum = 0;
  if (a.is_unitary()) {
    for (int x : ma)
      for (int y : mb) sum += std::abs(x - y);
    return 2L * sum * multiplicity;
  }
  const bool a_is_so = a.family() == Family::Orthogonal;
  const std::span<const int> so_charge = a_is_so ? ma : mb;
  const std::span<const int> usp_charge = a_is_so ? mb : ma;
  for (int x : so_charge)
    for (int y : usp_charge) sum += std::abs(x + y) + std::abs(x - y);
  if ((a_is_so ? a : b).n() % 2 == 1) {
    for (int y : usp_charge) sum += std::abs(y);
  }
  const long scale = conv.half_hyper == HalfHyperWeight::Quarter ? 2 : 1;
  return scale * sum * multiplicity;
}

long background_quarter_delta(const GaugeGroup& a, std::span<const int> ma, const GaugeGroup& b, int multiplicity,
                              const LieConventions& conv) {
  long abs_sum = 0;
  for (int x : ma) abs_sum += std::abs(x);
  // Every family reduces to dim(b) copies of |m_i| once b's charges vanish.
  const long scale = a.is_unitary() || conv.half_hyper == HalfHyperWeight::Quarter ? 2 : 1;
  return scale * b.n() * abs_sum * multiplicity;
}

}  // namespace coulomb

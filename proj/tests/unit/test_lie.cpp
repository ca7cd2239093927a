#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>

#include "coulomb/error.hpp"
#include "coulomb/lie.hpp"

using namespace coulomb;

namespace {

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

long weyl_order(const GaugeGroup& g) {
  const int r = g.rank();
  switch (g.family()) {
    case Family::Unitary:
      return factorial(r);
    case Family::Symplectic:
      return (1L << r) * factorial(r);
    case Family::Orthogonal:
      if (g.n() % 2 == 1) return (1L << r) * factorial(r);
      if (r <= 1) return 1;
      return (1L << (r - 1)) * factorial(r);
  }
  return 0;
}

// Canonical form under permutations and the allowed sign changes, written
// independently of the library.
std::vector<int> canonical(const GaugeGroup& g, std::vector<int> m) {
  if (g.is_unitary()) {
    std::sort(m.rbegin(), m.rend());
    return m;
  }
  if (g.family() == Family::Orthogonal && g.n() == 2) return m;
  int sign = 1;
  for (int& x : m) {
    if (x < 0) sign = -sign;
    x = std::abs(x);
  }
  std::sort(m.rbegin(), m.rend());
  if (g.family() == Family::Orthogonal && g.n() % 2 == 0 && sign < 0) m.back() = -m.back();
  return m;
}

std::set<std::vector<int>> brute_force_representatives(const GaugeGroup& g, int bound) {
  std::set<std::vector<int>> out;
  const int r = g.rank();
  std::vector<int> m(static_cast<std::size_t>(r), -bound);
  while (true) {
    out.insert(canonical(g, m));
    int i = 0;
    while (i < r && m[static_cast<std::size_t>(i)] == bound) m[static_cast<std::size_t>(i++)] = -bound;
    if (i == r) break;
    ++m[static_cast<std::size_t>(i)];
  }
  return out;
}

const std::vector<GaugeGroup> kSmallGroups = {
    GaugeGroup::U(1),   GaugeGroup::U(2),   GaugeGroup::U(3),   GaugeGroup::SO(2),  GaugeGroup::SO(3),
    GaugeGroup::SO(4),  GaugeGroup::SO(5),  GaugeGroup::SO(6),  GaugeGroup::SO(7),  GaugeGroup::USp(2),
    GaugeGroup::USp(4), GaugeGroup::USp(6),
};

}  // namespace

TEST(Lie, CasimirDegrees) {
  EXPECT_EQ(casimir_degrees(GaugeGroup::U(3)), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(casimir_degrees(GaugeGroup::USp(4)), (std::vector<int>{2, 4}));
  EXPECT_EQ(casimir_degrees(GaugeGroup::SO(7)), (std::vector<int>{2, 4, 6}));
  EXPECT_EQ(casimir_degrees(GaugeGroup::SO(8)), (std::vector<int>{2, 4, 4, 6}));
  EXPECT_EQ(casimir_degrees(GaugeGroup::SO(4)), (std::vector<int>{2, 2}));
  EXPECT_EQ(casimir_degrees(GaugeGroup::SO(2)), (std::vector<int>{1}));
}

TEST(Lie, CasimirCountMatchesDimension) {
  // sum (2 d_i - 1) = dim g.
  auto dim = [](const GaugeGroup& g) {
    const int n = g.n();
    if (g.is_unitary()) return n * n;
    return g.family() == Family::Symplectic ? n * (n + 1) / 2 : n * (n - 1) / 2;
  };
  for (const GaugeGroup& g : kSmallGroups) {
    int total = 0;
    for (int d : casimir_degrees(g)) total += 2 * d - 1;
    EXPECT_EQ(total, dim(g)) << g.label();
  }
}

TEST(Lie, PositiveRoots) {
  const std::vector<int> u3{2, 1, 0};
  auto roots = positive_root_values(GaugeGroup::U(3), u3);
  std::sort(roots.begin(), roots.end());
  EXPECT_EQ(roots, (std::vector<int>{1, 1, 2}));

  const std::vector<int> usp4{2, 1};
  roots = positive_root_values(GaugeGroup::USp(4), usp4);
  std::sort(roots.begin(), roots.end());
  EXPECT_EQ(roots, (std::vector<int>{1, 2, 3, 4}));

  const std::vector<int> so5{1, 0};
  roots = positive_root_values(GaugeGroup::SO(5), so5);
  std::sort(roots.begin(), roots.end());
  EXPECT_EQ(roots, (std::vector<int>{0, 1, 1, 1}));
}

TEST(Lie, ResidualStabilizer) {
  const std::vector<int> a{1, 1, 0};
  EXPECT_EQ(residual_stabilizer(GaugeGroup::U(3), a), (std::vector<GaugeGroup>{GaugeGroup::U(2), GaugeGroup::U(1)}));
  const std::vector<int> zero{0, 0};
  EXPECT_EQ(residual_stabilizer(GaugeGroup::USp(4), zero), (std::vector<GaugeGroup>{GaugeGroup::USp(4)}));
  const std::vector<int> b{1, 0};
  EXPECT_EQ(residual_stabilizer(GaugeGroup::USp(4), b), (std::vector<GaugeGroup>{GaugeGroup::USp(2), GaugeGroup::U(1)}));
  EXPECT_EQ(residual_stabilizer(GaugeGroup::SO(5), b), (std::vector<GaugeGroup>{GaugeGroup::SO(3), GaugeGroup::U(1)}));
  const std::vector<int> c{1, -1};
  EXPECT_EQ(residual_stabilizer(GaugeGroup::SO(4), c), (std::vector<GaugeGroup>{GaugeGroup::U(2)}));
}

TEST(Lie, DressingDegrees) {
  const std::vector<int> a{1, 1, 0};
  EXPECT_EQ(dressing_degrees(GaugeGroup::U(3), a), (std::vector<int>{1, 2, 1}));
  const std::vector<int> b{1, 0};
  EXPECT_EQ(dressing_degrees(GaugeGroup::USp(4), b), (std::vector<int>{2, 1}));
  const std::vector<int> c{1, 1};
  EXPECT_EQ(dressing_degrees(GaugeGroup::SO(5), c), (std::vector<int>{1, 2}));

  const std::vector<int> zero{0};
  const std::vector<int> one{1};
  EXPECT_EQ(dressing_degrees(GaugeGroup::SO(2), zero), (std::vector<int>{1}));
  const LieConventions o2{.so2_as_o2 = true};
  EXPECT_EQ(dressing_degrees(GaugeGroup::SO(2), zero, o2), (std::vector<int>{2}));
  EXPECT_EQ(dressing_degrees(GaugeGroup::SO(2), one, o2), (std::vector<int>{1}));
}

TEST(Lie, ChamberErrors) {
  const std::vector<int> u{0, 1};
  EXPECT_FALSE(in_chamber(GaugeGroup::U(2), u));
  const std::vector<int> neg{-1};
  EXPECT_FALSE(in_chamber(GaugeGroup::USp(2), neg));
  EXPECT_TRUE(in_chamber(GaugeGroup::SO(2), neg));
  EXPECT_FALSE(in_chamber(GaugeGroup::SO(2), neg, {.so2_as_o2 = true}));
  const std::vector<int> d_bad{1, -2};
  const std::vector<int> d_ok{2, -1};
  EXPECT_FALSE(in_chamber(GaugeGroup::SO(4), d_bad));
  EXPECT_TRUE(in_chamber(GaugeGroup::SO(4), d_ok));
  const std::vector<int> short_charge{1};
  EXPECT_FALSE(in_chamber(GaugeGroup::U(2), short_charge));

  try {
    require_chamber(GaugeGroup::U(2), u);
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ChamberViolation);
  }
  EXPECT_THROW(residual_stabilizer(GaugeGroup::USp(2), neg), Error);
  EXPECT_THROW(dominant_charges(GaugeGroup::U(1), -1), Error);
}

TEST(Lie, DominantChargesU2) {
  const auto got = dominant_charges(GaugeGroup::U(2), 1);
  const std::set<DominantCharge> as_set(got.begin(), got.end());
  const std::set<DominantCharge> expected{{-1, -1}, {0, -1}, {0, 0}, {1, -1}, {1, 0}, {1, 1}};
  EXPECT_EQ(as_set, expected);
  EXPECT_EQ(got.size(), expected.size());
  EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
}

TEST(Lie, DominantChargesMatchOrbitRepresentatives) {
  for (const GaugeGroup& g : kSmallGroups) {
    for (int bound = 0; bound <= 3; ++bound) {
      const auto got = dominant_charges(g, bound);
      const std::set<DominantCharge> as_set(got.begin(), got.end());
      EXPECT_EQ(as_set.size(), got.size()) << g.label();
      EXPECT_EQ(as_set, brute_force_representatives(g, bound)) << g.label() << " bound " << bound;
      for (const auto& m : got) EXPECT_TRUE(in_chamber(g, m)) << g.label();
    }
  }
}

TEST(Lie, OrbitStabilizerCounting) {
  for (const GaugeGroup& g : kSmallGroups) {
    for (const auto& m : dominant_charges(g, 2)) {
      long stabilizer = 1;
      for (const GaugeGroup& piece : residual_stabilizer(g, m)) stabilizer *= weyl_order(piece);
      const auto orbit = weyl_orbit(g, m);
      EXPECT_EQ(static_cast<long>(orbit.size()) * stabilizer, weyl_order(g)) << g.label();
      for (const auto& w : orbit) EXPECT_EQ(dominant_representative(g, w), m) << g.label();
    }
  }
}

TEST(Lie, DominantRepresentative) {
  const std::vector<int> a{-3, 2, -1};
  EXPECT_EQ(dominant_representative(GaugeGroup::USp(6), a), (DominantCharge{3, 2, 1}));
  EXPECT_EQ(dominant_representative(GaugeGroup::SO(6), a), (DominantCharge{3, 2, 1}));
  const std::vector<int> b{-3, 2, 1};
  EXPECT_EQ(dominant_representative(GaugeGroup::SO(6), b), (DominantCharge{3, 2, -1}));
  EXPECT_EQ(dominant_representative(GaugeGroup::U(3), b), (DominantCharge{2, 1, -3}));
  const std::vector<int> c{-2};
  EXPECT_EQ(dominant_representative(GaugeGroup::SO(2), c), (DominantCharge{-2}));
  EXPECT_EQ(dominant_representative(GaugeGroup::SO(2), c, {.so2_as_o2 = true}), (DominantCharge{2}));
}

TEST(Lie, VectorQuarterDelta) {
  const std::vector<int> u{1, 0};
  EXPECT_EQ(vector_quarter_delta(GaugeGroup::U(2), u), -4);
  const std::vector<int> usp{1};
  EXPECT_EQ(vector_quarter_delta(GaugeGroup::USp(2), usp), -8);
  const std::vector<int> so3{1};
  EXPECT_EQ(vector_quarter_delta(GaugeGroup::SO(3), so3), -4);
  const std::vector<int> so2{5};
  EXPECT_EQ(vector_quarter_delta(GaugeGroup::SO(2), so2), 0);
  for (const GaugeGroup& g : kSmallGroups) {
    for (const auto& m : dominant_charges(g, 2)) {
      long sum = 0;
      for (int v : positive_root_values(g, m)) sum += v;
      EXPECT_EQ(vector_quarter_delta(g, m), -4 * sum) << g.label();
    }
  }
}

TEST(Lie, EdgeAndBackgroundQuarterDelta) {
  const std::vector<int> one{1};
  const std::vector<int> zero{0};
  EXPECT_EQ(edge_quarter_delta(GaugeGroup::U(1), one, GaugeGroup::U(1), zero, 1, {}), 2);
  EXPECT_EQ(edge_quarter_delta(GaugeGroup::U(1), one, GaugeGroup::U(1), zero, 3, {}), 6);
  EXPECT_EQ(background_quarter_delta(GaugeGroup::U(2), std::vector<int>{1, -1}, GaugeGroup::U(3), 1, {}), 12);

  for (int k = 1; k <= 4; ++k) {
    for (int m = 0; m <= 3; ++m) {
      const std::vector<int> charge{m};
      EXPECT_EQ(background_quarter_delta(GaugeGroup::USp(2), charge, GaugeGroup::SO(2 * k), 1, {}), 4L * k * m);
      EXPECT_EQ(background_quarter_delta(GaugeGroup::USp(2), charge, GaugeGroup::SO(2 * k), 1,
                                         {.half_hyper = HalfHyperWeight::Eighth}),
                2L * k * m);
    }
  }
}

TEST(Lie, MatterWeightsAgreeWithQuarterDelta) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3);
  const std::vector<std::pair<GaugeGroup, GaugeGroup>> pairs = {
      {GaugeGroup::U(2), GaugeGroup::U(3)},     {GaugeGroup::SO(3), GaugeGroup::USp(2)},
      {GaugeGroup::USp(4), GaugeGroup::SO(5)},  {GaugeGroup::SO(4), GaugeGroup::USp(4)},
      {GaugeGroup::SO(2), GaugeGroup::USp(2)},
  };
  for (const HalfHyperWeight hw : {HalfHyperWeight::Quarter, HalfHyperWeight::Eighth}) {
    const LieConventions conv{.half_hyper = hw};
    for (const auto& [a, b] : pairs) {
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> ma(static_cast<std::size_t>(a.rank()));
        std::vector<int> mb(static_cast<std::size_t>(b.rank()));
        for (int& x : ma) x = entry(rng);
        for (int& x : mb) x = entry(rng);
        ma = dominant_representative(a, ma);
        mb = dominant_representative(b, mb);
        Rational delta = 0;
        for (const auto& [value, weight] : matter_weight_values(a, ma, b, mb, false, conv)) delta += weight * value / 2;
        EXPECT_EQ(delta * 4, Rational(edge_quarter_delta(a, ma, b, mb, 1, conv))) << a.label() << "-" << b.label();

        Rational background = 0;
        for (const auto& [value, weight] : matter_weight_values(a, ma, b, mb, true, conv)) {
          background += weight * value / 2;
        }
        EXPECT_EQ(background * 4, Rational(background_quarter_delta(a, ma, b, 1, conv)))
            << a.label() << " with background " << b.label();
      }
    }
  }
}

TEST(Lie, MixedFamilyEdgeRejected) {
  const std::vector<int> a{1};
  EXPECT_THROW(matter_weight_values(GaugeGroup::U(1), a, GaugeGroup::SO(2), a), Error);
  EXPECT_THROW(matter_weight_values(GaugeGroup::SO(3), a, GaugeGroup::SO(2), a), Error);
}

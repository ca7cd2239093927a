#include "coulomb/check_suite.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "coulomb/gale.hpp"
#include "coulomb/implosion.hpp"
#include "coulomb/plethystic.hpp"

namespace coulomb {

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

struct Outcome {
  std::string computed;
  bool ok;
};

std::string first_difference(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  for (int k = 0; k <= order; ++k) {
    if (a.at(k) != b.at(k)) return "t^" + std::to_string(k) + ": " + a.at(k).str() + " vs " + b.at(k).str();
  }
  return "identical to t^" + std::to_string(order);
}

Outcome compare(const TruncatedSeries& computed, const TruncatedSeries& expected) {
  return {first_difference(computed, expected), computed.truncated(expected.order()) == expected};
}

TruncatedSeries hs(const HSRequest& r) { return coulomb_hilbert_series(r).series; }

HSRequest request_for(Quiver q, int order, unsigned threads) {
  HSRequest r;
  r.quiver = std::move(q);
  r.order = order;
  r.threads = threads;
  return r;
}

Quiver u1_with_flavors(int d) {
  Quiver q;
  q.add_node("g", NodeKind::Gauge, GaugeGroup::U(1));
  q.add_node("f", NodeKind::Flavor, GaugeGroup::U(d));
  q.add_edge("g", "f");
  return q;
}

TruncatedSeries u1_closed_form(int d, int order) {
  TruncatedSeries num = TruncatedSeries::one(order);
  if (2 * d <= order) num.set(2 * d, -1);
  const TruncatedSeries inv_d = expand_inverse(d, order);
  return num * expand_inverse(2, order) * inv_d * inv_d;
}

Quiver single_node(GaugeGroup g, GaugeGroup flavor) {
  Quiver q;
  q.add_node("g", NodeKind::Gauge, g);
  q.add_node("f", NodeKind::Flavor, flavor);
  q.add_edge("g", "f");
  return q;
}

// Sum over the whole cocharacter lattice, each point weighted by 1/|orbit|.
TruncatedSeries weyl_brute_force(const GaugeGroup& g, const GaugeGroup& flavor, int order) {
  const int box = order + 2;
  RationalSeries sum(order);
  std::vector<int> m(static_cast<std::size_t>(g.rank()), -box);
  for (;;) {
    const long qd = vector_quarter_delta(g, m) + background_quarter_delta(g, m, flavor, 1, {});
    if (qd % 2 == 0 && qd / 2 <= order) {
      const DominantCharge dom = dominant_representative(g, m);
      const auto orbit = static_cast<long>(weyl_orbit(g, dom).size());
      const std::vector<int> degrees = dressing_degrees(g, dom);
      TruncatedSeries p = TruncatedSeries::one(order);
      for (int d : degrees) p = p * expand_inverse(2 * d, order);
      for (int k = 0; k + qd / 2 <= order; ++k) {
        sum.add_to(static_cast<int>(k + qd / 2), Rational(p.at(k), orbit));
      }
    }
    std::size_t i = 0;
    while (i < m.size() && ++m[i] > box) m[i++] = -box;
    if (i == m.size()) break;
  }
  return to_integral(sum);
}

ToricConfig random_config(std::mt19937& rng) {
  std::uniform_int_distribution<int> dd(1, 8);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (;;) {
    const int d = dd(rng);
    const int n = std::uniform_int_distribution<int>(0, std::min(d, 4))(rng);
    std::vector<std::vector<long>> cols(static_cast<std::size_t>(d), std::vector<long>(static_cast<std::size_t>(n)));
    for (auto& col : cols) {
      for (long& x : col) x = entry(rng);
    }
    ToricConfig c = ToricConfig::from_columns(static_cast<std::size_t>(n), cols);
    if (rank(c.u) != c.n()) continue;
    // Involution needs a saturated row lattice, i.e. columns generating Z^n.
    if (duality_report(c).image_index != 1) continue;
    return c;
  }
}

class Suite {
 public:
  explicit Suite(const SuiteOptions& options) : opt_(options) {}

  void run(int criterion, std::string name, std::string expected, double limit, const std::function<Outcome()>& body) {
    CheckRow row;
    row.criterion = criterion;
    row.name = std::move(name);
    row.expected = std::move(expected);
    row.limit = limit;
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = body();
      row.computed = std::move(o.computed);
      row.passed = o.ok;
    } catch (const std::exception& e) {
      row.computed = std::string("error: ") + e.what();
      row.passed = false;
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit > 0 && row.seconds > limit) {
      row.passed = false;
      row.computed += " [over the time limit]";
    }
    rows_.push_back(std::move(row));
  }

  const SuiteOptions& options() const { return opt_; }
  std::vector<CheckRow> take() { return std::move(rows_); }

 private:
  SuiteOptions opt_;
  std::vector<CheckRow> rows_;
};

void criteria_1_to_4(Suite& s, std::map<std::string, TruncatedSeries>& golden) {
  const unsigned th = s.options().threads;
  for (int d = 1; d <= 5; ++d) {
    s.run(1, "U(1) with " + std::to_string(d) + " flavors, order 20", "closed form", 1.0, [&, d] {
      const TruncatedSeries closed = u1_closed_form(d, 20);
      golden.insert_or_assign("U(1) with " + std::to_string(d) + " flavors", closed.truncated(10));
      return compare(hs(request_for(u1_with_flavors(d), 20, th)), closed);
    });
  }
  for (int n = 2; n <= 3; ++n) {
    s.run(2, "nilpotent quiver n=" + std::to_string(n) + ", order 10", "nilcone series", 60.0, [&, n] {
      const TruncatedSeries computed = hs(request_for(build_linear_nilpotent_quiver(n), 10, th));
      golden.insert_or_assign("nilpotent quiver n=" + std::to_string(n), computed);
      return compare(computed, nilcone_reference_hs(n, 10));
    });
  }
  s.run(3, "ungauged bouquet n=2", "t = 4, t^2 = 10", 1.0, [&] {
    HSRequest r = ungauged_bouquet_request(2, 10);
    r.threads = th;
    const TruncatedSeries computed = hs(r);
    golden.insert_or_assign("ungauged bouquet n=2", computed);
    return Outcome{"t = " + computed.at(1).str() + ", t^2 = " + computed.at(2).str(),
                   computed.at(1) == 4 && computed.at(2) == 10};
  });
  s.run(4, "ungauged bouquet n=3, order 4", "t^2 = 28", 60.0, [&] {
    HSRequest r = ungauged_bouquet_request(3, 4);
    r.threads = th;
    const TruncatedSeries computed = hs(r);
    golden.insert_or_assign("ungauged bouquet n=3", computed);
    return Outcome{"t^2 = " + computed.at(2).str(), computed.at(2) == 28};
  });
}

void criteria_5_to_7(Suite& s) {
  const unsigned th = s.options().threads;
  for (int n = 4; n <= 5; ++n) {
    const long expected = static_cast<long>(n) * n + n - 2;
    s.run(5, "ungauged bouquet n=" + std::to_string(n) + " t^2", "t^2 = " + std::to_string(expected), 600.0, [&, n] {
      const ContributionReport r = hs_contribution_check(n, th);
      std::ostringstream os;
      os << "t^2 = " << r.t2 << "; t^" << n - 1 << " = " << r.t_n_minus_1 << " with " << r.identified.size()
         << " bare monopoles of that degree identified";
      return Outcome{os.str(), r.t2_matches && r.identified_have_degree};
    });
  }
  for (int n = 2; n <= 3; ++n) {
    s.run(6, "refined integral n=" + std::to_string(n) + ", order 8", "nilcone series", 60.0, [&, n] {
      HSRequest r = refined_bouquet_request(n, 8);
      r.threads = th;
      return compare(refined_implosion_integral(r, n), nilcone_reference_hs(n, 8));
    });
  }
  const int last = s.options().include_d4 ? 4 : 3;
  for (int n = 3; n <= last; ++n) {
    const long expected = 2L * n * n;
    s.run(7, "D_" + std::to_string(n) + " bouquet quiver t^2", "t^2 = " + std::to_string(expected), 300.0, [&, n] {
      HSRequest r = request_for(build_dn_implosion_quiver(n), 2, th);
      const TruncatedSeries computed = hs(r);
      return Outcome{"t^2 = " + computed.at(2).str(), computed.at(2) == expected};
    });
  }
}

void criteria_8_and_9(Suite& s) {
  s.run(8, "4 rank of ungauged bouquet n=2..10", "2(n^2+n-2)", 0.0, [] {
    std::string bad;
    for (int n = 2; n <= 10; ++n) {
      const Quiver q = ungauge(build_bouquet_quiver(n), "b1");
      if (expected_coulomb_dimension_real(q) != 2 * (n * n + n - 2)) bad += " n=" + std::to_string(n);
    }
    return Outcome{bad.empty() ? "all equal" : "differs at" + bad, bad.empty()};
  });
  s.run(8, "4 rank of D_n bouquet quiver n=2..8", "4n^2", 0.0, [] {
    std::string bad;
    for (int n = 2; n <= 8; ++n) {
      if (4 * gauge_group_rank(build_dn_implosion_quiver(n)) != 4 * n * n) bad += " n=" + std::to_string(n);
    }
    return Outcome{bad.empty() ? "all equal" : "differs at" + bad, bad.empty()};
  });
  s.run(9, "nilpotent quiver n=2..12 balanced", "every gauge node balanced", 0.0, [] {
    std::string bad;
    for (int n = 2; n <= 12; ++n) {
      if (!balance_report(build_linear_nilpotent_quiver(n)).all_balanced) bad += " n=" + std::to_string(n);
    }
    return Outcome{bad.empty() ? "all balanced" : "unbalanced at" + bad, bad.empty()};
  });
  s.run(9, "bouquet leaf balance n=2..12", "n-3", 0.0, [] {
    std::string bad;
    for (int n = 2; n <= 12; ++n) {
      const Quiver q = build_bouquet_quiver(n);
      for (int i = 1; i <= n; ++i) {
        if (node_balance(q, "b" + std::to_string(i)) != n - 3) {
          bad += " n=" + std::to_string(n);
          break;
        }
      }
    }
    return Outcome{bad.empty() ? "all equal" : "differs at" + bad, bad.empty()};
  });
  s.run(9, "D_n chain balanced n=2..8", "chain balanced; USp(2n-2) balanced with bouquet", 0.0, [] {
    std::string bad;
    for (int n = 2; n <= 8; ++n) {
      if (!balance_report(build_dn_implosion_quiver(n, DnVariant::Flavor)).all_balanced) {
        bad += " flavor n=" + std::to_string(n);
      }
      if (node_balance(build_dn_implosion_quiver(n), "c" + std::to_string(2 * n - 2)) != 0) {
        bad += " bouquet n=" + std::to_string(n);
      }
    }
    return Outcome{bad.empty() ? "all balanced" : "unbalanced at" + bad, bad.empty()};
  });
  s.run(9, "predicted symmetry of bouquet n=4..12", "dimension n^2+n-2", 0.0, [] {
    std::string bad;
    for (int n = 4; n <= 12; ++n) {
      if (predict_global_symmetry(build_bouquet_quiver(n)).total_dimension != n * n + n - 2) {
        bad += " n=" + std::to_string(n);
      }
    }
    return Outcome{bad.empty() ? "all equal" : "differs at" + bad, bad.empty()};
  });
}

void criterion_10(Suite& s, const std::map<std::string, TruncatedSeries>& golden) {
  const unsigned th = s.options().threads;
  s.run(10, "PE(PL(s)) = s on golden series, order 10", std::to_string(golden.size()) + " series", 0.0, [&] {
    std::string bad;
    for (const auto& [name, series] : golden) {
      const int order = std::min(series.order(), 10);
      const TruncatedSeries s10 = series.truncated(order);
      if (plethystic_exp(plethystic_log(s10, order), order) != s10) bad += " [" + name + "]";
    }
    return Outcome{bad.empty() ? "identity holds" : "fails for" + bad, bad.empty() && !golden.empty()};
  });

  s.run(10, "Weyl-orbit lattice sum, rank <= 3, order 6", "matches chamber sum", 0.0, [&] {
    const std::vector<std::pair<GaugeGroup, GaugeGroup>> cases = {
        {GaugeGroup::U(2), GaugeGroup::U(4)},       {GaugeGroup::U(3), GaugeGroup::U(6)},
        {GaugeGroup::USp(2), GaugeGroup::SO(8)},    {GaugeGroup::USp(4), GaugeGroup::SO(12)},
        {GaugeGroup::USp(6), GaugeGroup::SO(16)},   {GaugeGroup::SO(3), GaugeGroup::USp(4)},
        {GaugeGroup::SO(4), GaugeGroup::USp(6)},    {GaugeGroup::SO(5), GaugeGroup::USp(8)},
        {GaugeGroup::SO(6), GaugeGroup::USp(12)},   {GaugeGroup::SO(7), GaugeGroup::USp(14)},
    };
    std::string bad;
    for (const auto& [g, f] : cases) {
      const TruncatedSeries chamber = hs(request_for(single_node(g, f), 6, th));
      if (weyl_brute_force(g, f, 6) != chamber) bad += " " + g.label();
    }
    return Outcome{bad.empty() ? std::to_string(cases.size()) + " groups agree" : "differs for" + bad, bad.empty()};
  });

  s.run(10, "Gale involution and exchange, 200 random configs, d <= 8", "all hold", 0.0, [] {
    std::mt19937 rng(20240229);
    int failures = 0;
    for (int i = 0; i < 200; ++i) {
      const ToricConfig c = random_config(rng);
      const ToricConfig dual = gale_dual(c);
      const bool involution = same_row_lattice(gale_dual(dual).u, c.u);
      const DualityReport a = duality_report(c);
      const DualityReport b = duality_report(dual);
      const bool exchange = a.fi_primal == b.isometry_rank_primal && a.fi_dual == b.fi_primal &&
                            a.dim_primal + a.dim_dual == 4 * c.d() && is_gale_dual_pair(c, dual);
      if (!involution || !exchange) ++failures;
    }
    return Outcome{std::to_string(failures) + " failures", failures == 0};
  });

  s.run(10, "enumeration stability, bouquet n=2 and D_3", "unchanged by wider shells", 0.0, [&] {
    std::string bad;
    std::vector<std::pair<std::string, HSRequest>> reqs;
    reqs.emplace_back("bouquet n=2", ungauged_bouquet_request(2, 6));
    reqs.emplace_back("D_3", request_for(build_dn_implosion_quiver(3), 2, th));
    for (auto& [name, r] : reqs) {
      r.threads = th;
      const TruncatedSeries base = hs(r);
      HSRequest wide = r;
      wide.policy.initial_bound = 6;
      wide.policy.empty_shells = 4;
      if (hs(wide) != base) bad += " [" + name + " tree]";
      if (name == "bouquet n=2") {
        wide.strategy = EngineStrategy::LatticeSum;
        if (hs(wide) != base) bad += " [" + name + " lattice]";
      }
    }
    return Outcome{bad.empty() ? "identical" : "changed for" + bad, bad.empty()};
  });

  s.run(10, "ungauging choice, bouquet n=2,3", "same series", 0.0, [&] {
    std::string bad;
    for (int n = 2; n <= 3; ++n) {
      const int order = n == 2 ? 6 : 4;
      HSRequest r = request_for(build_bouquet_quiver(n), order, th);
      r.ungauge = "b1";
      const TruncatedSeries base = hs(r);
      for (int i = 2; i <= n; ++i) {
        r.ungauge = "b" + std::to_string(i);
        if (hs(r) != base) bad += " n=" + std::to_string(n) + ":b" + std::to_string(i);
      }
      r.ungauge = "g1";
      if (hs(r) != base) bad += " n=" + std::to_string(n) + ":g1";
    }
    return Outcome{bad.empty() ? "identical" : "differs for" + bad, bad.empty()};
  });
}

}  // namespace

SuiteResult run_check_suite(const SuiteOptions& options) {
  Suite s(options);
  std::map<std::string, TruncatedSeries> golden;
  criteria_1_to_4(s, golden);
  criteria_5_to_7(s);
  criteria_8_and_9(s);
  golden.emplace("nilcone n=4", nilcone_reference_hs(4, 10));
  criterion_10(s, golden);

  SuiteResult out;
  out.rows = s.take();
  out.all_passed = std::all_of(out.rows.begin(), out.rows.end(), [](const CheckRow& r) { return r.passed; });
  std::string digest;
  for (const CheckRow& r : out.rows) {
    digest += std::to_string(r.criterion) + '\x1f' + r.name + '\x1f' + r.expected + '\x1f' + r.computed + '\x1f' +
              (r.passed ? "1" : "0") + '\x1e';
  }
  out.hash = fnv1a_hex(digest);
  return out;
}

std::string suite_table(const SuiteResult& result) {
  std::ostringstream os;
  char line[512];
  std::snprintf(line, sizeof line, "%-3s %-4s %-52s %-34s %s\n", "#", "", "check", "expected", "computed");
  os << line;
  for (const CheckRow& r : result.rows) {
    std::snprintf(line, sizeof line, "%-3d %-4s %-52s %-34s %s (%.2fs)\n", r.criterion, r.passed ? "PASS" : "FAIL",
                  r.name.c_str(), r.expected.c_str(), r.computed.c_str(), r.seconds);
    os << line;
  }
  const auto passed = std::count_if(result.rows.begin(), result.rows.end(), [](const CheckRow& r) { return r.passed; });
  os << passed << "/" << result.rows.size() << " checks passed; hash " << result.hash << "\n";
  return os.str();
}

}  // namespace coulomb

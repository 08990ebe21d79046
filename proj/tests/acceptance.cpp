// One line per acceptance criterion; exit status 0 iff every line passes.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "sphanti/anticanon.hpp"
#include "sphanti/catalog.hpp"
#include "sphanti/knoplie.hpp"
#include "sphanti/lunatypes.hpp"
#include "support.hpp"

using namespace sphanti;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::int64_t> constant(std::size_t n, std::int64_t v) { return std::vector<std::int64_t>(n, v); }

bool passes(const Report& r, const std::string& check) {
  bool seen = false;
  for (const auto& f : r)
    if (f.check == check) {
      seen = true;
      if (!f.pass) return false;
    }
  return seen;
}

Outcome criterion_1() {
  Outcome o;
  const auto t0 = Clock::now();
  for (int n = 2; n <= 8; ++n) {
    const auto d = builtin("brion_5_1", n).datum;
    o.require(anticanonical_divisor(d).coefficients() == constant(static_cast<std::size_t>(n - 1), 2),
              "coefficients at n=" + std::to_string(n));
  }
  const double dt = seconds_since(t0);
  o.require(dt < 1.0, "runtime " + std::to_string(dt) + " s");
  if (o.pass) o.detail = "n=2..8 all m_i = 2 in " + std::to_string(dt) + " s";
  return o;
}

Outcome criterion_2() {
  Outcome o;
  const auto d = builtin("brion_5_2").datum;
  o.require(anticanonical_divisor(d).coefficients() == constant(3, 1), "m != (1,1,1)");
  const std::vector<std::pair<int, int>> pairs = {{0, 1}, {0, 2}, {1, 2}};
  for (std::size_t i = 0; i < 3; ++i)
    o.require(*d.colors[i].chi == d.rs.fundamental_weight(pairs[i].first) + d.rs.fundamental_weight(pairs[i].second),
              "chi of " + d.colors[i].name);
  o.require(verify_decomposition(d), "decomposition");
  const auto cone = valuation_cone(d);
  o.require(cone.halfspaces.size() == 3, "halfspace count");
  for (std::size_t i = 0; i < cone.halfspaces.size() && i < 3; ++i)
    o.require(cone.halfspaces[i] == d.rs.simple_root(i), "halfspace " + std::to_string(i));
  testing::Gen gen(2);
  for (int trial = 0; trial < 100; ++trial) {
    const Coweight v{gen.vector(3), {}};
    // <v, alpha_i> with alpha_i = sum_j c_ji omega_j
    bool inside = true;
    for (std::size_t i = 0; i < 3; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < 3; ++j) s += v.fund[j] * d.rs.cartan(j, i);
      inside = inside && s <= 0;
    }
    o.require(cone_contains(cone, v) == inside, "random point " + std::to_string(trial));
  }
  if (o.pass) o.detail = "m = (1,1,1), decomposition holds, 3 halfspaces, 100/100 membership checks";
  return o;
}

Outcome criterion_3() {
  Outcome o;
  for (int n = 3; n <= 8; ++n) {
    const auto d = builtin("brion_5_3", n).datum;
    o.require(anticanonical_divisor(d).coefficients() == constant(static_cast<std::size_t>(n - 1), 1),
              "coefficients at n=" + std::to_string(n));
    o.require(all_pass(audit_pairings(d)), "audit at n=" + std::to_string(n));
    for (std::size_t i = 0; i < d.colors.size(); ++i)
      o.require(d.rs.pair_coroot(i, *d.colors[i].chi) == 2, "pairing 2 at n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "n=3..8 all m_i = 1, <a_i^vee, chi_i> = 2";
  return o;
}

Outcome criterion_4() {
  Outcome o;
  for (int n = 3; n <= 10; ++n) {
    const auto tag = " at n=" + std::to_string(n);
    const auto d = builtin("brion_5_4", n).datum;
    o.require(anticanonical_divisor(d).coefficients() == constant(2, n - 1), "coefficients" + tag);
    Vector expect(static_cast<std::size_t>(n - 1));
    expect.front() = n - 1;
    expect.back() = n - 1;
    o.require(kappa(d.rs, d.sp).fund == expect, "kappa" + tag);
    const std::vector<Weight> m = {d.rs.fundamental_weight(0), d.rs.fundamental_weight(static_cast<std::size_t>(n - 2))};
    o.require(d.lattice_m && *d.lattice_m == m, "M" + tag);
    o.require(passes(audit_pairings(d), "sp_orthogonal_M") || d.sp.empty(), "Sp orthogonality audit" + tag);
    for (auto a : d.sp)
      for (const auto& w : m) o.require(d.rs.pair_coroot(a, w) == 0, "Sp orthogonality" + tag);
  }
  if (o.pass) o.detail = "n=3..10 m_1 = m_2 = n-1, kappa = (n-1,0,...,0,n-1), Sp orthogonal to M";
  return o;
}

Outcome criterion_5() {
  Outcome o;
  int checked = 0;
  const auto compare = [&](const char* key, std::optional<int> n, const std::vector<ColorType>& expected) {
    const auto d = builtin(key, n).datum;
    const std::string tag = std::string(key) + (n ? " n=" + std::to_string(*n) : "");
    o.require(d.colors.size() == expected.size(), tag + " color count");
    for (std::size_t i = 0; i < d.colors.size() && i < expected.size(); ++i) {
      const auto reference = d.spherical_roots ? classify_luna(d, d.colors[i]) : *d.colors[i].declared_type;
      o.require(reference == expected[i], tag + " reference type of " + d.colors[i].name);
      o.require(classify_knop(d, d.colors[i]) == reference, tag + " disagreement on " + d.colors[i].name);
      ++checked;
    }
  };
  compare("sl2_mod_T", std::nullopt, {ColorType::a, ColorType::a});
  compare("sl2_mod_N", std::nullopt, {ColorType::two_a});
  {
    const auto d = builtin("sl2_mod_N").datum;
    o.require(classify_knop(d, d.colors[0], 0).resolved_by == "witness", "sl2_mod_N not settled by the witness");
  }
  compare("sl2_mod_U", std::nullopt, {ColorType::b});
  compare("brion_5_1", 3, {ColorType::b, ColorType::b});
  compare("brion_5_1", 4, {ColorType::b, ColorType::b, ColorType::b});
  compare("brion_5_2", std::nullopt, {ColorType::a, ColorType::a, ColorType::a});
  if (o.pass) o.detail = std::to_string(checked) + " colors, 0 disagreements";
  return o;
}

Outcome criterion_6() {
  Outcome o;
  const auto t0 = Clock::now();
  int entries = 0;
  for (const auto& key : catalog_keys()) {
    const int lo = key.parametric ? key.min_param : 0, hi = key.parametric ? key.max_param : 0;
    for (int p = lo; p <= hi; ++p) {
      const auto d = builtin(key.key, key.parametric ? std::optional<int>(p) : std::nullopt).datum;
      std::vector<Weight> chis;
      bool have_chi = true;
      for (const auto& c : d.colors) {
        if (!c.chi) have_chi = false;
        else chis.push_back(*c.chi);
      }
      if (!have_chi) continue;
      const auto sols = enumerate_positive_solutions(kappa(d.rs, d.sp), chis, 10);
      const auto closed = anticanonical_divisor(d).coefficients();
      o.require(sols.size() == 1 && sols.front() == closed, key.key + " p=" + std::to_string(p));
      ++entries;
    }
  }
  const double dt = seconds_since(t0);
  o.require(dt < 5.0, "runtime " + std::to_string(dt) + " s");
  if (o.pass) o.detail = std::to_string(entries) + " entries, unique solution = closed form, " + std::to_string(dt) + " s";
  return o;
}

Outcome criterion_7() {
  Outcome o;
  const auto count_of = [](const char* spec) {
    const RootSystem rs(parse_root_system_spec(spec));
    return rs.positive_roots(rs.all_simple()).size();
  };
  for (int n = 1; n <= 8; ++n) {
    const auto s = std::to_string(n);
    o.require(count_of(("A" + s).c_str()) == static_cast<std::size_t>(n * (n + 1) / 2), "A" + s);
    if (n >= 2) o.require(count_of(("B" + s).c_str()) == static_cast<std::size_t>(n * n), "B" + s);
    if (n >= 2) o.require(count_of(("C" + s).c_str()) == static_cast<std::size_t>(n * n), "C" + s);
    if (n >= 3) o.require(count_of(("D" + s).c_str()) == static_cast<std::size_t>(n * (n - 1)), "D" + s);
  }
  o.require(count_of("G2") == 6, "G2");
  o.require(count_of("F4") == 24, "F4");
  o.require(count_of("E6") == 36, "E6");
  o.require(count_of("E7") == 63, "E7");
  o.require(count_of("E8") == 120, "E8");
  testing::Gen gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const RootSystem rs(gen.spec());
    const auto tag = rs.spec().to_string();
    for (const auto& x : rs.rho(rs.all_simple()).fund) o.require(x == 1, "rho of " + tag);
    const RootSet sp = gen.subset(rs.rank());
    const Weight k = kappa(rs, sp);
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      const Rational p = rs.pair_coroot(i, k);
      o.require(sp.count(i) ? p == 0 : p >= 2, "kappa pairing on " + tag);
    }
  }
  if (o.pass) o.detail = "counts A/B/C/D rank<=8, G2, F4, E6-E8; rho = 1; 200 random (system, Sp) pairs";
  return o;
}

Outcome criterion_8() {
  Outcome o;
  testing::Gen gen(8);
  int entries = 0;
  for (const auto& key : catalog_keys()) {
    const int lo = key.parametric ? key.min_param : 0, hi = key.parametric ? key.max_param : 0;
    for (int p = lo; p <= hi; ++p) {
      const auto d = builtin(key.key, key.parametric ? std::optional<int>(p) : std::nullopt).datum;
      if (!d.spherical_roots || !d.lattice_m) continue;
      const auto tag = key.key + " p=" + std::to_string(p);
      const auto gens = cone_generators(d);
      for (const auto& nu : gens) o.require(generator_order_shift(d, d.rs.zero_weight(), nu) == 1, tag + " mu=0");
      for (int trial = 0; trial < 5; ++trial) {
        const Coweight nu{gen.vector(d.rs.rank()), gen.vector(d.rs.central_rank())};
        o.require(generator_order_shift(d, d.rs.zero_weight(), nu) == 1, tag + " mu=0, random nu");
      }
      o.require(uniqueness_certificate(d).holds, tag + " certificate");
      const auto& basis = *d.lattice_m;
      for (int trial = 0; trial < 50; ++trial) {
        Weight mu = d.rs.zero_weight();
        bool nonzero = false;
        while (!nonzero) {
          mu = d.rs.zero_weight();
          for (const auto& b : basis) {
            const int c = gen.uniform(-3, 3);
            nonzero = nonzero || c != 0;
            mu = mu + Rational(c) * b;
          }
        }
        bool moved = false;
        for (const auto& nu : gens) moved = moved || generator_order_shift(d, mu, nu) != 1;
        o.require(moved, tag + " mu with order 1 on every generator");
      }
      ++entries;
    }
  }
  if (o.pass) o.detail = std::to_string(entries) + " entries with Sigma, certificate holds, 50 random mu each";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria = {criterion_1, criterion_2, criterion_3, criterion_4,
                                                         criterion_5, criterion_6, criterion_7, criterion_8};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << o.detail << '\n';
    all = all && o.pass;
  }
  return all ? 0 : 1;
}

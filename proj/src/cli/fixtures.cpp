#include "satake/cli/cli.hpp"

#include "satake/hecke/hecke.hpp"
#include "satake/hecke/tree.hpp"
#include "satake/polyhedron/coordinates.hpp"
#include "satake/polyhedron/hilbert.hpp"
#include "satake/polyhedron/semistable.hpp"
#include "satake/rootdata/lattice.hpp"
#include "satake/satfactor/satfactor.hpp"

#include <set>
#include <sstream>

namespace satake {

namespace {

LaurentPoly P(const std::string& s) { return LaurentPoly::parse(s); }

IVec L(const RootSystem& rs, const std::string& v) { return parse_coweight(rs, v).int_labels(); }

FixtureResult expect_poly(const std::string& name, const LaurentPoly& got, const LaurentPoly& want) {
  return {name, got == want, got == want ? "" : "got " + got.to_string() + ", expected " + want.to_string()};
}

FixtureResult expect_int(const std::string& name, const BigInt& got, const BigInt& want) {
  return {name, got == want, got == want ? "" : "got " + got.str() + ", expected " + want.str()};
}

FixtureResult expect_true(const std::string& name, bool ok, const std::string& detail = "") {
  return {name, ok, ok ? "" : detail};
}

const RootSystem& b2() {
  static const RootSystem r = RootSystem::build("B2");
  return r;
}
const RootSystem& g2() {
  static const RootSystem r = RootSystem::build("G2");
  return r;
}
const HeckeRing& hb2() {
  static const HeckeRing h(b2());
  return h;
}
const HeckeRing& hg2() {
  static const HeckeRing h(g2());
  return h;
}

// lambda_1 = 7-dimensional, lambda_2 = adjoint (labels of the dual system).
const IVec lam1{0, 1}, lam2{1, 0};

std::string join_mismatches(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
  return s;
}

FixtureResult table_types(const std::string& name, const std::vector<std::string>& types, const BigInt& kr,
                          std::function<BigInt(const RootSystem&)> kw_expected) {
  std::vector<std::string> bad;
  for (const auto& t : types) {
    RootSystem rs = RootSystem::build(t);
    BigInt a = k_R(rs), b = k_w(rs), e = kw_expected(rs);
    if (a != kr || b != e)
      bad.push_back(t + ": (" + a.str() + "," + b.str() + ") vs (" + kr.str() + "," + e.str() + ")");
  }
  return {name, bad.empty(), join_mismatches(bad)};
}

FixtureResult table_groups(const std::string& name, const std::vector<std::pair<std::string, int>>& rows) {
  std::vector<std::string> bad;
  for (const auto& [g, k] : rows) {
    BigInt got = k_for_group(g);
    if (got != k) bad.push_back(g + ": " + got.str() + " vs " + std::to_string(k));
  }
  return {name, bad.empty(), join_mismatches(bad)};
}

std::vector<std::string> range(const std::string& f, int lo, int hi) {
  std::vector<std::string> v;
  for (int l = lo; l <= hi; ++l) v.push_back(f + std::to_string(l));
  return v;
}

std::vector<std::pair<std::string, int>> groups(std::initializer_list<const char*> fams, int lo, int hi,
                                                std::function<int(int)> size, std::function<int(int)> k) {
  std::vector<std::pair<std::string, int>> v;
  for (int l = lo; l <= hi; ++l)
    for (const char* f : fams) v.push_back({f + std::to_string(size(l)), k(l)});
  return v;
}

std::vector<Fixture> build() {
  std::vector<Fixture> f;
  auto add = [&](std::string name, std::function<FixtureResult(const std::string&)> fn) {
    f.push_back({name, [name, fn] { return fn(name); }});
  };

  add("B2 highest root coefficients (1,2)", [](auto& n) {
    return expect_true(n, b2().theta_coeffs() == IVec{1, 2}, join_ints(b2().theta_coeffs()));
  });
  add("G2 highest root coefficients (3,2)", [](auto& n) {
    return expect_true(n, g2().theta_coeffs() == IVec{3, 2}, join_ints(g2().theta_coeffs()));
  });
  add("G2 <lambda_1,rho> = 3, <lambda_2,rho> = 5", [](auto& n) {
    int64_t a = hg2().two_rho_pairing(lam1), b = hg2().two_rho_pairing(lam2);
    return expect_true(n, a == 6 && b == 10, "2<.,rho> = " + std::to_string(a) + ", " + std::to_string(b));
  });
  add("B2 <(1,1),rho> = 2", [](auto& n) {
    return expect_int(n, hb2().two_rho_pairing(L(b2(), "(1,1)")), 4);
  });
  add("Langlands dual: B2 <-> C2, G2 -> G2", [](auto& n) {
    return expect_true(n, b2().dual().label() == "C2" && RootSystem::build("C2").dual().label() == "B2" && g2().dual().label() == "G2");
  });

  add("table: A_l (l<=7) k_R = 1, k_w = l+1", [](auto& n) {
    return table_types(n, range("A", 1, 7), 1, [](const RootSystem& rs) { return BigInt(rs.rank() + 1); });
  });
  add("table: B_l k_R = 2, k_w = 2", [](auto& n) { return table_types(n, range("B", 2, 7), 2, [](auto&) { return BigInt(2); }); });
  add("table: C_l k_R = 2, k_w = 2", [](auto& n) { return table_types(n, range("C", 2, 7), 2, [](auto&) { return BigInt(2); }); });
  add("table: D_l (l>4) k_R = 2, k_w = 4", [](auto& n) { return table_types(n, range("D", 5, 7), 2, [](auto&) { return BigInt(4); }); });
  add("table: D_4 k_R = 2, k_w = 2", [](auto& n) { return table_types(n, {"D4"}, 2, [](auto&) { return BigInt(2); }); });
  add("table: G2 6,6  F4 12,12  E6 6,6  E7 12,12  E8 60,60", [](auto& n) {
    std::vector<std::string> bad;
    for (auto [t, k] : std::vector<std::pair<std::string, int>>{{"G2", 6}, {"F4", 12}, {"E6", 6}, {"E7", 12}, {"E8", 60}}) {
      RootSystem rs = RootSystem::build(t);
      if (k_R(rs) != k || k_w(rs) != k) bad.push_back(t);
    }
    return FixtureResult{n, bad.empty(), join_mismatches(bad)};
  });
  add("table: SL, GL = 1 and PSL(l+1) = l+1", [](auto& n) {
    auto rows = groups({"SL", "GL"}, 1, 7, [](int l) { return l + 1; }, [](int) { return 1; });
    for (int l = 1; l <= 7; ++l) rows.push_back({"PSL" + std::to_string(l + 1), l + 1});
    return table_groups(n, rows);
  });
  add("table: Spin, SO(2l+1) = 2", [](auto& n) {
    return table_groups(n, groups({"Spin", "SO"}, 2, 7, [](int l) { return 2 * l + 1; }, [](int) { return 2; }));
  });
  add("table: Sp, PSp(2l) = 2", [](auto& n) {
    return table_groups(n, groups({"Sp", "PSp"}, 2, 7, [](int l) { return 2 * l; }, [](int) { return 2; }));
  });
  add("table: Spin, SO(2l) = 2, PSO(2l) = 4 (l>4), PSO(8) = 2", [](auto& n) {
    auto rows = groups({"Spin", "SO"}, 4, 7, [](int l) { return 2 * l; }, [](int) { return 2; });
    for (int l = 5; l <= 7; ++l) rows.push_back({"PSO" + std::to_string(2 * l), 4});
    rows.push_back({"PSO8", 2});
    return table_groups(n, rows);
  });
  add("table: exceptional groups", [](auto& n) {
    return table_groups(n, {{"G2", 6}, {"F4", 12}, {"E6sc", 6}, {"E6ad", 6}, {"E7sc", 12}, {"E7ad", 12}, {"E8", 60}});
  });

  add("G2 dim V_lambda_1 = 7", [](auto& n) { return expect_int(n, hg2().reps().dimension(lam1), 7); });
  add("Sp4 V_(1,1) has dimension 5", [](auto& n) { return expect_int(n, hb2().reps().dimension(L(b2(), "(1,1)")), 5); });
  add("Sp4 V_(1,1) x V_(1,1) = V_(2,2) + V_(2,0) + V_0", [](auto& n) {
    const auto& t = hb2().reps().tensor(L(b2(), "(1,1)"), L(b2(), "(1,1)"));
    CharElem want{{L(b2(), "(2,2)"), 1}, {L(b2(), "(2,0)"), 1}, {L(b2(), "(0,0)"), 1}};
    return expect_true(n, t == want);
  });
  add("Sp4 n0((1,1),(1,1),(1,1)) = 0", [](auto& n) {
    IVec v = L(b2(), "(1,1)");
    return expect_int(n, hb2().reps().n0(v, v, v), 0);
  });
  add("G2 n0(lambda_1,lambda_2,lambda_2) = 0", [](auto& n) { return expect_int(n, hg2().reps().n0(lam1, lam2, lam2), 0); });

  add("G2 b(lambda_1+lambda_2, lambda_2) = 1+q", [](auto& n) {
    return expect_poly(n, hg2().qanalog().kl_b(lam1 + lam2, lam2), P("1+q"));
  });
  add("G2 b(2 lambda_1, lambda_2) = 1", [](auto& n) { return expect_poly(n, hg2().qanalog().kl_b(2 * lam1, lam2), P("1")); });
  add("Spin5 a((1,1),0) = -1", [](auto& n) {
    return expect_poly(n, hb2().qanalog().kl_a(L(b2(), "(1,1)"), {0, 0}), P("-1"));
  });
  add("G2 a(lambda_1,0) = -1", [](auto& n) { return expect_poly(n, hg2().qanalog().kl_a(lam1, {0, 0}), P("-1")); });

  add("Spin5 S(c_(1,1)) = q^2 ch V_(1,1) - 1", [](auto& n) {
    SatakeImage want{{L(b2(), "(1,1)"), P("q^2")}, {{0, 0}, P("-1")}};
    return expect_true(n, hb2().satake_expand(L(b2(), "(1,1)")) == want);
  });
  add("G2 S(c_lambda_1) = q^3 ch V_lambda_1 - 1", [](auto& n) {
    SatakeImage want{{lam1, P("q^3")}, {{0, 0}, P("-1")}};
    return expect_true(n, hg2().satake_expand(lam1) == want);
  });
  add("Spin5 cube S(c_(1,1))^3", [](auto& n) {
    const auto& rs = b2();
    IVec v = L(rs, "(1,1)");
    HeckeElem x{{v, 1}};
    auto cube = hb2().satake_image(hb2().multiply(hb2().multiply(x, x), x));
    SatakeImage want;
    auto put = [&](const std::string& w, const std::string& p) { want[L(rs, w)] += P(p); };
    put("(3,3)", "q^6");
    put("(3,1)", "2q^6");
    put("(2,0)", "q^6");
    put("(1,1)", "3q^6");
    put("(2,2)", "-3q^4");
    put("(2,0)", "-3q^4");
    put("(0,0)", "-3q^4");
    put("(1,1)", "3q^2");
    put("(0,0)", "-1");
    return expect_true(n, cube == want);
  });
  add("G2 m_{lambda_1,lambda_2}(lambda_2) = q^2-1", [](auto& n) {
    return expect_poly(n, hg2().structure_constant(lam1, lam2, lam2), P("q^2-1"));
  });
  add("G2 sphere volume of lambda_2", [](auto& n) {
    return expect_poly(n, hg2().sphere_volume(lam2), P("q^10+q^9+q^8+q^7+q^6+q^5"));
  });
  add("Spin5 m0((1,1),(1,1),(1,1)) = q^5-q", [](auto& n) {
    IVec v = L(b2(), "(1,1)");
    return expect_poly(n, hb2().m0(v, v, v), P("q^5-q"));
  });
  add("G2 m0(lambda_1,lambda_2,lambda_2) = q^5(q+1)(q^6-1)", [](auto& n) {
    return expect_poly(n, hg2().m0(lam1, lam2, lam2), P("q^5") * P("q+1") * P("q^6-1"));
  });
  add("m0 agrees with the c_0 coefficient of the triple product", [](auto& n) {
    IVec v = L(b2(), "(1,1)");
    bool ok = hb2().m0(v, v, v) == hb2().m0_triple_product(v, v, v) &&
              hg2().m0(lam1, lam2, lam2) == hg2().m0_triple_product(lam1, lam2, lam2);
    return expect_true(n, ok);
  });
  add("Spin5 ((2,2),(2,2),(3,1)): in D3, sum in Q, m0 = 0", [](auto& n) {
    const auto& rs = b2();
    IVec a = L(rs, "(2,2)"), c = L(rs, "(3,1)");
    bool d3 = in_D3_b2({RVec{2, 2}, RVec{2, 2}, RVec{3, 1}});
    bool q = hb2().lattice().in_root_lattice(a + a + c);
    LaurentPoly m = hb2().m0(a, a, c);
    return expect_true(n, d3 && q && m.is_zero(), "in_D3 " + std::to_string(d3) + ", lattice " + std::to_string(q) + ", m0 " + m.to_string());
  });

  add("B2 system has 24 inequalities", [](auto& n) { return expect_int(n, b2_stability_system().rows.size(), 24); });
  add("B2 ((7/2,3),(2,2),(2,2)) passes both forms, fails the naive test", [](auto& n) {
    Triple t{RVec{Rational(7, 2), 3}, RVec{2, 2}, RVec{2, 2}};
    return expect_true(n, in_D3_b2(t) && in_D3_b2_root_cone(t) && !naive_triangle_b2(t));
  });
  add("B2 ((3,0),(1,0),(1,0)) violates x1 <= x2 + x3", [](auto& n) {
    return expect_true(n, !in_D3_b2({RVec{3, 0}, RVec{1, 0}, RVec{1, 0}}));
  });
  add("B2 cone: 24 facets (system minimal)", [](auto& n) {
    auto g = cone_geometry(b2_stability_system());
    return expect_true(n, g.facet_count == 24 && g.minimal, std::to_string(g.facet_count) + " facets");
  });
  add("B2 cone: 15 extreme rays", [](auto& n) {
    return expect_int(n, cone_geometry(b2_stability_system()).extreme_rays.size(), 15);
  });
  add("B2 Hilbert basis = the 8 listed generators; last 3 fail the lattice condition", [](auto& n) {
    HilbertOptions o;
    o.s3_orbits = true;
    o.rank = 2;
    auto hb = hilbert_basis(b2_stability_system(), o);
    std::set<IVec> got(hb.begin(), hb.end()), want;
    std::vector<std::string> bad;
    const auto& fx = b2_generator_fixture();
    for (size_t i = 0; i < fx.size(); ++i) {
      IVec flat;
      LabelTriple lab;
      for (size_t k = 0; k < 3; ++k) {
        lab[k] = labels_from_bracket(b2(), fx[i].bracket[k]);
        for (const auto& x : ambient_from_labels(b2(), lab[k])) flat.push_back(to_int64(x));
      }
      want.insert(s3_canonical(flat, 2));
      if (sum_in_coroot_lattice(b2(), lab) != (i < 5)) bad.push_back("generator " + std::to_string(i + 1));
    }
    if (got != want) bad.push_back("basis differs (" + std::to_string(got.size()) + " orbits)");
    return FixtureResult{n, bad.empty(), join_mismatches(bad)};
  });
  add("bracket dictionaries are consistent", [](auto& n) {
    auto bad = validate_dictionaries();
    return FixtureResult{n, bad.empty(), join_mismatches(bad)};
  });
  add("G2 oracle: (lambda_1,lambda_2,lambda_2) yes at k = 2", [](auto& n) {
    auto k = oracle_in_D3(g2(), {to_rvec(lam1), to_rvec(lam2), to_rvec(lam2)}, 2);
    return expect_true(n, k && *k == 2);
  });
  add("B2 oracle: ([0,1],[0,1],[0,1]) yes at k = 2", [](auto& n) {
    RVec v = to_rvec(labels_from_bracket(b2(), {0, 1}));
    auto k = oracle_in_D3(b2(), {v, v, v}, 2);
    return expect_true(n, k && *k == 2);
  });
  add("B2 doubling: n0(2t) != 0 for every Hilbert-basis generator", [](auto& n) {
    std::vector<std::string> bad;
    for (const auto& g : b2_generator_fixture()) {
      LabelTriple l;
      for (size_t k = 0; k < 3; ++k) l[k] = 2 * labels_from_bracket(b2(), g.bracket[k]);
      if (hb2().reps().n0(l[0], l[1], l[2]) == 0) bad.push_back(join_ints(l[0]) + "|" + join_ints(l[1]) + "|" + join_ints(l[2]));
    }
    return FixtureResult{n, bad.empty(), join_mismatches(bad)};
  });
  add("Spin5 Q3 is not a semigroup", [](auto& n) {
    IVec a = L(b2(), "(1,1)"), c = L(b2(), "(2,0)");
    bool ok = !hb2().m0(a, a, a).is_zero() && !hb2().m0(a, a, c).is_zero() && hb2().m0(2 * a, 2 * a, a + c).is_zero();
    return expect_true(n, ok);
  });
  add("G2 Q3 is not a semigroup", [](auto& n) {
    const auto& fx = g2_generator_fixture();
    LabelTriple s;
    bool parts = true;
    for (size_t i : {9u, 10u}) {
      LabelTriple l;
      for (size_t k = 0; k < 3; ++k) l[k] = labels_from_bracket(g2(), fx[i].bracket[k]);
      parts = parts && !hg2().m0(l[0], l[1], l[2]).is_zero();
      for (size_t k = 0; k < 3; ++k) s[k] = s[k].empty() ? l[k] : s[k] + l[k];
    }
    LaurentPoly m = hg2().m0(s[0], s[1], s[2]);
    return expect_true(n, parts && m.is_zero(), "sum has m0 = " + m.to_string() + ", n0 = " + hg2().reps().n0(s[0], s[1], s[2]).str());
  });
  add("A1 tree counts match m0 (q = 2, 3; sides <= 3)", [](auto& n) {
    HeckeRing h(RootSystem::build("A1"));
    std::vector<std::string> bad;
    for (int64_t q : {2, 3})
      for (int64_t a = 0; a <= 3; ++a)
        for (int64_t b = 0; b <= 3; ++b)
          for (int64_t c = 0; c <= 3; ++c) {
            Rational m = h.m0({a}, {b}, {c}).eval_q(q);
            if (m != Rational(tree_triangle_count(q, a, b, c))) bad.push_back(std::to_string(q) + ":" + join_ints({a, b, c}));
          }
    return FixtureResult{n, bad.empty(), join_mismatches(bad)};
  });
  add("single atom is not semistable; antipodal pair is", [](auto& n) {
    FlatConfiguration one{{{1, {1, 0}}}}, two{{{1, {1, 0}}, {1, {-3, 0}}}};
    return expect_true(n, !flat_semistable(one) && flat_semistable(two));
  });
  add("rank 0: {m, m} nice semistable; heavy atom not semistable", [](auto& n) {
    Rank0Configuration pair{{{0, 1}, {1, 1}}}, heavy{{{0, 3}, {1, 1}, {2, 1}}};
    return expect_true(n, rank0_nice_semistable(pair) && !rank0_stable(pair) && !rank0_semistable(heavy));
  });
  return f;
}

}  // namespace

const std::vector<Fixture>& fixture_list() {
  static const std::vector<Fixture> f = build();
  return f;
}

}  // namespace satake

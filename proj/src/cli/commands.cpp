#include "satake/cli/cli.hpp"

#include "satake/core/error.hpp"
#include "satake/hecke/hecke.hpp"
#include "satake/hecke/tree.hpp"
#include "satake/polyhedron/coordinates.hpp"
#include "satake/polyhedron/hilbert.hpp"
#include "satake/rootdata/lattice.hpp"
#include "satake/satfactor/satfactor.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace satake {

namespace {

using ojson = nlohmann::ordered_json;

struct Options {
  std::string format = "json";
  std::optional<int64_t> eval_q;
  std::string lattice;
  int64_t kmax = 4;
};

struct Output {
  ojson json = ojson::object();
  std::vector<std::vector<std::string>> tsv;
};

ojson big_value(const BigInt& b) {
  if (b >= BigInt(INT64_MIN) && b <= BigInt(INT64_MAX)) return static_cast<int64_t>(b);
  return b.str();
}

ojson poly_value(const LaurentPoly& p, const Options& o) {
  if (!o.eval_q) return p.to_string();
  Rational r = p.eval_q(BigInt(*o.eval_q));
  if (is_integer(r)) return big_value(numerator(r));
  return to_string(r);
}

std::string poly_text(const LaurentPoly& p, const Options& o) {
  ojson v = poly_value(p, o);
  return v.is_string() ? v.get<std::string>() : v.dump();
}

RootSystem system_for(const std::string& name) {
  try {
    return RootSystem::build(name);
  } catch (const Error&) {
  }
  try {
    return group_preset(name).system;
  } catch (const Error&) {
  }
  throw DomainError("unknown root system or group '" + name + "'");
}

GroupPreset preset_for(const std::string& name) {
  try {
    return group_preset(name);
  } catch (const Error& e) {
    throw DomainError("unknown group '" + name + "': " + e.what());
  }
}

struct Dominant {
  CoweightArg arg;
  IVec labels;
};

Dominant dominant_arg(const RootSystem& rs, const std::string& text, const char* role) {
  CoweightArg a = parse_coweight(rs, text);
  if (!a.integral()) throw DomainError(std::string(role) + " '" + text + "' is not in the coweight lattice");
  IVec l = a.int_labels();
  for (auto x : l)
    if (x < 0) throw DomainError(std::string(role) + " '" + text + "' is not dominant");
  return {a, l};
}

void require_in_lattice(const GroupPreset& g, const Dominant& d, const std::string& text) {
  if (!g.lattice.contains(d.arg.ambient)) throw DomainError("'" + text + "' is not in the cocharacter lattice of " + g.name);
}

bool central_zero(const RootSystem& rs, const RVec& v) { return is_zero(rs.central_part(v)); }

ojson labels_json(const IVec& l) {
  ojson a = ojson::array();
  for (auto x : l) a.push_back(x);
  return a;
}

// ---- verbs ----

Output cmd_satfactor(const std::string& name, const Options& o) {
  Output out;
  bool is_type = true;
  RootSystem rs = [&] {
    try {
      return RootSystem::build(name);
    } catch (const Error&) {
      is_type = false;
      return preset_for(name).system;
    }
  }();
  out.json["k_R"] = big_value(k_R(rs));
  out.json["k_w"] = big_value(k_w(rs));
  std::optional<BigInt> k;
  if (!is_type) k = k_for_group(name);
  if (!o.lattice.empty()) {
    if (o.lattice == "coroot")
      k = saturation_factor(rs, LatticeSpec::coroot(rs));
    else if (o.lattice == "coweight")
      k = saturation_factor(rs, LatticeSpec::coweight(rs));
    else if (o.lattice.rfind("preset:", 0) == 0) {
      GroupPreset g = preset_for(o.lattice.substr(7));
      if (g.system.label() != rs.label())
        throw DomainError("--lattice " + o.lattice + " belongs to " + g.system.label() + ", not " + rs.label());
      k = k_for_group(g.name);
    } else {
      throw ParseError("--lattice must be coroot, coweight or preset:<name>, got '" + o.lattice + "'");
    }
  }
  if (k) out.json["k"] = big_value(*k);
  for (auto& [key, v] : out.json.items()) out.tsv.push_back({key, v.dump()});
  return out;
}

Output cmd_tensor(const std::string& name, const std::string& ls, const std::string& ms) {
  RootSystem rs = system_for(name);
  auto l = dominant_arg(rs, ls, "first weight");
  auto m = dominant_arg(rs, ms, "second weight");
  RepRing reps(rs.dual());
  Output out;
  ojson dec = ojson::array();
  RVec central = rs.central_part(l.arg.ambient + m.arg.ambient);
  for (const auto& [nu, c] : reps.tensor(l.labels, m.labels)) {
    RVec amb = rs.coweight_from_labels(to_rvec(nu)) + central;
    dec.push_back({{"weight", ambient_string(amb)}, {"labels", labels_json(nu)}, {"mult", big_value(c)}});
    out.tsv.push_back({ambient_string(amb), c.str()});
  }
  out.json["system"] = rs.label();
  out.json["decomposition"] = dec;
  out.json["dimension"] = big_value(reps.dimension(l.labels) * reps.dimension(m.labels));
  return out;
}

Output cmd_invariants(const std::string& name, const std::string& as, const std::string& bs, const std::string& cs) {
  RootSystem rs = system_for(name);
  auto a = dominant_arg(rs, as, "first weight");
  auto b = dominant_arg(rs, bs, "second weight");
  auto c = dominant_arg(rs, cs, "third weight");
  RepRing reps(rs.dual());
  BigInt n = central_zero(rs, a.arg.ambient + b.arg.ambient + c.arg.ambient) ? reps.n0(a.labels, b.labels, c.labels) : BigInt(0);
  Output out;
  out.json["n0"] = big_value(n);
  out.tsv.push_back({"n0", n.str()});
  return out;
}

Output cmd_kostka(const std::string& name, const std::string& ls, const std::string& ms, const Options& o) {
  RootSystem rs = system_for(name);
  auto l = dominant_arg(rs, ls, "first weight");
  auto m = dominant_arg(rs, ms, "second weight");
  QAnalog qa(rs.dual());
  if (!qa.lattice().leq(m.labels, l.labels)) throw DomainError("'" + ms + "' is not below '" + ls + "' in the dominance order");
  LaurentPoly k = qa.kostka_foulkes(l.labels, m.labels);
  LaurentPoly b = l.labels == m.labels ? LaurentPoly(1) : qa.kl_b(l.labels, m.labels);
  LaurentPoly a = qa.kl_a(l.labels, m.labels);
  Output out;
  out.json["kostka_foulkes"] = poly_value(k, o);
  out.json["b"] = poly_value(b, o);
  out.json["a"] = poly_value(a, o);
  out.json["b_sparse"] = ojson::parse(b.to_json_sparse());
  out.json["a_sparse"] = ojson::parse(a.to_json_sparse());
  out.tsv = {{"kostka_foulkes", poly_text(k, o)}, {"b", poly_text(b, o)}, {"a", poly_text(a, o)}};
  return out;
}

Output cmd_hecke(const std::string& name, const std::vector<std::string>& vs, const Options& o) {
  GroupPreset g = preset_for(name);
  const RootSystem& rs = g.system;
  std::vector<Dominant> d;
  const char* roles[] = {"first weight", "second weight", "third weight"};
  for (size_t i = 0; i < vs.size(); ++i) {
    d.push_back(dominant_arg(rs, vs[i], roles[i]));
    require_in_lattice(g, d.back(), vs[i]);
  }
  HeckeRing h(rs);
  Output out;
  RVec central = rs.central_part(d[0].arg.ambient + d[1].arg.ambient);
  ojson consts = ojson::object();
  for (const auto& [nu, m] : h.basis_product(d[0].labels, d[1].labels)) {
    std::string key = ambient_string(rs.coweight_from_labels(to_rvec(nu)) + central);
    consts[key] = poly_value(m, o);
    out.tsv.push_back({key, poly_text(m, o)});
  }
  out.json["constants"] = consts;
  if (d.size() == 3) {
    LaurentPoly m0;
    if (central_zero(rs, d[0].arg.ambient + d[1].arg.ambient + d[2].arg.ambient)) m0 = h.m0(d[0].labels, d[1].labels, d[2].labels);
    out.json["m0"] = poly_value(m0, o);
    out.json["m0_sparse"] = ojson::parse(m0.to_json_sparse());
    out.json["q3_solvable"] = !m0.is_zero();
    out.tsv.push_back({"m0", poly_text(m0, o)});
  }
  return out;
}

int64_t parse_int(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + " must be an integer, got '" + s + "'");
  }
}

Output cmd_tree(const std::vector<std::string>& v) {
  int64_t q = parse_int(v[0], "q");
  int64_t a = parse_int(v[1], "a"), b = parse_int(v[2], "b"), c = parse_int(v[3], "c");
  BigInt n = tree_triangle_count(q, a, b, c);
  Output out;
  out.json["count"] = big_value(n);
  out.tsv.push_back({"count", n.str()});
  return out;
}

Output cmd_check_triple(const std::string& name, const std::vector<std::string>& vs, const Options& o) {
  GroupPreset g = preset_for(name);
  const RootSystem& rs = g.system;
  std::array<CoweightArg, 3> args;
  for (size_t i = 0; i < 3; ++i) {
    args[i] = parse_coweight(rs, vs[i]);
    for (const auto& x : args[i].labels)
      if (x < 0) throw DomainError("'" + vs[i] + "' is not dominant");
  }
  RVec sum = args[0].ambient + args[1].ambient + args[2].ambient;
  bool center_ok = central_zero(rs, sum);
  bool in_L = true;
  for (const auto& a : args) in_L = in_L && a.integral() && g.lattice.contains(a.ambient);
  bool lattice_condition = false, q3 = false, q4 = false;
  if (in_L) {
    std::array<IVec, 3> l{args[0].int_labels(), args[1].int_labels(), args[2].int_labels()};
    HeckeRing h(rs);
    lattice_condition = center_ok && h.lattice().in_root_lattice(l[0] + l[1] + l[2]);
    if (center_ok) {
      q4 = h.reps().n0(l[0], l[1], l[2]) != 0;
      q3 = !h.m0(l[0], l[1], l[2]).is_zero();
    }
  }
  ojson q12;
  if (!center_ok)
    q12 = false;
  else if (q3 || q4)
    q12 = true;
  else if (rs.label() == "B2")
    q12 = in_D3_b2({args[0].ambient, args[1].ambient, args[2].ambient});
  else if (oracle_in_D3(rs, {args[0].labels, args[1].labels, args[2].labels}, o.kmax))
    q12 = true;
  else
    q12 = "unknown";
  Output out;
  out.json["Q1_Q2"] = q12;
  out.json["Q3"] = q3;
  out.json["Q4"] = q4;
  out.json["lattice_condition"] = lattice_condition;
  for (auto& [k, v] : out.json.items()) out.tsv.push_back({k, v.is_string() ? v.get<std::string>() : v.dump()});
  return out;
}

ojson triple_json(const std::array<IVec, 3>& t) {
  ojson a = ojson::array();
  for (const auto& v : t) a.push_back(labels_json(v));
  return a;
}

Output cmd_hilbert(const std::string& name) {
  RootSystem rs = system_for(name);
  Output out;
  ojson gens = ojson::array();
  if (rs.label() == "B2") {
    HilbertOptions opt;
    opt.s3_orbits = true;
    opt.rank = 2;
    for (const auto& t : hilbert_basis(b2_stability_system(), opt)) {
      std::array<IVec, 3> rect, br, lab;
      for (size_t k = 0; k < 3; ++k) {
        rect[k] = {t[2 * k], t[2 * k + 1]};
        lab[k] = labels_from_ambient(rs, to_rvec(rect[k]));
        br[k] = bracket_from_labels(rs, lab[k]);
      }
      bool inq = sum_in_coroot_lattice(rs, lab);
      gens.push_back({{"rectangular", triple_json(rect)}, {"bracket", triple_json(br)}, {"sum_in_coroot_lattice", inq}});
      out.tsv.push_back({triple_json(rect).dump(), triple_json(br).dump(), inq ? "true" : "false"});
    }
    out.json["source"] = "computed";
  } else if (rs.label() == "G2") {
    // No inequality system is available here; the known list is validated member by member.
    HeckeRing h(rs);
    for (const auto& f : g2_generator_fixture()) {
      std::array<IVec, 3> lab;
      for (size_t k = 0; k < 3; ++k) lab[k] = labels_from_bracket(rs, f.bracket[k]);
      BigInt n0 = h.reps().n0(lab[0], lab[1], lab[2]);
      LaurentPoly m0 = h.m0(lab[0], lab[1], lab[2]);
      gens.push_back({{"bracket", triple_json(f.bracket)},
                      {"labels", triple_json(lab)},
                      {"n0", big_value(n0)},
                      {"m0", m0.to_string()},
                      {"Q4", n0 != 0},
                      {"Q3", !m0.is_zero()}});
      out.tsv.push_back({triple_json(f.bracket).dump(), n0.str(), m0.to_string()});
    }
    out.json["source"] = "fixture";
  } else {
    throw DomainError("hilbert-basis is available for B2 and G2 only, got '" + name + "'");
  }
  out.json["system"] = rs.label();
  out.json["generators"] = gens;
  return out;
}

Output cmd_table() {
  Output out;
  ojson types = ojson::array();
  std::vector<std::string> tl;
  for (int l = 1; l <= 7; ++l) tl.push_back("A" + std::to_string(l));
  for (int l = 2; l <= 7; ++l) tl.push_back("B" + std::to_string(l));
  for (int l = 2; l <= 7; ++l) tl.push_back("C" + std::to_string(l));
  for (int l = 4; l <= 7; ++l) tl.push_back("D" + std::to_string(l));
  for (const char* t : {"G2", "F4", "E6", "E7", "E8"}) tl.push_back(t);
  for (const auto& t : tl) {
    RootSystem rs = RootSystem::build(t);
    BigInt kr = k_R(rs), kw = k_w(rs);
    types.push_back({{"type", t}, {"k_R", big_value(kr)}, {"k_w", big_value(kw)}});
    out.tsv.push_back({t, kr.str(), kw.str()});
  }
  ojson groups = ojson::array();
  std::vector<std::string> gl;
  for (int n = 2; n <= 8; ++n)
    for (const char* f : {"SL", "GL", "PSL"}) gl.push_back(f + std::to_string(n));
  for (int l = 2; l <= 7; ++l)
    for (const char* f : {"Sp", "PSp"}) gl.push_back(f + std::to_string(2 * l));
  for (int l = 2; l <= 7; ++l)
    for (const char* f : {"Spin", "SO"}) gl.push_back(f + std::to_string(2 * l + 1));
  for (int l = 4; l <= 7; ++l)
    for (const char* f : {"Spin", "SO", "PSO"}) gl.push_back(f + std::to_string(2 * l));
  for (const char* g : {"G2", "F4", "E6sc", "E6ad", "E7sc", "E7ad", "E8"}) gl.push_back(g);
  for (const auto& g : gl) {
    BigInt k = k_for_group(g);
    groups.push_back({{"group", g}, {"k", big_value(k)}});
    out.tsv.push_back({g, k.str()});
  }
  out.json["types"] = types;
  out.json["groups"] = groups;
  return out;
}

void emit(const Output& r, const Options& o, std::ostream& out) {
  if (o.format == "tsv") {
    for (const auto& row : r.tsv) {
      for (size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i];
      out << "\n";
    }
  } else {
    out << r.json.dump() << "\n";
  }
}

int run_fixtures_cmd(std::ostream& out) {
  int failed = 0;
  for (const auto& f : fixture_list()) {
    FixtureResult r;
    try {
      r = f.run();
    } catch (const std::exception& e) {
      r = {f.name, false, std::string("error: ") + e.what()};
    }
    if (!r.pass) ++failed;
    out << (r.pass ? "PASS" : "FAIL") << "\t" << f.name;
    if (!r.detail.empty()) out << "\t" << r.detail;
    out << "\n";
  }
  out << failed << " of " << fixture_list().size() << " fixtures failed\n";
  return failed ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for root systems, spherical Hecke rings and triangle inequalities", "satake"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  int64_t eval = 0;
  auto* eval_opt = app.add_option("--eval-q", eval, "Evaluate polynomials at this q");
  app.add_option("--lattice", o.lattice, "coroot, coweight or preset:<name>");
  app.add_option("--kmax", o.kmax, "Largest scaling tried by the representation oracle")->check(CLI::PositiveNumber);
  app.fallthrough();

  std::string name, a, b, c;
  auto* satfactor = app.add_subcommand("satfactor", "Saturation factors k_R, k_w (and k for a lattice or group)");
  satfactor->add_option("type", name)->required();
  auto* tensor = app.add_subcommand("tensor", "Tensor product decomposition for the dual group");
  tensor->add_option("type", name)->required();
  tensor->add_option("lambda", a)->required();
  tensor->add_option("mu", b)->required();
  auto* inv = app.add_subcommand("invariants", "Dimension n0 of invariants in a triple tensor product");
  inv->add_option("type", name)->required();
  inv->add_option("alpha", a)->required();
  inv->add_option("beta", b)->required();
  inv->add_option("gamma", c)->required();
  auto* kostka = app.add_subcommand("kostka", "Kostka-Foulkes polynomial and change-of-basis entries");
  kostka->add_option("type", name)->required();
  kostka->add_option("lambda", a)->required();
  kostka->add_option("mu", b)->required();
  auto* hecke = app.add_subcommand("hecke", "Hecke structure constants and m0");
  hecke->add_option("group", name)->required();
  hecke->add_option("alpha", a)->required();
  hecke->add_option("beta", b)->required();
  auto* hecke_gamma = hecke->add_option("gamma", c);
  auto* tree = app.add_subcommand("tree-count", "Triangles in the (q+1)-regular tree");
  tree->add_option("q", name)->required();
  tree->add_option("a", a)->required();
  tree->add_option("b", b)->required();
  tree->add_option("c", c)->required();
  auto* check = app.add_subcommand("check-triple", "Verdicts for the four triangle problems");
  check->add_option("group", name)->required();
  check->add_option("alpha", a)->required();
  check->add_option("beta", b)->required();
  check->add_option("gamma", c)->required();
  auto* hilbert = app.add_subcommand("hilbert-basis", "Hilbert basis of the triangle semigroup (B2, G2)");
  hilbert->add_option("type", name)->required();
  auto* table = app.add_subcommand("table", "Saturation factors for all supported types and groups");
  auto* fixtures = app.add_subcommand("fixtures", "Run the reference fixtures");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (eval_opt->count()) {
    if (eval < 2) {
      err << "error: --eval-q must be at least 2\n";
      return 2;
    }
    o.eval_q = eval;
  }

  try {
    Output r;
    if (*satfactor)
      r = cmd_satfactor(name, o);
    else if (*tensor)
      r = cmd_tensor(name, a, b);
    else if (*inv)
      r = cmd_invariants(name, a, b, c);
    else if (*kostka)
      r = cmd_kostka(name, a, b, o);
    else if (*hecke)
      r = cmd_hecke(name, hecke_gamma->count() ? std::vector<std::string>{a, b, c} : std::vector<std::string>{a, b}, o);
    else if (*tree)
      r = cmd_tree({name, a, b, c});
    else if (*check)
      r = cmd_check_triple(name, {a, b, c}, o);
    else if (*hilbert)
      r = cmd_hilbert(name);
    else if (*table)
      r = cmd_table();
    else if (*fixtures)
      return run_fixtures_cmd(out);
    std::ostringstream buf;
    emit(r, o, buf);
    out << buf.str();
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    err << "refused: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace satake

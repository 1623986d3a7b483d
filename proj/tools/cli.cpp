#include "cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "eqcrit/family.hpp"
#include "eqcrit/json.hpp"
#include "eqcrit/moduli.hpp"
#include "eqcrit/weyl.hpp"

namespace eqcrit::cli {
namespace {

using io::encode;
using io::json;

struct Negative : std::runtime_error {
  json report;
  explicit Negative(json r) : std::runtime_error("negative result"), report(std::move(r)) {}
};

FieldSpec field_named(const std::string& name) {
  auto f = FieldSpec::preset(name);
  if (!f) throw Error(ErrorKind::Parse, "unknown field '" + name + "' (qq, q-sqrt3, q-omega, q-zeta12)");
  return *f;
}

/// Rational literal, "inf", a JSON coordinate array, or a symbolic token
/// resolved against the field's named constants.
ProjValue<AlgElem> parse_point(const std::string& s, const FieldSpec& f) {
  if (s == "inf" || s == "infinity") return ProjValue<AlgElem>::infinity(f);
  if (!s.empty() && s.front() == '[') return io::decode_elem(json::parse(s), f);
  auto named = [&](const char* n) { return AlgElem::named(f, n); };
  auto one = AlgElem(f, Rational(1));
  if (s == "rho") return one + named("sqrt3");
  if (s == "rho-bar") return one - named("sqrt3");
  if (s == "omega") return named("omega");
  if (s == "omega2") return named("omega") * named("omega");
  if (s == "m2omega") return named("omega") * Rational(-2);
  if (s == "m2omega2") return named("omega") * named("omega") * Rational(-2);
  if (s == "omega-rho") return named("omega") * (one + named("sqrt3"));
  if (s == "omega-rho-bar") return named("omega") * (one - named("sqrt3"));
  if (s == "omega2-rho") return named("omega") * named("omega") * (one + named("sqrt3"));
  if (s == "omega2-rho-bar") return named("omega") * named("omega") * (one - named("sqrt3"));
  return AlgElem(f, Rational::parse(s));
}

json read_json_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + arg);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, arg + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream o(path);
  if (!o) throw Error(ErrorKind::Precondition, "cannot write " + path);
  o << text;
}

json display_roots(const Poly<AlgElem>& p) {
  json a = json::array();
  for (auto z : complex_roots_display(p)) a.push_back(encode(z));
  return a;
}

json verdict_json(const EquivalenceVerdict<AlgElem>& v) {
  json j{{"status", std::string(to_string(v.status))}};
  if (v.witness) j["witness"] = {{"a", encode(v.witness->first)}, {"b", encode(v.witness->second)}};
  if (v.obstruction) j["obstruction_degree"] = v.obstruction->degree();
  return j;
}

// ---- targets for classify / lift ------------------------------------------------

struct TargetArgs {
  std::string y1, y2, y3, cubic;
};

Poly<Rational> target_cubic(const TargetArgs& a) {
  if (!a.cubic.empty()) {
    std::vector<Rational> c;
    std::stringstream ss(a.cubic);
    for (std::string tok; std::getline(ss, tok, ',');) c.push_back(Rational::parse(tok));
    if (c.size() != 3) throw Error(ErrorKind::Parse, "--cubic takes a0,a1,a2 of y^3 + a2 y^2 + a1 y + a0");
    c.emplace_back(1);
    return Poly<Rational>({}, std::move(c));
  }
  if (a.y1.empty() || a.y2.empty() || a.y3.empty()) throw Error(ErrorKind::Parse, "give --y1 --y2 --y3 or --cubic");
  return BranchTriple<Rational>{Rational::parse(a.y1), Rational::parse(a.y2), Rational::parse(a.y3)}.cubic();
}

json classification_json(const Classification& c, const Poly<Rational>& q) {
  json j{{"j", encode(c.j)}, {"target", encode(q)}};
  if (c.status == Existence::OutOfTheoremScope)
    j["exists"] = "out-of-scope";
  else
    j["exists"] = c.status == Existence::Exists;
  j["witness_u"] = c.witness_u ? json(c.witness_u->str()) : json();
  return j;
}

// ---- commands -----------------------------------------------------------------

json pair_json(const EquicriticalPair& p, const std::string& route) {
  return json{{"t", encode(p.t)},
              {"case", std::string(to_string(p.kind))},
              {"field", encode(p.field)},
              {"route", route},
              {"f", encode(p.f)},
              {"g", encode(p.g)},
              {"cvpoly", encode(p.cv)},
              {"verified", {{"equicritical", p.equicritical_exact}, {"inequivalent", p.inequivalent}}},
              {"critical_values_display_only", display_roots(p.cv)}};
}

json cmd_pair(const std::string& t_arg, const std::string& field_arg, bool pipeline, const std::string& out_path) {
  const FieldSpec f = field_named(field_arg);
  const auto t = parse_point(t_arg, f);
  json j;
  try {
    if (pipeline) {
      if (t.is_infinity()) throw Error(ErrorKind::ExcludedT, "the pipeline needs finite t");
      j = pair_json(pipeline_pair(t.value()), "pipeline");
    } else {
      j = pair_json(pair(t, f), "closed-form");
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoPair) throw;
    throw Negative(json{{"t", encode(t)}, {"field", encode(f)}, {"result", "NoPair"}, {"message", e.what()}});
  }
  if (!out_path.empty()) write_file(out_path, j.dump(2) + "\n");
  return j;
}

json cmd_verify(const std::string& file) {
  const json in = read_json_arg(file);
  const auto f = io::decode_poly(in.at("f")), g = io::decode_poly(in.at("g"));
  if (!(f.context() == g.context())) throw Error(ErrorKind::FieldMismatch, "f and g are over different fields");
  const auto cf = cvpoly(f), cg = cvpoly(g);
  const bool eq = cf == cg;
  const auto v = affine_equivalent(f, g);
  json j{{"equicritical", eq}, {"equivalence", verdict_json(v)}, {"cvpoly_f", encode(cf.poly)}, {"cvpoly_g", encode(cg.poly)}};
  if (!eq || v.status != Equivalence::Inequivalent) throw Negative(j);
  return j;
}

json cmd_cvpoly(const std::string& file) {
  const auto f = io::decode_poly(read_json_arg(file));
  const auto cv = cvpoly(f);
  return json{{"cvpoly", encode(cv.poly)},
              {"source_degree", cv.source_degree},
              {"morse", is_squarefree(cv.poly)},
              {"critical_values_display_only", display_roots(cv.poly)}};
}

json cmd_jcv(const std::string& file) {
  const auto f = io::decode_poly(read_json_arg(file));
  if (f.is_zero() || f.degree() != 4) throw Error(ErrorKind::NotQuartic, "jcv needs a quartic");
  const auto cv = cvpoly(f);
  return json{{"jcv", encode(j_of_cubic(cv.poly))}, {"cvpoly", encode(cv.poly)}};
}

json cmd_maps(const std::string& name, const std::string& at, const std::string& field_arg) {
  const auto m = maps::by_name(name);
  if (!m) throw Error(ErrorKind::Parse, "unknown map '" + name + "'");
  const FieldSpec f = field_named(field_arg);
  const auto x = parse_point(at, f);
  return json{{"map", name}, {"at", encode(x)}, {"value", encode((*m)(x))}};
}

json cmd_fiber(const std::string& v_arg) {
  const auto v = v_arg == "inf" ? ProjValue<Rational>::infinity() : ProjValue<Rational>(Rational::parse(v_arg));
  const Fiber fb = fiber_beta4(v);
  json pts = json::array(), rat = json::array(), irr = json::array();
  for (const auto& r : fb.rational) {
    pts.push_back({{"root", r.value.str()}, {"multiplicity", r.multiplicity}});
    rat.push_back(r.value.str());
  }
  if (fb.infinity_multiplicity) pts.push_back({{"root", "inf"}, {"multiplicity", fb.infinity_multiplicity}});
  for (const auto& fac : fb.irrational) {
    json roots = json::array();
    for (auto z : complex_roots_display(fac.factor)) roots.push_back(encode(z));
    irr.push_back({{"factor", encode(fac.factor)}, {"multiplicity", fac.multiplicity}, {"roots_display_only", roots}});
  }
  return json{{"jcv", encode(v)},
              {"polynomial", encode(fb.polynomial)},
              {"points", pts},
              {"irrational_factors", irr},
              {"rational", rat},
              {"total_multiplicity", fb.total_multiplicity()}};
}

json cmd_classify(const TargetArgs& a) {
  const auto q = target_cubic(a);
  const auto c = classify_cubic(q);
  json j = classification_json(c, q);
  if (c.status != Existence::Exists) throw Negative(j);
  return j;
}

json cmd_lift(const TargetArgs& a) {
  const auto q = target_cubic(a);
  const auto c = classify_cubic(q);
  json j = classification_json(c, q);
  json attempts = json::array();
  for (const auto& at : lift_all_cubic(q)) {
    json e{{"j0", at.j0.str()}};
    if (at.lift) {
      e["lift"] = encode(at.lift->quartic);
      e["scale"] = at.lift->scale.str();
      e["shift"] = at.lift->shift.str();
    } else {
      e["obstruction"] = *at.obstruction;
    }
    attempts.push_back(e);
  }
  j["lifts"] = attempts;
  try {
    const Lift L = lift_quartic_cubic(q);
    j["lift"] = encode(L.quartic);
    j["j0"] = L.j0.str();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoRationalFiberPoint && e.kind() != ErrorKind::EllipticTargetObstruction) throw;
    j["obstruction"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    throw Negative(j);
  }
  return j;
}

json guards_json(const WeylGuards& g) {
  return json{{"t_regular", g.t_regular},       {"p_prime", g.p_prime},           {"p_gt_3", g.p_gt_3},
              {"p_in_range", g.p_in_range},     {"a_coprime", g.a_coprime},       {"p_nmid_t_tm1", g.p_nmid_t_tm1},
              {"p_nmid_3_tp2", g.p_nmid_3_tp2}, {"binding", g.binding.empty() ? json() : json(g.binding)},
              {"strengthening_binds", g.binding == "p_nmid_3_tp2"}};
}

json cmd_weyl(long long t, long long p, long long a, bool direct_only, bool reduced_only) {
  if (direct_only && reduced_only) throw Error(ErrorKind::Parse, "--direct-only and --reduced-only are exclusive");
  const auto guards = weyl_guards(t, p, a);
  WeylReport r;
  try {
    r = fd_pair_check(t, p, a, WeylOptions{!reduced_only, !direct_only});
  } catch (const Error& e) {
    json j{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}, {"guards", guards_json(guards)},
           {"p", p}, {"a", a}, {"t", t}};
    throw std::make_pair(j, e);
  }
  auto opt = [](const std::optional<std::complex<double>>& z) { return z ? encode(*z) : json(); };
  const bool full = r.crit_points_f == r.crit_expected && r.crit_points_g == r.crit_expected;
  const bool pass = r.pair_gap() < r.tolerance && r.reduction_gap() < r.tolerance && (!full || r.exact_multiset_equal);
  json j{{"p", r.p},
         {"a", r.a},
         {"t", r.t},
         {"W_f", opt(r.direct_f)},
         {"W_g", opt(r.direct_g)},
         {"reduced_f", opt(r.reduced_f)},
         {"reduced_g", opt(r.reduced_g)},
         {"exact_multiset_equal", r.exact_multiset_equal},
         {"crit_rational", {r.crit_points_f, r.crit_points_g}},
         {"crit_expected", r.crit_expected},
         {"tolerance", r.tolerance},
         {"pair_gap", r.pair_gap()},
         {"reduction_gap", r.reduction_gap()},
         {"pass", pass},
         {"guards", guards_json(r.guards)}};
  if (!pass) throw std::make_pair(j, Error(ErrorKind::VerificationFailed, "Weyl-sum identity check failed"));
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string scalar_text(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

json cmd_sweep(long long from, long long to, const std::string& field_arg, const std::string& out_path,
               std::ostream& out) {
  if (to < from) throw Error(ErrorKind::Parse, "--t-to must be >= --t-from");
  const FieldSpec f = field_named(field_arg);
  std::vector<ProjValue<AlgElem>> ts;
  for (long long t = from; t <= to; ++t) ts.emplace_back(AlgElem(f, Rational(t)));
  const auto rows = sweep(ts, f);
  std::ostringstream csv;
  csv << "t,case,j1,j2,jt,f_coeffs,g_coeffs,equicritical,inequivalent\n";
  std::size_t pairs = 0, identity_failures = 0, poles = 0;
  json notes = json::array();
  for (const auto& r : rows) {
    if (!r.identities_hold) ++identity_failures;
    if (r.has_pole) ++poles;
    std::string kind = r.kind ? std::string(to_string(*r.kind)) : "";
    std::string fc, gc, eq = "false", ineq = "false";
    if (r.pair) {
      ++pairs;
      fc = encode(r.pair->f).at("coeffs").dump();
      gc = encode(r.pair->g).at("coeffs").dump();
      eq = r.pair->equicritical_exact ? "true" : "false";
      ineq = r.pair->inequivalent ? "true" : "false";
    } else {
      notes.push_back({{"t", encode(r.t)}, {"note", r.note}});
    }
    csv << csv_field(scalar_text(encode(r.t))) << ',' << kind << ',' << csv_field(scalar_text(encode(r.j1))) << ','
        << csv_field(scalar_text(encode(r.j2))) << ',' << csv_field(scalar_text(encode(r.jt))) << ','
        << csv_field(fc) << ',' << csv_field(gc) << ',' << eq << ',' << ineq << '\n';
  }
  json summary{{"rows", rows.size()},
               {"pairs", pairs},
               {"rows_with_poles", poles},
               {"identity_failures", identity_failures},
               {"unpaired", notes}};
  if (out_path.empty()) {
    out << csv.str();
  } else {
    write_file(out_path, csv.str());
    summary["out"] = out_path;
    out << summary.dump(2) << "\n";
  }
  if (identity_failures) throw std::make_pair(summary, Error(ErrorKind::VerificationFailed, "modular identities failed"));
  return json();  // already written
}

int report_error(std::ostream& out, std::ostream& err, const Error& e, json extra = json()) {
  json j = extra.is_null() ? json::object() : extra;
  j["error"] = std::string(to_string(e.kind()));
  j["message"] = e.what();
  out << j.dump(2) << "\n";
  err << "eqcrit: " << e.what() << "\n";
  switch (e.kind()) {
    case ErrorKind::NoPair:
    case ErrorKind::NoRationalFiberPoint:
    case ErrorKind::EllipticTargetObstruction:
      return kNegative;
    default:
      return kDomainError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Critical values of quartics, equicritical pairs and related maps"};
  app.require_subcommand(1);

  std::string t_arg, field_arg = "qq", out_path, file, poly, map_name, at, jcv_arg;
  bool pipeline = false, direct_only = false, reduced_only = false;
  long long wt = 0, wp = 0, wa = 1, from = 0, to = 0;
  TargetArgs target;

  auto* pair_cmd = app.add_subcommand("pair", "Emit the verified equicritical pair for t");
  pair_cmd->add_option("--t", t_arg, "rational, inf, or a token (rho, omega, m2omega, omega-rho, ...)")->required();
  pair_cmd->add_option("--field", field_arg, "qq | q-sqrt3 | q-omega | q-zeta12");
  pair_cmd->add_flag("--pipeline", pipeline, "build through the Weierstrass-integral pipeline");
  pair_cmd->add_option("--out", out_path, "also write the pair JSON to this file");

  auto* verify_cmd = app.add_subcommand("verify", "Recheck a pair file");
  verify_cmd->add_option("--file", file)->required();

  auto* cv_cmd = app.add_subcommand("cvpoly", "Monic critical-value polynomial");
  cv_cmd->add_option("--poly", poly, "polynomial JSON file (or inline JSON)")->required();

  auto* jcv_cmd = app.add_subcommand("jcv", "Critical j-invariant of a quartic");
  jcv_cmd->add_option("--poly", poly)->required();

  auto* maps_cmd = app.add_subcommand("maps", "Evaluate a named map exactly");
  maps_cmd->add_option("--eval", map_name, "beta4 | psi4 | pi3 | jt | x1 | x2 | j1 | j2 | gamma")->required();
  maps_cmd->add_option("--at", at)->required();
  maps_cmd->add_option("--field", field_arg);

  auto* fiber_cmd = app.add_subcommand("fiber", "Fiber of beta4 over a rational j_CV");
  fiber_cmd->add_option("--jcv", jcv_arg)->required();

  auto add_target = [&](CLI::App* c) {
    c->add_option("--y1", target.y1);
    c->add_option("--y2", target.y2);
    c->add_option("--y3", target.y3);
    c->add_option("--cubic", target.cubic, "a0,a1,a2 of the monic target y^3 + a2 y^2 + a1 y + a0");
  };
  auto* classify_cmd = app.add_subcommand("classify", "Is there a rational quartic with these critical values?");
  add_target(classify_cmd);
  auto* lift_cmd = app.add_subcommand("lift", "Construct a rational quartic with these critical values");
  add_target(lift_cmd);

  auto* weyl_cmd = app.add_subcommand("weyl", "Weyl sums mod p^2 for the scaled pair at integer t");
  weyl_cmd->add_option("--t", wt)->required();
  weyl_cmd->add_option("--p", wp)->required();
  weyl_cmd->add_option("--a", wa)->required();
  weyl_cmd->add_flag("--direct-only", direct_only);
  weyl_cmd->add_flag("--reduced-only", reduced_only);

  auto* sweep_cmd = app.add_subcommand("sweep", "CSV rows over an integer range of t");
  sweep_cmd->add_option("--t-from", from)->required();
  sweep_cmd->add_option("--t-to", to)->required();
  sweep_cmd->add_option("--field", field_arg);
  sweep_cmd->add_option("--out", out_path);

  std::vector<std::string> argv_store{"eqcrit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kDomainError;
  }

  try {
    json j;
    if (*pair_cmd) j = cmd_pair(t_arg, field_arg, pipeline, out_path);
    else if (*verify_cmd) j = cmd_verify(file);
    else if (*cv_cmd) j = cmd_cvpoly(poly);
    else if (*jcv_cmd) j = cmd_jcv(poly);
    else if (*maps_cmd) j = cmd_maps(map_name, at, field_arg);
    else if (*fiber_cmd) j = cmd_fiber(jcv_arg);
    else if (*classify_cmd) j = cmd_classify(target);
    else if (*lift_cmd) j = cmd_lift(target);
    else if (*weyl_cmd) j = cmd_weyl(wt, wp, wa, direct_only, reduced_only);
    else if (*sweep_cmd) {
      cmd_sweep(from, to, field_arg, out_path, out);
      return kOk;
    }
    out << j.dump(2) << "\n";
    return kOk;
  } catch (const Negative& n) {
    out << n.report.dump(2) << "\n";
    return kNegative;
  } catch (const std::pair<json, Error>& pe) {
    if (pe.first.contains("rows")) {  // sweep already printed its summary
      err << "eqcrit: " << pe.second.what() << "\n";
      return kDomainError;
    }
    return report_error(out, err, pe.second, pe.first);
  } catch (const Error& e) {
    return report_error(out, err, e);
  } catch (const json::exception& e) {
    return report_error(out, err, Error(ErrorKind::Parse, e.what()));
  }
}

}  // namespace eqcrit::cli

#include <CLI11.hpp>

#include <fstream>
#include <set>
#include <iostream>
#include <sstream>

#include "jset/acceptance.hpp"
#include "jset/characters.hpp"
#include "jset/errors.hpp"
#include "jset/json_io.hpp"

using namespace jset;

namespace {

json load_json(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw DomainError("cannot read " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw DomainError(std::string("invalid JSON: ") + ex.what());
  }
}

i64 ipow(i64 b, int k) {
  i64 r = 1;
  while (k-- > 0) r *= b;
  return r;
}

struct Out {
  bool as_json = false;
  json doc;
  std::ostringstream text;
  void emit() const {
    if (as_json)
      std::cout << doc.dump(2) << "\n";
    else
      std::cout << text.str();
  }
};

struct ShiftArgs {
  int p = 2;
  i64 e = 1;
  bool inf = false;
  std::string shift_json;
  void add(CLI::App* c) {
    c->add_option("--p", p, "prime p");
    c->add_option("--e", e, "absolute ramification index e");
    c->add_flag("--inf", inf, "use rho_{inf,p}");
    c->add_option("--shift", shift_json, "shift as JSON (overrides --p/--e)");
  }
  Shift get() const {
    if (!shift_json.empty()) return shift_from_json(load_json(shift_json));
    return inf ? Shift::rho_inf(p) : Shift::rho_ep(p, e);
  }
};

void list_jumpsets(Out& out, const std::vector<JumpSet>& v) {
  out.doc["count"] = v.size();
  json arr = json::array();
  for (const auto& js : v) {
    arr.push_back(jumpset_to_json(js)["entries"]);
    out.text << to_string(js) << "\n";
  }
  out.doc["jumpsets"] = arr;
  out.text << v.size() << " jump set(s)\n";
}

std::string mass_table(const Distribution& d) {
  std::ostringstream os;
  for (const auto& [js, m] : d.mass) os << to_string(js) << "\t" << m.get_str() << "\n";
  os << "total\t" << d.total().get_str() << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jump sets, shooting games and Eisenstein polynomials"};
  app.require_subcommand(1);
  app.fallthrough();
  Out out;
  bool all_ok = true;
  app.add_flag("--json", out.as_json, "print JSON instead of a table");

  // jumpset
  auto* jsc = app.add_subcommand("jumpset", "jump set utilities");
  jsc->require_subcommand(1);

  ShiftArgs en_shift;
  bool en_ext = false, en_adm = false;
  int en_bound = 3;
  auto* en = jsc->add_subcommand("enumerate", "list jump sets");
  en_shift.add(en);
  en->add_flag("--extended", en_ext, "allow e* in I");
  en->add_flag("--admissible", en_adm, "only admissible jump sets (implies --extended)");
  en->add_option("--beta-bound", en_bound, "largest beta value")->check(CLI::PositiveNumber);
  en->callback([&] {
    auto s = en_shift.get();
    auto v = enumerate(s, en_ext || en_adm, en_bound, en_adm);
    out.doc["shift"] = shift_to_json(s);
    list_jumpsets(out, v);
  });

  ShiftArgs ex_shift;
  std::string ex_points;
  bool ex_max = false, ex_ext = false;
  auto* ex = jsc->add_subcommand("extract", "min or max points of a graph under <=_rho");
  ex_shift.add(ex);
  ex->add_option("--points", ex_points, "JSON list of [a, b] pairs")->required();
  ex->add_flag("--maximal", ex_max, "maximal instead of minimal points");
  ex->add_flag("--extended", ex_ext, "allow e* in I");
  ex->callback([&] {
    auto s = ex_shift.get();
    std::vector<Point> pts;
    for (const auto& pr : load_json(ex_points)) {
      if (!pr.is_array() || pr.size() != 2) throw DomainError("points must be [a, b] pairs");
      pts.push_back({pr[0].get<i64>(), pr[1].get<int>()});
    }
    auto js = extract(s, ex_ext, pts, ex_max ? Which::Maximal : Which::Minimal);
    out.doc = jumpset_to_json(js);
    out.text << to_string(js) << "\n";
  });

  ShiftArgs fo_shift;
  std::string fo_vec;
  auto* fo = jsc->add_subcommand("filt-ord", "orbit invariant of a valuation vector");
  fo_shift.add(fo);
  fo->add_option("--vector", fo_vec, "vector JSON")->required();
  fo->callback([&] {
    auto v = vector_from_json(load_json(fo_vec), fo_shift.get());
    auto js = filt_ord(v);
    out.doc = jumpset_to_json(js);
    out.text << to_string(js) << "\n";
  });

  std::string vc_js;
  int vc_f = 1;
  ShiftArgs vc_shift;
  auto* vc = jsc->add_subcommand("vector", "canonical vector of a jump set");
  vc_shift.add(vc);
  vc->add_option("--js", vc_js, "jump set JSON")->required();
  vc->add_option("--f", vc_f, "number of free slots")->check(CLI::PositiveNumber);
  vc->callback([&] {
    auto v = canonical_vector(jumpset_from_json(load_json(vc_js), vc_shift.get()), vc_f);
    out.doc = vector_to_json(v);
    out.text << vector_to_json(v).dump() << "\n";
  });

  // characters
  auto* ch = app.add_subcommand("characters", "jump sets of characters");
  ch->require_subcommand(1);

  ShiftArgs fa_shift;
  std::string fa_mod;
  int fa_f = 1, fa_bound = 3;
  auto* fa = ch->add_subcommand("family", "jump sets of characters of a module");
  fa_shift.add(fa);
  fa->add_option("--module-js", fa_mod, "jump set of the module relation (omit for a free module)");
  fa->add_option("--f", fa_f, "unramified degree")->check(CLI::PositiveNumber);
  fa->add_option("--bound", fa_bound, "largest beta value")->check(CLI::PositiveNumber);
  fa->callback([&] {
    auto s = fa_shift.get();
    std::optional<JumpSet> mod;
    if (!fa_mod.empty()) mod = jumpset_from_json(load_json(fa_mod), s);
    list_jumpsets(out, character_jumpset_family(s, mod, fa_f, s.p(), fa_bound));
  });

  std::string ck_cand, ck_mod;
  int ck_f = 1;
  ShiftArgs ck_shift;
  auto* ck = ch->add_subcommand("check", "compatibility of a candidate with a module");
  ck_shift.add(ck);
  ck->add_option("--candidate", ck_cand, "candidate jump set JSON")->required();
  ck->add_option("--module-js", ck_mod, "module jump set JSON")->required();
  ck->add_option("--f", ck_f, "unramified degree")->check(CLI::PositiveNumber);
  ck->callback([&] {
    auto cand = jumpset_from_json(load_json(ck_cand), ck_shift.get());
    auto mod = jumpset_from_json(load_json(ck_mod), cand.shift);
    const int p = cand.shift.p();
    auto w = check_compatibility(cand, mod, ck_f, p);
    bool adequate = is_adequate(cand, mod, ck_f, p);
    out.doc = {{"compatible", w.compatible}, {"max", w.max_set}, {"c", w.c}, {"reason", w.reason},
               {"cheap", is_compatible_cheap(cand, mod, ck_f, p)}, {"adequate", adequate}};
    out.text << (w.compatible ? "compatible" : "incompatible") << "\nMax = {";
    for (size_t k = 0; k < w.max_set.size(); ++k) out.text << (k ? "," : "") << w.max_set[k];
    out.text << "}, c = " << w.c << "\nreason: " << w.reason << "\nadequate: " << (adequate ? "yes" : "no") << "\n";
  });

  ShiftArgs or_shift;
  std::string or_mod;
  int or_n = 3;
  auto* orc = ch->add_subcommand("oracle", "brute force over a finite quotient (f = 1)");
  or_shift.add(orc);
  orc->add_option("--module-js", or_mod, "module jump set JSON (omit for a free module)");
  orc->add_option("--N", or_n, "quotient by p^N")->check(CLI::Range(1, 8));
  orc->callback([&] {
    auto s = or_shift.get();
    std::optional<JumpSet> mod;
    if (!or_mod.empty()) mod = jumpset_from_json(load_json(or_mod), s);
    list_jumpsets(out, brute_force_character_jumpsets(s, mod, s.p(), or_n));
  });

  // shoot
  int sh_p = 2, sh_f = 1;
  i64 sh_e = 2, sh_start = 0;
  long sh_n = 10000;
  std::uint64_t sh_seed = 1;
  std::string sh_mode = "exact";
  bool sh_paths = false;
  auto* sh = app.add_subcommand("shoot", "shooting game distributions");
  sh->add_option("--p", sh_p, "prime p");
  sh->add_option("--f", sh_f, "unramified degree, q = p^f")->check(CLI::PositiveNumber);
  sh->add_option("--e", sh_e, "ramification index e")->check(CLI::PositiveNumber);
  sh->add_option("--start", sh_start, "start position r (default e')");
  sh->add_option("--mode", sh_mode, "simulate | exact | haar | identities")
      ->check(CLI::IsMember({"simulate", "exact", "haar", "identities"}));
  sh->add_option("--n", sh_n, "number of simulated games")->check(CLI::PositiveNumber);
  sh->add_option("--seed", sh_seed, "seed");
  sh->add_flag("--paths", sh_paths, "print every simulated game");
  sh->callback([&] {
    Shift s = Shift::rho_ep(sh_p, sh_e);
    const i64 q = ipow(sh_p, sh_f);
    GameParams g{s, q, sh_p, true};
    const i64 r = sh_start > 0 ? sh_start : s.e_prime();
    if (sh_mode == "exact" || sh_mode == "haar") {
      auto d = sh_mode == "exact" ? exact_distribution(g, r) : haar_distribution(s, sh_p, sh_f);
      out.doc = distribution_to_json(d);
      out.text << mass_table(d);
    } else if (sh_mode == "identities") {
      auto rep = identity_checks(s, q, sh_p);
      out.doc = {{"ok", rep.ok}, {"lines", rep.lines}};
      for (const auto& l : rep.lines) out.text << l << "\n";
      all_ok = all_ok && rep.ok;
    } else {
      auto exact = exact_distribution(g, r);
      json rows = json::array();
      if (sh_paths) {
        for (long k = 0; k < sh_n; ++k) {
          Rng rng(Rng::split(sh_seed, static_cast<std::uint64_t>(k)));
          auto path = simulate(g, r, rng);
          json shots = json::array();
          out.text << "game " << k << ":";
          for (const auto& st : path.shots) {
            shots.push_back({st.position, st.length, st.kind == GameState::Kind::First ? "first" : "second"});
            out.text << " (" << st.position << "," << st.length << (st.kind == GameState::Kind::Second ? ",*" : "") << ")";
          }
          out.text << " -> " << to_string(path.jumps) << "\n";
          rows.push_back({{"shots", shots}, {"jumpset", to_string(path.jumps)}});
        }
        out.doc["games"] = rows;
      }
      auto counts = simulate_counts(g, r, sh_n, sh_seed);
      json cls = json::array();
      for (const auto& [js, m] : exact.mass) {
        long c = counts.count(js) ? counts.at(js) : 0;
        cls.push_back({{"jumpset", to_string(js)}, {"count", c}, {"exact", m.get_str()}});
        out.text << to_string(js) << "\t" << c << "\t" << m.get_str() << "\n";
      }
      for (const auto& [js, c] : counts)
        if (!exact.mass.count(js)) {
          cls.push_back({{"jumpset", to_string(js)}, {"count", c}, {"exact", "0"}});
          out.text << to_string(js) << "\t" << c << "\t0\n";
        }
      out.doc["shift"] = shift_to_json(s);
      out.doc["start"] = r;
      out.doc["n"] = sh_n;
      out.doc["seed"] = sh_seed;
      out.doc["classes"] = cls;
    }
  });

  // eis
  auto* eis = app.add_subcommand("eis", "Eisenstein polynomial shapes");
  eis->require_subcommand(1);

  std::string ej_shape;
  auto* ej = eis->add_subcommand("jumpset", "jump set of a coefficient-valuation shape");
  ej->add_option("--shape", ej_shape, "shape JSON")->required();
  ej->callback([&] {
    auto shape = shape_from_json(load_json(ej_shape));
    auto r = jump_set_of_shape(shape);
    out.doc["over_inf"] = jumpset_to_json(r.over_inf);
    out.doc["game"] = r.game ? jumpset_to_json(*r.game) : json(nullptr);
    out.doc["field"] = r.field ? jumpset_to_json(*r.field) : json(nullptr);
    out.doc["alphas"] = r.alphas;
    out.doc["strongly_separable"] = r.strongly_separable;
    out.doc["routes_agree"] = r.routes_agree;
    out.text << "over rho_inf: " << to_string(r.over_inf) << "\n";
    out.text << "game: " << (r.game ? to_string(*r.game) : "-") << "\n";
    out.text << "field: " << (r.field ? to_string(*r.field) : "-") << "\n";
    out.text << "strongly separable: " << (r.strongly_separable ? "yes" : "no") << "\n";
  });

  std::string ep_js;
  int ep_n = 1, ep_j = 0;
  ShiftArgs ep_shift;
  auto* ep = eis->add_subcommand("polygon", "ramification polygon predicted by a jump set");
  ep_shift.add(ep);
  ep->add_option("--js", ep_js, "jump set JSON")->required();
  ep->add_option("--n", ep_n, "degree of the polynomial")->check(CLI::PositiveNumber);
  ep->add_option("--j", ep_j, "cyclotomic level of the base");
  ep->callback([&] {
    auto poly = ramification_polygon(jumpset_from_json(load_json(ep_js), ep_shift.get()), ep_n, ep_j);
    out.doc["vertices"] = polygon_to_json(poly);
    for (const auto& [x, y] : poly.vertices) out.text << x << "\t" << y << "\n";
  });

  std::string er_js;
  int er_f = 1, er_prec = 0;
  ShiftArgs er_shift;
  auto* er = eis->add_subcommand("realize", "Eisenstein polynomial with a given jump set (e* not in I)");
  er_shift.add(er);
  er->add_option("--js", er_js, "admissible jump set JSON")->required();
  er->add_option("--f", er_f, "unramified degree")->check(CLI::PositiveNumber);
  er->add_option("--precision", er_prec, "p-adic digits (default from e)");
  er->callback([&] {
    auto js = jumpset_from_json(load_json(er_js), er_shift.get());
    auto r = realize(js, er_f, er_prec);
    BaseRing b(js.shift.p(), er_f, 0, r.precision);
    auto check = field_jump_set(Tower(js.shift.p(), er_f, 0, r.g, r.precision));
    out.doc["polynomial"] = polynomial_to_json(b, r.g);
    out.doc["shape"] = shape_to_json(r.shape);
    out.doc["oracle"] = jumpset_to_json(check);
    out.text << polynomial_to_json(b, r.g).dump() << "\nshape " << shape_to_json(r.shape).dump() << "\noracle "
             << to_string(check) << "\n";
  });

  std::string et_js;
  i64 et_d = 2;
  ShiftArgs et_shift;
  auto* et = eis->add_subcommand("tame", "jump set after a tame extension of degree d");
  et_shift.add(et);
  et->add_option("--js", et_js, "admissible jump set JSON")->required();
  et->add_option("--d", et_d, "degree, coprime to p")->required();
  et->callback([&] {
    auto js = tame_transform(jumpset_from_json(load_json(et_js), et_shift.get()), et_d);
    out.doc = jumpset_to_json(js);
    out.text << to_string(js) << "\n";
  });

  std::string ec_js1, ec_js2;
  i64 ec_d = 1;
  ShiftArgs ec_shift;
  auto* ec = eis->add_subcommand("constraints", "necessary conditions on the jump set of an extension");
  ec_shift.add(ec);
  ec->add_option("--js1", ec_js1, "jump set of the base")->required();
  ec->add_option("--d", ec_d, "degree of the extension")->required();
  ec->add_option("--js2", ec_js2, "jump set of the extension")->required();
  ec->callback([&] {
    auto js1 = jumpset_from_json(load_json(ec_js1), ec_shift.get());
    auto js2 = jumpset_from_json(load_json(ec_js2), Shift::rho_ep(js1.shift.p(), ec_d * js1.shift.e()));
    auto rep = extension_constraints(js1, ec_d, js2);
    out.doc = {{"ok", rep.ok}, {"lines", rep.lines}};
    for (const auto& l : rep.lines) out.text << l << "\n";
  });

  // field
  auto* fld = app.add_subcommand("field", "p-adic oracle");
  fld->require_subcommand(1);

  int fj_p = 2, fj_f = 1, fj_j = 0, fj_prec = 0;
  std::string fj_g;
  bool fj_poly = false;
  auto* fj = fld->add_subcommand("jumpset", "field jump set of Q_q(zeta_{p^{j+1}})[x]/(g)");
  fj->add_option("--p", fj_p, "prime p");
  fj->add_option("--f", fj_f, "unramified degree")->check(CLI::PositiveNumber);
  fj->add_option("--j", fj_j, "cyclotomic level")->check(CLI::NonNegativeNumber);
  fj->add_option("--g", fj_g, "lower coefficients a_0..a_{n-1} (JSON, digit arrays or integers)")->required();
  fj->add_option("--precision", fj_prec, "p-adic digits N (default from e)");
  fj->add_flag("--polygon", fj_poly, "also print the ramification polygon");
  fj->callback([&] {
    json g = load_json(fj_g);
    if (g.is_object()) {
      if (g.contains("p")) fj_p = g["p"].get<int>();
      if (g.contains("f")) fj_f = g["f"].get<int>();
      if (g.contains("j")) fj_j = g["j"].get<int>();
      if (fj_prec == 0 && g.contains("precision")) fj_prec = g["precision"].get<int>();
    }
    const json& coeffs = g.is_object() ? g.at("g") : g;
    if (!coeffs.is_array() || coeffs.empty()) throw DomainError("g needs at least one coefficient");
    const i64 e = ipow(fj_p, fj_j) * (fj_p - 1) * static_cast<i64>(coeffs.size());
    if (fj_prec == 0) fj_prec = default_oracle_precision(fj_p, fj_j, e);
    BaseRing b(fj_p, fj_f, fj_j, fj_prec);
    Tower t(fj_p, fj_f, fj_j, polynomial_from_json(b, coeffs), fj_prec);
    auto js = field_jump_set(t);
    out.doc = jumpset_to_json(js);
    out.text << to_string(js) << "\n";
    if (fj_poly) {
      auto poly = ramification_newton(t);
      out.doc["polygon"] = polygon_to_json(poly);
      for (const auto& [x, y] : poly.vertices) out.text << x << "\t" << y << "\n";
    }
  });

  int fs_p = 2, fs_f = 1, fs_e0 = 2;
  long fs_n = 2000;
  std::uint64_t fs_seed = 1;
  auto* fs = fld->add_subcommand("sample", "jump sets of Haar-random Eisenstein polynomials over Q_q(zeta_p)");
  fs->add_option("--p", fs_p, "prime p");
  fs->add_option("--f", fs_f, "unramified degree")->check(CLI::PositiveNumber);
  fs->add_option("--e0", fs_e0, "degree over Q_q(zeta_p)")->check(CLI::PositiveNumber);
  fs->add_option("--n", fs_n, "number of samples")->check(CLI::PositiveNumber);
  fs->add_option("--seed", fs_seed, "seed");
  fs->callback([&] {
    Shift s = Shift::rho_ep(fs_p, static_cast<i64>(fs_p - 1) * fs_e0);
    int prec = default_oracle_precision(fs_p, 0, s.e());
    BaseRing b(fs_p, fs_f, 0, prec);
    std::map<JumpSet, long> counts;
    for (long k = 0; k < fs_n; ++k) {
      Rng rng(Rng::split(fs_seed, static_cast<std::uint64_t>(k)));
      ++counts[field_jump_set(Tower(fs_p, fs_f, 0, random_eisenstein(b, fs_e0, rng), prec))];
    }
    auto haar = haar_distribution(s, fs_p, fs_f);
    std::set<JumpSet> classes;
    for (const auto& [js, c] : counts) classes.insert(js);
    for (const auto& [js, m] : haar.mass) classes.insert(js);
    json rows = json::array();
    for (const auto& js : classes) {
      long c = counts.count(js) ? counts.at(js) : 0;
      std::string m = haar.mass.count(js) ? haar.mass.at(js).get_str() : "0";
      rows.push_back({{"jumpset", to_string(js)}, {"count", c}, {"mass", m}});
      out.text << to_string(js) << "\t" << c << "\t" << m << "\n";
    }
    out.doc = {{"shift", shift_to_json(s)}, {"n", fs_n}, {"seed", fs_seed}, {"classes", rows}};
  });

  // verify
  std::string vf_which = "all";
  AcceptanceOptions vf_opt;

  auto* vf = app.add_subcommand("verify", "run acceptance checks");
  vf->add_option("which", vf_which, "all or a criterion number 1..13");
  vf->add_option("--seed", vf_opt.seed, "seed");
  vf->add_flag("--verbose", vf_opt.verbose, "print details");
  vf->callback([&] {
    std::vector<int> ids;
    if (vf_which == "all") {
      for (int k = 1; k <= kCriteria; ++k) ids.push_back(k);
    } else {
      try {
        ids.push_back(std::stoi(vf_which));
      } catch (const std::exception&) {
        throw DomainError("verify expects all or a criterion number");
      }
    }
    json arr = json::array();
    for (int id : ids) {
      auto r = run_criterion(id, vf_opt);
      all_ok = all_ok && r.pass;
      arr.push_back({{"id", r.id}, {"pass", r.pass}, {"summary", r.summary}, {"details", r.details}});
      out.text << format_result(r) << "\n";
      if (vf_opt.verbose || !r.pass)
        for (const auto& l : r.details) out.text << "    " << l << "\n";
    }
    out.doc = {{"criteria", arr}, {"ok", all_ok}};
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    std::cout << json{{"error", "usage"}, {"message", ex.what()}}.dump() << "\n";
    return 1;
  } catch (const PrecisionError& ex) {
    std::cout << json{{"error", "precision"}, {"message", ex.what()}, {"required", ex.required()}}.dump() << "\n";
    return 2;
  } catch (const DomainError& ex) {
    std::cout << json{{"error", "domain"}, {"message", ex.what()}}.dump() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& ex) {
    std::cout << json{{"error", "json"}, {"message", ex.what()}}.dump() << "\n";
    return 1;
  }
  out.emit();
  return all_ok ? 0 : 1;
}

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "equisym/autgroup.hpp"
#include "equisym/dynmaps.hpp"
#include "equisym/errors.hpp"
#include "equisym/groups.hpp"
#include "equisym/invariants.hpp"
#include "equisym/text.hpp"

namespace equisym::cli {

namespace {

using nlohmann::ordered_json;

constexpr const char* kSchema = "equisym-cli/1";

struct Output {
  ordered_json json;
  std::ostringstream text;
};

int precision_from_env(int flag) {
  if (flag > 0) return flag;
  if (const char* e = std::getenv("EQUISYM_PRECISION")) {
    char* end = nullptr;
    long v = std::strtol(e, &end, 10);
    if (end && *end == '\0' && v > 0 && v <= 100000) return static_cast<int>(v);
    fail("InvalidInput", "EQUISYM_PRECISION must be a positive integer");
  }
  return TruncSeries::kDefaultPrecision;
}

ordered_json series_json(const TruncSeries& s) {
  try {
    return ordered_json(s.integer_coeffs());
  } catch (const DomainError&) {
  }
  ordered_json a = ordered_json::array();
  for (const auto& c : s.coeffs()) a.push_back(c.to_string());
  return a;
}

std::string matrix_text(const FMatrix& m) { return m.to_string(); }

struct GroupData {
  CatalogEntry entry;
  MatrixGroup lift;
  std::vector<Character> chars;
};

GroupData load_group(const std::string& label) {
  GroupData g{catalog(label), {}, {}};
  g.lift = linear_closure(g.entry.lift);
  g.chars = linear_characters(g.lift);
  return g;
}

const Character& pick_char(const GroupData& g, int k) {
  if (k < 0 || static_cast<std::size_t>(k) >= g.chars.size())
    fail("InvalidInput", "character index " + std::to_string(k) + " out of range; the group has " +
                             std::to_string(g.chars.size()) + " linear characters");
  return g.chars[static_cast<std::size_t>(k)];
}

std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      fail("InvalidInput", "not an integer list: " + s);
    }
  }
  return out;
}

MPoly parse_form(const std::string& s, int nvars) {
  return text::parse_poly(s, cyclo_field(text::infer_conductor(s)), nvars);
}

void group_header(Output& o, const std::string& verb, const std::string& label, const GroupData& g, int k) {
  o.json["verb"] = verb;
  o.json["group"] = label;
  o.json["lift_order"] = g.lift.order();
  o.json["character"] = k;
  o.json["character_count"] = g.chars.size();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariant theory and automorphisms of morphisms of P^1 and P^2", "equisym"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  uint64_t seed = 0;
  int threads = 1;
  int prec_flag = 0;
  app.add_flag("--json", json, "Emit JSON");
  app.add_option("--seed", seed, "Seed for randomized fallbacks")->capture_default_str();
  app.add_option("--threads", threads, "Worker threads for elimination")->check(CLI::Range(1, 256));
  app.add_option("--prec", prec_flag, "Series precision (default: EQUISYM_PRECISION or 20)")->check(CLI::Range(1, 100000));

  std::string group, map_text, matrix_text_in, form_a, form_b, label, primaries;
  int chr = 0, degree = 0, dim = 2, period = 1, field = 1;
  long cap = 800;
  uint64_t prime = 23;
  bool skip3 = false;
  std::vector<std::string> forms, maps, mults, gens, primes;
  unsigned conductor = 1;

  auto* molien_cmd = app.add_subcommand("molien", "Molien series of a catalog group lift");
  auto* emolien = app.add_subcommand("equi-molien", "Equivariant Molien series");
  for (auto* s : {molien_cmd, emolien}) {
    s->add_option("--group", group, "Catalog label, e.g. pgl2:octahedral")->required();
    s->add_option("--char", chr, "Linear character index (0 is trivial)");
  }
  emolien->add_option("--primaries", primaries, "Comma-separated degrees d_i; also print the series times prod(1 - t^d_i)");
  auto* invs = app.add_subcommand("invariants", "Basis of relative invariants of one degree");
  auto* eqvs = app.add_subcommand("equivariants", "Basis of equivariant maps of one degree");
  for (auto* s : {invs, eqvs}) {
    s->add_option("--group", group, "Catalog label")->required();
    s->add_option("--char", chr, "Linear character index");
    s->add_option("--degree", degree, "Degree")->required()->check(CLI::Range(0, 200));
  }
  auto* construct = app.add_subcommand("construct", "Maps from invariants");
  construct->require_subcommand(1);
  auto* klein = construct->add_subcommand("klein", "[-G_y, G_x] from a binary form");
  klein->add_option("form", form_a)->required();
  auto* dm = construct->add_subcommand("dm", "[x F/2 + G_y, y F/2 - G_x]");
  dm->add_option("F", form_a)->required();
  dm->add_option("G", form_b)->required();
  auto* wedge = construct->add_subcommand("wedge", "Dual of the wedge of the differentials");
  wedge->add_option("forms", forms)->required();
  auto* combine = construct->add_subcommand("combine", "sum of mult_i * map_i, gcd-reduced");
  combine->add_option("--map", maps)->required();
  combine->add_option("--mult", mults)->required();
  auto* cat = app.add_subcommand("catalog", "List catalog labels or show one entry");
  cat->add_option("label", label);
  cat->add_option("--dim", dim)->check(CLI::IsMember({2, 3}));
  auto* closure = app.add_subcommand("closure", "Projective closure of a catalog entry or explicit generators");
  closure->add_option("--group", group);
  closure->add_option("--gen", gens, "Matrix \"[[a, b], [c, d]]\"; repeatable");
  closure->add_option("--conductor", conductor, "Field Q(zeta_m) for --gen entries")->check(CLI::Range(1u, 1000u));
  auto* aut = app.add_subcommand("autgroup", "Automorphism group of a morphism of P^2 over Q");
  aut->add_option("map", map_text)->required();
  aut->add_flag("--skip-period-3", skip3, "Skip 3-periodic points when a mod-p filter certifies there are none");
  aut->add_option("--cap", cap, "Eliminant degree cap")->capture_default_str();
  aut->add_option("--primes", primes, "Primes for the cycle filter")->delimiter(',');
  auto* verify = app.add_subcommand("verify", "Test matrices as automorphisms of a map");
  verify->add_option("map", map_text)->required();
  verify->add_option("--matrix", matrix_text_in);
  verify->add_option("--group", group, "Check every generator of a catalog entry");
  auto* resultant = app.add_subcommand("resultant", "Resultant of the coordinates of a map");
  resultant->add_option("map", map_text)->required();
  auto* bound = app.add_subcommand("bound", "Upper bound on the automorphism group order");
  bound->add_option("--degree", degree)->required();
  bound->add_option("--dim", dim)->required()->check(CLI::IsMember({1, 2}));
  auto* modp = app.add_subcommand("modp-filter", "Finite-field certificate that no rational n-cycles exist");
  modp->add_option("map", map_text)->required();
  modp->add_option("--period", period)->required()->check(CLI::Range(1, 12));
  modp->add_option("--prime", prime)->required();
  auto* periodic = app.add_subcommand("periodic", "Periodic points over Q, Q(i) or Q(zeta_6)");
  periodic->add_option("map", map_text)->required();
  periodic->add_option("--period", period)->required()->check(CLI::Range(1, 3));
  periodic->add_option("--field", field, "Conductor 1, 4 or 6")->check(CLI::IsMember({1, 4, 6}));
  periodic->add_option("--cap", cap, "Eliminant degree cap")->capture_default_str();

  auto emit_error = [&](const std::string& kind, const std::string& msg, int code) {
    if (json) {
      ordered_json j;
      j["schema"] = kSchema;
      j["error"] = {{"kind", kind}, {"message", msg}, {"exit_code", code}};
      out << j.dump(2) << "\n";
    } else {
      err << "error: " << kind << ": " << msg << "\n";
    }
    return code;
  };

  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--seed" || a == "--threads" || a == "--prec") {
      ++i;
      continue;
    }
    if (a.empty() || a[0] == '-') continue;
    if (app.get_subcommands([&](CLI::App* c) { return c->get_name() == a; }).empty()) {
      json = std::find(args.begin(), args.end(), "--json") != args.end();
      return emit_error("UsageError", "unknown verb '" + a + "'", 1);
    }
    break;
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    json = std::find(args.begin(), args.end(), "--json") != args.end();
    return emit_error("UsageError", e.what(), 1);
  }

  Output o;
  o.json["schema"] = kSchema;
  try {
    if (molien_cmd->parsed() || emolien->parsed()) {
      int prec = precision_from_env(prec_flag);
      GroupData g = load_group(group);
      const Character& c = pick_char(g, chr);
      bool eq = emolien->parsed();
      TruncSeries s = eq ? equivariant_molien(g.lift, c, prec) : molien(g.lift, c, prec);
      group_header(o, eq ? "equi-molien" : "molien", group, g, chr);
      o.json["precision"] = prec;
      o.json["series"] = s.to_string();
      o.json["coefficients"] = series_json(s);
      o.text << s.to_string() << "\n";
      if (eq && !primaries.empty()) {
        auto ds = int_list(primaries);
        TruncSeries p = s;
        for (int d : ds) {
          std::vector<long> f(static_cast<std::size_t>(d) + 1, 0);
          f[0] = 1;
          f[static_cast<std::size_t>(d)] = -1;
          p = p * TruncSeries::from_ints(s.field(), prec, f);
        }
        o.json["primaries"] = ds;
        o.json["times_primaries"] = p.to_string();
        o.text << "times prod(1 - t^d): " << p.to_string() << "\n";
      }
    } else if (invs->parsed()) {
      GroupData g = load_group(group);
      auto basis = invariant_space(g.lift, pick_char(g, chr), degree);
      group_header(o, "invariants", group, g, chr);
      o.json["degree"] = degree;
      o.json["basis"] = ordered_json::array();
      for (const auto& b : basis) {
        o.json["basis"].push_back(b.to_string());
        o.text << b.to_string() << "\n";
      }
      o.json["dimension"] = basis.size();
      if (basis.empty()) o.text << "(empty)\n";
    } else if (eqvs->parsed()) {
      GroupData g = load_group(group);
      auto basis = equivariant_space(g.lift, pick_char(g, chr), degree);
      group_header(o, "equivariants", group, g, chr);
      o.json["degree"] = degree;
      o.json["basis"] = ordered_json::array();
      for (const auto& b : basis) {
        o.json["basis"].push_back(text::tuple_to_string(b));
        o.text << text::tuple_to_string(b) << "\n";
      }
      o.json["dimension"] = basis.size();
      if (basis.empty()) o.text << "(empty)\n";
    } else if (construct->parsed()) {
      ProjMap f;
      std::string how;
      if (klein->parsed()) {
        how = "klein";
        f = klein_map(parse_form(form_a, 2));
      } else if (dm->parsed()) {
        how = "dm";
        unsigned m = text::infer_conductor(form_b, text::infer_conductor(form_a));
        f = doyle_mcmullen(text::parse_poly(form_a, cyclo_field(m), 2), text::parse_poly(form_b, cyclo_field(m), 2));
      } else if (wedge->parsed()) {
        how = "wedge";
        unsigned m = 1;
        for (const auto& s : forms) m = text::infer_conductor(s, m);
        std::vector<MPoly> ps;
        for (const auto& s : forms) ps.push_back(text::parse_poly(s, cyclo_field(m), static_cast<int>(forms.size()) + 1));
        f = wedge_map(ps);
      } else {
        how = "combine";
        if (maps.size() != mults.size()) fail("InvalidInput", "--map and --mult must be given the same number of times");
        unsigned m = 1;
        for (const auto& s : maps) m = text::infer_conductor(s, m);
        for (const auto& s : mults) m = text::infer_conductor(s, m);
        std::vector<MapTuple> eqs;
        std::vector<MPoly> ms;
        for (const auto& s : maps) eqs.push_back(text::parse_tuple(s, cyclo_field(m)));
        int nv = static_cast<int>(eqs[0].size());
        for (const auto& s : mults) ms.push_back(text::parse_poly(s, cyclo_field(m), nv));
        f = equivariant_combination(eqs, ms);
      }
      o.json["verb"] = "construct";
      o.json["construction"] = how;
      o.json["map"] = f.to_string();
      o.json["degree"] = f.degree;
      o.text << f.to_string() << "\n";
    } else if (cat->parsed()) {
      o.json["verb"] = "catalog";
      if (label.empty()) {
        o.json["dim"] = dim;
        o.json["labels"] = catalog_labels(dim);
        for (const auto& l : catalog_labels(dim)) o.text << "pgl" << dim << ":" << l << "\n";
      } else {
        CatalogEntry e = catalog(label);
        o.json["label"] = e.label;
        o.json["params"] = e.params;
        o.json["conductor"] = e.conductor;
        o.json["generators"] = ordered_json::array();
        o.text << e.label << " over Q(zeta_" << e.conductor << ")\n";
        for (const auto& g : e.generators) {
          o.json["generators"].push_back(matrix_text(g));
          o.text << "  " << matrix_text(g) << "\n";
        }
        o.json["lift_generators"] = ordered_json::array();
        for (const auto& g : e.lift) o.json["lift_generators"].push_back(matrix_text(g));
        if (e.stated_order) {
          o.json["stated_order"] = e.stated_order;
          o.text << "stated order " << e.stated_order << "\n";
        }
      }
    } else if (closure->parsed()) {
      o.json["verb"] = "closure";
      std::vector<FMatrix> g;
      if (!group.empty()) {
        CatalogEntry e = catalog(group);
        g = e.generators;
        o.json["group"] = e.label;
        MatrixGroup L = linear_closure(e.lift);
        o.json["lift_order"] = L.order();
      } else {
        if (gens.empty()) fail("InvalidInput", "closure needs --group or at least one --gen");
        unsigned m = conductor;
        for (const auto& s : gens) m = text::infer_conductor(s, m);
        for (const auto& s : gens) g.push_back(text::parse_matrix(s, cyclo_field(m)));
      }
      ProjGroup P = projective_closure(g);
      o.json["order"] = P.order();
      o.text << P.order() << "\n";
    } else if (aut->parsed()) {
      AutOptions opts;
      opts.skip_period_3 = skip3;
      opts.eliminant_degree_cap = cap;
      opts.seed = seed;
      opts.threads = threads;
      if (!primes.empty()) {
        opts.modp_primes.clear();
        for (const auto& p : primes) opts.modp_primes.push_back(std::stoull(p));
      }
      ProjMap f = parse_map(map_text);
      AutResult r = automorphism_group_p2(f, opts);
      o.json["verb"] = "autgroup";
      o.json["map"] = f.to_string();
      o.json["order"] = r.elements.order();
      o.json["bound"] = aut_bound(f.degree, 2);
      o.json["period3_certificate"] = r.period3_certificate;
      o.json["closure_added"] = r.closure_added;
      o.json["elements"] = ordered_json::array();
      o.text << "order " << r.elements.order() << "\n";
      for (std::size_t i = 0; i < r.elements.order(); ++i) {
        const auto& c = r.provenance[i];
        ordered_json e;
        e["matrix"] = matrix_text(r.elements.elements[i]);
        std::string src = c.n == 1 ? "identity" : c.n == 0 ? "closure" : "s" + std::to_string(c.case_label);
        e["source"] = src;
        if (c.n > 1) {
          e["n"] = c.n;
          e["a"] = c.a;
          e["b"] = c.b;
          e["triple"] = ordered_json::array();
          for (const auto& P : c.triple) e["triple"].push_back(P.to_string());
        }
        o.json["elements"].push_back(e);
        o.text << matrix_text(r.elements.elements[i]) << "  " << src;
        if (c.n > 1) o.text << " n=" << c.n << " a=" << c.a << " b=" << c.b;
        o.text << "\n";
      }
    } else if (verify->parsed()) {
      ProjMap f = parse_map(map_text);
      o.json["verb"] = "verify";
      o.json["map"] = f.to_string();
      std::vector<FMatrix> ms;
      if (!matrix_text_in.empty())
        ms.push_back(text::parse_matrix(matrix_text_in, cyclo_field(text::infer_conductor(matrix_text_in))));
      if (!group.empty())
        for (const auto& g : catalog(group).generators) ms.push_back(g);
      if (ms.empty()) fail("InvalidInput", "verify needs --matrix or --group");
      bool all = true;
      o.json["results"] = ordered_json::array();
      for (const auto& m : ms) {
        bool ok = is_automorphism(f, m);
        all = all && ok;
        o.json["results"].push_back({{"matrix", matrix_text(m)}, {"automorphism", ok}});
        o.text << (ok ? "yes " : "no  ") << matrix_text(m) << "\n";
      }
      o.json["all"] = all;
    } else if (resultant->parsed()) {
      ProjMap f = parse_map(map_text);
      CycNum r = macaulay_resultant(f, seed);
      o.json["verb"] = "resultant";
      o.json["map"] = f.to_string();
      o.json["resultant"] = r.to_string();
      o.json["morphism"] = !r.is_zero();
      o.text << r.to_string() << "\n" << (r.is_zero() ? "not a morphism" : "morphism") << "\n";
    } else if (bound->parsed()) {
      long b = aut_bound(degree, dim);
      o.json["verb"] = "bound";
      o.json["degree"] = degree;
      o.json["dim"] = dim;
      o.json["bound"] = b;
      o.text << b << "\n";
    } else if (modp->parsed()) {
      ProjMap f = parse_map(map_text);
      CycleFilter r = modp_cycle_filter(f, period, prime);
      std::string v = r == CycleFilter::NoRationalNCycles ? "NoRationalNCycles" : "Unknown";
      o.json["verb"] = "modp-filter";
      o.json["map"] = f.to_string();
      o.json["period"] = period;
      o.json["prime"] = prime;
      o.json["result"] = v;
      o.text << v << "\n";
    } else if (periodic->parsed()) {
      ProjMap f = parse_map(map_text);
      SolveOptions so{cap, seed, threads};
      PeriodicSet s = periodic_points(f, period, static_cast<unsigned>(field), so);
      o.json["verb"] = "periodic";
      o.json["map"] = f.to_string();
      o.json["period"] = period;
      o.json["field"] = field;
      o.json["points"] = ordered_json::array();
      for (std::size_t i = 0; i < s.points.size(); ++i) {
        o.json["points"].push_back({{"point", s.points[i].to_string()}, {"exact", static_cast<bool>(s.exact[i])}});
        o.text << s.points[i].to_string() << (s.exact[i] ? "" : "  (period divides " + std::to_string(period) + ")")
               << "\n";
      }
      o.json["count"] = s.points.size();
    }
  } catch (const ResourceCap& e) {
    return emit_error("ResourceCap", e.what(), 2);
  } catch (const DomainError& e) {
    return emit_error(e.kind(), e.what(), 1);
  } catch (const std::exception& e) {
    return emit_error("InvalidInput", e.what(), 1);
  }
  if (json)
    out << o.json.dump(2) << "\n";
  else
    out << o.text.str();
  return 0;
}

}  // namespace equisym::cli

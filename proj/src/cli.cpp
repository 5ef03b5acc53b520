#include "ratdyn/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <functional>
#include <json.hpp>
#include <string>

#include "ratdyn/decompose.hpp"
#include "ratdyn/expr.hpp"
#include "ratdyn/lattes.hpp"
#include "ratdyn/orbifold.hpp"
#include "ratdyn/spectrum.hpp"

namespace ratdyn {

namespace {

using Json = nlohmann::ordered_json;

Json rational_json(const Scalar& v) { return Json::array({v.get_num().get_str(), v.get_den().get_str()}); }

Json poly_json(const Poly& p, std::string_view var = "z") {
  Json c = Json::array();
  for (const auto& x : p.coefficients()) c.push_back(rational_json(x));
  return Json{{"text", p.to_string(var)}, {"coefficients", c}};
}

Json map_json(const RationalMap& f) {
  return Json{{"text", f.to_string()},
              {"degree", f.degree()},
              {"num", poly_json(f.num())["coefficients"]},
              {"den", poly_json(f.den())["coefficients"]}};
}

Json orbifold_json(const Orbifold& o) {
  Json loci = Json::array();
  for (const auto& l : o.loci())
    loci.push_back(Json{{"finite", poly_json(l.points.finite)}, {"infinity", l.points.infinity}, {"nu", l.nu.to_string()}});
  return Json{{"text", o.to_string()},
              {"signature", o.signature_string()},
              {"euler_characteristic", rational_json(euler_char(o))},
              {"loci", loci}};
}

Json decomposition_json(const Decomposition& d) {
  return Json{{"outer", map_json(d.outer)}, {"inner", map_json(d.inner)}};
}

Json covering_json(const CoveringCertificate& c) {
  Json j{{"covering", c.covering}, {"matches", c.matches}};
  if (!c.covering) j["failure"] = c.failure;
  return j;
}

Json lattes_json(const LattesMap& l) {
  return Json{{"curve", Json{{"a", rational_json(l.curve.a())}, {"b", rational_json(l.curve.b())}}},
              {"scale", l.scale},
              {"map", map_json(l.map)},
              {"orbifold", orbifold_json(l.orb)}};
}

Json isogeny_json(const IsogenyData& i) {
  return Json{{"source", Json{{"a", rational_json(i.source.a())}, {"b", rational_json(i.source.b())}}},
              {"target", Json{{"a", rational_json(i.target.a())}, {"b", rational_json(i.target.b())}}},
              {"kernel", poly_json(i.kernel, "x")},
              {"degree", i.degree},
              {"xmap", map_json(i.xmap)}};
}

struct Context {
  std::string command;
  Json inputs = Json::object();
  Json result = Json::object();
};

RationalMap input_map(Context& c, const std::string& name, const std::string& text) {
  RationalMap m = parse_map(text);
  c.inputs[name] = m.to_string();
  return m;
}

Orbifold input_orbifold(Context& c, const std::string& name, const std::string& text) {
  Orbifold o = parse_orbifold(text);
  c.inputs[name] = o.to_string();
  return o;
}

EllipticCurve input_curve(Context& c, const std::string& text) {
  EllipticCurve e = parse_curve(text);
  c.inputs["curve"] = Json{{"a", rational_json(e.a())}, {"b", rational_json(e.b())}};
  return e;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with rational maps, orbifolds and Lattes maps", "ratdyn"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "Add wall-clock milliseconds to the report");

  Context ctx;
  std::function<void()> action;
  std::string a, x, y, b, map, orb, target, curve, push;
  int s = 1, depth = 2, budget = kDefaultOrbitBudget, n = 2, m = 3;
  bool classify = false;

  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->callback([&, name] { ctx.command = name; });
    return sub;
  };

  auto* vs = add("verify-semiconj", "Check X o B = A o X");
  vs->add_option("--a", a)->required();
  vs->add_option("--x", x)->required();
  vs->add_option("--b", b)->required();

  auto* vm = add("verify-mutual", "Check Y o A = B o Y and X o B = A o X");
  vm->add_option("--a", a)->required();
  vm->add_option("--x", x)->required();
  vm->add_option("--y", y)->required();
  vm->add_option("--b", b)->required();

  auto* dc = add("decompose", "All proper decompositions U o V");
  dc->add_option("--map", map)->required();

  auto* ex = add("explore", "Elementary-transformation graph up to a depth");
  ex->add_option("--map", map)->required();
  ex->add_option("--depth", depth)->check(CLI::Range(0, 8));

  auto* ob = add("orbifold", "Canonical orbifold of a map, or the orbifold induced by it");
  ob->add_option("--map", map)->required();
  ob->add_option("--budget", budget)->check(CLI::Range(1, 256));
  ob->add_option("--push", push, "Orbifold to transport along the map");

  auto* cc = add("covering-check", "Check that a map is a covering of orbifolds");
  cc->add_option("--map", map)->required();
  cc->add_option("--orbifold", orb)->required();
  cc->add_option("--target", target, "Target orbifold (defaults to --orbifold)");

  auto* sp = add("spectrum", "Multiplier polynomials M_1..M_s");
  sp->add_option("--map", map)->required();
  sp->add_option("--s", s)->check(CLI::Range(1, 16));
  sp->add_flag("--classify", classify, "Classify the fixed points");

  auto* is = add("isospectral", "Compare M_1..M_s of two maps");
  is->add_option("--a", a)->required();
  is->add_option("--b", b)->required();
  is->add_option("--s", s)->check(CLI::Range(1, 16));

  auto* lb = add("lattes-build", "Multiplication-by-n map of y^2 = x^3 + a x + b");
  lb->add_option("--curve", curve)->required();
  lb->add_option("--n", n)->required()->check(CLI::Range(2, 64));

  auto* mp = add("mutual-pair", "Mutually semiconjugate Lattes maps through an n-isogeny");
  mp->add_option("--curve", curve)->required();
  mp->add_option("--n", n)->check(CLI::Range(2, 64));
  mp->add_option("--m", m)->check(CLI::Range(2, 64));

  auto* rp = add("reduce-primitive", "Reduce X o B = A o X to a primitive triple");
  rp->add_option("--a", a)->required();
  rp->add_option("--x", x)->required();
  rp->add_option("--b", b)->required();

  auto* lu = add("luroth", "Generator W of the field generated by X and B");
  lu->add_option("--x", x)->required();
  lu->add_option("--b", b)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitVerdict;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitVerdict;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Json& r = ctx.result;
  try {
    const std::string& c = ctx.command;
    if (c == "verify-semiconj") {
      const SemiconjugacyTriple t{input_map(ctx, "a", a), input_map(ctx, "x", x), input_map(ctx, "b", b)};
      r["x_after_b"] = map_json(compose(t.x, t.b));
      r["a_after_x"] = map_json(compose(t.a, t.x));
      r["verdict"] = verify_semiconjugacy(t);
    } else if (c == "verify-mutual") {
      const RationalMap ma = input_map(ctx, "a", a), mx = input_map(ctx, "x", x), my = input_map(ctx, "y", y),
                        mb = input_map(ctx, "b", b);
      r["y_square"] = compose(my, ma) == compose(mb, my);
      r["x_square"] = compose(mx, mb) == compose(ma, mx);
      r["verdict"] = verify_mutual(ma, mx, my, mb);
    } else if (c == "decompose") {
      const RationalMap f = input_map(ctx, "map", map);
      Json list = Json::array();
      for (const auto& d : all_decompositions(f)) list.push_back(decomposition_json(d));
      r["count"] = list.size();
      r["decompositions"] = list;
    } else if (c == "explore") {
      const RationalMap f = input_map(ctx, "map", map);
      ctx.inputs["depth"] = depth;
      const auto g = explore_equivalence(f, depth);
      Json nodes = Json::array(), edges = Json::array();
      bool preserved = true;
      for (const auto& node : g.nodes)
        nodes.push_back(Json{{"map", map_json(node.map)},
                             {"depth", node.depth},
                             {"parent", node.parent},
                             {"m1", poly_json(node.m1, "w")},
                             {"m2", poly_json(node.m2, "w")},
                             {"unresolved", node.unresolved}});
      for (const auto& e : g.edges) {
        preserved = preserved && e.spectra_preserved;
        edges.push_back(Json{{"from", e.from},
                             {"to", e.to},
                             {"witness", decomposition_json(e.witness)},
                             {"transform", map_json(e.target)},
                             {"spectra_preserved", e.spectra_preserved},
                             {"identities_hold", e.identities_hold}});
      }
      r["nodes"] = nodes;
      r["edges"] = edges;
      r["complete"] = g.complete;
      r["all_edges_preserve_spectra"] = preserved;
    } else if (c == "orbifold") {
      const RationalMap f = input_map(ctx, "map", map);
      if (!push.empty()) {
        const Orbifold o = input_orbifold(ctx, "push", push);
        const Orbifold induced = induced_orbifold(o, f);
        r["induced"] = orbifold_json(induced);
        r["covering"] = covering_json(is_covering(f, o, induced));
      } else {
        ctx.inputs["budget"] = budget;
        const auto o = infer_canonical_orbifold(f, budget);
        r["found"] = o.has_value();
        r["orbifold"] = o ? orbifold_json(*o) : Json(nullptr);
      }
    } else if (c == "covering-check") {
      const RationalMap f = input_map(ctx, "map", map);
      const Orbifold o1 = input_orbifold(ctx, "orbifold", orb);
      const Orbifold o2 = target.empty() ? o1 : input_orbifold(ctx, "target", target);
      const auto cert = is_covering(f, o1, o2);
      r["certificate"] = covering_json(cert);
      r["riemann_hurwitz"] = cert.covering && riemann_hurwitz_check(f, o1, o2);
      r["verdict"] = cert.covering;
    } else if (c == "spectrum") {
      const RationalMap f = input_map(ctx, "map", map);
      ctx.inputs["s"] = s;
      check_spectrum_budget(f.degree(), s);
      Json list = Json::array();
      for (int k = 1; k <= s; ++k) {
        const Poly mk = multiplier_polynomial(f, k);
        list.push_back(Json{{"s", k}, {"degree", mk.degree()}, {"polynomial", poly_json(mk, "w")}});
      }
      r["multiplier_polynomials"] = list;
      if (classify) {
        Json fixed = Json::array();
        for (const auto& fc : classify_fixed_points(f)) {
          Json roots = Json::array();
          for (const auto& rc : fc.roots)
            roots.push_back(Json{{"character", to_string(rc.character)}, {"exact", rc.exact}, {"multiplier", rc.multiplier}});
          fixed.push_back(Json{{"point", fc.point},
                               {"multiplicity", fc.multiplicity},
                               {"multiplier_polynomial", fc.multiplier_polynomial},
                               {"roots", roots}});
        }
        r["fixed_points"] = fixed;
      }
    } else if (c == "isospectral") {
      const RationalMap fa = input_map(ctx, "a", a), fb = input_map(ctx, "b", b);
      ctx.inputs["s"] = s;
      check_spectrum_budget(fa.degree(), s);
      Json per = Json::array();
      bool all = true;
      for (int k = 1; k <= s; ++k) {
        const bool eq = multiplier_polynomial(fa, k) == multiplier_polynomial(fb, k);
        all = all && eq;
        per.push_back(Json{{"s", k}, {"equal", eq}});
      }
      r["per_iterate"] = per;
      r["verdict"] = all;
    } else if (c == "lattes-build") {
      const EllipticCurve e = input_curve(ctx, curve);
      ctx.inputs["n"] = n;
      const LattesMap l = multiplication_map(e, n);
      r["lattes"] = lattes_json(l);
      r["covering"] = covering_json(is_covering(l.map, l.orb, l.orb));
      r["riemann_hurwitz"] = riemann_hurwitz_check(l.map, l.orb, l.orb);
      const auto rep = check_multiplier_formula(l);
      Json checks = Json::array();
      for (const auto& ch : rep.checks)
        checks.push_back(Json{{"point", ch.point}, {"residue", ch.residue}, {"ok", ch.ok}});
      r["multiplier_formula"] = rep.applicable ? Json{{"applicable", true}, {"holds", rep.holds()}, {"checks", checks}}
                                               : Json{{"applicable", false}, {"reason", rep.reason}};
    } else if (c == "mutual-pair") {
      const EllipticCurve e = input_curve(ctx, curve);
      ctx.inputs["n"] = n;
      ctx.inputs["m"] = m;
      const MutualPair p = build_mutual_pair(e, n, m);
      r["a_source"] = lattes_json(p.a_source);
      r["a_target"] = lattes_json(p.a_target);
      r["x"] = map_json(p.x);
      r["y"] = map_json(p.y);
      r["isogeny"] = isogeny_json(p.isogeny);
      r["dual"] = isogeny_json(p.dual);
      const RationalMap an = multiplication_map(e, n).map;
      r["verdicts"] = Json{{"y_a_source_eq_a_target_y", compose(p.y, p.a_source.map) == compose(p.a_target.map, p.y)},
                           {"x_a_target_eq_a_source_x", compose(p.x, p.a_target.map) == compose(p.a_source.map, p.x)},
                           {"x_y_eq_a_n", compose(p.x, p.y) == an},
                           {"induced_orbifold_matches", p.induced == p.a_target.orb}};
      r["degree_product"] = p.x.degree() * p.y.degree();
      r["induced_orbifold"] = orbifold_json(p.induced);
    } else if (c == "reduce-primitive") {
      const SemiconjugacyTriple t{input_map(ctx, "a", a), input_map(ctx, "x", x), input_map(ctx, "b", b)};
      const auto red = reduce_to_primitive(t);
      Json chain = Json::array();
      for (const auto& d : red.chain) chain.push_back(decomposition_json(d));
      r["w"] = map_json(red.w);
      r["x0"] = map_json(red.x0);
      r["b0"] = map_json(red.b0);
      r["chain"] = chain;
      r["primitive"] = is_primitive({t.a, red.x0, red.b0});
    } else if (c == "luroth") {
      const RationalMap fx = input_map(ctx, "x", x), fb = input_map(ctx, "b", b);
      const RationalMap w = luroth_generator(fx, fb);
      r["w"] = map_json(w);
      r["x_outer"] = map_json(*left_divide(fx, w));
      r["b_outer"] = map_json(*left_divide(fb, w));
      r["primitive_pair"] = w.degree() == 1;
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitOperational;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitOperational;
  }

  Json report{{"schema", 1}, {"command", ctx.command}, {"inputs", ctx.inputs}};
  for (auto& [k, v] : r.items()) report[k] = v;
  if (timing)
    report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out << report.dump(2) << "\n";
  return kExitVerdict;
}

}  // namespace ratdyn

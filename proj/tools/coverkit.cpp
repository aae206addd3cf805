// Command-line front end. Every subcommand prints (or writes with --out) one
// JSON document. Exit codes: 0 all assertions pass, 1 an assertion failed or
// a search was exhausted, 2 usage error or infeasible parameters.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "coverkit/baumslag.hpp"
#include "coverkit/constructors.hpp"
#include "coverkit/error.hpp"
#include "coverkit/geometry.hpp"
#include "coverkit/json_io.hpp"
#include "coverkit/pipelines.hpp"
#include "coverkit/schreier.hpp"

using nlohmann::json;
using namespace coverkit;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Common {
  std::uint64_t seed = 1;
  std::string out;
};

int emit(const Common& c, const json& doc, bool ok) {
  if (c.out.empty()) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::ofstream f(c.out);
    if (!f) throw PreconditionError("cannot write " + c.out);
    f << doc.dump(2) << '\n';
  }
  return ok ? kPass : kFail;
}

json certified_json(const Certified& c) { return {{"graph", to_json(c.graph)}, {"certificate", to_json(c.cert)}}; }

void add_common(CLI::App* app, Common& c) {
  app->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
  app->add_option("--out", c.out, "write the JSON report to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coverkit: girth-controlled covers of the genus 2 surface"};
  app.require_subcommand(1);
  Common common;
  std::function<int()> action;

  auto* graph = app.add_subcommand("graph", "4-regular graph constructions")->require_subcommand(1);
  auto* schreier = app.add_subcommand("schreier", "Schreier actions of F2")->require_subcommand(1);
  auto* psi = app.add_subcommand("psi", "the maps psi_k : SG2 -> F2")->require_subcommand(1);
  auto* tower = app.add_subcommand("tower", "permutation tower for H_k")->require_subcommand(1);
  auto* pipeline = app.add_subcommand("pipeline", "end-to-end constructions")->require_subcommand(1);
  auto* geom = app.add_subcommand("geom", "Fuchsian representation bounds")->require_subcommand(1);

  // graph build
  int n = 0, g = 0, k = 3, l = 4, m = 1, r = 1, cutoff = 6, samples = 0, sep = 0, radius = 0;
  bool prime_fillers = false;
  std::string in, word, rep_file;
  std::vector<int> sizes;

  auto* gb = graph->add_subcommand("build", "n-vertex 4-regular graph of girth exactly g");
  add_common(gb, common);
  gb->add_option("--n", n, "vertex count")->required();
  gb->add_option("--g", g, "target girth")->required();
  gb->add_flag("--prime-fillers", prime_fillers, "Ramanujan-style fillers and prime decomposition only");
  gb->callback([&] {
    action = [&] {
      const auto c = build_girth_graph(n, g, prime_fillers ? FillerMode::PrimeFillers : FillerMode::Flexible,
                                       common.seed);
      const bool ok = c.cert.vertex_count == n && c.cert.girth == g && !recheck(c.graph, c.cert);
      return emit(common, certified_json(c), ok);
    };
  });

  auto* gs = graph->add_subcommand("sample", "configuration-model sample, or short-cycle statistics");
  add_common(gs, common);
  gs->add_option("--n", n, "vertex count")->required();
  gs->add_option("--samples", samples, "when > 0, report cycle statistics over this many draws");
  gs->add_option("--cutoff", cutoff, "longest cycle length counted")->capture_default_str();
  gs->callback([&] {
    action = [&] {
      const SamplerConfig cfg{n, common.seed};
      if (samples <= 0) {
        const MultiGraph mg = pairing_model_sample(cfg);
        const LengthSpectrum sp = length_spectrum(mg, cutoff);
        json counts = json::object();
        for (auto [len, c] : sp.counts) counts[std::to_string(len)] = c;
        return emit(common, {{"graph", to_json(mg)}, {"cycle_counts", counts}}, true);
      }
      const CycleStats st = cycle_stats(cfg, samples, cutoff);
      json rows = json::array();
      for (int i = 1; i <= cutoff; ++i)
        rows.push_back({{"length", i},
                        {"mean", st.mean[i]},
                        {"variance", st.variance[i]},
                        {"std_error", st.std_error[i]},
                        {"poisson_mean", poisson_mean(i)}});
      return emit(common, {{"n", n}, {"samples", st.samples}, {"cycles", rows}}, true);
    };
  });

  auto* gt = graph->add_subcommand("theta", "rejection sample with girth k and no circuit of length in (k, l]");
  add_common(gt, common);
  gt->add_option("--n", n, "vertex count")->required();
  gt->add_option("--k", k, "girth")->capture_default_str();
  gt->add_option("--l", l, "2-girth must exceed l")->capture_default_str();
  gt->callback([&] {
    action = [&] {
      const auto th = theta_acceptance(k, l);
      const auto c = sample_theta(n, k, l, SamplerConfig{n, common.seed});
      json doc = certified_json(c);
      doc["acceptance_estimate"] = th.per_simple_draw;
      return emit(common, doc, c.cert.girth == k);
    };
  });

  auto* gp = graph->add_subcommand("plant", "plant a unique k-cycle into a graph file");
  add_common(gp, common);
  gp->add_option("--in", in, "graph JSON")->required();
  gp->add_option("--k", k, "planted cycle length")->capture_default_str();
  gp->add_option("--sep", sep, "pairwise distance of the subdivided edges")->capture_default_str();
  gp->callback([&] {
    action = [&] {
      const auto c = plant_unique_short_cycle(graph_from_json(read_json_file(in)), k, sep);
      return emit(common, certified_json(c), c.cert.girth == k);
    };
  });

  auto* sf = schreier->add_subcommand("from-graph", "Schreier action read off a 2-factorization");
  add_common(sf, common);
  sf->add_option("--in", in, "graph JSON")->required();
  sf->callback([&] {
    action = [&] {
      const MultiGraph mg = graph_from_json(read_json_file(in));
      const auto af = graph_to_action(mg);
      const bool ok = isomorphic_under(mg, action_to_graph(af.action), af.point_of_vertex);
      return emit(common, {{"action", to_json(af.action)}, {"base_circuit", to_json(af.base_circuit)},
                           {"point_of_vertex", af.point_of_vertex}, {"isomorphic", ok}}, ok);
    };
  });

  auto* sm = schreier->add_subcommand("min-length", "least length of a stabilizing word");
  add_common(sm, common);
  sm->add_option("--in", in, "action JSON (1-indexed)")->required();
  sm->add_option("--cutoff", cutoff, "search depth")->capture_default_str();
  sm->callback([&] {
    action = [&] {
      const auto s = min_subgroup_length(action_from_json(read_json_file(in)), cutoff);
      return emit(common, {{"length", s.length}, {"witness", s.witness.str()}}, true);
    };
  });

  auto* pv = psi->add_subcommand("verify", "exhaustive injectivity check on a ball");
  add_common(pv, common);
  pv->add_option("--k", k, "psi index")->required();
  pv->add_option("--radius", radius, "ball radius (default k)");
  pv->callback([&] {
    action = [&] {
      const auto rep = verify_ball_injectivity(PsiMap(k), radius > 0 ? radius : k);
      return emit(common,
                  {{"k", rep.k},
                   {"radius", rep.radius},
                   {"elements_checked", rep.elements_checked},
                   {"violations", rep.violations},
                   {"generator_violations", rep.generator_violations},
                   {"bound_violations", rep.bound_violations},
                   {"short_non_f2_images", rep.short_non_f2_images},
                   {"max_image_length", rep.max_image_length},
                   {"passed", rep.ok()}},
                  rep.ok());
    };
  });

  auto* pa = psi->add_subcommand("apply", "image of a surface word");
  add_common(pa, common);
  pa->add_option("--k", k, "psi index")->required();
  pa->add_option("--word", word, "word over x X y Y a A b B")->required();
  pa->callback([&] {
    action = [&] {
      const FreeWord img = psi_apply(PsiMap(k), SurfaceWord(word));
      return emit(common, {{"word", word}, {"image", img.str()}, {"length", img.length()}}, true);
    };
  });

  auto add_tower_opts = [&](CLI::App* sub) {
    add_common(sub, common);
    sub->add_option("--k", k, "target x-power")->required();
    sub->add_option("--m", m, "block parameter")->required();
    sub->add_option("--r", r, "levels")->required();
  };
  auto* tb = tower->add_subcommand("build", "bounds and degree");
  add_tower_opts(tb);
  tb->callback([&] {
    action = [&] {
      const PermTower t(k, m, r);
      return emit(common, {{"l_bounds", t.l_bounds()},
                           {"n_bounds", t.n_bounds()},
                           {"degree", t.degree()},
                           {"degree_closed_form", t.degree_closed_form()},
                           {"degree_printed_form", t.degree_printed_form()},
                           {"action", to_json(stabilizer_action_Hk(t))}},
                  t.degree() == t.degree_closed_form());
    };
  });
  auto* tc = tower->add_subcommand("check", "exhaustive relation check");
  add_tower_opts(tc);
  tc->callback([&] {
    action = [&] {
      const PermTower t(k, m, r);
      const TowerCheck c = check_tower(t);
      const long px = min_x_power(stabilizer_action_Hk(t), t.degree());
      return emit(common, {{"points_checked", c.points_checked},
                           {"relation2_literal_violations", c.relation2_literal_violations},
                           {"relation2_violations", c.relation2_violations},
                           {"relation3_violations", c.relation3_violations},
                           {"support_violations", c.support_violations},
                           {"recurrence_violations", c.recurrence_violations},
                           {"min_x_power", px},
                           {"passed", c.ok() && px == k}},
                  c.ok() && px == k);
    };
  });

  auto* pla = pipeline->add_subcommand("a", "degree n cover from a girth-a graph");
  add_common(pla, common);
  int a = 4;
  pla->add_option("--n", n, "degree")->required();
  pla->add_option("--a", a, "girth")->required();
  pla->callback([&] {
    action = [&] {
      const auto rep = pipeline_main(n, a, common.seed);
      return emit(common, rep.to_json(), rep.passed());
    };
  });

  auto* plb = pipeline->add_subcommand("b", "covers of constant shortest stabilizer");
  add_common(plb, common);
  std::string method = "auto";
  plb->add_option("--k", k, "girth")->capture_default_str();
  plb->add_option("--l", l, "2-girth must exceed l")->capture_default_str();
  plb->add_option("--sizes", sizes, "vertex counts")->required();
  plb->add_option("--method", method, "auto, rejection or planting")
      ->check(CLI::IsMember({"auto", "rejection", "planting"}))
      ->capture_default_str();
  plb->callback([&] {
    action = [&] {
      const ThetaMethod tm = method == "rejection"  ? ThetaMethod::Rejection
                             : method == "planting" ? ThetaMethod::Planting
                                                    : ThetaMethod::Auto;
      const auto reps = pipeline_constant_systole(k, l, sizes, common.seed, tm);
      json doc = json::array();
      bool ok = true;
      for (const auto& rep : reps) {
        doc.push_back(rep.to_json());
        ok = ok && rep.passed();
      }
      return emit(common, doc, ok);
    };
  });

  auto* plc = pipeline->add_subcommand("c", "cover whose shortest stabilizer is x^k");
  add_common(plc, common);
  radius = 8;
  plc->add_option("--k", k, "x-power")->required();
  plc->add_option("--m", m, "block parameter")->required();
  plc->add_option("--r", r, "levels")->required();
  plc->add_option("--radius", radius, "search radius for stabilizers outside <x>")->capture_default_str();
  plc->callback([&] {
    action = [&] {
      const auto rep = pipeline_xk_systole(k, m, r, radius);
      return emit(common, rep.to_json(), rep.passed());
    };
  });

  auto load = [&] { return load_rep(rep_file.empty() ? bolza_config() : rep_config_from_json(read_json_file(rep_file))); };

  auto* gbd = geom->add_subcommand("bound", "systole upper bound of a cover");
  add_common(gbd, common);
  gbd->add_option("--rep", rep_file, "representation JSON (default: Bolza)");
  gbd->add_option("--action", in, "F2 action JSON; the cover is its psi_k preimage (default: trivial cover)");
  gbd->add_option("--k", k, "psi index used with --action")->capture_default_str();
  gbd->add_option("--cutoff", cutoff, "largest l_B searched")->capture_default_str();
  gbd->callback([&] {
    action = [&] {
      const FuchsianRep rho = load();
      const SurfaceAction sa =
          in.empty() ? trivial_surface_action() : preimage_action(PsiMap(k), action_from_json(read_json_file(in)));
      const SystoleBound b = systole_upper_bound(rho, sa, cutoff);
      return emit(common, {{"upper_bound", b.upper_bound}, {"witness", b.witness}, {"cutoff", b.cutoff},
                           {"index", sa.n}, {"genus", genus_of_cover(sa.n)}}, true);
    };
  });

  auto* gms = geom->add_subcommand("ms-constants", "Milnor-Schwarz (q, beta) estimate on a ball");
  add_common(gms, common);
  radius = 4;
  double cap = 0;
  gms->add_option("--rep", rep_file, "representation JSON (default: Bolza)");
  gms->add_option("--radius", radius, "ball radius");
  gms->add_option("--beta-cap", cap, "largest acceptable beta (default: largest generator displacement)");
  gms->callback([&] {
    action = [&] {
      const auto ms = estimate_milnor_schwarz(load(), radius, cap);
      return emit(common, {{"q", ms.q}, {"beta", ms.beta}, {"radius", ms.radius}, {"elements", ms.elements},
                           {"beta_cap", ms.beta_cap}, {"cap_met", ms.cap_met}}, ms.cap_met);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }
  try {
    return action();
  } catch (const PreconditionError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kUsage;
  } catch (const OutOfRadius& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << '\n';
    return kFail;
  }
}

#include "coverkit/pipelines.hpp"

#include <algorithm>
#include <cmath>

#include "coverkit/baumslag.hpp"
#include "coverkit/constructors.hpp"
#include "coverkit/error.hpp"
#include "coverkit/geometry.hpp"
#include "coverkit/json_io.hpp"
#include "coverkit/rng.hpp"
#include "coverkit/schreier.hpp"

namespace coverkit {

using nlohmann::json;

bool PipelineReport::passed() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.passed; });
}

void PipelineReport::check(std::string name, std::string statement, bool ok, std::string detail) {
  assertions.push_back({std::move(name), std::move(statement), ok, std::move(detail)});
}

json PipelineReport::to_json() const {
  json as = json::array();
  for (const auto& a : assertions)
    as.push_back({{"name", a.name}, {"statement", a.statement}, {"passed", a.passed}, {"detail", a.detail}});
  return {{"pipeline", pipeline},   {"seed", seed},         {"parameters", parameters},
          {"intermediates", intermediates}, {"assertions", as}, {"passed", passed()}};
}

namespace {

SurfaceWord power_word(char letter, int e) { return SurfaceWord(std::string(e, letter)); }

json systole_json(const SystoleBound& b) {
  return {{"upper_bound", b.upper_bound}, {"witness", b.witness}, {"cutoff", b.cutoff}};
}

}  // namespace

PipelineReport pipeline_main(int n, int a, std::uint64_t seed) {
  PipelineReport rep;
  rep.pipeline = "main";
  rep.seed = seed;
  rep.parameters = {{"n", n}, {"a", a}};

  const Certified g = build_girth_graph(n, a, FillerMode::Flexible, seed);
  rep.intermediates["graph"] = to_json(g.graph);
  rep.intermediates["certificate"] = to_json(g.cert);
  rep.check("graph_girth", "G_{n,a} is 4-regular on n vertices with girth a",
            g.cert.vertex_count == n && g.cert.girth == a && g.cert.regular_degree == 4 && g.cert.connected);

  const ActionFromGraph af = graph_to_action(g.graph, g.cert.witness);
  rep.intermediates["gamma_n"] = to_json(af.action);
  const SubgroupLength sl = min_subgroup_length(af.action, a);
  rep.intermediates["min_length_gamma_n"] = {{"length", sl.length}, {"witness", sl.witness.str()}};
  rep.check("gamma_n_min_length", "the least l_A over Gamma_n equals the girth a", sl.length == a,
            "min length " + std::to_string(sl.length));

  const int k = std::max(1, k_from_girth(a));
  const PsiMap psi(k);
  const SurfaceAction lambda = preimage_action(psi, af.action);
  rep.intermediates["k"] = k;
  rep.intermediates["psi_l"] = psi.l();
  rep.check("index", "Lambda_n = psi_k^{-1}(Gamma_n) has index n", lambda.n == n && lambda.respects_relator());

  const SurfaceWord gamma0 = power_word('x', a);
  rep.intermediates["gamma0"] = gamma0.str();
  rep.check("gamma0_in_lambda", "gamma_0 lies in Lambda_n with l_A(gamma_0) = a",
            lambda.contains(gamma0) && contains(af.action, FreeWord(gamma0.str())) &&
                static_cast<int>(gamma0.str().size()) == a);

  const auto short_stab = k > 1 ? short_stabilizers(lambda, k - 1, 1) : std::vector<BallElement>{};
  rep.check("no_short_stabilizer", "no non-trivial element of l_B < k stabilizes the base", short_stab.empty(),
            short_stab.empty() ? "" : "found " + short_stab.front().word);

  const long genus = genus_of_cover(n);
  rep.intermediates["genus"] = genus;
  rep.check("genus", "the degree n cover of the genus 2 surface has genus n + 1", genus == n + 1);

  const FuchsianRep rho = load_rep(bolza_config());
  const SystoleBound sb = systole_upper_bound(rho, lambda, a);
  const double via_gamma0 = translation_length(rho.evaluate(gamma0));
  rep.intermediates["systole"] = systole_json(sb);
  rep.intermediates["gamma0_translation_length"] = via_gamma0;
  rep.check("geometric_upper_bound", "sys(S_n) is at most the translation length of rho(gamma_0)",
            sb.upper_bound <= via_gamma0 + 1e-9);
  return rep;
}

std::vector<PipelineReport> pipeline_constant_systole(int k, int l, const std::vector<int>& sizes,
                                                      std::uint64_t seed, ThetaMethod method) {
  if (k < 3) throw PreconditionError("pipeline_constant_systole: need k >= 3");
  if (l <= k) throw PreconditionError("pipeline_constant_systole: need l > k");
  if (sizes.empty()) throw PreconditionError("pipeline_constant_systole: no sizes");
  const ThetaEstimate theta = theta_acceptance(k, l);
  constexpr long kMaxTries = 100000;
  if (method == ThetaMethod::Auto)
    method = theta.per_simple_draw * kMaxTries >= 3 ? ThetaMethod::Rejection : ThetaMethod::Planting;
  const bool planting = method == ThetaMethod::Planting;
  const FuchsianRep rho = load_rep(bolza_config());
  const PsiMap psi(k);

  std::vector<PipelineReport> out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const int n = sizes[i];
    const std::uint64_t sub = Rng::derive(seed, i);
    PipelineReport rep;
    rep.pipeline = "constant_systole";
    rep.seed = seed;
    rep.parameters = {{"k", k}, {"l", l}, {"n", n}, {"method", planting ? "planting" : "rejection"}};
    rep.intermediates["theta_estimate"] = theta.per_simple_draw;

    Certified g;
    if (planting) {
      // Circuits through two planted vertices have length >= separation + 4.
      const int separation = std::max(0, l - 3);
      const Certified x = build_girth_graph(n - k, l + 1, FillerMode::Flexible, sub);
      g = plant_unique_short_cycle(x.graph, k, separation);
      rep.intermediates["host_certificate"] = to_json(x.cert);
    } else {
      // A fresh block of tries per round; the round that succeeded is recorded.
      constexpr int kRounds = 10;
      for (int round = 0;; ++round) {
        try {
          g = sample_theta(n, k, l, SamplerConfig{n, Rng::derive(sub, round), kMaxTries});
          rep.intermediates["sampler_round"] = round;
          break;
        } catch (const ExhaustedError&) {
          if (round + 1 == kRounds) throw;
        }
      }
    }
    rep.intermediates["graph"] = to_json(g.graph);
    rep.intermediates["certificate"] = to_json(g.cert);
    const int tg = g.cert.two_girth.value_or(g.cert.two_girth_lower_bound);
    rep.check("graph_theta", "G has n vertices, girth k and 2-girth > l",
              g.cert.vertex_count == n && g.cert.girth == k && tg > l,
              "girth " + std::to_string(g.cert.girth) + ", 2-girth >= " + std::to_string(tg));

    const ActionFromGraph af = graph_to_action(g.graph, g.cert.witness);
    const SurfaceAction lambda = preimage_action(psi, af.action);
    rep.intermediates["gamma_n"] = to_json(af.action);
    const SubgroupLength sl = min_subgroup_length(af.action, k);
    rep.intermediates["witness"] = sl.witness.str();
    rep.check("min_length", "the least l_A over Gamma_n is k", sl.length == k);
    const auto others = stabilizing_words(af.action, l, sl.witness, 1);
    rep.check("second_length", "every other stabilizer outside <witness> has l_A > l", others.empty(),
              others.empty() ? "" : "found " + others.front().str());
    const SurfaceWord w(sl.witness.str());
    rep.check("witness_in_lambda", "the witness lies in Lambda_n = psi_k^{-1}(Gamma_n)",
              lambda.n == n && lambda.contains(w));
    rep.intermediates["witness_translation_length"] = translation_length(rho.evaluate(w));
    out.push_back(std::move(rep));
  }

  PipelineReport& last = out.back();
  bool same = true;
  json ws = json::array();
  for (const auto& r : out) {
    ws.push_back(r.intermediates["witness"]);
    same = same && r.intermediates["witness"] == out.front().intermediates["witness"];
  }
  last.intermediates["witnesses_across_sizes"] = ws;
  last.check("identical_witnesses", "the shortest witness words coincide across sizes, so their lengths do", same);
  return out;
}

PipelineReport pipeline_xk_systole(int k, int m, int r, int radius) {
  PipelineReport rep;
  rep.pipeline = "xk_systole";
  rep.parameters = {{"k", k}, {"m", m}, {"r", r}, {"radius", radius}};

  const PermTower tower(k, m, r);
  const TowerCheck tc = check_tower(tower);
  rep.intermediates["l_bounds"] = tower.l_bounds();
  rep.intermediates["n_bounds"] = tower.n_bounds();
  rep.intermediates["degree"] = tower.degree();
  rep.intermediates["degree_printed_form"] = tower.degree_printed_form();
  rep.check("tower_relations", "the tower permutations satisfy their support and commutation relations", tc.ok());
  rep.check("degree", "the index of H_k matches the closed form for N_k", tower.degree() == tower.degree_closed_form(),
            "degree " + std::to_string(tower.degree()));

  const SchreierAction hk = stabilizer_action_Hk(tower);
  const PsiMap psi(k);
  const SurfaceAction gk = preimage_action(psi, hk);
  rep.intermediates["psi_k"] = k;
  rep.check("index", "G_k = psi^{-1}(H_k) has the index of H_k", gk.n == tower.degree() && gk.respects_relator());

  bool low_out = true;
  for (int j = 1; j < k; ++j) low_out = low_out && !gk.contains(power_word('x', j));
  rep.check("xk_in", "x^k lies in G_k", gk.contains(power_word('x', k)));
  rep.check("xj_out", "x^j is not in G_k for 0 < j < k", low_out);
  rep.check("min_x_power", "the least positive x-power in H_k is k", min_x_power(hk, tower.degree()) == k);

  const int b = std::min(m, r);
  const auto free_short = stabilizing_words(hk, b, FreeWord("x"), 1);
  rep.check("hk_short_words", "H_k has no reduced word outside <x> of length <= min(m, r)", free_short.empty(),
            free_short.empty() ? "" : "found " + free_short.front().str());

  std::vector<std::string> outside;
  for (const BallElement& e : short_stabilizers(gk, radius, 4096)) {
    const bool in_x = std::all_of(e.word.begin(), e.word.end(), [](char c) { return c == 'x'; }) ||
                      std::all_of(e.word.begin(), e.word.end(), [](char c) { return c == 'X'; });
    if (!in_x) outside.push_back(e.word);
  }
  rep.intermediates["stabilizers_outside_x"] = outside;
  rep.check("no_short_outside_x", "no stabilizer outside <x> has l_B <= radius", outside.empty(),
            outside.empty() ? "" : "found " + outside.front());

  const FuchsianRep rho = load_rep(bolza_config());
  const SystoleBound sb = systole_upper_bound(rho, gk, k);
  const double kx = k * translation_length(rho.gen(0));
  rep.intermediates["systole"] = systole_json(sb);
  rep.intermediates["k_times_x_length"] = kx;
  rep.check("geometric_upper_bound", "sys(M_k) is at most k times the translation length of rho(x)",
            sb.upper_bound <= kx + 1e-9);
  return rep;
}

}  // namespace coverkit

#include "coverkit/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "coverkit/error.hpp"

namespace coverkit {

Mat2 Mat2::normalized() const {
  const double dt = det();
  if (dt <= 0) return *this;
  const double s = 1.0 / std::sqrt(dt);
  return {a * s, b * s, c * s, d * s};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
              x.c * y.b + x.d * y.d}
      .normalized();
}

double distance_up_to_sign(const Mat2& x, const Mat2& y) {
  auto dist = [&](double s) {
    return std::max({std::abs(x.a - s * y.a), std::abs(x.b - s * y.b), std::abs(x.c - s * y.c),
                     std::abs(x.d - s * y.d)});
  };
  return std::min(dist(1), dist(-1));
}

double distance_to_pm_identity(const Mat2& m) { return distance_up_to_sign(m, Mat2{}); }

RepConfig bolza_config() {
  RepConfig c;
  c.gens = {{
      {4.6115817893087149809, 0.0, 0.0, 0.21684533543747511672},
      {3.9679875364031323561, -1.5537739740300373073, -1.5537739740300373073, 0.86043958834305774146},
      {2.890702612622599498, 22.266686599483769289, -1.0470218995009911017, -7.7191297373687895956},
      {-6.1653557633387522882, -22.910280852389351913, 0.40342764659540847694, 1.3369286385925621906},
  }};
  c.tolerance = 1e-8;
  return c;
}

Mat2 FuchsianRep::evaluate(const SurfaceWord& w) const {
  Mat2 acc;
  for (char ch : w.str()) {
    const auto idx = kSurfaceAlphabet.find(ch);
    const Mat2& g = gens_[idx / 2];
    acc = acc * (idx % 2 == 0 ? g : g.inverse());
  }
  return acc;
}

double FuchsianRep::relator_residual() const {
  return distance_to_pm_identity(evaluate(SurfaceWord(std::string(kSurfaceRelator))));
}

FuchsianRep load_rep(const RepConfig& config) {
  FuchsianRep rep;
  rep.tol_ = config.tolerance;
  std::string problems;
  for (int i = 0; i < 4; ++i) {
    const auto& e = config.gens[i];
    const Mat2 m{e[0], e[1], e[2], e[3]};
    if (std::abs(m.det() - 1) > 1e-9) problems += " generator " + std::to_string(i) + " has det != 1;";
    rep.gens_[i] = m.normalized();
    if (std::abs(rep.gens_[i].trace()) <= 2 + config.tolerance)
      problems += " generator " + std::to_string(i) + " is not hyperbolic;";
  }
  const double res = rep.relator_residual();
  if (!(res <= config.tolerance)) problems += " relator residual " + std::to_string(res) + " above tolerance;";
  if (!problems.empty()) throw PreconditionError("load_rep:" + problems);
  return rep;
}

double translation_length(const Mat2& m, double tol) {
  const double t = std::abs(m.trace());
  if (t <= 2 + tol) throw PreconditionError("translation_length: not hyperbolic (|tr| <= 2)");
  return 2 * std::acosh(t / 2);
}

double displacement_at_i(const Mat2& m) {
  const double s = (m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d) / 2;
  return std::acosh(std::max(1.0, s));
}

SurfaceAction trivial_surface_action() {
  SurfaceAction a;
  a.n = 1;
  for (auto& g : a.gen) g = {0};
  a.build_inverses();
  return a;
}

SystoleBound systole_upper_bound(const FuchsianRep& rep, const SurfaceAction& action, int cutoff) {
  if (cutoff < 1) throw PreconditionError("systole_upper_bound: cutoff must be >= 1");
  SystoleBound out;
  out.cutoff = cutoff;
  out.upper_bound = std::numeric_limits<double>::infinity();
  for (const BallElement& e : enumerate_ball(cutoff)) {
    if (e.length == 0) continue;
    const SurfaceWord w(e.word);
    if (!action.contains(w)) continue;
    const Mat2 m = rep.evaluate(w);
    if (std::abs(m.trace()) <= 2 + rep.tolerance())
      throw VerificationError("systole_upper_bound: non-hyperbolic element " + e.word);
    const double len = translation_length(m, rep.tolerance());
    if (len < out.upper_bound - 1e-9) {
      out.upper_bound = len;
      out.witness = e.word;
    }
  }
  if (out.witness.empty())
    throw ExhaustedError("systole_upper_bound: no stabilizing element with l_B <= " + std::to_string(cutoff));
  return out;
}

MilnorSchwarz estimate_milnor_schwarz(const FuchsianRep& rep, int radius, double beta_cap) {
  if (radius < 2) throw PreconditionError("estimate_milnor_schwarz: radius must be >= 2");
  std::vector<std::pair<int, double>> pts;
  double gen_disp = 0;
  for (const BallElement& e : enumerate_ball(radius)) {
    const double d = displacement_at_i(rep.evaluate(SurfaceWord(e.word)));
    pts.emplace_back(e.length, d);
    if (e.length == 1) gen_disp = std::max(gen_disp, d);
  }
  MilnorSchwarz out;
  out.radius = radius;
  out.elements = static_cast<long>(pts.size());
  out.beta_cap = beta_cap > 0 ? beta_cap : gen_disp;
  auto least_beta = [&](double q) {
    double beta = 0;
    for (auto [L, d] : pts) beta = std::max({beta, L / q - d, d - q * L});
    return std::ceil(beta * 1e6) / 1e6;
  };
  for (int j = 0; j <= 400; ++j) {
    const double q = 1 + 0.05 * j;
    const double beta = least_beta(q);
    out.q = q;
    out.beta = beta;
    if (beta <= out.beta_cap) {
      out.cap_met = true;
      break;
    }
  }
  return out;
}

}  // namespace coverkit

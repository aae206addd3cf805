#pragma once

#include <array>
#include <string>

#include "coverkit/baumslag.hpp"
#include "coverkit/surface_word.hpp"

namespace coverkit {

struct Mat2 {
  double a = 1, b = 0, c = 0, d = 1;
  double trace() const { return a + d; }
  double det() const { return a * d - b * c; }
  Mat2 inverse() const { return {d, -b, -c, a}; }
  // Rescales so that det = 1 (no-op for det <= 0).
  Mat2 normalized() const;
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
};

// Max-abs entry distance to +I or -I, whichever is closer.
double distance_to_pm_identity(const Mat2& m);
// Max-abs entry distance between x and +-y.
double distance_up_to_sign(const Mat2& x, const Mat2& y);

struct RepConfig {
  std::array<std::array<double, 4>, 4> gens{};  // x y x' y', row-major
  double tolerance = 1e-8;
};

// Generators of the Bolza surface group in SL(2, R), acting on the upper half
// plane; the base point i is the centre of the regular octagon.
RepConfig bolza_config();

class FuchsianRep {
 public:
  const Mat2& gen(int i) const { return gens_[i]; }
  double tolerance() const { return tol_; }
  double relator_residual() const;
  Mat2 evaluate(const SurfaceWord& w) const;

 private:
  friend FuchsianRep load_rep(const RepConfig& config);
  std::array<Mat2, 4> gens_;
  double tol_ = 1e-8;
};

// Throws PreconditionError listing every broken invariant.
FuchsianRep load_rep(const RepConfig& config);

// 2 arccosh(|tr| / 2); throws PreconditionError unless |tr| > 2 + tol.
double translation_length(const Mat2& m, double tol = 1e-9);
// Hyperbolic distance from i to m(i).
double displacement_at_i(const Mat2& m);

struct SystoleBound {
  double upper_bound = 0;
  std::string witness;
  int cutoff = 0;
};

// Minimum translation length over non-trivial stabilizers of the base with
// l_B <= cutoff.
SystoleBound systole_upper_bound(const FuchsianRep& rep, const SurfaceAction& action, int cutoff);

// Index-1 action: every element stabilizes the single point.
SurfaceAction trivial_surface_action();

struct MilnorSchwarz {
  double q = 0;
  double beta = 0;
  int radius = 0;
  long elements = 0;
  double beta_cap = 0;
  bool cap_met = false;
};

// Grid search: least q in {1, 1.05, 1.10, ...} whose least admissible beta is
// at most beta_cap, then that beta. beta_cap <= 0 selects the largest
// generator displacement.
MilnorSchwarz estimate_milnor_schwarz(const FuchsianRep& rep, int radius, double beta_cap = 0);

inline long genus_of_cover(long n) { return n + 1; }

}  // namespace coverkit

#pragma once

#include <array>
#include <string>
#include <vector>

#include "coverkit/free_word.hpp"
#include "coverkit/schreier.hpp"
#include "coverkit/surface_word.hpp"

namespace coverkit {

inline constexpr int kPsiD = 7;
inline constexpr int kPsiEpsilon = 63;

// psi_k : SG2 -> F2, identity on F2, x' -> u^l y u^-l, y' -> u^l x u^-l, l = d k.
struct PsiMap {
  int k = 1;
  int d = kPsiD;
  int epsilon = kPsiEpsilon;
  explicit PsiMap(int k_, int d_ = kPsiD, int epsilon_ = kPsiEpsilon);
  long l() const { return static_cast<long>(d) * k; }
  // Image of each alphabet letter, in the order x X y Y a A b B.
  const std::array<FreeWord, 8>& letter_images() const { return images_; }

 private:
  std::array<FreeWord, 8> images_;
};

FreeWord psi_apply(const PsiMap& map, const SurfaceWord& w);

struct InjectivityReport {
  int k = 0;
  int radius = 0;
  long elements_checked = 0;
  long violations = 0;             // 1 < l_B <= radius with trivial image
  long generator_violations = 0;   // l_B = 1 with trivial image
  long bound_violations = 0;       // l_A(psi(w)) > epsilon k l_B(w)
  long short_non_f2_images = 0;    // w outside F2, psi(w) != 1, l_A(psi(w)) <= k
  long max_image_length = 0;
  bool ok() const {
    return violations == 0 && generator_violations == 0 && bound_violations == 0 && short_non_f2_images == 0;
  }
};

// Exhaustive sweep of the exact ball of the given radius (radius <= k).
InjectivityReport verify_ball_injectivity(const PsiMap& map, int radius);

struct DeltaReport {
  std::array<FreeWord, 4> variants;  // (keep g1, keep g_{r+1}) = (1,1), (0,1), (1,0), (0,0)
  long core_length = 0;              // l_A of the u-conjugate chain without the end gammas
  bool all_nontrivial = false;
  bool length_bound = false;         // every variant longer than 18k
  bool ok() const { return all_nontrivial && length_bound; }
};

// The four delta words with d = 7. gammas has r+1 entries, etas r.
DeltaReport delta_word_check(const std::vector<FreeWord>& gammas, const std::vector<FreeWord>& etas, int k);

// Right action of SG2 on n points: generators x, y, x', y' as permutations.
struct SurfaceAction {
  int n = 0;
  std::array<std::vector<int>, 4> gen;  // x y a b
  std::array<std::vector<int>, 4> inv;  // filled by build_inverses
  int base = 0;
  void build_inverses();
  int act(int point, const SurfaceWord& w) const;
  bool contains(const SurfaceWord& w) const { return act(base, w) == base; }
  // Whether the relator acts trivially on every point.
  bool respects_relator() const;
};

// Coset action of psi^{-1}(Gamma) where Gamma is the stabilizer in `gamma`.
SurfaceAction preimage_action(const PsiMap& map, const SchreierAction& gamma);

// Ball elements with 0 < l_B <= radius fixing the base, in ball order.
std::vector<BallElement> short_stabilizers(const SurfaceAction& a, int radius, std::size_t limit = 16);

// Largest k with epsilon k^2 <= a (0 flags the m0' threshold).
int k_from_girth(long a, int epsilon = kPsiEpsilon);

}  // namespace coverkit

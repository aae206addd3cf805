#include "coverkit/baumslag.hpp"

#include <algorithm>

#include "coverkit/error.hpp"

namespace coverkit {

PsiMap::PsiMap(int k_, int d_, int epsilon_) : k(k_), d(d_), epsilon(epsilon_) {
  if (k < 1 || d < 1 || epsilon < 1) throw PreconditionError("PsiMap: k, d, epsilon must be positive");
  const FreeWord ul = FreeWord::u_power(l()), uinv = FreeWord::u_power(-l());
  images_ = {FreeWord("x"), FreeWord("X"), FreeWord("y"), FreeWord("Y"),
             ul * FreeWord("y") * uinv, ul * FreeWord("Y") * uinv,
             ul * FreeWord("x") * uinv, ul * FreeWord("X") * uinv};
}

FreeWord psi_apply(const PsiMap& map, const SurfaceWord& w) {
  std::string raw;
  for (char c : w.str()) raw += map.letter_images()[kSurfaceAlphabet.find(c)].str();
  return FreeWord(raw);
}

InjectivityReport verify_ball_injectivity(const PsiMap& map, int radius) {
  if (radius < 0 || radius > map.k) throw PreconditionError("verify_ball_injectivity: need 0 <= radius <= k");
  InjectivityReport rep;
  rep.k = map.k;
  rep.radius = radius;
  for (const BallElement& e : enumerate_ball(radius)) {
    ++rep.elements_checked;
    const FreeWord img = psi_apply(map, SurfaceWord(e.word));
    const long len = static_cast<long>(img.length());
    rep.max_image_length = std::max(rep.max_image_length, len);
    if (len > static_cast<long>(map.epsilon) * map.k * e.length) ++rep.bound_violations;
    if (e.length == 1 && img.empty()) ++rep.generator_violations;
    if (e.length > 1 && img.empty()) ++rep.violations;
    const bool in_f2 = e.word.find_first_of("aAbB") == std::string::npos;
    if (!in_f2 && !img.empty() && len <= map.k) ++rep.short_non_f2_images;
  }
  return rep;
}

DeltaReport delta_word_check(const std::vector<FreeWord>& gammas, const std::vector<FreeWord>& etas, int k) {
  const std::size_t r = etas.size();
  if (k < 1) throw PreconditionError("delta_word_check: k must be positive");
  if (r < 1 || gammas.size() != r + 1)
    throw PreconditionError("delta_word_check: need r >= 1 etas and r + 1 gammas");
  long total = 0;
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    total += static_cast<long>(gammas[i].length());
    if (i >= 1 && i + 1 < gammas.size() && in_cyclic_u(gammas[i]))
      throw PreconditionError("delta_word_check: gamma_" + std::to_string(i + 1) + " lies in <u>");
  }
  for (std::size_t j = 0; j < r; ++j) {
    total += static_cast<long>(etas[j].length());
    if (in_cyclic_u(etas[j]))
      throw PreconditionError("delta_word_check: eta_" + std::to_string(j + 1) + " lies in <u>");
  }
  if (total > k) throw PreconditionError("delta_word_check: total length exceeds k");

  const FreeWord up = FreeWord::u_power(static_cast<long>(kPsiD) * k);
  const FreeWord dn = FreeWord::u_power(-static_cast<long>(kPsiD) * k);
  FreeWord core;
  for (std::size_t j = 0; j < r; ++j) {
    if (j > 0) core = core * gammas[j];
    core = core * up * etas[j] * dn;
  }
  DeltaReport rep;
  rep.core_length = static_cast<long>(core.length());
  const FreeWord& g1 = gammas.front();
  const FreeWord& gl = gammas.back();
  rep.variants = {g1 * core * gl, core * gl, g1 * core, core};
  rep.all_nontrivial = std::none_of(rep.variants.begin(), rep.variants.end(),
                                    [](const FreeWord& w) { return w.empty(); });
  rep.length_bound = std::all_of(rep.variants.begin(), rep.variants.end(),
                                 [&](const FreeWord& w) { return static_cast<long>(w.length()) > 18L * k; });
  return rep;
}

void SurfaceAction::build_inverses() {
  for (int g = 0; g < 4; ++g) {
    inv[g].assign(gen[g].size(), 0);
    for (std::size_t p = 0; p < gen[g].size(); ++p) inv[g][gen[g][p]] = static_cast<int>(p);
  }
}

int SurfaceAction::act(int point, const SurfaceWord& w) const {
  for (char c : w.str()) {
    const auto idx = kSurfaceAlphabet.find(c);
    const auto& p = gen[idx / 2];
    if (idx % 2 == 0) {
      point = p[point];
    } else {
      const auto& q = inv[idx / 2];
      point = q.size() == p.size() ? q[point] : static_cast<int>(std::find(p.begin(), p.end(), point) - p.begin());
    }
  }
  return point;
}

bool SurfaceAction::respects_relator() const {
  const SurfaceWord rel{std::string(kSurfaceRelator)};
  for (int p = 0; p < n; ++p)
    if (act(p, rel) != p) return false;
  return true;
}

namespace {
// Permutation of a reduced F2 word under the right action.
std::vector<int> word_perm(const SchreierAction& a, const FreeWord& w) {
  std::vector<int> out(a.n);
  std::vector<int> xi(a.n), yi(a.n);
  for (int p = 0; p < a.n; ++p) {
    xi[a.x[p]] = p;
    yi[a.y[p]] = p;
  }
  for (int p = 0; p < a.n; ++p) {
    int q = p;
    for (char c : w.str()) q = c == 'x' ? a.x[q] : c == 'X' ? xi[q] : c == 'y' ? a.y[q] : yi[q];
    out[p] = q;
  }
  return out;
}
}  // namespace

SurfaceAction preimage_action(const PsiMap& map, const SchreierAction& gamma) {
  gamma.validate();
  if (!gamma.transitive()) throw PreconditionError("preimage_action: action is not transitive");
  SurfaceAction s;
  s.n = gamma.n;
  s.base = gamma.base;
  s.gen[0] = gamma.x;
  s.gen[1] = gamma.y;
  // u^l conjugates are long but the permutations are cheap to evaluate.
  const std::vector<int> pu = word_perm(gamma, FreeWord::u());
  std::vector<int> pul(gamma.n), puinv(gamma.n);
  for (int p = 0; p < gamma.n; ++p) {
    int q = p;
    for (long i = 0; i < map.l(); ++i) q = pu[q];
    pul[p] = q;
  }
  for (int p = 0; p < gamma.n; ++p) puinv[pul[p]] = p;
  s.gen[2].resize(gamma.n);
  s.gen[3].resize(gamma.n);
  for (int p = 0; p < gamma.n; ++p) {
    s.gen[2][p] = puinv[gamma.y[pul[p]]];
    s.gen[3][p] = puinv[gamma.x[pul[p]]];
  }
  if (!s.respects_relator()) throw VerificationError("preimage_action: relator acts non-trivially");
  s.build_inverses();
  return s;
}

std::vector<BallElement> short_stabilizers(const SurfaceAction& a, int radius, std::size_t limit) {
  std::vector<BallElement> out;
  for (const BallElement& e : enumerate_ball(radius)) {
    if (e.length == 0) continue;
    if (a.contains(SurfaceWord(e.word))) {
      out.push_back(e);
      if (out.size() == limit) break;
    }
  }
  return out;
}

int k_from_girth(long a, int epsilon) {
  if (a < 1) throw PreconditionError("k_from_girth: a must be >= 1");
  int k = 0;
  while (static_cast<long>(epsilon) * (k + 1) * (k + 1) <= a) ++k;
  return k;
}

}  // namespace coverkit

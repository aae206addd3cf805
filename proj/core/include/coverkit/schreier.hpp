#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coverkit/free_word.hpp"
#include "coverkit/multigraph.hpp"

namespace coverkit {

// Right action of F2 = <x, y> on points 0..n-1 (serialized 1-indexed).
// Words act left to right: p . (w1 w2) = (p . w1) . w2.
struct SchreierAction {
  int n = 0;
  std::vector<int> x;  // p . x
  std::vector<int> y;  // p . y
  int base = 0;

  // Throws PreconditionError unless x and y are permutations of [0, n).
  void validate() const;
  bool transitive() const;
  int act(int point, char letter) const;
  int act(int point, const FreeWord& w) const;
};

struct ActionFromGraph {
  SchreierAction action;
  std::vector<int> point_of_vertex;  // vertex -> point
  Circuit base_circuit;              // minimal circuit through the base
};

// 2-factorize, orient each factor's circuits lowest vertex first, and read
// off x from factor 1 and y from factor 2. The base
// lies on a minimal circuit. When `anchor` is given it must be a minimal
// circuit; it is placed wholly in factor 1 so it spells a power of x.
ActionFromGraph graph_to_action(const MultiGraph& g, const std::optional<Circuit>& anchor = std::nullopt);

MultiGraph action_to_graph(const SchreierAction& a);

// Whether edge multisets agree under the vertex -> point map.
bool isomorphic_under(const MultiGraph& g, const MultiGraph& h, const std::vector<int>& map);

struct SubgroupLength {
  int length = 0;
  FreeWord witness;  // shortlex-least among minimal stabilizing words
};

// Least length of a non-trivial reduced word fixing the base. Throws
// ExhaustedError when none exists within `cutoff`.
SubgroupLength min_subgroup_length(const SchreierAction& a, int cutoff);

bool contains(const SchreierAction& a, const FreeWord& w);

// All stabilizing reduced words of length <= depth that are not powers of
// `power_of` (pass "" to keep every word), in shortlex order, up to `limit`.
std::vector<FreeWord> stabilizing_words(const SchreierAction& a, int depth,
                                        const FreeWord& power_of = FreeWord(),
                                        std::size_t limit = 16);

// --- permutation tower ---------------------------------------------------

struct TowerPart {
  long lo = 0;          // support is [lo + 1, lo + (2m+1) * block]
  long block = 0;       // block size
};

class PermTower {
 public:
  static constexpr long kMaxPoints = 10'000'000;

  // Throws PreconditionError when n_r would exceed kMaxPoints.
  PermTower(int k, int m, int r);

  int k() const { return k_; }
  int m() const { return m_; }
  int r() const { return r_; }
  const std::vector<long>& l_bounds() const { return l_; }
  const std::vector<long>& n_bounds() const { return n_; }
  long degree() const { return n_.back(); }

  // Points are 1-indexed as in the construction. power may be negative.
  long sigma(int part, long x, long power = 1) const;
  long tau(int part, long x, long power = 1) const;
  // Support intervals [first, last]; tau part 0 is empty.
  std::pair<long, long> sigma_support(int part) const;
  std::pair<long, long> tau_support(int part) const;

  // N_k from the recurrences and from the printed closed form.
  long degree_closed_form() const;
  double degree_printed_form() const;

 private:
  long apply(const TowerPart& p, long x, long power) const;
  int k_, m_, r_;
  std::vector<long> l_, n_;
  std::vector<TowerPart> sigma_, tau_;
};

struct TowerCheck {
  long relation2_literal_violations = 0;  // x in supp(sigma_{r-1})
  long relation2_violations = 0;          // x in supp(sigma_{r-1}) \ supp(tau_{r-1})
  long relation3_violations = 0;
  long support_violations = 0;
  long recurrence_violations = 0;
  long points_checked = 0;
  bool ok() const {
    return relation2_violations == 0 && relation3_violations == 0 && support_violations == 0 &&
           recurrence_violations == 0;
  }
};

// Exhaustive check of supports, relations and recurrences over every point.
TowerCheck check_tower(const PermTower& t);

// xi(x) = sigma_0 ... sigma_r, xi(y) = tau_1 ... tau_r, base point 1.
SchreierAction stabilizer_action_Hk(const PermTower& t);

// Least j > 0 with x^j in the stabilizer.
long min_x_power(const SchreierAction& a, long limit);

}  // namespace coverkit

#include "coverkit/schreier.hpp"

#include <algorithm>

#include "coverkit/error.hpp"

namespace coverkit {

namespace {
constexpr char kLetters[4] = {'x', 'X', 'y', 'Y'};
}  // namespace

void SchreierAction::validate() const {
  if (n < 1 || static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw PreconditionError("SchreierAction: permutation sizes disagree with degree");
  if (base < 0 || base >= n) throw PreconditionError("SchreierAction: base out of range");
  for (const auto* p : {&x, &y}) {
    std::vector<char> hit(n, 0);
    for (int v : *p) {
      if (v < 0 || v >= n || hit[v]) throw PreconditionError("SchreierAction: not a permutation");
      hit[v] = 1;
    }
  }
}

bool SchreierAction::transitive() const {
  std::vector<char> seen(n, 0);
  std::vector<int> stack{base};
  seen[base] = 1;
  int count = 1;
  std::vector<int> xi(n), yi(n);
  for (int p = 0; p < n; ++p) {
    xi[x[p]] = p;
    yi[y[p]] = p;
  }
  while (!stack.empty()) {
    const int p = stack.back();
    stack.pop_back();
    for (int q : {x[p], xi[p], y[p], yi[p]})
      if (!seen[q]) {
        seen[q] = 1;
        ++count;
        stack.push_back(q);
      }
  }
  return count == n;
}

int SchreierAction::act(int point, char letter) const {
  switch (letter) {
    case 'x': return x[point];
    case 'y': return y[point];
    case 'X': return static_cast<int>(std::find(x.begin(), x.end(), point) - x.begin());
    case 'Y': return static_cast<int>(std::find(y.begin(), y.end(), point) - y.begin());
    default: throw PreconditionError(std::string("bad letter ") + letter);
  }
}

int SchreierAction::act(int point, const FreeWord& w) const {
  std::vector<int> xi(n), yi(n);
  for (int p = 0; p < n; ++p) {
    xi[x[p]] = p;
    yi[y[p]] = p;
  }
  for (char c : w.str()) {
    switch (c) {
      case 'x': point = x[point]; break;
      case 'X': point = xi[point]; break;
      case 'y': point = y[point]; break;
      default: point = yi[point]; break;
    }
  }
  return point;
}

bool contains(const SchreierAction& a, const FreeWord& w) { return a.act(a.base, w) == a.base; }

namespace {

// Orients every circuit of a 2-regular spanning factor: start at its lowest
// vertex and step towards the smaller neighbour.
std::vector<int> orient_factor(const MultiGraph& g, const std::vector<int>& factor) {
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> inc(n);  // (neighbour, edge)
  for (int e : factor) {
    const Edge& ed = g.edge(e);
    inc[ed.u].push_back({ed.v, e});
    inc[ed.v].push_back({ed.u, e});
  }
  std::vector<int> next(n, -1);
  for (int v = 0; v < n; ++v) {
    if (next[v] >= 0) continue;
    if (inc[v][0].first == v) {
      next[v] = v;
      continue;
    }
    auto first = std::min(inc[v][0], inc[v][1]);
    int cur = v, via = first.second, to = first.first;
    for (;;) {
      next[cur] = to;
      if (to == v) break;
      const auto& two = inc[to];
      const auto& out = two[0].second == via ? two[1] : two[0];
      cur = to;
      via = out.second;
      to = out.first;
    }
  }
  return next;
}

}  // namespace

ActionFromGraph graph_to_action(const MultiGraph& g, const std::optional<Circuit>& anchor) {
  if (!is_regular(g, 4)) throw PreconditionError("graph_to_action: graph is not 4-regular");
  if (!is_connected(g)) throw PreconditionError("graph_to_action: graph is disconnected");
  ActionFromGraph out;
  const GirthResult gr = girth(g);
  if (anchor) {
    if (!is_valid_circuit(g, *anchor) || anchor->length() != gr.girth)
      throw PreconditionError("graph_to_action: anchor must be a minimal circuit");
    out.base_circuit = *anchor;
  } else {
    out.base_circuit = gr.witness;
  }
  const TwoFactorization f = two_factorize(g, anchor ? anchor->edges : std::vector<int>{});
  const auto nx = orient_factor(g, f.factor1);
  const auto ny = orient_factor(g, f.factor2);

  const int n = g.vertex_count();
  const int base_vertex = out.base_circuit.vertices.front();
  out.point_of_vertex.assign(n, -1);
  out.point_of_vertex[base_vertex] = 0;
  int next_point = 1;
  for (int v = 0; v < n; ++v)
    if (v != base_vertex) out.point_of_vertex[v] = next_point++;

  SchreierAction& a = out.action;
  a.n = n;
  a.base = 0;
  a.x.assign(n, -1);
  a.y.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    a.x[out.point_of_vertex[v]] = out.point_of_vertex[nx[v]];
    a.y[out.point_of_vertex[v]] = out.point_of_vertex[ny[v]];
  }
  a.validate();
  return out;
}

MultiGraph action_to_graph(const SchreierAction& a) {
  a.validate();
  MultiGraph g(a.n);
  for (int p = 0; p < a.n; ++p) g.add_edge(p, a.x[p]);
  for (int p = 0; p < a.n; ++p) g.add_edge(p, a.y[p]);
  return g;
}

bool isomorphic_under(const MultiGraph& g, const MultiGraph& h, const std::vector<int>& map) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  if (static_cast<int>(map.size()) != g.vertex_count()) return false;
  std::vector<std::pair<int, int>> a, b;
  for (const Edge& e : g.edges()) {
    const int u = map[e.u], v = map[e.v];
    a.emplace_back(std::min(u, v), std::max(u, v));
  }
  for (const Edge& e : h.edges()) b.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

SubgroupLength min_subgroup_length(const SchreierAction& a, int cutoff) {
  a.validate();
  const int n = a.n;
  std::vector<int> inv_x(n), inv_y(n);
  for (int p = 0; p < n; ++p) {
    inv_x[a.x[p]] = p;
    inv_y[a.y[p]] = p;
  }
  auto step = [&](int p, int slot) {
    switch (slot) {
      case 0: return a.x[p];
      case 1: return inv_x[p];
      case 2: return a.y[p];
      default: return inv_y[p];
    }
  };
  constexpr int kInverse[4] = {1, 0, 3, 2};
  // States (point, last letter), explored in shortlex order of their first word.
  struct State {
    int point, slot, parent;
  };
  std::vector<State> states;
  std::vector<char> seen(static_cast<std::size_t>(n) * 4, 0);
  auto spell = [&](int s, int last_slot) {
    std::string w(1, kLetters[last_slot]);
    for (; s >= 0; s = states[s].parent) w.push_back(kLetters[states[s].slot]);
    std::reverse(w.begin(), w.end());
    return w;
  };
  std::size_t level_begin = 0;
  for (int slot = 0; slot < 4; ++slot) {
    const int q = step(a.base, slot);
    if (q == a.base) return {1, FreeWord(std::string(1, kLetters[slot]))};
    if (!seen[q * 4 + slot]) {
      seen[q * 4 + slot] = 1;
      states.push_back({q, slot, -1});
    }
  }
  for (int len = 2; len <= cutoff; ++len) {
    const std::size_t level_end = states.size();
    for (std::size_t s = level_begin; s < level_end; ++s) {
      for (int slot = 0; slot < 4; ++slot) {
        if (slot == kInverse[states[s].slot]) continue;
        const int q = step(states[s].point, slot);
        if (q == a.base) {
          FreeWord w(spell(static_cast<int>(s), slot));
          if (static_cast<int>(w.length()) != len || !contains(a, w))
            throw VerificationError("min_subgroup_length: witness failed re-verification");
          return {len, w};
        }
        if (!seen[q * 4 + slot]) {
          seen[q * 4 + slot] = 1;
          states.push_back({q, slot, static_cast<int>(s)});
        }
      }
    }
    level_begin = level_end;
  }
  throw ExhaustedError("min_subgroup_length: no stabilizing word of length <= " + std::to_string(cutoff));
}

namespace {
bool is_power_of(const FreeWord& w, const FreeWord& p) {
  if (w.empty()) return true;
  if (p.empty()) return false;
  const long e = static_cast<long>(w.length() / p.length());
  if (static_cast<std::size_t>(e) * p.length() != w.length()) return false;
  return w == p.pow(e) || w == p.pow(-e);
}
}  // namespace

std::vector<FreeWord> stabilizing_words(const SchreierAction& a, int depth, const FreeWord& power_of,
                                        std::size_t limit) {
  a.validate();
  std::vector<int> inv_x(a.n), inv_y(a.n);
  for (int p = 0; p < a.n; ++p) {
    inv_x[a.x[p]] = p;
    inv_y[a.y[p]] = p;
  }
  // DFS visits letters in alphabet order, so a stable sort by length yields shortlex.
  std::vector<FreeWord> found;
  std::string w;
  auto dfs = [&](auto&& self, int p) -> void {
    if (!w.empty() && p == a.base) {
      FreeWord fw(w);
      if (power_of.empty() || !is_power_of(fw, power_of)) found.push_back(fw);
    }
    if (static_cast<int>(w.size()) == depth) return;
    for (int slot = 0; slot < 4; ++slot) {
      if (!w.empty() && w.back() == inverse_letter(kLetters[slot])) continue;
      const int q = slot == 0 ? a.x[p] : slot == 1 ? inv_x[p] : slot == 2 ? a.y[p] : inv_y[p];
      w.push_back(kLetters[slot]);
      self(self, q);
      w.pop_back();
    }
  };
  dfs(dfs, a.base);
  std::stable_sort(found.begin(), found.end(),
                   [](const FreeWord& p, const FreeWord& q) { return p.length() < q.length(); });
  if (found.size() > limit) found.resize(limit);
  return found;
}

long min_x_power(const SchreierAction& a, long limit) {
  int p = a.x[a.base];
  for (long j = 1; j <= limit; ++j, p = a.x[p])
    if (p == a.base) return j;
  return -1;
}

}  // namespace coverkit

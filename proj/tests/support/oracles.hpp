#pragma once

// Independent reference implementations. They share no code paths with the
// library beyond plain data types and are only fit for small inputs.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coverkit/multigraph.hpp"
#include "coverkit/schreier.hpp"

namespace oracle {

inline char inv(char c) { return static_cast<char>(c >= 'a' ? c - 32 : c + 32); }

// Deletes the first adjacent cancelling pair until none is left.
inline std::string naive_reduce(std::string w) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i + 1] == inv(w[i])) {
        w.erase(i, 2);
        changed = true;
        break;
      }
  }
  return w;
}

// Circuits of length <= cutoff by length, each counted once as an edge set.
inline std::map<int, long> brute_cycle_counts(const coverkit::MultiGraph& g, int cutoff) {
  std::set<std::vector<int>> seen;
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    adj[ed.u].push_back({ed.v, e});
    if (ed.u != ed.v) adj[ed.v].push_back({ed.u, e});
  }
  std::vector<int> path_edges;
  std::vector<char> on_path(n, 0), used(g.edge_count(), 0);
  auto dfs = [&](auto&& self, int s, int v) -> void {
    for (auto [w, e] : adj[v]) {
      if (used[e]) continue;
      if (w == s) {
        std::vector<int> c(path_edges);
        c.push_back(e);
        if (static_cast<int>(c.size()) <= cutoff) {
          std::sort(c.begin(), c.end());
          seen.insert(c);
        }
        continue;
      }
      if (on_path[w] || static_cast<int>(path_edges.size()) + 1 >= cutoff) continue;
      used[e] = 1;
      on_path[w] = 1;
      path_edges.push_back(e);
      self(self, s, w);
      path_edges.pop_back();
      on_path[w] = 0;
      used[e] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    on_path[s] = 1;
    dfs(dfs, s, s);
    on_path[s] = 0;
  }
  std::map<int, long> counts;
  for (const auto& c : seen) ++counts[static_cast<int>(c.size())];
  return counts;
}

inline int brute_girth(const coverkit::MultiGraph& g, int cutoff) {
  const auto c = brute_cycle_counts(g, cutoff);
  return c.empty() ? 0 : c.begin()->first;
}

// All reduced words up to `cutoff`, shortest first; returns the first that
// fixes the base, or "" if none.
inline std::string brute_min_stabilizer(const coverkit::SchreierAction& a, int cutoff) {
  std::vector<std::string> layer = {""};
  for (int len = 1; len <= cutoff; ++len) {
    std::vector<std::string> next;
    for (const auto& w : layer)
      for (char c : std::string("xXyY")) {
        if (!w.empty() && w.back() == inv(c)) continue;
        next.push_back(w + c);
      }
    std::sort(next.begin(), next.end(), [](const std::string& p, const std::string& q) {
      const std::string order = "xXyY";
      for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != q[i]) return order.find(p[i]) < order.find(q[i]);
      return false;
    });
    for (const auto& w : next) {
      int p = a.base;
      for (char c : w) {
        if (c == 'x') p = a.x[p];
        else if (c == 'y') p = a.y[p];
        else {
          const auto& perm = c == 'X' ? a.x : a.y;
          p = static_cast<int>(std::find(perm.begin(), perm.end(), p) - perm.begin());
        }
      }
      if (p == a.base) return w;
    }
    layer = std::move(next);
  }
  return "";
}

struct TowerBounds {
  std::vector<long> l, n;
};

inline TowerBounds tower_recurrence(long k, long m, int r) {
  TowerBounds t{{0}, {k}};
  for (int i = 0; i < r; ++i) {
    const long gap = t.n.back() - t.l.back();
    t.l.push_back(t.l.back() + (2 * m + 1) * gap);
    t.n.push_back(t.n.back() + (2 * m + 1) * (2 * m) * gap);
  }
  return t;
}

inline double poisson_mean(int i) { return std::pow(3.0, i) / (2.0 * i); }

// Sphere sizes of the genus 2 surface group, counted as distinct matrices
// (up to sign) in the Bolza representation.
inline std::vector<long> float_sphere_sizes(int radius) {
  using M = std::array<long double, 4>;
  const long double g[4][4] = {
      {4.6115817893087149809L, 0, 0, 0.21684533543747511672L},
      {3.9679875364031323561L, -1.5537739740300373073L, -1.5537739740300373073L, 0.86043958834305774146L},
      {2.890702612622599498L, 22.266686599483769289L, -1.0470218995009911017L, -7.7191297373687895956L},
      {-6.1653557633387522882L, -22.910280852389351913L, 0.40342764659540847694L, 1.3369286385925621906L}};
  std::vector<M> gens;
  for (auto& m : g) {
    gens.push_back({m[0], m[1], m[2], m[3]});
    gens.push_back({m[3], -m[1], -m[2], m[0]});
  }
  auto key = [](M m) {
    const auto big = *std::max_element(m.begin(), m.end(), [](long double p, long double q) {
      return std::fabs(p) < std::fabs(q);
    });
    if (big < 0)
      for (auto& v : m) v = -v;
    std::string k;
    for (long double v : m) k += std::to_string(std::llround(v * 1000)) + ' ';
    return k;
  };
  std::set<std::string> seen = {key({1, 0, 0, 1})};
  std::vector<M> frontier = {{1, 0, 0, 1}};
  std::vector<long> sizes = {1};
  for (int r = 1; r <= radius; ++r) {
    std::vector<M> next;
    for (const M& a : frontier)
      for (const M& b : gens) {
        const M c = {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
                     a[2] * b[1] + a[3] * b[3]};
        if (seen.insert(key(c)).second) next.push_back(c);
      }
    sizes.push_back(static_cast<long>(next.size()));
    frontier = std::move(next);
  }
  return sizes;
}

}  // namespace oracle

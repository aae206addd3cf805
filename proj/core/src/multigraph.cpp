#include "coverkit/multigraph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <string>

#include "coverkit/error.hpp"
#include "coverkit/rng.hpp"

namespace coverkit {

MultiGraph::MultiGraph(int n) : n_(n) {
  if (n < 0) throw PreconditionError("negative vertex count");
}

MultiGraph::MultiGraph(int n, std::vector<Edge> edges) : MultiGraph(n) {
  for (const Edge& e : edges)
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw PreconditionError("edge endpoint out of range");
  edges_ = std::move(edges);
}

int MultiGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw PreconditionError("edge endpoint out of range");
  edges_.push_back({u, v});
  adj_valid_ = false;
  return edge_count() - 1;
}

const std::vector<std::vector<MultiGraph::Incidence>>& MultiGraph::adjacency() const {
  if (!adj_valid_) {
    adj_.assign(n_, {});
    for (int i = 0; i < edge_count(); ++i) {
      const Edge& e = edges_[i];
      adj_[e.u].push_back({e.v, i});
      adj_[e.v].push_back({e.u, i});
    }
    adj_valid_ = true;
  }
  return adj_;
}

int MultiGraph::degree(int v) const { return static_cast<int>(adjacency().at(v).size()); }

MultiGraph MultiGraph::without_edges(const std::vector<int>& ids) const {
  std::vector<char> drop(edges_.size(), 0);
  for (int id : ids) drop.at(id) = 1;
  MultiGraph out(n_);
  for (int i = 0; i < edge_count(); ++i)
    if (!drop[i]) out.edges_.push_back(edges_[i]);
  return out;
}

bool is_regular(const MultiGraph& g, int d) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != d) return false;
  return true;
}

std::vector<int> bfs_distances(const MultiGraph& g, int source, int banned) {
  const auto& adj = g.adjacency();
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<int> q{source};
  dist[source] = 0;
  while (!q.empty()) {
    const int x = q.front();
    q.pop_front();
    for (const auto& inc : adj[x]) {
      if (inc.edge == banned || dist[inc.to] >= 0) continue;
      dist[inc.to] = dist[x] + 1;
      q.push_back(inc.to);
    }
  }
  return dist;
}

bool is_connected(const MultiGraph& g) {
  if (g.vertex_count() == 0) return true;
  const auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

bool is_simple(const MultiGraph& g) {
  std::vector<std::pair<int, int>> seen;
  seen.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) return false;
    seen.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

bool is_valid_circuit(const MultiGraph& g, const Circuit& c) {
  const int L = c.length();
  if (L == 0 || static_cast<int>(c.vertices.size()) != L) return false;
  std::vector<int> vs = c.vertices, es = c.edges;
  std::sort(vs.begin(), vs.end());
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
  for (int i = 0; i < L; ++i) {
    if (c.edges[i] < 0 || c.edges[i] >= g.edge_count()) return false;
    const Edge& e = g.edge(c.edges[i]);
    const int a = c.vertices[i], b = c.vertices[(i + 1) % L];
    if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) return false;
  }
  return true;
}

namespace {

std::optional<GirthResult> shortest_circuit(const MultiGraph& g, int banned, int root_lo,
                                           int root_hi) {
  const int n = g.vertex_count();
  const auto& adj = g.adjacency();
  for (int i = 0; i < g.edge_count(); ++i)
    if (i != banned && g.edge(i).is_loop())
      return GirthResult{1, Circuit{{g.edge(i).u}, {i}}};

  int best = std::numeric_limits<int>::max();
  Circuit witness;
  std::vector<int> dist(n, -1), pedge(n, -1), pvert(n, -1), mark(n, -1);
  int stamp = 0;
  std::vector<int> queue;
  queue.reserve(n);

  for (int root = root_lo; root < root_hi && best > 2; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    queue.push_back(root);
    dist[root] = 0;
    pedge[root] = -1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int x = queue[qi];
      if (2 * dist[x] >= best) break;
      for (const auto& inc : adj[x]) {
        const int y = inc.to, e = inc.edge;
        if (e == banned || e == pedge[x] || y == x) continue;
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          pedge[y] = e;
          pvert[y] = x;
          queue.push_back(y);
          continue;
        }
        if (dist[x] + dist[y] + 1 >= best) continue;
        // Close the circuit at the lowest common ancestor.
        ++stamp;
        for (int w = x; w >= 0; w = (w == root ? -1 : pvert[w])) mark[w] = stamp;
        int z = y;
        while (mark[z] != stamp) z = pvert[z];
        Circuit c;
        for (int w = x; w != z; w = pvert[w]) {
          c.vertices.push_back(w);
          c.edges.push_back(pedge[w]);
        }
        c.vertices.push_back(z);
        std::vector<int> yv, ye;
        for (int w = y; w != z; w = pvert[w]) {
          yv.push_back(w);
          ye.push_back(pedge[w]);
        }
        for (int j = static_cast<int>(yv.size()) - 1; j >= 0; --j) {
          c.edges.push_back(ye[j]);
          c.vertices.push_back(yv[j]);
        }
        c.edges.push_back(e);
        if (c.length() < best) {
          best = c.length();
          witness = std::move(c);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return GirthResult{best, std::move(witness)};
}

}  // namespace

GirthResult girth(const MultiGraph& g) {
  auto r = shortest_circuit(g, -1, 0, g.vertex_count());
  if (!r) throw PreconditionError("girth: graph is a forest");
  return *r;
}

std::optional<GirthResult> girth_avoiding(const MultiGraph& g, int banned) {
  return shortest_circuit(g, banned, 0, g.vertex_count());
}

std::optional<GirthResult> girth_from_root(const MultiGraph& g, int root) {
  if (root < 0 || root >= g.vertex_count()) throw PreconditionError("girth_from_root: bad root");
  return shortest_circuit(g, -1, root, root + 1);
}

std::optional<int> LengthSpectrum::girth() const {
  for (const auto& [len, c] : counts)
    if (c > 0) return len;
  return std::nullopt;
}

std::optional<int> LengthSpectrum::two_girth() const {
  bool first = true;
  for (const auto& [len, c] : counts) {
    if (c == 0) continue;
    if (!first) return len;
    first = false;
  }
  return std::nullopt;
}

LengthSpectrum length_spectrum(const MultiGraph& g, int cutoff) {
  if (cutoff < 1 || cutoff > kMaxSpectrumCutoff)
    throw PreconditionError("length_spectrum: cutoff must lie in [1, " +
                            std::to_string(kMaxSpectrumCutoff) + "]");
  LengthSpectrum out;
  out.cutoff = cutoff;
  for (int len = 1; len <= cutoff; ++len) out.counts[len] = 0;

  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (!e.is_loop()) continue;
    if (out.counts[1]++ == 0) out.witnesses[1] = Circuit{{e.u}, {i}};
  }
  if (cutoff >= 2) {
    std::map<std::pair<int, int>, std::vector<int>> mult;
    for (int i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edge(i);
      if (!e.is_loop()) mult[{std::min(e.u, e.v), std::max(e.u, e.v)}].push_back(i);
    }
    for (const auto& [uv, ids] : mult) {
      const std::uint64_t m = ids.size();
      if (m < 2) continue;
      if (out.counts[2] == 0) out.witnesses[2] = Circuit{{uv.first, uv.second}, {ids[0], ids[1]}};
      out.counts[2] += m * (m - 1) / 2;
    }
  }

  const auto& adj = g.adjacency();
  const int n = g.vertex_count();
  std::vector<char> on_path(n, 0);
  std::vector<int> pv, pe;
  std::map<int, std::uint64_t> twice;

  // Circuits of length >= 3 rooted at their least vertex, seen once per direction.
  auto dfs = [&](auto&& self, int s, int v) -> void {
    const int depth = static_cast<int>(pe.size());
    for (const auto& inc : adj[v]) {
      const int y = inc.to;
      if (y == v) continue;
      if (y == s) {
        if (depth >= 2) {
          const int len = depth + 1;
          if (twice[len]++ == 0) {
            Circuit c{pv, pe};
            c.edges.push_back(inc.edge);
            out.witnesses[len] = std::move(c);
          }
        }
        continue;
      }
      if (y < s || on_path[y] || depth + 2 > cutoff) continue;
      on_path[y] = 1;
      pv.push_back(y);
      pe.push_back(inc.edge);
      self(self, s, y);
      pv.pop_back();
      pe.pop_back();
      on_path[y] = 0;
    }
  };
  if (cutoff >= 3) {
    for (int s = 0; s < n; ++s) {
      on_path[s] = 1;
      pv.assign(1, s);
      pe.clear();
      dfs(dfs, s, s);
      on_path[s] = 0;
    }
  }
  for (const auto& [len, c] : twice) out.counts[len] = c / 2;
  return out;
}

TwoGirth two_girth(const MultiGraph& g, int spectrum_cutoff) {
  TwoGirth out;
  const GirthResult gr = girth(g);
  out.girth = gr.girth;
  int alt = std::numeric_limits<int>::max();
  for (int e : gr.witness.edges)
    if (auto r = girth_avoiding(g, e)) alt = std::min(alt, r->girth);
  if (alt == std::numeric_limits<int>::max()) {
    out.unique_shortest = true;
    out.lower_bound = alt;
    return out;
  }
  if (alt > gr.girth) {
    out.unique_shortest = true;
    out.two_girth = alt;
    out.lower_bound = alt;
    return out;
  }
  out.lower_bound = gr.girth + 1;
  spectrum_cutoff = std::min(spectrum_cutoff, kMaxSpectrumCutoff);
  if (spectrum_cutoff > gr.girth) {
    const LengthSpectrum sp = length_spectrum(g, spectrum_cutoff);
    for (const auto& [len, c] : sp.counts)
      if (len > gr.girth && c > 0) {
        out.two_girth = len;
        out.lower_bound = len;
        return out;
      }
    out.lower_bound = spectrum_cutoff + 1;
  }
  return out;
}

bool is_valid_two_factorization(const MultiGraph& g, const TwoFactorization& f) {
  std::vector<int> seen(g.edge_count(), 0);
  for (int e : f.factor1) {
    if (e < 0 || e >= g.edge_count()) return false;
    ++seen[e];
  }
  for (int e : f.factor2) {
    if (e < 0 || e >= g.edge_count()) return false;
    ++seen[e];
  }
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) return false;
  for (const auto* fac : {&f.factor1, &f.factor2}) {
    std::vector<int> deg(g.vertex_count(), 0);
    for (int e : *fac) {
      ++deg[g.edge(e).u];
      ++deg[g.edge(e).v];
    }
    if (std::any_of(deg.begin(), deg.end(), [](int d) { return d != 2; })) return false;
  }
  return true;
}

namespace {

// Balanced orientation of the edges in `use`: walk closed trails. tail[e]
// receives the tail vertex of edge e.
void orient_closed_trails(const MultiGraph& g, const std::vector<char>& use,
                          const std::vector<std::vector<MultiGraph::Incidence>>& adj,
                          std::vector<int>& tail) {
  std::vector<std::size_t> ptr(g.vertex_count(), 0);
  std::vector<char> done(g.edge_count(), 0);
  for (int start = 0; start < g.vertex_count(); ++start) {
    for (;;) {
      int v = start;
      bool moved = false;
      for (;;) {
        while (ptr[v] < adj[v].size() &&
               (!use[adj[v][ptr[v]].edge] || done[adj[v][ptr[v]].edge]))
          ++ptr[v];
        if (ptr[v] == adj[v].size()) break;
        const auto inc = adj[v][ptr[v]];
        done[inc.edge] = 1;
        tail[inc.edge] = v;
        v = inc.to;
        moved = true;
      }
      if (!moved) break;
    }
  }
}

}  // namespace

TwoFactorization two_factorize(const MultiGraph& g, const std::vector<int>& in_factor1) {
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (d % 2 != 0)
      throw PreconditionError("two_factorize: vertex " + std::to_string(v) + " has odd degree " +
                              std::to_string(d));
    if (d != 4)
      throw PreconditionError("two_factorize: vertex " + std::to_string(v) + " has degree " +
                              std::to_string(d) + ", expected 4");
  }
  std::vector<char> hint(g.edge_count(), 0);
  {
    std::vector<int> hdeg(n, 0);
    for (int e : in_factor1) {
      if (e < 0 || e >= g.edge_count() || hint[e])
        throw PreconditionError("two_factorize: bad or repeated hint edge");
      hint[e] = 1;
      ++hdeg[g.edge(e).u];
      ++hdeg[g.edge(e).v];
    }
    for (int v = 0; v < n; ++v)
      if (hdeg[v] != 0 && hdeg[v] != 2)
        throw PreconditionError("two_factorize: hint edges must form disjoint circuits");
  }
  std::vector<char> rest(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) rest[e] = !hint[e];

  constexpr int kAttempts = 256;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    auto adj = g.adjacency();
    if (attempt > 0) {
      Rng rng(Rng::derive(0x2fac, attempt));
      for (auto& list : adj) rng.shuffle(list);
    }
    std::vector<int> tail(g.edge_count(), -1);
    orient_closed_trails(g, hint, adj, tail);
    orient_closed_trails(g, rest, adj, tail);

    std::vector<std::array<int, 2>> outs(n, {-1, -1}), ins(n, {-1, -1});
    for (int e = 0; e < g.edge_count(); ++e) {
      const int t = tail[e], h = g.edge(e).other(t);
      auto& o = outs[t];
      (o[0] < 0 ? o[0] : o[1]) = e;
      auto& i = ins[h];
      (i[0] < 0 ? i[0] : i[1]) = e;
    }
    // Alternating cycles: an edge and the other edge into its head share a
    // class pair; so do an edge and the other edge out of its tail.
    std::vector<int> cls(g.edge_count(), -1);
    bool ok = true;
    for (int start = 0; start < g.edge_count() && ok; ++start) {
      if (cls[start] >= 0) continue;
      std::vector<int> cycle;
      int e = start;
      do {
        cycle.push_back(e);
        cls[e] = 0;
        const int h = g.edge(e).other(tail[e]);
        const int f = ins[h][0] == e ? ins[h][1] : ins[h][0];
        cycle.push_back(f);
        cls[f] = 1;
        const int t = tail[f];
        e = outs[t][0] == f ? outs[t][1] : outs[t][0];
      } while (e != start);
      int want = -1;
      for (int c : cycle) {
        if (!hint[c]) continue;
        if (want < 0) want = cls[c];
        else if (want != cls[c]) ok = false;
      }
      if (want == 1)
        for (int c : cycle) cls[c] ^= 1;
    }
    if (!ok) continue;
    TwoFactorization out;
    for (int e = 0; e < g.edge_count(); ++e) (cls[e] == 0 ? out.factor1 : out.factor2).push_back(e);
    if (!is_valid_two_factorization(g, out))
      throw VerificationError("two_factorize: produced an invalid factorization");
    return out;
  }
  throw ExhaustedError("two_factorize: no orientation honours the factor-1 hint");
}

MultiGraph splice(const MultiGraph& g1, int e1, const MultiGraph& g2, int e2) {
  if (e1 < 0 || e1 >= g1.edge_count()) throw PreconditionError("splice: e1 not in G1");
  if (e2 < 0 || e2 >= g2.edge_count()) throw PreconditionError("splice: e2 not in G2");
  const int n1 = g1.vertex_count();
  const int w = n1 + g2.vertex_count();
  MultiGraph out(w + 1);
  for (int i = 0; i < g1.edge_count(); ++i)
    if (i != e1) out.add_edge(g1.edge(i).u, g1.edge(i).v);
  for (int i = 0; i < g2.edge_count(); ++i)
    if (i != e2) out.add_edge(g2.edge(i).u + n1, g2.edge(i).v + n1);
  out.add_edge(g1.edge(e1).u, w);
  out.add_edge(g1.edge(e1).v, w);
  out.add_edge(g2.edge(e2).u + n1, w);
  out.add_edge(g2.edge(e2).v + n1, w);
  return out;
}

namespace {
int edge_off_witness(const MultiGraph& g) {
  const GirthResult gr = girth(g);
  std::vector<char> on(g.edge_count(), 0);
  for (int e : gr.witness.edges) on[e] = 1;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!on[e]) return e;
  throw PreconditionError("splice_girth_safe: every edge lies on the girth circuit");
}
}  // namespace

MultiGraph splice_girth_safe(const MultiGraph& g1, const MultiGraph& g2) {
  return splice(g1, edge_off_witness(g1), g2, edge_off_witness(g2));
}

MultiGraph circulant(int n, const std::vector<int>& steps) {
  if (n < 1) throw PreconditionError("circulant: n must be positive");
  MultiGraph g(n);
  for (int s : steps) {
    if (s <= 0 || 2 * s >= n)
      throw PreconditionError("circulant: step " + std::to_string(s) + " outside (0, n/2)");
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + s) % n);
  }
  return g;
}

MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b) {
  MultiGraph out(a.vertex_count() + b.vertex_count());
  for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) out.add_edge(e.u + a.vertex_count(), e.v + a.vertex_count());
  return out;
}

}  // namespace coverkit

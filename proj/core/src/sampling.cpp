#include <array>
#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <thread>

#include "coverkit/constructors.hpp"
#include "coverkit/error.hpp"
#include "coverkit/rng.hpp"

namespace coverkit {

MultiGraph pairing_model_sample(const SamplerConfig& config) {
  if (config.n < 1) throw PreconditionError("pairing_model_sample: n must be positive");
  Rng rng(Rng::derive(config.seed, 0));
  std::vector<int> pts(4 * static_cast<std::size_t>(config.n));
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = static_cast<int>(i);
  rng.shuffle(pts);
  MultiGraph g(config.n);
  for (std::size_t i = 0; i < pts.size(); i += 2) g.add_edge(pts[i] / 4, pts[i + 1] / 4);
  return g;
}

std::optional<MultiGraph> simple_pairing_sample(int n, std::uint64_t seed, long max_restarts) {
  if (n < 5) return std::nullopt;
  const std::size_t N = 4 * static_cast<std::size_t>(n);
  std::vector<int> pts(N);
  std::vector<std::array<int, 4>> nbr(n);
  std::vector<int> deg(n);
  for (long t = 0; t < max_restarts; ++t) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t)));
    for (std::size_t i = 0; i < N; ++i) pts[i] = static_cast<int>(i);
    std::fill(deg.begin(), deg.end(), 0);
    bool ok = true;
    for (std::size_t pos = 0; pos < N && ok; ++pos) {
      std::swap(pts[pos], pts[pos + rng.below(N - pos)]);
      if (pos % 2 == 0) continue;
      const int u = pts[pos - 1] / 4, v = pts[pos] / 4;
      if (u == v || std::find(nbr[u].begin(), nbr[u].begin() + deg[u], v) != nbr[u].begin() + deg[u]) {
        ok = false;
        break;
      }
      nbr[u][deg[u]++] = v;
      nbr[v][deg[v]++] = u;
    }
    if (!ok) continue;
    MultiGraph g(n);
    for (std::size_t i = 0; i < N; i += 2) g.add_edge(pts[i] / 4, pts[i + 1] / 4);
    return g;
  }
  return std::nullopt;
}

CycleStats cycle_stats(const SamplerConfig& config, int samples, int cutoff) {
  if (cutoff < 1 || cutoff > 8) throw PreconditionError("cycle_stats: cutoff must lie in [1, 8]");
  if (samples < 2) throw PreconditionError("cycle_stats: need at least two samples");
  std::vector<std::vector<double>> x(samples, std::vector<double>(cutoff + 1, 0));
  const unsigned workers = std::max(1u, std::min(16u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int s = static_cast<int>(w); s < samples; s += static_cast<int>(workers)) {
        const MultiGraph g = pairing_model_sample({config.n, Rng::derive(config.seed, s), 1});
        const LengthSpectrum sp = length_spectrum(g, cutoff);
        for (int i = 1; i <= cutoff; ++i) x[s][i] = static_cast<double>(sp.count(i));
      }
    });
  for (auto& t : pool) t.join();
  CycleStats out;
  out.samples = samples;
  out.mean.assign(cutoff + 1, 0);
  out.variance.assign(cutoff + 1, 0);
  out.std_error.assign(cutoff + 1, 0);
  for (int i = 1; i <= cutoff; ++i) {
    double sum = 0;
    for (int s = 0; s < samples; ++s) sum += x[s][i];
    const double mean = sum / samples;
    double ss = 0;
    for (int s = 0; s < samples; ++s) ss += (x[s][i] - mean) * (x[s][i] - mean);
    out.mean[i] = mean;
    out.variance[i] = ss / (samples - 1);
    out.std_error[i] = std::sqrt(out.variance[i] / samples);
  }
  return out;
}

ThetaEstimate theta_acceptance(int k, int l) {
  double simple = 0, multi = 0;
  for (int i = 1; i <= l; ++i) {
    if (i == k) continue;
    multi += poisson_mean(i);
    if (i >= 3) simple += poisson_mean(i);
  }
  const double hit = 1 - std::exp(-poisson_mean(k));
  return {std::exp(-simple) * hit, std::exp(-multi) * hit};
}

Certified sample_theta(int n, int k, int l, const SamplerConfig& config) {
  if (k < 3) throw PreconditionError("sample_theta: k must be >= 3");
  if (l < k || l > kMaxSpectrumCutoff) throw PreconditionError("sample_theta: need k <= l <= 12");
  for (long t = 0; t < config.max_tries; ++t) {
    const auto g = simple_pairing_sample(n, Rng::derive(config.seed, static_cast<std::uint64_t>(t)));
    if (!g) continue;
    const LengthSpectrum sp = length_spectrum(*g, l);
    bool ok = sp.count(k) > 0;
    for (int j = 1; j <= l && ok; ++j)
      if (j != k && sp.count(j) > 0) ok = false;
    if (!ok || !is_connected(*g)) continue;
    Certified out{*g, certify(*g, "sample_theta try " + std::to_string(t), config.seed,
                              std::min(l + 2, kMaxSpectrumCutoff))};
    return out;
  }
  const ThetaEstimate est = theta_acceptance(k, l);
  throw ExhaustedError("sample_theta: " + std::to_string(config.max_tries) +
                       " tries exhausted; estimated acceptance per simple draw " +
                       std::to_string(est.per_simple_draw) + ", per pairing " +
                       std::to_string(est.per_multigraph));
}

Certified plant_unique_short_cycle(const MultiGraph& x, int k, int separation) {
  if (k < 1 || separation < 0) throw PreconditionError("plant_unique_short_cycle: need k >= 1, separation >= 0");
  if (!is_regular(x, 4) || !is_connected(x))
    throw PreconditionError("plant_unique_short_cycle: X must be connected and 4-regular");
  const int gx = girth(x).girth;
  if (gx <= std::max(k, separation + 2))
    throw PreconditionError("plant_unique_short_cycle: girth(X) = " + std::to_string(gx) +
                            " must exceed max(k, separation + 2)");
  const int n = x.vertex_count();
  const auto& adj = x.adjacency();
  const int inf = std::numeric_limits<int>::max();
  std::vector<int> dist(n, inf);
  std::vector<int> chosen;
  for (int e = 0; e < x.edge_count() && static_cast<int>(chosen.size()) < k; ++e) {
    const Edge& ed = x.edge(e);
    if (dist[ed.u] <= separation || dist[ed.v] <= separation) continue;
    chosen.push_back(e);
    std::deque<int> q{ed.u, ed.v};
    dist[ed.u] = dist[ed.v] = 0;
    while (!q.empty()) {
      const int a = q.front();
      q.pop_front();
      if (dist[a] > separation) continue;
      for (const auto& inc : adj[a])
        if (dist[inc.to] > dist[a] + 1) {
          dist[inc.to] = dist[a] + 1;
          q.push_back(inc.to);
        }
    }
  }
  if (static_cast<int>(chosen.size()) < k)
    throw InfeasibleError("plant_unique_short_cycle: fewer than k edges pairwise at distance > separation");
  MultiGraph y(n + k);
  std::vector<char> drop(x.edge_count(), 0);
  for (int e : chosen) drop[e] = 1;
  for (int e = 0; e < x.edge_count(); ++e)
    if (!drop[e]) y.add_edge(x.edge(e).u, x.edge(e).v);
  for (int i = 0; i < k; ++i) {
    const Edge& ed = x.edge(chosen[i]);
    y.add_edge(ed.u, n + i);
    y.add_edge(n + i, ed.v);
  }
  for (int i = 0; i < k; ++i) y.add_edge(n + i, n + (i + 1) % k);
  Certified out{y, certify(y, "planted " + std::to_string(k) + "-cycle, separation " +
                                  std::to_string(separation), 0, std::min(k + 1, kMaxSpectrumCutoff))};
  if (out.cert.girth != k) throw VerificationError("plant_unique_short_cycle: girth is not k");
  return out;
}

namespace {

// Distances from src avoiding two edges, truncated at `depth`.
const std::vector<int>& local_bfs(const std::vector<std::vector<std::pair<int, int>>>& adj, int src, int e1, int e2,
                           int depth, std::vector<int>& touched, std::vector<int>& dist) {
  for (int t : touched) dist[t] = std::numeric_limits<int>::max();
  touched.assign(1, src);
  dist[src] = 0;
  for (std::size_t i = 0; i < touched.size(); ++i) {
    const int a = touched[i];
    if (dist[a] >= depth) continue;
    for (auto [b, e] : adj[a]) {
      if (e == e1 || e == e2 || dist[b] != std::numeric_limits<int>::max()) continue;
      dist[b] = dist[a] + 1;
      touched.push_back(b);
    }
  }
  return dist;
}

}  // namespace

std::optional<MultiGraph> switching_high_girth(int n, int g, std::uint64_t seed, long max_steps) {
  auto start = simple_pairing_sample(n, seed);
  if (!start) return std::nullopt;
  std::vector<Edge> edges = start->edges();
  const int E = static_cast<int>(edges.size());
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  auto rebuild = [&] {
    for (auto& a : adj) a.clear();
    for (int e = 0; e < E; ++e) {
      adj[edges[e].u].push_back({edges[e].v, e});
      adj[edges[e].v].push_back({edges[e].u, e});
    }
  };
  rebuild();
  Rng rng(Rng::derive(seed, 0x5717c4));
  const int inf = std::numeric_limits<int>::max();
  std::vector<int> t1, t2, t3, d1(n, inf), d2(n, inf), d3(n, inf);
  long steps = 0;
  bool clean = false;
  while (!clean) {
    clean = true;
    for (int e = 0; e < E; ++e) {
      const int a = edges[e].u, b = edges[e].v;
      const auto& da0 = local_bfs(adj, a, e, -1, g - 2, t1, d1);
      if (da0[b] == inf) continue;  // e lies on no circuit shorter than g
      clean = false;
      bool done = false;
      for (int tries = 0; tries < 256 && !done; ++tries) {
        if (++steps > max_steps) return std::nullopt;
        const int f = static_cast<int>(rng.below(E));
        if (f == e) continue;
        int c = edges[f].u, d = edges[f].v;
        if (rng.below(2)) std::swap(c, d);
        if (c == a || c == b || d == a || d == b) continue;
        const auto& da = local_bfs(adj, a, e, f, g, t1, d1);
        const auto& db = local_bfs(adj, b, e, f, g, t2, d2);
        const auto& dc = local_bfs(adj, c, e, f, g, t3, d3);
        if (da[c] < g - 1 || db[d] < g - 1) continue;
        const long cross1 = (db[c] == inf || da[d] == inf) ? inf : 2L + db[c] + da[d];
        const long cross2 = (da[b] == inf || dc[d] == inf) ? inf : 2L + da[b] + dc[d];
        if (cross1 < g || cross2 < g) continue;
        edges[e] = {a, c};
        edges[f] = {b, d};
        rebuild();
        done = true;
      }
    }
  }
  // Merge components: swapping one edge from each keeps every circuit >= g.
  for (;;) {
    MultiGraph cur(n, edges);
    const auto dist = bfs_distances(cur, 0);
    int other = -1;
    for (int v = 0; v < n && other < 0; ++v)
      if (dist[v] < 0) other = v;
    if (other < 0) return cur;
    const int e = adj[0].front().second, f = adj[other].front().second;
    const Edge x = edges[e], y = edges[f];
    edges[e] = {x.u, y.u};
    edges[f] = {x.v, y.v};
    rebuild();
  }
}

}  // namespace coverkit

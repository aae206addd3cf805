#include "coverkit/constructors.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "coverkit/error.hpp"

namespace coverkit {

GirthCertificate certify(const MultiGraph& g, std::string construction, std::uint64_t seed,
                         int spectrum_cutoff, bool with_two_girth) {
  GirthCertificate c;
  c.vertex_count = g.vertex_count();
  c.construction = std::move(construction);
  c.seed = seed;
  c.connected = is_connected(g);
  c.simple = is_simple(g);
  c.regular_degree = g.vertex_count() > 0 ? g.degree(0) : 0;
  if (!is_regular(g, c.regular_degree)) c.regular_degree = -1;
  const GirthResult gr = girth(g);
  c.girth = gr.girth;
  c.witness = gr.witness;
  if (with_two_girth) {
    const TwoGirth tg = two_girth(g, spectrum_cutoff);
    c.two_girth = tg.two_girth;
    c.two_girth_lower_bound = tg.lower_bound;
  }
  if (spectrum_cutoff > 0) c.spectrum_prefix = length_spectrum(g, std::min(spectrum_cutoff, kMaxSpectrumCutoff));
  return c;
}

std::optional<std::string> recheck(const MultiGraph& g, const GirthCertificate& c) {
  const bool with_two = c.two_girth.has_value() || c.two_girth_lower_bound > 0;
  const GirthCertificate f = certify(g, c.construction, c.seed, c.spectrum_prefix.cutoff, with_two);
  if (f.vertex_count != c.vertex_count) return "vertex count";
  if (f.girth != c.girth) return "girth";
  if (!is_valid_circuit(g, c.witness) || c.witness.length() != c.girth) return "witness circuit";
  if (f.connected != c.connected) return "connectivity";
  if (f.regular_degree != c.regular_degree) return "regular degree";
  if (f.simple != c.simple) return "simplicity";
  if (f.two_girth != c.two_girth) return "two-girth";
  if (f.spectrum_prefix.counts != c.spectrum_prefix.counts) return "spectrum prefix";
  return std::nullopt;
}

long moore_bound(int g) {
  if (g < 3) return 1;
  long p = 1;
  for (int i = 0; i < g / 2; ++i) p *= 3;
  return g % 2 == 1 ? 1 + 2 * (p - 1) : p - 1;
}

namespace {

std::vector<int> bfs_two_banned(const MultiGraph& g, int src, int e1, int e2, int depth) {
  const auto& adj = g.adjacency();
  std::vector<int> dist(g.vertex_count(), std::numeric_limits<int>::max());
  std::deque<int> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    const int x = q.front();
    q.pop_front();
    if (dist[x] >= depth) continue;
    for (const auto& inc : adj[x]) {
      if (inc.edge == e1 || inc.edge == e2 || dist[inc.to] != std::numeric_limits<int>::max()) continue;
      dist[inc.to] = dist[x] + 1;
      q.push_back(inc.to);
    }
  }
  return dist;
}

MultiGraph switched(const MultiGraph& g, int e1, int e2, Edge n1, Edge n2) {
  MultiGraph out = g.without_edges({e1, e2});
  out.add_edge(n1.u, n1.v);
  out.add_edge(n2.u, n2.v);
  return out;
}

}  // namespace

MultiGraph lower_girth_to(const MultiGraph& g, int target) {
  const int current = girth(g).girth;
  if (current == target) return g;
  if (target < 3 || current < target)
    throw PreconditionError("lower_girth_to: target must lie in [3, girth]");
  const auto& adj = g.adjacency();
  const int inf = std::numeric_limits<int>::max();
  for (int e1 = 0; e1 < g.edge_count(); ++e1) {
    const int a = g.edge(e1).u, b = g.edge(e1).v;
    const auto da1 = bfs_two_banned(g, a, e1, -1, target);
    for (int c = 0; c < g.vertex_count(); ++c) {
      if (da1[c] != target - 1) continue;
      for (const auto& inc : adj[c]) {
        const int e2 = inc.edge, d = inc.to;
        if (e2 == e1 || d == a || d == b || d == c) continue;
        const auto da = bfs_two_banned(g, a, e1, e2, target);
        const auto db = bfs_two_banned(g, b, e1, e2, target);
        if (da[c] != target - 1 || db[d] < target - 1) continue;
        const long cross1 = (db[c] == inf || da[d] == inf) ? inf : 2L + db[c] + da[d];
        const long cross2 = (da[b] == inf) ? inf : 2L + da[b] + bfs_two_banned(g, c, e1, e2, target)[d];
        if (cross1 < target || cross2 < target) continue;
        MultiGraph h = switched(g, e1, e2, {a, c}, {b, d});
        if (!is_connected(h) || !is_simple(h)) continue;
        if (girth(h).girth == target) return h;
      }
    }
  }
  throw VerificationError("lower_girth_to: no girth-lowering switch found");
}

Certified exact_girth_gadget(int g, int min_size, std::uint64_t seed) {
  if (g < 3) throw PreconditionError("exact_girth_gadget: g must be >= 3");
  if (g == 3) {
    const int n = std::max(5, min_size);
    MultiGraph h = circulant(n, {1, 2});
    return {h, certify(h, "circulant(" + std::to_string(n) + ",{1,2})", seed)};
  }
  if (g == 4) {
    for (int n = std::max(10, min_size);; ++n) {
      MultiGraph h = circulant(n, {1, 3});
      if (girth(h).girth == 4) return {h, certify(h, "circulant(" + std::to_string(n) + ",{1,3})", seed)};
    }
  }
  // Circulants always carry the 4-cycle s1, s2, -s1, -s2, so larger girths
  // come from metacyclic Cayley graphs lowered to exactly g by one switch.
  const long start = std::max<long>(moore_bound(g), min_size);
  for (long n = start; n < 64 * start; ++n) {
    const auto hit = find_metacyclic(static_cast<int>(n), g, seed, 200);
    if (!hit) continue;
    const auto& [mc, gir] = *hit;
    MultiGraph h = lower_girth_to(metacyclic_cayley(mc), g);
    std::string name = "metacyclic(k=" + std::to_string(mc.k) + ",m=" + std::to_string(mc.m) +
                       ",r=" + std::to_string(mc.r) + ")";
    if (gir != g) name += " + girth-lowering switch";
    return {h, certify(h, name, seed)};
  }
  throw ExhaustedError("exact_girth_gadget: no gadget found for g = " + std::to_string(g));
}

std::vector<long> decompose_remainder(long m, int K, int min_prime) {
  std::vector<long> terms;
  for (long p = std::max(2, min_prime); p * (p - 1) * (p + 1) + 1 <= m; ++p) {
    bool prime = p >= 2;
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (prime) terms.push_back(p * (p - 1) * (p + 1) + 1);
  }
  std::reverse(terms.begin(), terms.end());
  std::vector<long> pick;
  // Largest-first with backtracking over at most K terms.
  auto search = [&](auto&& self, long rest, std::size_t from) -> bool {
    if (rest == 0) return true;
    if (static_cast<int>(pick.size()) == K) return false;
    for (std::size_t i = from; i < terms.size(); ++i) {
      if (terms[i] > rest) continue;
      pick.push_back(terms[i]);
      if (self(self, rest - terms[i], i)) return true;
      pick.pop_back();
    }
    return false;
  };
  if (m <= 0 || !search(search, m, 0))
    throw InfeasibleError("decompose_remainder: " + std::to_string(m) +
                          " is not a sum of at most " + std::to_string(K) +
                          " terms p(p-1)(p+1)+1 with p >= " + std::to_string(min_prime));
  return pick;
}

namespace {

std::optional<std::pair<MultiGraph, std::string>> high_girth(int n, int g, std::uint64_t seed) {
  if (g <= 4) {
    for (int s2 = 2; 2 * s2 < n; ++s2) {
      MultiGraph c = circulant(n, {1, s2});
      if (girth(c).girth >= g)
        return std::pair{c, "circulant(" + std::to_string(n) + ",{1," + std::to_string(s2) + "})"};
    }
  }
  if (auto hit = find_metacyclic(n, g, seed)) {
    const auto& mc = hit->first;
    return std::pair{metacyclic_cayley(mc), "metacyclic(k=" + std::to_string(mc.k) + ",m=" +
                                                std::to_string(mc.m) + ",r=" + std::to_string(mc.r) + ")"};
  }
  if (auto sw = switching_high_girth(n, g, seed)) return std::pair{*sw, std::string("switching sampler")};
  return std::nullopt;
}

}  // namespace

Certified build_girth_graph(int n, int g, FillerMode mode, std::uint64_t seed) {
  if (g < 3) throw PreconditionError("build_girth_graph: g must be >= 3");
  const long threshold = std::max<long>(5, moore_bound(g));
  if (n < threshold)
    throw InfeasibleError("build_girth_graph: n = " + std::to_string(n) + " is below n_min(" +
                          std::to_string(g) + ") = " + std::to_string(threshold));

  if (mode == FillerMode::PrimeFillers) {
    const Certified h = exact_girth_gadget(g, 0, seed);
    int pmin = 5;
    while (lps_like(pmin).cert.girth < g) {
      do ++pmin;
      while ([&] {
        for (int d = 2; d * d <= pmin; ++d)
          if (pmin % d == 0) return true;
        return false;
      }());
    }
    const auto parts = decompose_remainder(n - h.graph.vertex_count(), 16, pmin);
    std::optional<MultiGraph> chain;
    std::string name = "prime-fillers: gadget [" + h.cert.construction + "]";
    for (long t : parts) {
      int p = 5;
      while (static_cast<long>(p) * (p - 1) * (p + 1) + 1 != t) ++p;
      const Certified x = lps_like(p);
      if (x.cert.girth < g) throw VerificationError("lps_like filler girth below g");
      chain = chain ? splice_girth_safe(*chain, x.graph) : x.graph;
      name += " * X_" + std::to_string(p);
    }
    MultiGraph out = splice_girth_safe(h.graph, *chain);
    Certified res{out, certify(out, name, seed)};
    if (res.cert.vertex_count != n || res.cert.girth != g)
      throw VerificationError("build_girth_graph: prime-fillers assembly missed its target");
    return res;
  }

  // Gadget spliced with one filler of girth >= g, sized to land on n exactly.
  try {
    const Certified h = exact_girth_gadget(g, 0, seed);
    const int rest = n - h.graph.vertex_count() - 1;
    if (rest >= moore_bound(g) && rest >= 5) {
      if (auto f = high_girth(rest, g, seed)) {
        MultiGraph out = splice_girth_safe(h.graph, f->first);
        Certified res{out, certify(out, "splice: gadget [" + h.cert.construction + "] * filler [" +
                                            f->second + "]", seed)};
        if (res.cert.vertex_count == n && res.cert.girth == g && res.cert.connected) return res;
      }
    }
  } catch (const ExhaustedError&) {
  }
  // Whole graph of girth >= g on n vertices, then one girth-lowering switch.
  if (auto f = high_girth(n, g, seed)) {
    MultiGraph out = lower_girth_to(f->first, g);
    const bool switched_once = girth(f->first).girth != g;
    Certified res{out, certify(out, f->second + (switched_once ? " + girth-lowering switch" : ""), seed)};
    if (res.cert.vertex_count == n && res.cert.girth == g && res.cert.connected) return res;
  }
  throw ExhaustedError("build_girth_graph: no construction reached (" + std::to_string(n) + ", " +
                       std::to_string(g) + ")");
}

}  // namespace coverkit

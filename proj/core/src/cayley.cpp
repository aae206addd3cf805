#include <array>
#include <numeric>
#include <string>

#include "coverkit/constructors.hpp"
#include "coverkit/error.hpp"
#include "coverkit/rng.hpp"

namespace coverkit {

namespace {

struct MetaGroup {
  int k, m;
  std::vector<long> rpow;  // r^i mod m, i in [0, k)

  MetaGroup(int k_, int m_, int r) : k(k_), m(m_), rpow(k_) {
    long p = 1 % m;
    for (int i = 0; i < k; ++i) {
      rpow[i] = p;
      p = p * r % m;
    }
  }
  int index(int i, int j) const { return i * m + j; }
  std::pair<int, int> mul(std::pair<int, int> x, std::pair<int, int> y) const {
    return {(x.first + y.first) % k, static_cast<int>((x.second + rpow[x.first] * y.second) % m)};
  }
  std::pair<int, int> inv(std::pair<int, int> x) const {
    const int i = (k - x.first) % k;
    return {i, static_cast<int>((m - rpow[i] * x.second % m) % m)};
  }
};

bool valid_twist(int k, int m, int r) {
  if (m == 1) return r == 0 || r == 1;
  if (std::gcd(r, m) != 1) return false;
  long p = 1;
  for (int i = 0; i < k; ++i) p = p * r % m;
  return p == 1 % m;
}

// Right multiplication tables for a, a^-1, b, b^-1.
std::array<std::vector<int>, 4> right_tables(const MetaGroup& G, std::pair<int, int> a,
                                             std::pair<int, int> b) {
  const std::array<std::pair<int, int>, 4> gens{a, G.inv(a), b, G.inv(b)};
  std::array<std::vector<int>, 4> t;
  const int n = G.k * G.m;
  for (int s = 0; s < 4; ++s) {
    t[s].resize(n);
    for (int i = 0; i < G.k; ++i)
      for (int j = 0; j < G.m; ++j) {
        const auto p = G.mul({i, j}, gens[s]);
        t[s][G.index(i, j)] = G.index(p.first, p.second);
      }
  }
  return t;
}

// BFS from the identity that gives up once a circuit shorter than g shows up.
bool girth_at_least(const MetaGroup& G, std::pair<int, int> a, std::pair<int, int> b, int g,
                    std::vector<int>& dist, std::vector<int>& touched) {
  const std::array<std::pair<int, int>, 4> gens{a, G.inv(a), b, G.inv(b)};
  constexpr int kInv[4] = {1, 0, 3, 2};
  std::vector<std::pair<int, int>> elems{{0, 0}};
  std::vector<int> label{-1};
  for (int t : touched) dist[t] = -1;
  touched.assign(1, 0);
  dist[0] = 0;
  bool ok = true;
  for (std::size_t qi = 0; qi < elems.size() && ok; ++qi) {
    const auto x = elems[qi];
    const int xi = G.index(x.first, x.second);
    if (2 * dist[xi] >= g) break;
    for (int s = 0; s < 4; ++s) {
      if (label[qi] >= 0 && s == kInv[label[qi]]) continue;
      const auto y = G.mul(x, gens[s]);
      const int yi = G.index(y.first, y.second);
      if (dist[yi] < 0) {
        dist[yi] = dist[xi] + 1;
        touched.push_back(yi);
        elems.push_back(y);
        label.push_back(s);
      } else if (dist[xi] + dist[yi] + 1 < g) {
        ok = false;
        break;
      }
    }
  }
  return ok;
}

}  // namespace

MultiGraph metacyclic_cayley(const Metacyclic& spec) {
  if (spec.k < 1 || spec.m < 1 || !valid_twist(spec.k, spec.m, spec.r))
    throw PreconditionError("metacyclic_cayley: need r^k = 1 mod m with gcd(r, m) = 1");
  const MetaGroup G(spec.k, spec.m, spec.r % std::max(spec.m, 1));
  auto norm = [&](std::pair<int, int> p) {
    return std::pair<int, int>{((p.first % G.k) + G.k) % G.k, ((p.second % G.m) + G.m) % G.m};
  };
  const auto t = right_tables(G, norm(spec.a), norm(spec.b));
  const int n = G.k * G.m;
  MultiGraph g(n);
  for (int v = 0; v < n; ++v) {
    g.add_edge(v, t[0][v]);
    g.add_edge(v, t[2][v]);
  }
  return g;
}

std::optional<std::pair<Metacyclic, int>> find_metacyclic(int n, int g, std::uint64_t seed, int budget) {
  if (n < 5) return std::nullopt;
  std::vector<int> dist(n, -1), touched;
  for (int k = 1; k <= n; ++k) {
    if (n % k != 0) continue;
    const int m = n / k;
    for (int r = 1; r < std::max(m, 2); ++r) {
      if (!valid_twist(k, m, r)) continue;
      if (r == 1 && g > 4) continue;  // abelian Cayley graphs contain 4-cycles
      const MetaGroup G(k, m, r);
      Rng rng(Rng::derive(seed, (static_cast<std::uint64_t>(k) << 32) | static_cast<std::uint64_t>(r)));
      for (int attempt = 0; attempt < budget; ++attempt) {
        const std::pair<int, int> a{static_cast<int>(rng.below(k)), static_cast<int>(rng.below(m))};
        const std::pair<int, int> b{static_cast<int>(rng.below(k)), static_cast<int>(rng.below(m))};
        const std::array<std::pair<int, int>, 4> gens{a, G.inv(a), b, G.inv(b)};
        bool distinct = true;
        for (int s = 0; s < 4 && distinct; ++s) {
          if (gens[s] == std::pair<int, int>{0, 0}) distinct = false;
          for (int t = s + 1; t < 4 && distinct; ++t)
            if (gens[s] == gens[t]) distinct = false;
        }
        if (!distinct || !girth_at_least(G, a, b, g, dist, touched)) continue;
        const Metacyclic spec{k, m, r, a, b};
        const MultiGraph cg = metacyclic_cayley(spec);
        if (!is_connected(cg)) continue;
        const auto gr = girth_from_root(cg, 0);
        if (gr && gr->girth >= g) return std::pair{spec, gr->girth};
      }
    }
  }
  return std::nullopt;
}

namespace {
bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}
}  // namespace

Certified lps_like(int q) {
  if (q < 5 || q % 2 == 0 || !is_prime(q))
    throw PreconditionError("lps_like: q must be an odd prime >= 5, got " + std::to_string(q));
  const long q2 = static_cast<long>(q) * q, q4 = q2 * q2;
  std::vector<int> index(q4, -1);
  std::vector<std::array<int, 4>> elems;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d)
          if (((a * d - b * c) % q + q) % q == 1) {
            index[((a * q + b) * q + c) * q + d] = static_cast<int>(elems.size());
            elems.push_back({a, b, c, d});
          }
  auto times = [&](const std::array<int, 4>& x, const std::array<int, 4>& y) {
    const int a = (x[0] * y[0] + x[1] * y[2]) % q, b = (x[0] * y[1] + x[1] * y[3]) % q;
    const int c = (x[2] * y[0] + x[3] * y[2]) % q, d = (x[2] * y[1] + x[3] * y[3]) % q;
    return index[((a * q + b) * q + c) * q + d];
  };
  const std::array<int, 4> A{1, 2, 0, 1}, B{1, 0, 2, 1};
  MultiGraph g(static_cast<int>(elems.size()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    g.add_edge(v, times(elems[v], A));
    g.add_edge(v, times(elems[v], B));
  }
  Certified out{g, certify(g, "lps_like(" + std::to_string(q) + "): Cayley graph of SL(2," +
                                  std::to_string(q) + "), order q(q-1)(q+1)")};
  return out;
}

}  // namespace coverkit

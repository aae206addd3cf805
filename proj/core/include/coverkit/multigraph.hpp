#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace coverkit {

struct Edge {
  int u = 0;
  int v = 0;
  bool is_loop() const { return u == v; }
  int other(int w) const { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected multigraph on vertices 0..n-1. Loops and parallel edges are
// allowed; edges are addressed by their index in edges().
class MultiGraph {
 public:
  struct Incidence {
    int to;
    int edge;
  };

  MultiGraph() = default;
  explicit MultiGraph(int n);
  MultiGraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_.at(id); }

  int add_edge(int u, int v);
  int degree(int v) const;

  // Incidence lists; a loop appears twice at its vertex.
  const std::vector<std::vector<Incidence>>& adjacency() const;

  MultiGraph without_edges(const std::vector<int>& ids) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  mutable std::vector<std::vector<Incidence>> adj_;
  mutable bool adj_valid_ = false;
};

bool is_regular(const MultiGraph& g, int d);
bool is_connected(const MultiGraph& g);
bool is_simple(const MultiGraph& g);

// BFS distances from source; -1 for unreachable. `banned` edge is skipped.
std::vector<int> bfs_distances(const MultiGraph& g, int source, int banned = -1);

struct Circuit {
  std::vector<int> vertices;  // v0 v1 ... v_{L-1}; edge i joins v_i and v_{i+1 mod L}
  std::vector<int> edges;
  int length() const { return static_cast<int>(edges.size()); }
};

bool is_valid_circuit(const MultiGraph& g, const Circuit& c);

struct GirthResult {
  int girth = 0;
  Circuit witness;
};

// Shortest circuit (loop = 1, parallel pair = 2). Throws PreconditionError on
// a forest.
GirthResult girth(const MultiGraph& g);
// Shortest circuit seen by a single BFS from `root`: an upper bound on the
// girth, exact for vertex-transitive graphs such as Cayley graphs.
std::optional<GirthResult> girth_from_root(const MultiGraph& g, int root);
// Shortest circuit avoiding edge `banned`, or nullopt if none exists.
std::optional<GirthResult> girth_avoiding(const MultiGraph& g, int banned);

struct LengthSpectrum {
  int cutoff = 0;
  std::map<int, std::uint64_t> counts;  // length -> number of circuits
  std::map<int, Circuit> witnesses;
  std::optional<int> girth() const;
  std::optional<int> two_girth() const;
  std::uint64_t count(int len) const {
    auto it = counts.find(len);
    return it == counts.end() ? 0 : it->second;
  }
};

inline constexpr int kMaxSpectrumCutoff = 12;

// Exact counts of simple circuits (as edge sets) of each length <= cutoff.
LengthSpectrum length_spectrum(const MultiGraph& g, int cutoff);

// Second smallest circuit length.
struct TwoGirth {
  int girth = 0;
  std::optional<int> two_girth;  // exact when known
  int lower_bound = 0;           // two_girth >= lower_bound always
  bool unique_shortest = false;  // the girth circuit is unique
};
// Exact when the shortest circuit is unique (exclusion argument) or when the
// second length is <= spectrum_cutoff; otherwise a lower bound.
TwoGirth two_girth(const MultiGraph& g, int spectrum_cutoff = 8);

struct TwoFactorization {
  std::vector<int> factor1;  // edge ids
  std::vector<int> factor2;
};

bool is_valid_two_factorization(const MultiGraph& g, const TwoFactorization& f);

// Splits a 4-regular multigraph into two spanning 2-regular factors. Edges in
// `in_factor1` are forced into the first factor; they must form a union of
// circuits. Throws PreconditionError on a vertex of degree != 4.
TwoFactorization two_factorize(const MultiGraph& g, const std::vector<int>& in_factor1 = {});

// Cut e1 in G1 and e2 in G2, join all four loose ends to a new vertex.
MultiGraph splice(const MultiGraph& g1, int e1, const MultiGraph& g2, int e2);
// Splice on edges avoiding each input's stored girth witness.
MultiGraph splice_girth_safe(const MultiGraph& g1, const MultiGraph& g2);

MultiGraph circulant(int n, const std::vector<int>& steps);
MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b);

}  // namespace coverkit

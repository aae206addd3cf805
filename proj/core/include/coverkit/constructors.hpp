#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coverkit/multigraph.hpp"

namespace coverkit {

struct GirthCertificate {
  int vertex_count = 0;
  int girth = 0;
  Circuit witness;
  std::optional<int> two_girth;  // exact second circuit length when certified
  int two_girth_lower_bound = 0;
  LengthSpectrum spectrum_prefix;
  bool connected = false;
  int regular_degree = -1;  // -1 when not regular
  bool simple = false;
  std::uint64_t seed = 0;
  std::string construction;
};

struct Certified {
  MultiGraph graph;
  GirthCertificate cert;
};

// Computes every certificate field from scratch.
GirthCertificate certify(const MultiGraph& g, std::string construction, std::uint64_t seed = 0,
                         int spectrum_cutoff = 6, bool with_two_girth = true);
// Recomputes and compares; returns a description of the first mismatch.
std::optional<std::string> recheck(const MultiGraph& g, const GirthCertificate& c);

// Smallest n for which a 4-regular graph of girth g can exist (Moore bound).
long moore_bound(int g);

// --- algebraic components ----------------------------------------------

// Cayley graph of Z_k x| Z_m, (i,j)(i',j') = (i+i' mod k, j + r^i j' mod m),
// on generators a, b. Requires r^k = 1 mod m.
struct Metacyclic {
  int k = 1, m = 1, r = 1;
  std::pair<int, int> a{0, 0}, b{0, 0};
};
MultiGraph metacyclic_cayley(const Metacyclic& spec);

// Seeded search for a metacyclic Cayley graph of exact order n with girth
// at least g. `budget` bounds generator pairs tried per (k, m, r).
std::optional<std::pair<Metacyclic, int>> find_metacyclic(int n, int g, std::uint64_t seed,
                                                          int budget = 4000);

// Cayley graph of SL(2, q) on [[1,2],[0,1]] and [[1,0],[2,1]].
Certified lps_like(int q);

// --- exact-girth builder -------------------------------------------------

Certified exact_girth_gadget(int g, int min_size = 0, std::uint64_t seed = 0);

// Replaces two edges so the girth drops to exactly `target` (<= current girth).
MultiGraph lower_girth_to(const MultiGraph& g, int target);

enum class FillerMode { Flexible, PrimeFillers };
Certified build_girth_graph(int n, int g, FillerMode mode = FillerMode::Flexible,
                            std::uint64_t seed = 0);

// Largest-first decomposition of m into at most K terms p(p-1)(p+1)+1.
std::vector<long> decompose_remainder(long m, int K, int min_prime = 3);

// --- random models -----------------------------------------------------

struct SamplerConfig {
  int n = 0;
  std::uint64_t seed = 0;
  long max_tries = 100000;
};

// Configuration model: uniform perfect matching of 4n points.
MultiGraph pairing_model_sample(const SamplerConfig& config);

// Pairing-model draw conditioned on simplicity (rejects loops and double
// edges as soon as they appear). Returns nullopt after `max_restarts`.
std::optional<MultiGraph> simple_pairing_sample(int n, std::uint64_t seed, long max_restarts = 1'000'000);

inline double poisson_mean(int i) {
  double p = 1;
  for (int t = 0; t < i; ++t) p *= 3;
  return p / (2.0 * i);
}

struct CycleStats {
  int samples = 0;
  std::vector<double> mean;      // index i = circuit length, i in [1, cutoff]
  std::vector<double> variance;  // unbiased
  std::vector<double> std_error;
};
CycleStats cycle_stats(const SamplerConfig& config, int samples, int cutoff);

struct ThetaEstimate {
  double per_simple_draw = 0;  // acceptance per conditioned (simple) draw
  double per_multigraph = 0;   // acceptance per raw pairing draw
};
ThetaEstimate theta_acceptance(int k, int l);

// Simple connected 4-regular graph with girth k and no circuit of length in
// (k, l]. One try is one simple draw.
Certified sample_theta(int n, int k, int l, const SamplerConfig& config);

// Subdivide k pairwise distant edges and join the new vertices in a k-cycle.
Certified plant_unique_short_cycle(const MultiGraph& x, int k, int separation);

// Randomized edge switching towards girth >= g on exactly n vertices.
std::optional<MultiGraph> switching_high_girth(int n, int g, std::uint64_t seed, long max_steps = 200000);

}  // namespace coverkit

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace coverkit {

struct Assertion {
  std::string name;
  std::string statement;  // the claim this instantiates
  bool passed = false;
  std::string detail;
};

struct PipelineReport {
  std::string pipeline;
  std::uint64_t seed = 0;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json intermediates = nlohmann::json::object();
  std::vector<Assertion> assertions;

  bool passed() const;
  void check(std::string name, std::string statement, bool ok, std::string detail = {});
  nlohmann::json to_json() const;
};

// Covering of degree n whose systole is controlled by the girth a of a
// 4-regular graph: G -> Gamma_n -> Lambda_n = psi_k^{-1}(Gamma_n).
PipelineReport pipeline_main(int n, int a, std::uint64_t seed);

enum class ThetaMethod { Auto, Rejection, Planting };

// One report per size; witnesses of the shortest stabilizer are compared
// across sizes in the last report's assertions.
std::vector<PipelineReport> pipeline_constant_systole(int k, int l, const std::vector<int>& sizes,
                                                      std::uint64_t seed,
                                                      ThetaMethod method = ThetaMethod::Auto);

// x^k systole: H_k from the permutation tower, G_k = psi^{-1}(H_k).
// `radius` bounds the exhaustive search for stabilizers outside <x>.
PipelineReport pipeline_xk_systole(int k, int m, int r, int radius = 8);

}  // namespace coverkit

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gibbs/graph.hpp"

namespace gibbs {

namespace model {

struct ErdosRenyi {
  std::size_t n;
  double p;
};
// Edge {i, j} appears with probability w_i w_j / sum_k w_k.
struct ChungLu {
  std::vector<double> weights;
};
// Ring lattice of even degree K, rewired with probability beta.
struct WattsStrogatz {
  std::size_t n;
  std::size_t K;
  double beta;
};
// Starts from K_{m0}; each arriving vertex attaches to m existing ones.
struct BarabasiAlbert {
  std::size_t n;
  std::size_t m0;
  std::size_t m;
};
struct Empty {
  std::size_t n;
};
struct Complete {
  std::size_t n;
};
// Parts 0..n1-1 and n1..n1+n2-1.
struct CompleteBipartite {
  std::size_t n1;
  std::size_t n2;
};
// K_{n1,1} with the centre at vertex 0.
struct Star {
  std::size_t n1;
};
// Edges i -- (i+1 mod n).
struct Cycle {
  std::size_t n;
};

}  // namespace model

using GeneratorSpec =
    std::variant<model::ErdosRenyi, model::ChungLu, model::WattsStrogatz, model::BarabasiAlbert,
                 model::Empty, model::Complete, model::CompleteBipartite, model::Star,
                 model::Cycle>;

using RngSeed = std::uint64_t;

// Throws DomainError if parameters are outside the model's domain.
void validate(const GeneratorSpec& spec);

bool is_deterministic(const GeneratorSpec& spec);

// Canonical text form, e.g. "er:n=1200,p0=10.5", "er:n=100,p=0.1",
// "cl:weights=3:3:2", "cl:n=100,w=10", "ws:n=1200,K=4,beta=0.6",
// "ba:n=1200,m0=4,m=4", "empty:n=5", "complete:n=10",
// "bipartite:n1=3,n2=4", "star:n1=6", "cycle:n=64".
GeneratorSpec parse_generator_spec(std::string_view text);
std::string to_string(const GeneratorSpec& spec);

// Deterministic in (spec, seed); see Rng for the draw sequence.
Graph generate(const GeneratorSpec& spec, RngSeed seed);

model::ErdosRenyi matched_er_spec(const Graph& g);

// p0 * log(n) / n; DomainError when the result exceeds 1.
double er_threshold_p(std::size_t n, double p0);

}  // namespace gibbs

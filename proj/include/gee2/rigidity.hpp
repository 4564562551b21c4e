#ifndef GEE2_RIGIDITY_HPP
#define GEE2_RIGIDITY_HPP

#include <cstdint>
#include <map>

#include "gee2/complex.hpp"

namespace gee2 {

inline constexpr long long kRigidityPrime = 2147483647; // 2^31 - 1

struct Graph {
    std::vector<VertexId> vertices;                    // sorted
    std::vector<std::pair<VertexId, VertexId>> edges;  // each pair sorted, list sorted

    static Graph of(const SimplicialComplex& k);
    static Graph complete(int n);
    Graph cone(VertexId apex) const;
};

// Random coordinates over GF(p); (seed, p) fully determine the embedding.
struct GenericEmbedding {
    int dimension = 0;
    long long p = kRigidityPrime;
    std::uint64_t seed = 0;
    std::map<VertexId, std::vector<long long>> coords;

    static GenericEmbedding random(const std::vector<VertexId>& vertices, int dimension,
                                   std::uint64_t seed, long long p = kRigidityPrime);
};

// Rows indexed by edges (in Graph::edges order), D*|V| columns in vertex
// blocks; the block for edge uv at u holds f(u)-f(v), at v holds f(v)-f(u).
struct RigidityMatrix {
    long long p = kRigidityPrime;
    int dimension = 0;
    std::vector<VertexId> vertex_order;
    std::vector<std::pair<VertexId, VertexId>> edge_order;
    std::vector<std::vector<long long>> rows;

    long long rank() const;
};

RigidityMatrix rigidity_matrix(const Graph& g, const GenericEmbedding& emb);

// Left-kernel dimension m - max rank over `trials` independently seeded
// embeddings.
long long stress_space_dim(const Graph& g, int dimension, int trials, std::uint64_t seed);

// Stress-space dimension of G(K) at D = d+1 (D = 3 when d = 2); the input
// must be a normal pseudomanifold.
long long g2_via_rigidity(const SimplicialComplex& k, std::uint64_t seed, int trials = 3);

// True for v iff some left-kernel basis vector is nonzero on an edge at v.
std::map<VertexId, bool> stress_participation(const SimplicialComplex& k, std::uint64_t seed,
                                              int trials = 3);

} // namespace gee2

#endif

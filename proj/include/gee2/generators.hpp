#ifndef GEE2_GENERATORS_HPP
#define GEE2_GENERATORS_HPP

#include <cstdint>

#include "gee2/moves.hpp"

namespace gee2 {

// Boundary complex of a (d+1)-simplex on vertices 0..d+1.
SimplicialComplex boundary_sphere(int d);

// Iterated facet subdivisions of boundary_sphere(d); the facet to subdivide
// is drawn from a seeded deterministic stream.
SimplicialComplex stacked_sphere(int d, int subdivision_count, std::uint64_t seed);

// Join of standard spheres of the given dimensions, on consecutive labels.
SimplicialComplex join_spheres(const std::vector<int>& dims);

// Join of d+1 copies of S^0.
SimplicialComplex cross_polytope(int d);

// Gale-evenness cyclic d-sphere on n vertices (labels 0..n-1).
SimplicialComplex cyclic_sphere(int n, int d);

// The 6-vertex real projective plane (pinned facet list on vertices 1..6).
SimplicialComplex rp2_6();

// The 7-vertex, 12-triangle projective plane: three cone vertices over the
// three 4-cycles on a K4.
SimplicialComplex rp2_7();

struct TowerResult {
    SimplicialComplex complex;
    std::vector<MoveRecord> steps;
};

// Fold one-vertex suspensions over `base`; each step names a vertex of the
// current complex.
TowerResult suspension_tower(const SimplicialComplex& base, const std::vector<VertexId>& steps);

} // namespace gee2

#endif

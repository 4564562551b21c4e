#ifndef GEE2_VERIFY_HPP
#define GEE2_VERIFY_HPP

#include <map>

#include "gee2/complex.hpp"

namespace gee2 {

enum class Field { GF2, Rational };
const char* field_name(Field f);

struct BettiProfile {
    Field field = Field::GF2;
    std::vector<long long> reduced_betti; // beta~_0 .. beta~_d

    bool is_sphere_profile(int d) const;
};

struct NormalityReport {
    bool pure = false;
    bool ridge_ok = false;          // every (d-1)-face in exactly two facets
    bool strongly_connected = false; // facet-adjacency graph connected
    bool links_connected = false;    // links of faces of codim >= 2 connected
    bool is_normal = false;
};

NormalityReport normality(const SimplicialComplex& k);
bool is_normal_pseudomanifold(const SimplicialComplex& k);

// Reduced Betti numbers from boundary-matrix ranks; exact arithmetic.
BettiProfile betti(const SimplicialComplex& k, Field f);

// True iff every face link (including the empty face) has the reduced
// homology of a sphere of the right dimension.
bool is_homology_sphere(const SimplicialComplex& k, Field f);

// True iff every vertex link is a homology sphere.
bool is_homology_manifold(const SimplicialComplex& k, Field f);

// g2 of the link of every face of codimension >= 3 (empty face included).
std::map<Simplex, long long> g2_of_all_links(const SimplicialComplex& k);

} // namespace gee2

#endif

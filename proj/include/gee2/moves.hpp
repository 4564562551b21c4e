#ifndef GEE2_MOVES_HPP
#define GEE2_MOVES_HPP

#include <optional>

#include <json.hpp>

#include "gee2/complex.hpp"

namespace gee2 {

enum class MoveKind {
    EdgeFlip,
    Bistellar1,
    BistellarDminus1,
    GenBistellar1,
    GenBistellarDminus1,
    EdgeContract,
    EdgeExpand,
    CentralRetri,
    InverseCentralRetri,
    OneVertexSuspension,
    Swartz,
    FacetSubdivision,
    ConnectedSum,
};

const char* move_kind_name(MoveKind k);
MoveKind move_kind_from_name(const std::string& name);

// A reversible description of one applied move. `params` is enough to
// re-apply the move to the pre-move complex, `inverse_params` enough to
// undo it on the post-move complex.
struct MoveRecord {
    MoveKind kind;
    nlohmann::json params;
    nlohmann::json inverse_params;
    long long g2_delta = 0;
};

struct MoveResult {
    SimplicialComplex complex;
    MoveRecord record;
};

// d = 3 only: replace st(ac) by bd * C(a,p,c,q); requires lk(ac) to be the
// 4-cycle C(b,p,d,q) and bd missing.
MoveResult edge_flip(const SimplicialComplex& k, const Simplex& ac, const Simplex& bd);

// lk(uv) = boundary of a (d-1)-simplex tau not in k; g2 drops by 1.
MoveResult bistellar_dminus1(const SimplicialComplex& k, const Simplex& uv);

// Inverse: tau a ridge in exactly the facets tau*u, tau*v with uv missing.
MoveResult bistellar_1(const SimplicialComplex& k, const Simplex& tau);

// lk(uv) = boundary of B where B = S^0{x,y} * tau, tau a (d-2)-simplex not
// in k; st(uv) replaced by boundary(uv) * B.
MoveResult gen_bistellar_dminus1(const SimplicialComplex& k, const Simplex& uv);

// Inverse pattern: lk(tau) is the 4-cycle C(x,u,y,v) with uv missing;
// st(tau) replaced by uv * ({x,y} * boundary(tau)).
MoveResult gen_bistellar_1(const SimplicialComplex& k, VertexId x, VertexId y, const Simplex& tau);

// Contract uv onto `survivor` (one of its endpoints); requires the link
// condition lk(u) & lk(v) = lk(uv) and at least d+3 vertices.
MoveResult edge_contract(const SimplicialComplex& k, const Simplex& uv,
                         std::optional<VertexId> survivor = std::nullopt);

// Split w along the (d-2)-sphere S inside lk(w) into an edge {u,v}.
// Fresh labels default to u = fresh, v = w. When `d1_facets` is given it
// pins which side of the split is coned by u.
MoveResult edge_expand(const SimplicialComplex& k, VertexId w,
                       const std::vector<Simplex>& s_facets,
                       std::optional<VertexId> u_label = std::nullopt,
                       std::optional<VertexId> v_label = std::nullopt,
                       const std::optional<std::vector<Simplex>>& d1_facets = std::nullopt);

// Replace the facets of the ball B by the cone apex * boundary(B).
MoveResult central_retriangulation(const SimplicialComplex& k,
                                   const std::vector<Simplex>& ball_facets, VertexId apex);

// lk(v) must be a stacked sphere whose stacked ball has no interior face in
// k; replaces st(v) by that ball.
MoveResult inverse_central_retriangulation(const SimplicialComplex& k, VertexId v);

// One-point suspension at v with new vertices x, y (label reuse of v allowed).
MoveResult one_vertex_suspension(const SimplicialComplex& k, VertexId v,
                                 std::optional<VertexId> x = std::nullopt,
                                 std::optional<VertexId> y = std::nullopt);

// Remove v, insert the missing facet tau of lk(v), cone the two resulting
// spheres (or insert a solid simplex where a side is a missing simplex
// boundary of k + tau).
MoveResult swartz_operation(const SimplicialComplex& k, VertexId v, const Simplex& tau);

MoveResult facet_subdivision(const SimplicialComplex& k, const Simplex& facet,
                             std::optional<VertexId> apex = std::nullopt);

// Glue k2 onto k1 along the facets f1 <-> f2 (bijection from f1 vertices to
// f2 vertices); remaining k2 vertices must not collide with k1.
MoveResult connected_sum(const SimplicialComplex& k1, const SimplicialComplex& k2,
                         const Simplex& f1, const Simplex& f2,
                         const std::unordered_map<VertexId, VertexId>& bijection);

// Replay the recorded move forward on the pre-move complex.
SimplicialComplex apply_recorded(const SimplicialComplex& k, const MoveRecord& rec);
// Undo the recorded move on the post-move complex.
SimplicialComplex undo_recorded(const SimplicialComplex& k, const MoveRecord& rec);

nlohmann::json move_record_to_json(const MoveRecord& rec);
MoveRecord move_record_from_json(const nlohmann::json& j);

// JSON helpers shared with classify / cli.
nlohmann::json simplex_to_json(const Simplex& s);
Simplex simplex_from_json(const nlohmann::json& j);
nlohmann::json simplices_to_json(const std::vector<Simplex>& v);
std::vector<Simplex> simplices_from_json(const nlohmann::json& j);

namespace detail {
// Split the pure complex `target` along the codimension-1 subcomplex S:
// facets adjacent iff they share a ridge not in S. Returns the facet lists
// of the two components (NotSeparating if the count differs from 2).
std::pair<std::vector<Simplex>, std::vector<Simplex>>
split_along(const SimplicialComplex& target, const std::vector<Simplex>& s_facets);

// Faces of the downward closure of `facets`.
std::unordered_set<Simplex, SimplexHash> closure(const std::vector<Simplex>& facets);

// Boundary of a pure complex given by facets: ridges lying in exactly one facet.
std::vector<Simplex> boundary_ridges(const std::vector<Simplex>& facets);
} // namespace detail

} // namespace gee2

#endif

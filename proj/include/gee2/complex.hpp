#ifndef GEE2_COMPLEX_HPP
#define GEE2_COMPLEX_HPP

#include <map>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gee2/simplex.hpp"

namespace gee2 {

// f-, h- and g-vectors of a pure complex. f is indexed so that f[0] = f_{-1} = 1,
// f[i+1] = f_i; h and g are indexed directly (h[i] = h_i, i = 0..d+1).
struct FHGVectors {
    std::vector<long long> f; // f_{-1}, f_0, ..., f_d
    std::vector<long long> h; // h_0, ..., h_{d+1}
    std::vector<long long> g; // g_0, ..., g_{d+1}

    long long f_at(int i) const { return f[static_cast<std::size_t>(i + 1)]; }
    long long g2() const { return g.size() > 2 ? g[2] : 0; }
};

// Downward closure of an arbitrary set of maximal faces; may be non-pure.
// Returned by induced-subcomplex queries.
class FaceSet {
public:
    FaceSet() = default;
    explicit FaceSet(std::vector<Simplex> maximal);

    const std::vector<Simplex>& maximal_faces() const { return maximal_; }
    int dim() const;
    bool is_pure() const;
    bool contains(const Simplex& s) const;
    std::vector<Simplex> faces(int i) const;
    // f_{-1}..f_dim
    std::vector<long long> f_vector() const;
    std::vector<VertexId> vertices() const;

private:
    std::vector<Simplex> maximal_;
};

// A pure simplicial complex stored by its facet set. Canonical form: every
// facet sorted, facet list sorted lexicographically. Immutable after
// construction; face enumeration per dimension is memoized.
class SimplicialComplex {
public:
    // The trivial complex {∅} (dimension -1).
    SimplicialComplex();

    static SimplicialComplex from_facets(const std::vector<std::vector<VertexId>>& facets);
    static SimplicialComplex from_simplices(std::vector<Simplex> facets);

    int dim() const { return dim_; }
    const std::vector<Simplex>& facets() const { return facets_; }
    std::size_t facet_count() const { return facets_.size(); }
    bool is_facet(const Simplex& s) const;

    const std::vector<VertexId>& vertices() const { return vertices_; }
    long long num_vertices() const { return static_cast<long long>(vertices_.size()); }
    bool has_vertex(VertexId v) const;
    VertexId fresh_vertex() const; // smallest unused nonnegative label

    // All i-faces of the downward closure, -1 <= i <= dim.
    const std::vector<Simplex>& faces(int i) const;
    long long face_count(int i) const { return static_cast<long long>(faces(i).size()); }
    long long total_face_count() const;
    bool contains(const Simplex& s) const;

    FHGVectors fhg() const;
    long long g2() const;
    long long g1() const { return num_vertices() - dim_ - 2; }

    SimplicialComplex link(const Simplex& s) const;
    SimplicialComplex star(const Simplex& s) const;
    FaceSet induced(const std::vector<VertexId>& verts) const;
    std::vector<Simplex> missing_faces(int i) const;
    bool is_prime() const;

    // 1-skeleton helpers.
    bool has_edge(VertexId a, VertexId b) const;
    std::vector<VertexId> neighbors(VertexId v) const;
    long long degree(VertexId v) const;

    bool operator==(const SimplicialComplex& other) const { return facets_ == other.facets_; }
    bool operator!=(const SimplicialComplex& other) const { return !(*this == other); }

    SimplicialComplex(const SimplicialComplex& other);
    SimplicialComplex& operator=(const SimplicialComplex& other);
    SimplicialComplex(SimplicialComplex&&) noexcept;
    SimplicialComplex& operator=(SimplicialComplex&&) noexcept;
    ~SimplicialComplex() = default;

private:
    std::vector<Simplex> facets_;
    std::vector<VertexId> vertices_;
    int dim_ = -1;

    mutable std::mutex memo_mu_;
    mutable std::map<int, std::vector<Simplex>> faces_memo_;

    void init_derived();
};

struct ComplexHash {
    std::size_t operator()(const SimplicialComplex& k) const {
        std::size_t h = 14695981039346656037ull;
        SimplexHash sh;
        for (const Simplex& f : k.facets()) h = h * 1099511628211ull ^ sh(f);
        return h;
    }
};

// Join of two complexes on disjoint vertex sets.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

// Copy of k with vertices renamed by `map` (must be injective on V(k)).
SimplicialComplex relabel(const SimplicialComplex& k,
                          const std::unordered_map<VertexId, VertexId>& map);

// Facet-preserving vertex bijection, if one exists. Backtracking with
// degree / link-f-vector pruning; complexes above `vertex_cap` vertices are
// rejected with ResourceBound.
std::optional<std::unordered_map<VertexId, VertexId>>
is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b, int vertex_cap = 64);

} // namespace gee2

#endif

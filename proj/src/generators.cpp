#include "gee2/generators.hpp"

#include <functional>
#include <numeric>
#include <random>

namespace gee2 {

SimplicialComplex boundary_sphere(int d) {
    if (d < 0) fail(Errc::DimensionOutOfRange, "sphere dimension must be nonnegative");
    std::vector<VertexId> all(static_cast<std::size_t>(d) + 2);
    std::iota(all.begin(), all.end(), 0);
    Simplex full = Simplex::unchecked(all);
    return SimplicialComplex::from_simplices(full.boundary_faces());
}

SimplicialComplex stacked_sphere(int d, int subdivision_count, std::uint64_t seed) {
    if (subdivision_count < 0) fail(Errc::Usage, "subdivision count must be nonnegative");
    SimplicialComplex k = boundary_sphere(d);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < subdivision_count; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, k.facet_count() - 1);
        const Simplex f = k.facets()[pick(rng)];
        k = facet_subdivision(k, f).complex;
    }
    return k;
}

SimplicialComplex join_spheres(const std::vector<int>& dims) {
    if (dims.empty()) fail(Errc::EmptyInput, "no factor dimensions");
    SimplicialComplex out = boundary_sphere(dims[0]);
    for (std::size_t i = 1; i < dims.size(); ++i) {
        SimplicialComplex factor = boundary_sphere(dims[i]);
        VertexId offset = out.vertices().back() + 1;
        std::unordered_map<VertexId, VertexId> shift;
        for (VertexId v : factor.vertices()) shift[v] = v + offset;
        out = join(out, relabel(factor, shift));
    }
    return out;
}

SimplicialComplex cross_polytope(int d) {
    if (d < 0) fail(Errc::DimensionOutOfRange, "dimension must be nonnegative");
    return join_spheres(std::vector<int>(static_cast<std::size_t>(d) + 1, 0));
}

SimplicialComplex cyclic_sphere(int n, int d) {
    if (n < d + 2) fail(Errc::Usage, "cyclic sphere needs at least d+2 vertices");
    // Gale evenness on positions 0..n-1: a (d+1)-subset U spans a facet iff
    // any two elements outside U are separated by an even number of elements
    // of U in the linear order.
    std::vector<Simplex> facets;
    std::vector<VertexId> cur;
    std::vector<char> in_u(static_cast<std::size_t>(n), 0);
    std::function<void(int)> rec = [&](int start) {
        if (cur.size() == static_cast<std::size_t>(d) + 1) {
            std::vector<int> prefix(static_cast<std::size_t>(n) + 1, 0);
            for (int i = 0; i < n; ++i)
                prefix[static_cast<std::size_t>(i) + 1] =
                    prefix[static_cast<std::size_t>(i)] + (in_u[static_cast<std::size_t>(i)] ? 1 : 0);
            std::vector<int> outside;
            for (int i = 0; i < n; ++i)
                if (!in_u[static_cast<std::size_t>(i)]) outside.push_back(i);
            for (std::size_t a = 0; a + 1 < outside.size(); ++a) {
                int i = outside[a], j = outside[a + 1];
                int between = prefix[static_cast<std::size_t>(j)] - prefix[static_cast<std::size_t>(i) + 1];
                if (between % 2 != 0) return;
            }
            facets.push_back(Simplex::unchecked(cur));
            return;
        }
        for (int t = start; t < n; ++t) {
            cur.push_back(t);
            in_u[static_cast<std::size_t>(t)] = 1;
            rec(t + 1);
            in_u[static_cast<std::size_t>(t)] = 0;
            cur.pop_back();
        }
    };
    rec(0);
    return SimplicialComplex::from_simplices(std::move(facets));
}

SimplicialComplex rp2_6() {
    return SimplicialComplex::from_facets({{1, 2, 3},
                                           {1, 3, 4},
                                           {1, 4, 5},
                                           {1, 5, 6},
                                           {1, 2, 6},
                                           {2, 3, 5},
                                           {3, 4, 6},
                                           {2, 4, 5},
                                           {3, 5, 6},
                                           {2, 4, 6}});
}

SimplicialComplex rp2_7() {
    // Base K4 on {0,1,2,3}; vertices 4,5,6 cone the three 4-cycles.
    return SimplicialComplex::from_facets({{4, 0, 2}, {4, 2, 1}, {4, 1, 3}, {4, 3, 0},
                                           {5, 0, 1}, {5, 1, 2}, {5, 2, 3}, {5, 3, 0},
                                           {6, 3, 2}, {6, 2, 0}, {6, 0, 1}, {6, 1, 3}});
}

TowerResult suspension_tower(const SimplicialComplex& base, const std::vector<VertexId>& steps) {
    TowerResult out{base, {}};
    for (VertexId v : steps) {
        MoveResult m = one_vertex_suspension(out.complex, v);
        out.complex = std::move(m.complex);
        out.steps.push_back(std::move(m.record));
    }
    return out;
}

} // namespace gee2

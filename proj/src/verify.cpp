#include "gee2/verify.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>

namespace gee2 {

const char* field_name(Field f) { return f == Field::GF2 ? "GF2" : "Q"; }

bool BettiProfile::is_sphere_profile(int d) const {
    for (int i = 0; i < static_cast<int>(reduced_betti.size()); ++i) {
        long long want = (i == d) ? 1 : 0;
        if (reduced_betti[static_cast<std::size_t>(i)] != want) return false;
    }
    return static_cast<int>(reduced_betti.size()) == d + 1;
}

namespace {

// Rank of the boundary matrix d_i : C_i -> C_{i-1} over GF(2).
// Rows indexed by i-faces, columns by (i-1)-faces, bit-packed.
long long rank_gf2(const std::vector<Simplex>& rows, const std::vector<Simplex>& cols) {
    if (rows.empty() || cols.empty()) return 0;
    std::map<Simplex, std::size_t> colidx;
    for (std::size_t j = 0; j < cols.size(); ++j) colidx.emplace(cols[j], j);
    const std::size_t words = (cols.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> m(rows.size(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (const Simplex& b : rows[r].boundary_faces()) {
            std::size_t j = colidx.at(b);
            m[r][j / 64] ^= (1ull << (j % 64));
        }
    }
    long long rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols.size() && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && !((m[piv][col / 64] >> (col % 64)) & 1)) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r != row && ((m[r][col / 64] >> (col % 64)) & 1)) {
                for (std::size_t w = 0; w < words; ++w) m[r][w] ^= m[row][w];
            }
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Rank over the rationals, fraction-exact Gaussian elimination.
long long rank_q(const std::vector<Simplex>& rows, const std::vector<Simplex>& cols) {
    if (rows.empty() || cols.empty()) return 0;
    std::map<Simplex, std::size_t> colidx;
    for (std::size_t j = 0; j < cols.size(); ++j) colidx.emplace(cols[j], j);
    std::vector<std::vector<mpq_class>> m(rows.size(), std::vector<mpq_class>(cols.size(), 0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Simplex& s = rows[r];
        // d(v_0...v_i) = sum_j (-1)^j (v_0...v^_j...v_i); face j drops v_j,
        // and boundary_faces() returns faces in drop-index order.
        auto faces = s.boundary_faces();
        for (std::size_t j = 0; j < faces.size(); ++j) {
            m[r][colidx.at(faces[j])] = (j % 2 == 0) ? 1 : -1;
        }
    }
    long long rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols.size() && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        for (std::size_t r = row + 1; r < m.size(); ++r) {
            if (m[r][col] == 0) continue;
            mpq_class factor = m[r][col] / m[row][col];
            for (std::size_t c = col; c < cols.size(); ++c) m[r][c] -= factor * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

long long boundary_rank(const SimplicialComplex& k, int i, Field f) {
    if (i < 0 || i > k.dim()) return 0;
    const auto& rows = k.faces(i);
    const auto& cols = k.faces(i - 1);
    if (i == 0) return rows.empty() ? 0 : 1; // augmentation map
    return f == Field::GF2 ? rank_gf2(rows, cols) : rank_q(rows, cols);
}

} // namespace

BettiProfile betti(const SimplicialComplex& k, Field f) {
    BettiProfile out;
    out.field = f;
    const int d = k.dim();
    if (d < 0) return out;
    std::vector<long long> rk(static_cast<std::size_t>(d) + 2, 0);
    for (int i = 0; i <= d; ++i) rk[static_cast<std::size_t>(i)] = boundary_rank(k, i, f);
    for (int i = 0; i <= d; ++i) {
        long long b = k.face_count(i) - rk[static_cast<std::size_t>(i)] - rk[static_cast<std::size_t>(i) + 1];
        out.reduced_betti.push_back(b);
    }
    return out;
}

NormalityReport normality(const SimplicialComplex& k) {
    NormalityReport rep;
    rep.pure = k.dim() >= 0; // construction enforces purity
    const int d = k.dim();
    if (d < 0) return rep;

    // ridge condition
    std::unordered_map<Simplex, int, SimplexHash> ridge_count;
    for (const Simplex& f : k.facets())
        for (const Simplex& r : f.boundary_faces()) ridge_count[r]++;
    rep.ridge_ok = true;
    for (auto& [r, c] : ridge_count)
        if (c != 2) { rep.ridge_ok = false; break; }
    if (d == 0) rep.ridge_ok = (k.facet_count() == 2);

    // strong connectivity on the facet-adjacency graph
    {
        std::unordered_map<Simplex, std::vector<std::size_t>, SimplexHash> by_ridge;
        for (std::size_t i = 0; i < k.facet_count(); ++i)
            for (const Simplex& r : k.facets()[i].boundary_faces()) by_ridge[r].push_back(i);
        std::vector<char> seen(k.facet_count(), 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (const Simplex& r : k.facets()[i].boundary_faces()) {
                for (std::size_t j : by_ridge[r]) {
                    if (!seen[j]) {
                        seen[j] = 1;
                        ++reached;
                        stack.push_back(j);
                    }
                }
            }
        }
        rep.strongly_connected = (reached == k.facet_count());
    }

    // connectivity of links of faces of codimension >= 2 (empty face included)
    auto connected = [](const SimplicialComplex& c) {
        if (c.num_vertices() <= 1) return true;
        if (c.dim() < 1) return false;
        std::unordered_map<VertexId, std::vector<VertexId>> adj;
        for (const Simplex& e : c.faces(1)) {
            adj[e[0]].push_back(e[1]);
            adj[e[1]].push_back(e[0]);
        }
        std::unordered_set<VertexId> seen{c.vertices()[0]};
        std::vector<VertexId> stack{c.vertices()[0]};
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : adj[v])
                if (seen.insert(w).second) stack.push_back(w);
        }
        return seen.size() == c.vertices().size();
    };
    rep.links_connected = true;
    for (int i = -1; i <= d - 2 && rep.links_connected; ++i) {
        for (const Simplex& s : k.faces(i)) {
            if (!connected(k.link(s))) {
                rep.links_connected = false;
                break;
            }
        }
    }

    rep.is_normal = rep.pure && rep.ridge_ok && rep.strongly_connected && rep.links_connected;
    return rep;
}

bool is_normal_pseudomanifold(const SimplicialComplex& k) { return normality(k).is_normal; }

bool is_homology_sphere(const SimplicialComplex& k, Field f) {
    const int d = k.dim();
    if (d < 0) return false;
    if (k.total_face_count() > (1ll << 20))
        fail(Errc::ResourceBound, "complex exceeds 2^20 faces");
    for (int i = -1; i <= d - 1; ++i) {
        for (const Simplex& s : k.faces(i)) {
            SimplicialComplex lk = (i == -1) ? k : k.link(s);
            if (!betti(lk, f).is_sphere_profile(lk.dim())) return false;
        }
    }
    return true;
}

bool is_homology_manifold(const SimplicialComplex& k, Field f) {
    for (VertexId v : k.vertices()) {
        if (!is_homology_sphere(k.link(Simplex{{v}}), f)) return false;
    }
    return k.dim() >= 0;
}

std::map<Simplex, long long> g2_of_all_links(const SimplicialComplex& k) {
    if (k.dim() < 3) fail(Errc::NotNormal, "dimension must be at least 3");
    if (!is_normal_pseudomanifold(k)) fail(Errc::NotNormal, "not a normal pseudomanifold");
    std::map<Simplex, long long> out;
    for (int i = -1; i <= k.dim() - 3; ++i)
        for (const Simplex& s : k.faces(i))
            out.emplace(s, (i == -1) ? k.g2() : k.link(s).g2());
    return out;
}

} // namespace gee2

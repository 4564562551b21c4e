#include "gee2/complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace gee2 {

namespace {

// All (i+1)-subsets of each input simplex, deduplicated and sorted.
std::vector<Simplex> subsets_of_dim(const std::vector<Simplex>& sims, int i) {
    std::unordered_set<Simplex, SimplexHash> seen;
    std::vector<Simplex> out;
    if (i < -1) return out;
    if (i == -1) {
        out.push_back(Simplex{});
        return out;
    }
    const std::size_t k = static_cast<std::size_t>(i) + 1;
    std::vector<VertexId> cur(k);
    for (const Simplex& s : sims) {
        if (s.size() < k) continue;
        const auto& v = s.vertices();
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            for (std::size_t j = 0; j < k; ++j) cur[j] = v[idx[j]];
            Simplex f = Simplex::unchecked(cur);
            if (seen.insert(f).second) out.push_back(std::move(f));
            // next combination
            std::size_t j = k;
            while (j > 0) {
                --j;
                if (idx[j] != j + v.size() - k) break;
                if (j == 0) { j = k; break; }
            }
            if (j == k) break;
            ++idx[j];
            for (std::size_t l = j + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Simplex> canonicalize_facets(std::vector<Simplex> facets) {
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    return facets;
}

} // namespace

// ---------------------------------------------------------------- FaceSet

FaceSet::FaceSet(std::vector<Simplex> maximal) {
    maximal = canonicalize_facets(std::move(maximal));
    // drop faces contained in another
    std::vector<Simplex> keep;
    for (std::size_t i = 0; i < maximal.size(); ++i) {
        bool contained = false;
        for (std::size_t j = 0; j < maximal.size() && !contained; ++j) {
            if (i != j && maximal[j].size() > maximal[i].size() && maximal[j].contains_all(maximal[i]))
                contained = true;
        }
        if (!contained) keep.push_back(maximal[i]);
    }
    maximal_ = std::move(keep);
}

int FaceSet::dim() const {
    int d = -1;
    for (const Simplex& s : maximal_) d = std::max(d, s.dim());
    return d;
}

bool FaceSet::is_pure() const {
    for (const Simplex& s : maximal_)
        if (s.dim() != dim()) return false;
    return true;
}

bool FaceSet::contains(const Simplex& s) const {
    for (const Simplex& m : maximal_)
        if (m.contains_all(s)) return true;
    return false;
}

std::vector<Simplex> FaceSet::faces(int i) const { return subsets_of_dim(maximal_, i); }

std::vector<long long> FaceSet::f_vector() const {
    std::vector<long long> f;
    const int d = dim();
    f.push_back(1); // f_{-1}
    for (int i = 0; i <= d; ++i) f.push_back(static_cast<long long>(faces(i).size()));
    return f;
}

std::vector<VertexId> FaceSet::vertices() const {
    std::unordered_set<VertexId> seen;
    std::vector<VertexId> out;
    for (const Simplex& s : maximal_)
        for (VertexId v : s)
            if (seen.insert(v).second) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

// ------------------------------------------------------- SimplicialComplex

SimplicialComplex::SimplicialComplex() {
    facets_.push_back(Simplex{});
    init_derived();
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<VertexId>>& facets) {
    std::vector<Simplex> sims;
    sims.reserve(facets.size());
    for (const auto& f : facets) sims.emplace_back(f);
    return from_simplices(std::move(sims));
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> facets) {
    if (facets.empty()) fail(Errc::EmptyInput, "no facets given");
    facets = canonicalize_facets(std::move(facets));
    const int d = facets.front().dim();
    for (const Simplex& f : facets) {
        if (f.dim() != d)
            fail(Errc::NonPure, "facet " + f.str() + " has dimension " + std::to_string(f.dim()) +
                                    ", expected " + std::to_string(d));
    }
    SimplicialComplex k;
    k.facets_ = std::move(facets);
    k.init_derived();
    return k;
}

void SimplicialComplex::init_derived() {
    dim_ = facets_.empty() ? -1 : facets_.front().dim();
    std::unordered_set<VertexId> seen;
    vertices_.clear();
    for (const Simplex& f : facets_)
        for (VertexId v : f)
            if (seen.insert(v).second) vertices_.push_back(v);
    std::sort(vertices_.begin(), vertices_.end());
    faces_memo_.clear();
}

SimplicialComplex::SimplicialComplex(const SimplicialComplex& other)
    : facets_(other.facets_), vertices_(other.vertices_), dim_(other.dim_) {}

SimplicialComplex& SimplicialComplex::operator=(const SimplicialComplex& other) {
    if (this != &other) {
        facets_ = other.facets_;
        vertices_ = other.vertices_;
        dim_ = other.dim_;
        std::lock_guard<std::mutex> lock(memo_mu_);
        faces_memo_.clear();
    }
    return *this;
}

SimplicialComplex::SimplicialComplex(SimplicialComplex&& other) noexcept
    : facets_(std::move(other.facets_)), vertices_(std::move(other.vertices_)), dim_(other.dim_) {}

SimplicialComplex& SimplicialComplex::operator=(SimplicialComplex&& other) noexcept {
    if (this != &other) {
        facets_ = std::move(other.facets_);
        vertices_ = std::move(other.vertices_);
        dim_ = other.dim_;
        std::lock_guard<std::mutex> lock(memo_mu_);
        faces_memo_.clear();
    }
    return *this;
}

bool SimplicialComplex::is_facet(const Simplex& s) const {
    return std::binary_search(facets_.begin(), facets_.end(), s);
}

bool SimplicialComplex::has_vertex(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

VertexId SimplicialComplex::fresh_vertex() const {
    VertexId c = 0;
    for (VertexId v : vertices_) {
        if (v > c) break;
        c = v + 1;
    }
    return c;
}

const std::vector<Simplex>& SimplicialComplex::faces(int i) const {
    if (i < -1 || i > dim_)
        fail(Errc::DimensionOutOfRange,
             "face dimension " + std::to_string(i) + " outside [-1," + std::to_string(dim_) + "]");
    std::lock_guard<std::mutex> lock(memo_mu_);
    auto it = faces_memo_.find(i);
    if (it != faces_memo_.end()) return it->second;
    auto [ins, ok] = faces_memo_.emplace(i, subsets_of_dim(facets_, i));
    return ins->second;
}

long long SimplicialComplex::total_face_count() const {
    long long t = 0;
    for (int i = -1; i <= dim_; ++i) t += face_count(i);
    return t;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    for (const Simplex& f : facets_)
        if (f.contains_all(s)) return true;
    return false;
}

FHGVectors SimplicialComplex::fhg() const {
    FHGVectors out;
    const int d = dim_;
    out.f.push_back(1);
    for (int i = 0; i <= d; ++i) out.f.push_back(face_count(i));
    out.h.assign(static_cast<std::size_t>(d) + 2, 0);
    for (int i = 0; i <= d + 1; ++i) {
        long long h = 0;
        for (int j = 0; j <= i; ++j) {
            long long term = binom(d + 1 - j, i - j) * out.f_at(j - 1);
            h += ((i - j) % 2 == 0) ? term : -term;
        }
        out.h[static_cast<std::size_t>(i)] = h;
    }
    out.g.assign(static_cast<std::size_t>(d) + 2, 0);
    out.g[0] = out.h[0];
    for (int i = 1; i <= d + 1; ++i)
        out.g[static_cast<std::size_t>(i)] = out.h[static_cast<std::size_t>(i)] - out.h[static_cast<std::size_t>(i - 1)];
    return out;
}

long long SimplicialComplex::g2() const {
    if (dim_ < 1) return 0;
    return face_count(1) - (dim_ + 1) * face_count(0) + binom(dim_ + 2, 2);
}

SimplicialComplex SimplicialComplex::link(const Simplex& s) const {
    if (!contains(s)) fail(Errc::FaceNotPresent, "link of absent face " + s.str());
    std::vector<Simplex> lk;
    for (const Simplex& f : facets_)
        if (f.contains_all(s)) lk.push_back(f.minus(s));
    return from_simplices(std::move(lk));
}

SimplicialComplex SimplicialComplex::star(const Simplex& s) const {
    if (!contains(s)) fail(Errc::FaceNotPresent, "star of absent face " + s.str());
    std::vector<Simplex> st;
    for (const Simplex& f : facets_)
        if (f.contains_all(s)) st.push_back(f);
    return from_simplices(std::move(st));
}

FaceSet SimplicialComplex::induced(const std::vector<VertexId>& verts) const {
    Simplex vs{std::vector<VertexId>(verts)};
    for (VertexId v : vs)
        if (!has_vertex(v)) fail(Errc::UnknownVertex, "vertex " + std::to_string(v));
    std::vector<Simplex> maximal;
    maximal.reserve(facets_.size());
    for (const Simplex& f : facets_) maximal.push_back(f.intersect(vs));
    return FaceSet(std::move(maximal));
}

std::vector<Simplex> SimplicialComplex::missing_faces(int i) const {
    std::vector<Simplex> out;
    if (i < 1 || i > dim_ + 1) return out;
    // Candidates are (i+1)-cliques of the 1-skeleton; check all proper faces.
    const std::size_t k = static_cast<std::size_t>(i) + 1;
    std::vector<VertexId> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == k) {
            Simplex cand = Simplex::unchecked(cur);
            if (contains(cand)) return;
            for (const Simplex& b : cand.boundary_faces())
                if (!contains(b)) return;
            out.push_back(cand);
            return;
        }
        for (std::size_t t = start; t < vertices_.size(); ++t) {
            VertexId v = vertices_[t];
            bool adj = true;
            for (VertexId u : cur)
                if (!has_edge(u, v)) { adj = false; break; }
            if (!adj) continue;
            cur.push_back(v);
            rec(t + 1);
            cur.pop_back();
        }
    };
    if (dim_ >= 1) rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

bool SimplicialComplex::is_prime() const { return missing_faces(dim_).empty(); }

bool SimplicialComplex::has_edge(VertexId a, VertexId b) const {
    if (a == b) return false;
    if (dim_ < 1) return false;
    Simplex e = a < b ? Simplex::unchecked({a, b}) : Simplex::unchecked({b, a});
    const auto& es = faces(1);
    return std::binary_search(es.begin(), es.end(), e);
}

std::vector<VertexId> SimplicialComplex::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (const Simplex& e : faces(1)) {
        if (e[0] == v) out.push_back(e[1]);
        else if (e[1] == v) out.push_back(e[0]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long SimplicialComplex::degree(VertexId v) const {
    long long d = 0;
    for (const Simplex& e : faces(1))
        if (e[0] == v || e[1] == v) ++d;
    return d;
}

// ------------------------------------------------------------- free functions

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    for (VertexId v : a.vertices())
        if (b.has_vertex(v)) fail(Errc::VertexOverlap, "shared vertex " + std::to_string(v));
    std::vector<Simplex> facets;
    facets.reserve(a.facet_count() * b.facet_count());
    for (const Simplex& fa : a.facets())
        for (const Simplex& fb : b.facets()) facets.push_back(fa.unite(fb));
    return SimplicialComplex::from_simplices(std::move(facets));
}

SimplicialComplex relabel(const SimplicialComplex& k,
                          const std::unordered_map<VertexId, VertexId>& map) {
    std::vector<Simplex> facets;
    facets.reserve(k.facet_count());
    for (const Simplex& f : k.facets()) {
        std::vector<VertexId> nf;
        nf.reserve(f.size());
        for (VertexId v : f) {
            auto it = map.find(v);
            nf.push_back(it == map.end() ? v : it->second);
        }
        facets.emplace_back(std::move(nf));
    }
    return SimplicialComplex::from_simplices(std::move(facets));
}

namespace {

// Per-vertex invariant used to prune the isomorphism search.
struct VertexClass {
    long long degree;
    std::vector<long long> link_f;
    auto operator<=>(const VertexClass&) const = default;
};

std::map<VertexId, VertexClass> vertex_classes(const SimplicialComplex& k) {
    std::map<VertexId, VertexClass> out;
    for (VertexId v : k.vertices()) {
        VertexClass c;
        c.degree = k.degree(v);
        SimplicialComplex lk = k.link(Simplex{{v}});
        if (lk.dim() >= 0)
            for (int i = 0; i <= lk.dim(); ++i) c.link_f.push_back(lk.face_count(i));
        out.emplace(v, std::move(c));
    }
    return out;
}

} // namespace

std::optional<std::unordered_map<VertexId, VertexId>>
is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b, int vertex_cap) {
    if (a.num_vertices() > vertex_cap || b.num_vertices() > vertex_cap)
        fail(Errc::ResourceBound, "isomorphism search capped at " + std::to_string(vertex_cap) + " vertices");
    if (a.dim() != b.dim() || a.num_vertices() != b.num_vertices() || a.facet_count() != b.facet_count())
        return std::nullopt;
    for (int i = 0; i <= a.dim(); ++i)
        if (a.face_count(i) != b.face_count(i)) return std::nullopt;

    auto ca = vertex_classes(a);
    auto cb = vertex_classes(b);
    {
        std::vector<VertexClass> la, lb;
        for (auto& [v, c] : ca) la.push_back(c);
        for (auto& [v, c] : cb) lb.push_back(c);
        std::sort(la.begin(), la.end());
        std::sort(lb.begin(), lb.end());
        if (la != lb) return std::nullopt;
    }

    std::vector<VertexId> order(a.vertices());
    // Most constrained (rarest class) first.
    std::map<VertexClass, int> freq;
    for (auto& [v, c] : ca) freq[c]++;
    std::stable_sort(order.begin(), order.end(), [&](VertexId x, VertexId y) {
        return freq[ca[x]] < freq[ca[y]];
    });

    std::unordered_set<Simplex, SimplexHash> bfacets(b.facets().begin(), b.facets().end());
    std::unordered_map<VertexId, VertexId> img;
    std::unordered_set<VertexId> used;

    std::function<bool(std::size_t)> rec = [&](std::size_t pos) -> bool {
        if (pos == order.size()) {
            for (const Simplex& f : a.facets()) {
                std::vector<VertexId> m;
                m.reserve(f.size());
                for (VertexId v : f) m.push_back(img[v]);
                if (!bfacets.count(Simplex(std::move(m)))) return false;
            }
            return true;
        }
        VertexId v = order[pos];
        for (VertexId w : b.vertices()) {
            if (used.count(w) || !(ca[v] == cb[w])) continue;
            bool ok = true;
            for (std::size_t j = 0; j < pos && ok; ++j) {
                VertexId u = order[j];
                if (a.has_edge(v, u) != b.has_edge(w, img[u])) ok = false;
            }
            if (!ok) continue;
            img[v] = w;
            used.insert(w);
            // facets fully mapped so far must exist in b
            bool facets_ok = true;
            for (const Simplex& f : a.facets()) {
                if (!f.contains(v)) continue;
                std::vector<VertexId> m;
                bool full = true;
                for (VertexId x : f) {
                    auto it = img.find(x);
                    if (it == img.end()) { full = false; break; }
                    m.push_back(it->second);
                }
                if (full && !bfacets.count(Simplex(std::move(m)))) { facets_ok = false; break; }
            }
            if (facets_ok && rec(pos + 1)) return true;
            img.erase(v);
            used.erase(w);
        }
        return false;
    };

    if (rec(0)) return img;
    return std::nullopt;
}

} // namespace gee2

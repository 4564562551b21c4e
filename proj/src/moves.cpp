#include "gee2/moves.hpp"

#include <algorithm>

#include "gee2/verify.hpp"

namespace gee2 {

using nlohmann::json;

const char* move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::EdgeFlip: return "EdgeFlip";
        case MoveKind::Bistellar1: return "Bistellar1";
        case MoveKind::BistellarDminus1: return "BistellarDminus1";
        case MoveKind::GenBistellar1: return "GenBistellar1";
        case MoveKind::GenBistellarDminus1: return "GenBistellarDminus1";
        case MoveKind::EdgeContract: return "EdgeContract";
        case MoveKind::EdgeExpand: return "EdgeExpand";
        case MoveKind::CentralRetri: return "CentralRetri";
        case MoveKind::InverseCentralRetri: return "InverseCentralRetri";
        case MoveKind::OneVertexSuspension: return "OneVertexSuspension";
        case MoveKind::Swartz: return "Swartz";
        case MoveKind::FacetSubdivision: return "FacetSubdivision";
        case MoveKind::ConnectedSum: return "ConnectedSum";
    }
    return "Unknown";
}

MoveKind move_kind_from_name(const std::string& name) {
    static const std::pair<const char*, MoveKind> table[] = {
        {"EdgeFlip", MoveKind::EdgeFlip},
        {"Bistellar1", MoveKind::Bistellar1},
        {"BistellarDminus1", MoveKind::BistellarDminus1},
        {"GenBistellar1", MoveKind::GenBistellar1},
        {"GenBistellarDminus1", MoveKind::GenBistellarDminus1},
        {"EdgeContract", MoveKind::EdgeContract},
        {"EdgeExpand", MoveKind::EdgeExpand},
        {"CentralRetri", MoveKind::CentralRetri},
        {"InverseCentralRetri", MoveKind::InverseCentralRetri},
        {"OneVertexSuspension", MoveKind::OneVertexSuspension},
        {"Swartz", MoveKind::Swartz},
        {"FacetSubdivision", MoveKind::FacetSubdivision},
        {"ConnectedSum", MoveKind::ConnectedSum},
    };
    for (auto& [n, k] : table)
        if (name == n) return k;
    fail(Errc::Usage, "unknown move kind '" + name + "'");
}

json simplex_to_json(const Simplex& s) {
    json a = json::array();
    for (VertexId v : s) a.push_back(v);
    return a;
}

Simplex simplex_from_json(const json& j) {
    std::vector<VertexId> v;
    for (const auto& x : j) v.push_back(x.get<VertexId>());
    return Simplex(std::move(v));
}

json simplices_to_json(const std::vector<Simplex>& v) {
    json a = json::array();
    for (const Simplex& s : v) a.push_back(simplex_to_json(s));
    return a;
}

std::vector<Simplex> simplices_from_json(const json& j) {
    std::vector<Simplex> out;
    for (const auto& x : j) out.push_back(simplex_from_json(x));
    return out;
}

json move_record_to_json(const MoveRecord& rec) {
    return json{{"kind", move_kind_name(rec.kind)},
                {"params", rec.params},
                {"inverse_params", rec.inverse_params},
                {"g2_delta", rec.g2_delta}};
}

MoveRecord move_record_from_json(const json& j) {
    MoveRecord rec;
    rec.kind = move_kind_from_name(j.at("kind").get<std::string>());
    rec.params = j.at("params");
    rec.inverse_params = j.at("inverse_params");
    rec.g2_delta = j.at("g2_delta").get<long long>();
    return rec;
}

namespace detail {

std::unordered_set<Simplex, SimplexHash> closure(const std::vector<Simplex>& facets) {
    std::unordered_set<Simplex, SimplexHash> out;
    std::vector<Simplex> stack(facets.begin(), facets.end());
    while (!stack.empty()) {
        Simplex s = std::move(stack.back());
        stack.pop_back();
        if (!out.insert(s).second) continue;
        for (Simplex& b : s.boundary_faces())
            if (!out.count(b)) stack.push_back(std::move(b));
    }
    out.insert(Simplex{});
    return out;
}

std::vector<Simplex> boundary_ridges(const std::vector<Simplex>& facets) {
    std::unordered_map<Simplex, int, SimplexHash> count;
    for (const Simplex& f : facets)
        for (const Simplex& r : f.boundary_faces()) count[r]++;
    std::vector<Simplex> out;
    for (auto& [r, c] : count)
        if (c == 1) out.push_back(r);
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<std::vector<Simplex>, std::vector<Simplex>>
split_along(const SimplicialComplex& target, const std::vector<Simplex>& s_facets) {
    auto s_closure = closure(s_facets);
    const auto& fs = target.facets();
    std::unordered_map<Simplex, std::vector<std::size_t>, SimplexHash> by_ridge;
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (const Simplex& r : fs[i].boundary_faces())
            if (!s_closure.count(r)) by_ridge[r].push_back(i);
    std::vector<int> comp(fs.size(), -1);
    int ncomp = 0;
    for (std::size_t seed = 0; seed < fs.size(); ++seed) {
        if (comp[seed] != -1) continue;
        std::vector<std::size_t> stack{seed};
        comp[seed] = ncomp;
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (const Simplex& r : fs[i].boundary_faces()) {
                auto it = by_ridge.find(r);
                if (it == by_ridge.end()) continue;
                for (std::size_t j : it->second) {
                    if (comp[j] == -1) {
                        comp[j] = ncomp;
                        stack.push_back(j);
                    }
                }
            }
        }
        ++ncomp;
    }
    if (ncomp != 2)
        fail(Errc::NotSeparating, "split produced " + std::to_string(ncomp) + " components");
    std::vector<Simplex> c0, c1;
    for (std::size_t i = 0; i < fs.size(); ++i)
        (comp[i] == comp[0] ? c0 : c1).push_back(fs[i]);
    return {std::move(c0), std::move(c1)};
}

// Greedy reverse-subdivision witness; nullopt if the complex is not a
// stacked sphere. Works on any dimension >= 1.
std::optional<std::vector<VertexId>> stacked_removal_order(const SimplicialComplex& k) {
    const int d = k.dim();
    if (d < 1) return std::nullopt;
    if (d >= 3 && k.g2() != 0) return std::nullopt;
    auto is_boundary_simplex = [&](const SimplicialComplex& c) {
        return c.num_vertices() == c.dim() + 2 &&
               static_cast<long long>(c.facet_count()) == c.dim() + 2;
    };
    SimplicialComplex work = k;
    std::vector<VertexId> order;
    while (true) {
        if (is_boundary_simplex(work)) return order;
        bool moved = false;
        for (VertexId v : work.vertices()) {
            if (work.degree(v) != d + 1) continue;
            SimplicialComplex lk = work.link(Simplex{{v}});
            if (!is_boundary_simplex(lk)) continue;
            Simplex sigma = Simplex::unchecked(lk.vertices());
            if (work.contains(sigma)) continue;
            std::vector<Simplex> nf;
            for (const Simplex& f : work.facets())
                if (!f.contains(v)) nf.push_back(f);
            nf.push_back(sigma);
            work = SimplicialComplex::from_simplices(std::move(nf));
            order.push_back(v);
            moved = true;
            break;
        }
        if (!moved) return std::nullopt;
    }
}

} // namespace detail

namespace {

MoveRecord make_record(MoveKind kind, json params, json inverse, const SimplicialComplex& before,
                       const SimplicialComplex& after) {
    MoveRecord rec;
    rec.kind = kind;
    rec.params = std::move(params);
    rec.inverse_params = std::move(inverse);
    rec.g2_delta = after.g2() - before.g2();
    return rec;
}

// Link must be a single cycle with exactly four vertices.
bool is_four_cycle(const SimplicialComplex& L) {
    if (L.dim() != 1 || L.num_vertices() != 4 || L.facet_count() != 4) return false;
    for (VertexId v : L.vertices())
        if (L.degree(v) != 2) return false;
    return true;
}

bool is_boundary_of_simplex(const SimplicialComplex& c) {
    return c.dim() >= 0 && c.num_vertices() == c.dim() + 2 &&
           static_cast<long long>(c.facet_count()) == c.dim() + 2;
}

VertexId fresh_after(const SimplicialComplex& k, const std::vector<VertexId>& taken) {
    VertexId c = 0;
    while (k.has_vertex(c) || std::find(taken.begin(), taken.end(), c) != taken.end()) ++c;
    return c;
}

} // namespace

MoveResult edge_flip(const SimplicialComplex& k, const Simplex& ac, const Simplex& bd) {
    if (k.dim() != 3) fail(Errc::NotDimension3, "edge flips are defined for dimension 3");
    if (ac.dim() != 1 || bd.dim() != 1) fail(Errc::PatternMismatch, "parameters must be edges");
    if (!k.contains(ac)) fail(Errc::FaceNotPresent, "edge " + ac.str());
    SimplicialComplex L = k.link(ac);
    if (!is_four_cycle(L)) fail(Errc::LinkNotQuadrilateral, "lk " + ac.str() + " is not a 4-cycle");
    VertexId b = bd[0], d = bd[1];
    if (!L.has_vertex(b) || !L.has_vertex(d) || L.has_edge(b, d))
        fail(Errc::PatternMismatch, bd.str() + " is not an antipodal pair of lk " + ac.str());
    if (k.contains(bd)) fail(Errc::EdgeNotMissing, bd.str() + " already present");
    std::vector<VertexId> pq;
    for (VertexId v : L.vertices())
        if (v != b && v != d) pq.push_back(v);
    VertexId a = ac[0], c = ac[1], p = pq[0], q = pq[1];
    std::vector<Simplex> nf;
    for (const Simplex& f : k.facets())
        if (!f.contains_all(ac)) nf.push_back(f);
    for (auto [x, y] : {std::pair{a, p}, {p, c}, {c, q}, {q, a}})
        nf.push_back(bd.unite(Simplex{{x, y}}));
    SimplicialComplex out = SimplicialComplex::from_simplices(std::move(nf));
    MoveRecord rec = make_record(MoveKind::EdgeFlip,
                                 json{{"edge", simplex_to_json(ac)}, {"missing", simplex_to_json(bd)}},
                                 json{{"edge", simplex_to_json(bd)}, {"missing", simplex_to_json(ac)}},
                                 k, out);
    return {std::move(out), std::move(rec)};
}

MoveResult bistellar_dminus1(const SimplicialComplex& k, const Simplex& uv) {
    const int d = k.dim();
    if (uv.dim() != 1) fail(Errc::PatternMismatch, "parameter must be an edge");
    if (!k.contains(uv)) fail(Errc::FaceNotPresent, "edge " + uv.str());
    SimplicialComplex L = k.link(uv);
    if (!is_boundary_of_simplex(L) || L.dim() != d - 2)
        fail(Errc::LinkNotBoundaryOfSimplex, "lk " + uv.str() + " is not the boundary of a (d-1)-simplex");
    Simplex tau = Simplex::unchecked(L.vertices());
    if (k.contains(tau)) fail(Errc::TauPresent, tau.str() + " already present");
    std::vector<Simplex> nf;
    for (const Simplex& f : k.facets())
        if (!f.contains_all(uv)) nf.push_back(f);
    nf.push_back(tau.plus(uv[0]));
    nf.push_back(tau.plus(uv[1]));
    SimplicialComplex out = SimplicialComplex::from_simplices(std::move(nf));
    MoveRecord rec = make_record(MoveKind::BistellarDminus1, json{{"edge", simplex_to_json(uv)}},
                                 json{{"ridge", simplex_to_json(tau)}}, k, out);
    return {std::move(out), std::move(rec)};
}

MoveResult bistellar_1(const SimplicialComplex& k, const Simplex& tau) {
    const int d = k.dim();
    if (tau.dim() != d - 1) fail(Errc::PatternMismatch, "parameter must be a ridge");
    if (!k.contains(tau)) fail(Errc::FaceNotPresent, "ridge " + tau.str());
    std::vector<VertexId> apexes;
    for (const Simplex& f : k.facets())
        if (f.contains_all(tau)) apexes.push_back(f.minus(tau)[0]);
    if (apexes.size() != 2)
        fail(Errc::RidgeNotInterior, tau.str() + " lies in " + std::to_string(apexes.size()) + " facets");
    Simplex uv{{apexes[0], apexes[1]}};
    if (k.contains(uv)) fail(Errc::EdgePresent, uv.str() + " already present");
    std::vector<Simplex> nf;
    for (const Simplex& f : k.facets())
        if (!f.contains_all(tau)) nf.push_back(f);
    for (const Simplex& b : tau.boundary_faces()) nf.push_back(uv.unite(b));
    SimplicialComplex out = SimplicialComplex::from_simplices(std::move(nf));
    MoveRecord rec = make_record(MoveKind::Bistellar1, json{{"ridge", simplex_to_json(tau)}},
                                 json{{"edge", simplex_to_json(uv)}}, k, out);
    return {std::move(out), std::move(rec)};
}

namespace {

// Recognize L == S^0{x,y} * boundary(tau); returns (x, y, tau).
std::optional<std::tuple<VertexId, VertexId, Simplex>>
suspension_of_simplex_boundary(const SimplicialComplex& L) {
    if (L.dim() < 1) return std::nullopt;
    for (const Simplex& miss : L.missing_faces(1)) {
        VertexId x = miss[0], y = miss[1];
        std::vector<VertexId> rest;
        for (VertexId v : L.vertices())
            if (v != x && v != y) rest.push_back(v);
        Simplex tau = Simplex::unchecked(rest);
        if (tau.dim() != L.dim()) continue;
        std::vector<Simplex> expect;
        for (const Simplex& b : tau.boundary_faces()) {
            expect.push_back(b.plus(x));
            expect.push_back(b.plus(y));
        }
        std::sort(expect.begin(), expect.end());
        if (expect == L.facets()) return std::tuple{x, y, tau};
    }
    return std::nullopt;
}

} // namespace

MoveResult gen_bistellar_dminus1(const SimplicialComplex& k, const Simplex& uv) {
    if (uv.dim() != 1) fail(Errc::PatternMismatch, "parameter must be an edge");
    if (!k.contains(uv)) fail(Errc::FaceNotPresent, "edge " + uv.str());
    SimplicialComplex L = k.link(uv);
    auto pat = suspension_of_simplex_boundary(L);
    if (!pat)
        fail(Errc::PatternMismatch, "lk " + uv.str() + " is not a suspended simplex boundary");
    auto [x, y, tau] = *pat;
    if (k.contains(tau)) fail(Errc::TauPresent, tau.str() + " already present");
    std::vector<Simplex> nf;
    for (const Simplex& f : k.facets())
        if (!f.contains_all(uv)) nf.push_back(f);
    for (VertexId w : uv) {
        nf.push_back(tau.plus(x).plus(w));
        nf.push_back(tau.plus(y).plus(w));
    }
    SimplicialComplex out = SimplicialComplex::from_simplices(std::move(nf));
    MoveRecord rec = make_record(
        MoveKind::GenBistellarDminus1, json{{"edge", simplex_to_json(uv)}},
        json{{"x", x}, {"y", y}, {"tau", simplex_to_json(tau)}}, k, out);
    return {std::move(out), std::move(rec)};
}

MoveResult gen_bistellar_1(const SimplicialComplex& k, VertexId x, VertexId y, const Simplex& tau) {
    const int d = k.dim();
    if (tau.dim() != d - 2) fail(Errc::PatternMismatch, "tau must be a (d-2)-simplex");
    if (!k.contains(tau)) fail(Errc::FaceNotPresent, "face " + tau.str());
    SimplicialComplex L = k.link(tau);
    if (!is_four_cycle(L)) fail(Errc::PatternMismatch, "lk " + tau.str() + " is not a 4-cycle");
    if (!L.has_vertex(x) || !L.has_vertex(y) || L.has_edge(x, y))
        fail(Errc::PatternMismatch, "{x,y} is not an antipodal pair of lk " + tau.str());
    std::vector<VertexId> other;
    for (VertexId v : L.vertices())
        if (v != x && v != y) other.push_back(v);
    Simplex uv = Simplex::unchecked(other);
    if (k.contains(uv)) fail(Errc::PatternMismatch, "diagonal " + uv.str() + " already present");
    std::vector<Simplex> nf;
    for (const Simplex& f : k.facets())
        if (!f.contains_all(tau)) nf.push_back(f);
    for (const Simplex& b : tau.boundary_faces()) {
        nf.push_back(uv.unite(b.plus(x)));
        nf.push_back(uv.unite(b.plus(y)));
    }
    SimplicialComplex out = SimplicialComplex::from_simplices(std::move(nf));
    MoveRecord rec = make_record(MoveKind::GenBistellar1,
                                 json{{"x", x}, {"y", y}, {"tau", simplex_to_json(tau)}},
                                 json{{"edge", simplex_to_json(uv)}}, k, out);
    return {std::move(out), std::move(rec)};
}

namespace {

// Facets of lk(center) spanned by facets avoiding `avoid` (used to rebuild
// the two discs of an expansion from a contraction).
std::vector<Simplex> link_part_avoiding(const SimplicialComplex& k, VertexId center, VertexId avoid) {
    std::vector<Simplex> out;
    for (const Simplex& f : k.facets())
        if (f.contains(center) && !f.contains(avoid)) out.push_back(f.minus(center));
    return out;
}

} // namespace

MoveResult edge_contract(const SimplicialComplex& k, const Simplex& uv,
                         std::optional<VertexId> survivor_opt) {
    const int d = k.dim();
    if (uv.dim() != 1) fail(Errc::PatternMismatch, "parameter must be an edge");
    if (!k.contains(uv)) fail(Errc::FaceNotPresent, "edge " + uv.str());
    VertexId survivor = survivor_opt.value_or(uv[0]);
    if (!uv.contains(survivor)) fail(Errc::PatternMismatch, "survivor must be an endpoint");
    VertexId gone = (uv[0] == survivor) ? uv[1] : uv[0];

    SimplicialComplex lku = k.link(Simplex{{uv[0]}});
    SimplicialComplex lkv = k.link(Simplex{{uv[1]}});
    SimplicialComplex lkuv = k.link(uv);
    auto cu = detail::closure(lku.facets());
    auto cv = detail::closure(lkv.facets());
    auto cuv = detail::closure(lkuv.facets());
    for (const Simplex& s : cu) {
        if (cv.count(s) && !cuv.count(s))
            fail(Errc::LinkConditionFailed, "lk(u) & lk(v) != lk(uv), extra face " + s.str());
    }
    if (k.num_vertices() - 1 < d + 2)
        fail(Errc::MinimumVertices, "contraction would leave fewer than d+2 vertices");

    json expand_inverse{{"w", survivor},
                        {"s_facets", simplices_to_json(lkuv.facets())},
                        {"u", uv[0]},
                        {"v", uv[1]},
                        {"d1", simplices_to_json(link_part_avoiding(k, uv[0], uv[1]))}};

    std::vector<Simplex> nf;
    for (const Simplex& f : k.facets()) {
        if (!f.contains(gone)) {
            nf.push_back(f);
        } else if (!f.contains(survivor)) {
            nf.push_back(f.minus(gone).plus(survivor));
        } // facets containing both vanish
    }
    SimplicialComplex out = SimplicialComplex::from_simplices(std::move(nf));
    MoveRecord rec = make_record(MoveKind::EdgeContract,
                                 json{{"edge", simplex_to_json(uv)}, {"survivor", survivor}},
                                 std::move(expand_inverse), k, out);
    return {std::move(out), std::move(rec)};
}

MoveResult edge_expand(const SimplicialComplex& k, VertexId w,
                       const std::vector<Simplex>& s_facets,
                       std::optional<VertexId> u_label, std::optional<VertexId> v_label,
                       const std::optional<std::vector<Simplex>>& d1_facets) {
    const int d = k.dim();
    if (!k.has_vertex(w)) fail(Errc::UnknownVertex, "vertex " + std::to_string(w));
    if (s_facets.empty()) fail(Errc::DiscDecompositionFailed, "empty separating sphere");
    SimplicialComplex L = k.link(Simplex{{w}});
    SimplicialComplex S = SimplicialComplex::from_simplices(s_facets);
    if (S.dim() != d - 2) fail(Errc::DiscDecompositionFailed, "S must have dimension d-2");
    for (const Simplex& f : S.facets())
        if (!L.contains(f)) fail(Errc::DiscDecompositionFailed, f.str() + " not in lk(w)");
    if (!is_homology_sphere(S, Field::GF2) || !is_homology_sphere(S, Field::Rational))
        fail(Errc::DiscDecompositionFailed, "S is not a homology sphere");

    auto [c1, c2] = detail::split_along(L, S.facets()); // NotSeparating on failure
    if (d1_facets) {
        std::vector<Simplex> want = *d1_facets;
        std::sort(want.begin(), want.end());
        std::vector<Simplex> a = c1, b = c2;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (want == b) std::swap(c1, c2);
        else if (want != a)
            fail(Errc::DiscDecompositionFailed, "d1 does not match either side of the split");
    }
    // D1 & D2 must equal S exactly
    auto cl1 = detail::closure(c1);
    auto cl2 = detail::closure(c2);
    auto cls = detail::closure(S.facets());
    for (const Simplex& s : cl1)
        if (cl2.count(s) && !cls.count(s))
            fail(Errc::DiscDecompositionFailed, "discs meet outside S at " + s.str());
    for (const Simplex& s : cls)
        if (!cl1.count(s) || !cl2.count(s))
            fail(Errc::DiscDecompositionFailed, "S not contained in both discs");

    VertexId v = v_label.value_or(w);
    VertexId u = u_label.value_or(fresh_after(k, {v}));
    if (u == v) fail(Errc::FreshVertexCollision, "u and v must differ");
    for (VertexId nv : {u, v})
        if (nv != w && k.has_vertex(nv))
            fail(Errc::FreshVertexCollision, "label " + std::to_string(nv) + " already in use");

    std::vector<Simplex> nf;
    for (const Simplex& f : k.facets())
        if (!f.contains(w)) nf.push_back(f);
    Simplex uvs = u < v ? Simplex::unchecked({u, v}) : Simplex::unchecked({v, u});
    for (const Simplex& s : S.facets()) nf.push_back(uvs.unite(s));
    for (const Simplex& f : c1) nf.push_back(f.plus(u));
    for (const Simplex& f : c2) nf.push_back(f.plus(v));
    SimplicialComplex out = SimplicialComplex::from_simplices(std::move(nf));
    MoveRecord rec = make_record(MoveKind::EdgeExpand,
                                 json{{"w", w},
                                      {"s_facets", simplices_to_json(S.facets())},
                                      {"u", u},
                                      {"v", v},
                                      {"d1", simplices_to_json(c1)}},
                                 json{{"edge", simplex_to_json(uvs)}, {"survivor", v}, {"rename_to", w}},
                                 k, out);
    return {std::move(out), std::move(rec)};
}

MoveResult central_retriangulation(const SimplicialComplex& k,
                                   const std::vector<Simplex>& ball_facets, VertexId apex) {
    if (k.has_vertex(apex)) fail(Errc::ApexCollision, "apex " + std::to_string(apex) + " already in use");
    if (ball_facets.empty()) fail(Errc::NotABall, "empty ball");
    std::vector<Simplex> ball = ball_facets;
    std::sort(ball.begin(), ball.end());
    ball.erase(std::unique(ball.begin(), ball.end()), ball.end());
    for (const Simplex& f : ball)
        if (!k.is_facet(f)) fail(Errc::NotABall, f.str() + " is not a facet of the complex");

    std::vector<Simplex> bd = detail::boundary_ridges(ball);
    if (bd.empty()) fail(Errc::NotABall, "ball has empty boundary");
    SimplicialComplex bd_complex = SimplicialComplex::from_simplices(bd);
    if (!is_homology_sphere(bd_complex, Field::GF2) || !is_homology_sphere(bd_complex, Field::Rational))
        fail(Errc::NotABall, "ball boundary is not a homology sphere");

    auto ball_closure = detail::closure(ball);
    auto bd_closure = detail::closure(bd);
    std::vector<Simplex> outside;
    std::unordered_set<Simplex, SimplexHash> ball_set(ball.begin(), ball.end());
    for (const Simplex& f : k.facets())
        if (!ball_set.count(f)) outside.push_back(f);
    auto outside_closure = detail::closure(outside);
    for (const Simplex& s : ball_closure) {
        if (!bd_closure.count(s) && outside_closure.count(s))
            fail(Errc::NotABall, "interior face " + s.str() + " shared outside the ball");
    }

    std::vector<Simplex> nf = std::move(outside);
    for (const Simplex& r : bd) nf.push_back(r.plus(apex));
    SimplicialComplex out = SimplicialComplex::from_simplices(std::move(nf));
    MoveRecord rec = make_record(MoveKind::CentralRetri,
                                 json{{"ball", simplices_to_json(ball)}, {"apex", apex}},
                                 json{{"vertex", apex}}, k, out);
    return {std::move(out), std::move(rec)};
}

MoveResult inverse_central_retriangulation(const SimplicialComplex& k, VertexId v) {
    const int d = k.dim();
    if (!k.has_vertex(v)) fail(Errc::UnknownVertex, "vertex " + std::to_string(v));
    SimplicialComplex L = k.link(Simplex{{v}});
    if (!detail::stacked_removal_order(L))
        fail(Errc::LinkNotStacked, "lk(" + std::to_string(v) + ") is not a stacked sphere");

    // lk(v)(1): all d-simplices whose 1-skeleton lies in the graph of lk(v).
    std::vector<Simplex> ball;
    {
        const auto& vs = L.vertices();
        std::vector<VertexId> cur;
        std::function<void(std::size_t)> rec = [&](std::size_t start) {
            if (cur.size() == static_cast<std::size_t>(d + 1)) {
                ball.push_back(Simplex::unchecked(cur));
                return;
            }
            for (std::size_t t = start; t < vs.size(); ++t) {
                bool adj = true;
                for (VertexId u : cur)
                    if (!L.has_edge(u, vs[t])) { adj = false; break; }
                if (!adj) continue;
                cur.push_back(vs[t]);
                rec(t + 1);
                cur.pop_back();
            }
        };
        rec(0);
    }
    if (ball.empty()) fail(Errc::LinkNotStacked, "stacked ball reconstruction failed");
    std::vector<Simplex> bd = detail::boundary_ridges(ball);
    std::sort(bd.begin(), bd.end());
    if (bd != L.facets())
        fail(Errc::LinkNotStacked, "clique complex of lk(" + std::to_string(v) + ") does not bound it");

    auto ball_closure = detail::closure(ball);
    auto bd_closure = detail::closure(bd);
    for (const Simplex& s : ball_closure)
        if (!bd_closure.count(s) && k.contains(s))
            fail(Errc::InteriorFacePresent, "interior face " + s.str() + " present in the complex");

    std::vector<Simplex> nf;
    for (const Simplex& f : k.facets())
        if (!f.contains(v)) nf.push_back(f);
    for (const Simplex& f : ball) nf.push_back(f);
    SimplicialComplex out = SimplicialComplex::from_simplices(std::move(nf));
    MoveRecord rec = make_record(MoveKind::InverseCentralRetri, json{{"vertex", v}},
                                 json{{"ball", simplices_to_json(ball)}, {"apex", v}}, k, out);
    return {std::move(out), std::move(rec)};
}

MoveResult one_vertex_suspension(const SimplicialComplex& k, VertexId v,
                                 std::optional<VertexId> x_opt, std::optional<VertexId> y_opt) {
    if (!k.has_vertex(v)) fail(Errc::VertexMissing, "vertex " + std::to_string(v));
    VertexId x = x_opt.value_or(fresh_after(k, {}));
    VertexId y = y_opt.value_or(fresh_after(k, {x}));
    if (x == y) fail(Errc::FreshVertexCollision, "x and y must differ");
    for (VertexId nv : {x, y})
        if (nv != v && k.has_vertex(nv))
            fail(Errc::FreshVertexCollision, "label " + std::to_string(nv) + " already in use");

    Simplex xy = x < y ? Simplex::unchecked({x, y}) : Simplex::unchecked({y, x});
    std::vector<Simplex> nf;
    for (const Simplex& f : k.facets()) {
        if (f.contains(v)) {
            nf.push_back(xy.unite(f.minus(v)));
        } else {
            nf.push_back(f.plus(x));
            nf.push_back(f.plus(y));
        }
    }
    SimplicialComplex out = SimplicialComplex::from_simplices(std::move(nf));
    MoveRecord rec = make_record(MoveKind::OneVertexSuspension, json{{"v", v}, {"x", x}, {"y", y}},
                                 json{{"v", v}, {"x", x}, {"y", y}}, k, out);
    return {std::move(out), std::move(rec)};
}

MoveResult swartz_operation(const SimplicialComplex& k, VertexId v, const Simplex& tau) {
    const int d = k.dim();
    if (!k.has_vertex(v)) fail(Errc::UnknownVertex, "vertex " + std::to_string(v));
    if (tau.dim() != d - 1) fail(Errc::TauNotMissing, "tau must be a (d-1)-simplex");
    SimplicialComplex L = k.link(Simplex{{v}});
    if (!is_homology_sphere(L, Field::GF2) || !is_homology_sphere(L, Field::Rational))
        fail(Errc::LinkNotSphere, "lk(" + std::to_string(v) + ") is not a homology sphere");
    if (k.contains(tau)) fail(Errc::TauNotMissing, tau.str() + " present in the complex");
    if (L.contains(tau)) fail(Errc::TauNotMissing, tau.str() + " present in the link");
    for (const Simplex& b : tau.boundary_faces())
        if (!L.contains(b)) fail(Errc::TauNotMissing, "boundary of tau not inside lk(v)");

    auto [c1, c2] = detail::split_along(L, tau.boundary_faces());
    std::vector<Simplex> s1 = c1, s2 = c2;
    s1.push_back(tau);
    s2.push_back(tau);

    auto degenerate_simplex = [&](const std::vector<Simplex>& side) -> std::optional<Simplex> {
        SimplicialComplex s = SimplicialComplex::from_simplices(side);
        if (!is_boundary_of_simplex(s)) return std::nullopt;
        Simplex sigma = Simplex::unchecked(s.vertices());
        if (k.contains(sigma)) return std::nullopt;
        return sigma;
    };
    auto deg1 = degenerate_simplex(s1);
    auto deg2 = degenerate_simplex(s2);

    std::vector<Simplex> nf;
    for (const Simplex& f : k.facets())
        if (!f.contains(v)) nf.push_back(f);
    std::vector<Simplex> added;
    std::vector<VertexId> taken;
    auto attach = [&](const std::vector<Simplex>& side, const std::optional<Simplex>& deg,
                      const char* branch) {
        json info;
        if (deg) {
            added.push_back(*deg);
            info = json{{"branch", branch}, {"kind", "simplex"}, {"simplex", simplex_to_json(*deg)}};
        } else {
            VertexId w = fresh_after(k, taken);
            taken.push_back(w);
            for (const Simplex& f : side) added.push_back(f.plus(w));
            info = json{{"branch", branch}, {"kind", "cone"}, {"vertex", w}};
        }
        return info;
    };
    json b1 = attach(s1, deg1, "S1");
    json b2 = attach(s2, deg2, "S2");
    std::sort(added.begin(), added.end());
    added.erase(std::unique(added.begin(), added.end()), added.end());
    for (const Simplex& f : added) nf.push_back(f);

    std::vector<Simplex> star_facets;
    for (const Simplex& f : k.facets())
        if (f.contains(v)) star_facets.push_back(f);

    SimplicialComplex out = SimplicialComplex::from_simplices(std::move(nf));
    MoveRecord rec = make_record(
        MoveKind::Swartz,
        json{{"v", v}, {"tau", simplex_to_json(tau)}, {"sides", json::array({b1, b2})}},
        json{{"star_facets", simplices_to_json(star_facets)},
             {"added_facets", simplices_to_json(added)}},
        k, out);
    return {std::move(out), std::move(rec)};
}

MoveResult facet_subdivision(const SimplicialComplex& k, const Simplex& facet,
                             std::optional<VertexId> apex_opt) {
    if (!k.is_facet(facet)) fail(Errc::NotAFacet, facet.str() + " is not a facet");
    VertexId apex = apex_opt.value_or(fresh_after(k, {}));
    if (k.has_vertex(apex)) fail(Errc::ApexCollision, "apex " + std::to_string(apex) + " already in use");
    std::vector<Simplex> nf;
    for (const Simplex& f : k.facets())
        if (f != facet) nf.push_back(f);
    for (const Simplex& b : facet.boundary_faces()) nf.push_back(b.plus(apex));
    SimplicialComplex out = SimplicialComplex::from_simplices(std::move(nf));
    MoveRecord rec = make_record(MoveKind::FacetSubdivision,
                                 json{{"facet", simplex_to_json(facet)}, {"apex", apex}},
                                 json{{"apex", apex}, {"facet", simplex_to_json(facet)}}, k, out);
    return {std::move(out), std::move(rec)};
}

MoveResult connected_sum(const SimplicialComplex& k1, const SimplicialComplex& k2,
                         const Simplex& f1, const Simplex& f2,
                         const std::unordered_map<VertexId, VertexId>& bijection) {
    if (k1.dim() != k2.dim()) fail(Errc::DimensionMismatch, "summands have different dimensions");
    if (!k1.is_facet(f1)) fail(Errc::NotAFacet, f1.str() + " is not a facet of the first summand");
    if (!k2.is_facet(f2)) fail(Errc::NotAFacet, f2.str() + " is not a facet of the second summand");
    std::unordered_map<VertexId, VertexId> back; // f2 vertex -> f1 vertex
    for (VertexId a : f1) {
        auto it = bijection.find(a);
        if (it == bijection.end()) fail(Errc::IdentificationCollision, "bijection misses vertex " + std::to_string(a));
        if (!f2.contains(it->second)) fail(Errc::IdentificationCollision, "bijection image outside f2");
        if (!back.emplace(it->second, a).second)
            fail(Errc::IdentificationCollision, "bijection is not injective");
    }
    for (VertexId b : k2.vertices()) {
        if (!f2.contains(b) && k1.has_vertex(b))
            fail(Errc::IdentificationCollision,
                 "vertex " + std::to_string(b) + " appears in both summands");
    }
    std::vector<Simplex> nf;
    for (const Simplex& f : k1.facets())
        if (f != f1) nf.push_back(f);
    for (const Simplex& f : k2.facets()) {
        if (f == f2) continue;
        std::vector<VertexId> m;
        m.reserve(f.size());
        for (VertexId b : f) {
            auto it = back.find(b);
            m.push_back(it == back.end() ? b : it->second);
        }
        nf.emplace_back(std::move(m));
    }
    SimplicialComplex out = SimplicialComplex::from_simplices(std::move(nf));
    json bj = json::object();
    for (VertexId a : f1) bj[std::to_string(a)] = bijection.at(a);
    MoveRecord rec = make_record(MoveKind::ConnectedSum,
                                 json{{"f1", simplex_to_json(f1)},
                                      {"f2", simplex_to_json(f2)},
                                      {"bijection", bj},
                                      {"other_facets", simplices_to_json(k2.facets())}},
                                 json{{"k1_facets", simplices_to_json(k1.facets())},
                                      {"k2_facets", simplices_to_json(k2.facets())}},
                                 k1, out);
    return {std::move(out), std::move(rec)};
}

SimplicialComplex apply_recorded(const SimplicialComplex& k, const MoveRecord& rec) {
    const json& p = rec.params;
    switch (rec.kind) {
        case MoveKind::EdgeFlip:
            return edge_flip(k, simplex_from_json(p.at("edge")), simplex_from_json(p.at("missing"))).complex;
        case MoveKind::BistellarDminus1:
            return bistellar_dminus1(k, simplex_from_json(p.at("edge"))).complex;
        case MoveKind::Bistellar1:
            return bistellar_1(k, simplex_from_json(p.at("ridge"))).complex;
        case MoveKind::GenBistellarDminus1:
            return gen_bistellar_dminus1(k, simplex_from_json(p.at("edge"))).complex;
        case MoveKind::GenBistellar1:
            return gen_bistellar_1(k, p.at("x").get<VertexId>(), p.at("y").get<VertexId>(),
                                   simplex_from_json(p.at("tau"))).complex;
        case MoveKind::EdgeContract:
            return edge_contract(k, simplex_from_json(p.at("edge")), p.at("survivor").get<VertexId>()).complex;
        case MoveKind::EdgeExpand:
            return edge_expand(k, p.at("w").get<VertexId>(), simplices_from_json(p.at("s_facets")),
                               p.at("u").get<VertexId>(), p.at("v").get<VertexId>(),
                               simplices_from_json(p.at("d1"))).complex;
        case MoveKind::CentralRetri:
            return central_retriangulation(k, simplices_from_json(p.at("ball")), p.at("apex").get<VertexId>()).complex;
        case MoveKind::InverseCentralRetri:
            return inverse_central_retriangulation(k, p.at("vertex").get<VertexId>()).complex;
        case MoveKind::OneVertexSuspension:
            return one_vertex_suspension(k, p.at("v").get<VertexId>(), p.at("x").get<VertexId>(),
                                         p.at("y").get<VertexId>()).complex;
        case MoveKind::Swartz:
            return swartz_operation(k, p.at("v").get<VertexId>(), simplex_from_json(p.at("tau"))).complex;
        case MoveKind::FacetSubdivision:
            return facet_subdivision(k, simplex_from_json(p.at("facet")), p.at("apex").get<VertexId>()).complex;
        case MoveKind::ConnectedSum: {
            SimplicialComplex other = SimplicialComplex::from_simplices(simplices_from_json(p.at("other_facets")));
            std::unordered_map<VertexId, VertexId> bij;
            for (auto it = p.at("bijection").begin(); it != p.at("bijection").end(); ++it)
                bij[std::stoi(it.key())] = it.value().get<VertexId>();
            return connected_sum(k, other, simplex_from_json(p.at("f1")), simplex_from_json(p.at("f2")), bij).complex;
        }
    }
    fail(Errc::Usage, "unhandled move kind");
}

SimplicialComplex undo_recorded(const SimplicialComplex& k, const MoveRecord& rec) {
    const json& q = rec.inverse_params;
    switch (rec.kind) {
        case MoveKind::EdgeFlip:
            return edge_flip(k, simplex_from_json(q.at("edge")), simplex_from_json(q.at("missing"))).complex;
        case MoveKind::BistellarDminus1:
            return bistellar_1(k, simplex_from_json(q.at("ridge"))).complex;
        case MoveKind::Bistellar1:
            return bistellar_dminus1(k, simplex_from_json(q.at("edge"))).complex;
        case MoveKind::GenBistellarDminus1:
            return gen_bistellar_1(k, q.at("x").get<VertexId>(), q.at("y").get<VertexId>(),
                                   simplex_from_json(q.at("tau"))).complex;
        case MoveKind::GenBistellar1:
            return gen_bistellar_dminus1(k, simplex_from_json(q.at("edge"))).complex;
        case MoveKind::EdgeContract:
            return edge_expand(k, q.at("w").get<VertexId>(), simplices_from_json(q.at("s_facets")),
                               q.at("u").get<VertexId>(), q.at("v").get<VertexId>(),
                               simplices_from_json(q.at("d1"))).complex;
        case MoveKind::EdgeExpand: {
            SimplicialComplex c =
                edge_contract(k, simplex_from_json(q.at("edge")), q.at("survivor").get<VertexId>()).complex;
            VertexId survivor = q.at("survivor").get<VertexId>();
            VertexId target = q.at("rename_to").get<VertexId>();
            if (survivor == target) return c;
            return relabel(c, {{survivor, target}});
        }
        case MoveKind::CentralRetri:
            return inverse_central_retriangulation(k, q.at("vertex").get<VertexId>()).complex;
        case MoveKind::InverseCentralRetri:
            return central_retriangulation(k, simplices_from_json(q.at("ball")), q.at("apex").get<VertexId>()).complex;
        case MoveKind::OneVertexSuspension: {
            VertexId x = q.at("x").get<VertexId>();
            VertexId y = q.at("y").get<VertexId>();
            VertexId v = q.at("v").get<VertexId>();
            SimplicialComplex lk = k.link(Simplex{{x}});
            if (y == v) return lk;
            return relabel(lk, {{y, v}});
        }
        case MoveKind::Swartz: {
            auto added = simplices_from_json(q.at("added_facets"));
            std::unordered_set<Simplex, SimplexHash> remove(added.begin(), added.end());
            std::vector<Simplex> nf;
            for (const Simplex& f : k.facets())
                if (!remove.count(f)) nf.push_back(f);
            for (const Simplex& f : simplices_from_json(q.at("star_facets"))) nf.push_back(f);
            return SimplicialComplex::from_simplices(std::move(nf));
        }
        case MoveKind::FacetSubdivision: {
            VertexId apex = q.at("apex").get<VertexId>();
            std::vector<Simplex> nf;
            for (const Simplex& f : k.facets())
                if (!f.contains(apex)) nf.push_back(f);
            nf.push_back(simplex_from_json(q.at("facet")));
            return SimplicialComplex::from_simplices(std::move(nf));
        }
        case MoveKind::ConnectedSum:
            return SimplicialComplex::from_simplices(simplices_from_json(q.at("k1_facets")));
    }
    fail(Errc::Usage, "unhandled move kind");
}

} // namespace gee2

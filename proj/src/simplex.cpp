#include "gee2/simplex.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace gee2 {

Simplex::Simplex(std::vector<VertexId> vs) : v_(std::move(vs)) {
    std::sort(v_.begin(), v_.end());
    for (std::size_t i = 0; i + 1 < v_.size(); ++i) {
        if (v_[i] == v_[i + 1]) fail(Errc::InvalidSimplex, "duplicate vertex " + std::to_string(v_[i]));
    }
    for (VertexId v : v_) {
        if (v < 0) fail(Errc::InvalidSimplex, "negative vertex id " + std::to_string(v));
    }
}

bool Simplex::contains(VertexId v) const {
    return std::binary_search(v_.begin(), v_.end(), v);
}

bool Simplex::contains_all(const Simplex& other) const {
    return std::includes(v_.begin(), v_.end(), other.v_.begin(), other.v_.end());
}

bool Simplex::intersects(const Simplex& other) const {
    auto a = v_.begin();
    auto b = other.v_.begin();
    while (a != v_.end() && b != other.v_.end()) {
        if (*a == *b) return true;
        if (*a < *b) ++a;
        else ++b;
    }
    return false;
}

Simplex Simplex::unite(const Simplex& other) const {
    std::vector<VertexId> out;
    out.reserve(v_.size() + other.v_.size());
    std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(), std::back_inserter(out));
    return Simplex::unchecked(std::move(out));
}

Simplex Simplex::intersect(const Simplex& other) const {
    std::vector<VertexId> out;
    std::set_intersection(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(), std::back_inserter(out));
    return Simplex::unchecked(std::move(out));
}

Simplex Simplex::minus(const Simplex& other) const {
    std::vector<VertexId> out;
    std::set_difference(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(), std::back_inserter(out));
    return Simplex::unchecked(std::move(out));
}

Simplex Simplex::minus(VertexId v) const {
    std::vector<VertexId> out;
    out.reserve(v_.size());
    for (VertexId x : v_)
        if (x != v) out.push_back(x);
    return Simplex::unchecked(std::move(out));
}

Simplex Simplex::plus(VertexId v) const {
    std::vector<VertexId> out;
    out.reserve(v_.size() + 1);
    bool placed = false;
    for (VertexId x : v_) {
        if (!placed && v < x) {
            out.push_back(v);
            placed = true;
        }
        if (x == v) fail(Errc::InvalidSimplex, "vertex already present: " + std::to_string(v));
        out.push_back(x);
    }
    if (!placed) out.push_back(v);
    return Simplex::unchecked(std::move(out));
}

std::vector<Simplex> Simplex::boundary_faces() const {
    std::vector<Simplex> out;
    if (v_.empty()) return out;
    out.reserve(v_.size());
    for (std::size_t i = 0; i < v_.size(); ++i) {
        std::vector<VertexId> f;
        f.reserve(v_.size() - 1);
        for (std::size_t j = 0; j < v_.size(); ++j)
            if (j != i) f.push_back(v_[j]);
        out.push_back(Simplex::unchecked(std::move(f)));
    }
    return out;
}

std::string Simplex::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Simplex& s) {
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << ' ';
        os << s[i];
    }
    os << '}';
    return os;
}

long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

} // namespace gee2

#ifndef GEE2_SIMPLEX_HPP
#define GEE2_SIMPLEX_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "gee2/errors.hpp"

namespace gee2 {

using VertexId = int;

// A face: strictly increasing sequence of vertex ids. The empty simplex
// (dimension -1) is a valid value.
class Simplex {
public:
    Simplex() = default;
    Simplex(std::initializer_list<VertexId> vs) : Simplex(std::vector<VertexId>(vs)) {}
    explicit Simplex(std::vector<VertexId> vs);

    // Caller guarantees vs is sorted and duplicate-free.
    static Simplex unchecked(std::vector<VertexId> vs) {
        Simplex s;
        s.v_ = std::move(vs);
        return s;
    }

    int dim() const { return static_cast<int>(v_.size()) - 1; }
    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }

    bool contains(VertexId v) const;
    bool contains_all(const Simplex& other) const; // other subset of *this
    bool intersects(const Simplex& other) const;

    Simplex unite(const Simplex& other) const;
    Simplex intersect(const Simplex& other) const;
    Simplex minus(const Simplex& other) const;
    Simplex minus(VertexId v) const;
    Simplex plus(VertexId v) const;

    // All subsets of size |this|-1, in lexicographic order.
    std::vector<Simplex> boundary_faces() const;

    const std::vector<VertexId>& vertices() const { return v_; }
    VertexId operator[](std::size_t i) const { return v_[i]; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    auto operator<=>(const Simplex&) const = default;

    std::string str() const;

private:
    std::vector<VertexId> v_;
};

std::ostream& operator<<(std::ostream& os, const Simplex& s);

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::uint64_t h = 1469598103934665603ull;
        for (VertexId v : s) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

long long binom(long long n, long long k);

} // namespace gee2

#endif

#include "gee2/io.hpp"

#include <fstream>
#include <sstream>

namespace gee2 {

SimplicialComplex read_complex(std::istream& in) {
    std::vector<std::vector<VertexId>> facets;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<VertexId> f;
        long long v;
        while (ls >> v) {
            if (v < 0) fail(Errc::Io, "negative vertex on line " + std::to_string(lineno));
            f.push_back(static_cast<VertexId>(v));
        }
        if (!ls.eof()) fail(Errc::Io, "bad token on line " + std::to_string(lineno));
        if (!f.empty()) facets.push_back(std::move(f));
    }
    if (facets.empty()) fail(Errc::EmptyInput, "no facets in input");
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex read_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::Io, "cannot open " + path);
    return read_complex(in);
}

std::string format_complex(const SimplicialComplex& k) {
    std::ostringstream os;
    for (const Simplex& f : k.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) os << ' ';
            os << f[i];
        }
        os << '\n';
    }
    return os.str();
}

void write_complex(std::ostream& out, const SimplicialComplex& k) { out << format_complex(k); }

void write_complex_file(const std::string& path, const SimplicialComplex& k) {
    std::ofstream out(path);
    if (!out) fail(Errc::Io, "cannot open " + path + " for writing");
    write_complex(out, k);
}

} // namespace gee2

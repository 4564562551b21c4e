#ifndef GEE2_IO_HPP
#define GEE2_IO_HPP

#include <iosfwd>
#include <string>

#include "gee2/complex.hpp"

namespace gee2 {

// Facet-list text format: UTF-8, '#' starts a comment line, every other
// non-blank line is one facet as whitespace-separated nonnegative integers.
SimplicialComplex read_complex(std::istream& in);
SimplicialComplex read_complex_file(const std::string& path);
std::string format_complex(const SimplicialComplex& k);
void write_complex(std::ostream& out, const SimplicialComplex& k);
void write_complex_file(const std::string& path, const SimplicialComplex& k);

} // namespace gee2

#endif

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "facenum/complex.hpp"

namespace facenum {

// ".fct" facet-list text: one facet per line as whitespace-separated positive
// integers; blank lines and lines starting with '#' are ignored.
SimplicialComplex read_fct(std::istream& in);
SimplicialComplex read_fct_file(const std::filesystem::path& path);
SimplicialComplex parse_fct(const std::string& text);

// Canonical form: dense ids 1..n, facets in lexicographic order.
void write_fct(std::ostream& out, const SimplicialComplex& complex);
std::string to_fct(const SimplicialComplex& complex);
void write_fct_file(const std::filesystem::path& path, const SimplicialComplex& complex);

}  // namespace facenum

#include "facenum/fct_io.hpp"

#include <fstream>
#include <sstream>

#include "facenum/errors.hpp"

namespace facenum {

SimplicialComplex read_fct(std::istream& in) {
  LabeledFacets raw;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream tokens(line);
    std::vector<Label> facet;
    std::string tok;
    while (tokens >> tok) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line_no) + ": bad token '" + tok + "'");
      }
      facet.push_back(value);
    }
    raw.push_back(std::move(facet));
  }
  return SimplicialComplex::from_facets(raw);
}

SimplicialComplex read_fct_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  return read_fct(in);
}

SimplicialComplex parse_fct(const std::string& text) {
  std::istringstream in(text);
  return read_fct(in);
}

void write_fct(std::ostream& out, const SimplicialComplex& complex) {
  for (const Face& facet : complex.facets()) {
    for (std::size_t k = 0; k < facet.size(); ++k) {
      if (k) out << ' ';
      out << facet[k];
    }
    out << '\n';
  }
}

std::string to_fct(const SimplicialComplex& complex) {
  std::ostringstream out;
  write_fct(out, complex);
  return out.str();
}

void write_fct_file(const std::filesystem::path& path, const SimplicialComplex& complex) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path.string());
  write_fct(out, complex);
}

}  // namespace facenum

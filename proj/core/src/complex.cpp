#include "facenum/complex.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "facenum/errors.hpp"

namespace facenum {

namespace {

bool is_subset(const Face& small, const Face& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<Face> drop_non_maximal(std::vector<Face> facets) {
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  // Larger sets first so each candidate only needs checking against kept ones.
  std::vector<std::size_t> order(facets.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return facets[a].size() > facets[b].size();
  });
  std::vector<Face> kept;
  for (std::size_t idx : order) {
    const Face& cand = facets[idx];
    bool covered = std::any_of(kept.begin(), kept.end(), [&](const Face& k) {
      return k.size() > cand.size() && is_subset(cand, k);
    });
    if (!covered) kept.push_back(cand);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

SimplicialComplex::SimplicialComplex()
    : facets_{Face{}}, labels_{}, faces_by_dim_{{Face{}}} {}

SimplicialComplex SimplicialComplex::from_facets(const LabeledFacets& raw) {
  return canonical(raw, false);
}

SimplicialComplex SimplicialComplex::generated_by(const LabeledFacets& faces) {
  if (faces.empty()) return SimplicialComplex{};
  return canonical(faces, true);
}

SimplicialComplex SimplicialComplex::canonical(const LabeledFacets& raw, bool allow_empty_face) {
  if (raw.empty()) throw Error(ErrorCode::EmptyInput, "no facets given");

  std::vector<Label> labels;
  for (const auto& facet : raw) {
    if (facet.empty() && !allow_empty_face) {
      throw Error(ErrorCode::EmptyInput, "empty facet");
    }
    for (Label l : facet) {
      if (l <= 0) throw Error(ErrorCode::InvalidLabel, "label " + std::to_string(l) + " is not positive");
      labels.push_back(l);
    }
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.empty()) return SimplicialComplex{};

  std::vector<Face> dense;
  dense.reserve(raw.size());
  for (const auto& facet : raw) {
    if (facet.empty()) continue;
    Face f;
    f.reserve(facet.size());
    for (Label l : facet) {
      auto it = std::lower_bound(labels.begin(), labels.end(), l);
      f.push_back(static_cast<Vertex>(it - labels.begin()) + 1);
    }
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
      throw Error(ErrorCode::DuplicateVertexInFacet, "repeated vertex in facet");
    }
    dense.push_back(std::move(f));
  }

  SimplicialComplex out;
  out.facets_ = drop_non_maximal(std::move(dense));
  out.labels_ = std::move(labels);

  std::size_t max_size = 0;
  for (const Face& f : out.facets_) max_size = std::max(max_size, f.size());
  out.faces_by_dim_.assign(max_size + 1, {});
  for (const Face& facet : out.facets_) {
    const std::size_t k = facet.size();
    // Enumerate all subsets; facets are small (<= ~8 vertices).
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      Face sub;
      for (std::size_t j = 0; j < k; ++j) {
        if (mask & (1u << j)) sub.push_back(facet[j]);
      }
      out.faces_by_dim_[sub.size()].push_back(std::move(sub));
    }
  }
  for (auto& layer : out.faces_by_dim_) {
    std::sort(layer.begin(), layer.end());
    layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
  }
  return out;
}

Label SimplicialComplex::label(Vertex v) const {
  if (v < 1 || v > num_vertices()) {
    throw Error(ErrorCode::VertexNotInComplex, "vertex id " + std::to_string(v));
  }
  return labels_[static_cast<std::size_t>(v - 1)];
}

std::optional<Vertex> SimplicialComplex::find_vertex(Label l) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
  if (it == labels_.end() || *it != l) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin()) + 1;
}

std::vector<Label> SimplicialComplex::to_labels(const Face& face) const {
  std::vector<Label> out;
  out.reserve(face.size());
  for (Vertex v : face) out.push_back(label(v));
  return out;
}

Face SimplicialComplex::to_face(std::span<const Label> ls) const {
  Face out;
  out.reserve(ls.size());
  for (Label l : ls) {
    auto v = find_vertex(l);
    if (!v) throw Error(ErrorCode::VertexNotInComplex, "label " + std::to_string(l));
    out.push_back(*v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LabeledFacets SimplicialComplex::labeled_facets() const {
  LabeledFacets out;
  out.reserve(facets_.size());
  for (const Face& f : facets_) out.push_back(to_labels(f));
  return out;
}

const std::vector<Face>& SimplicialComplex::faces(int k) const {
  static const std::vector<Face> none;
  if (k < -1 || k > dim()) return none;
  return faces_by_dim_[static_cast<std::size_t>(k + 1)];
}

std::optional<std::size_t> SimplicialComplex::face_index(const Face& face) const {
  const auto& layer = faces(static_cast<int>(face.size()) - 1);
  auto it = std::lower_bound(layer.begin(), layer.end(), face);
  if (it == layer.end() || *it != face) return std::nullopt;
  return static_cast<std::size_t>(it - layer.begin());
}

IntSeq SimplicialComplex::f_vector() const {
  std::vector<std::int64_t> f;
  f.reserve(faces_by_dim_.size());
  for (const auto& layer : faces_by_dim_) f.push_back(static_cast<std::int64_t>(layer.size()));
  return IntSeq(-1, std::move(f));
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Face& f) { return f.size() == facets_.front().size(); });
}

std::int64_t SimplicialComplex::reduced_euler() const {
  std::int64_t chi = 0;
  for (int k = -1; k <= dim(); ++k) {
    const auto count = static_cast<std::int64_t>(faces(k).size());
    chi += (k % 2 == 0) ? count : -count;
  }
  return chi;
}

SimplicialComplex link(const SimplicialComplex& complex, const Face& face) {
  if (!complex.contains(face)) throw Error(ErrorCode::FaceNotInComplex, "link of a non-face");
  if (face.empty()) return complex;
  LabeledFacets raw;
  for (const Face& facet : complex.facets()) {
    if (!is_subset(face, facet)) continue;
    Face rest;
    std::set_difference(facet.begin(), facet.end(), face.begin(), face.end(),
                        std::back_inserter(rest));
    raw.push_back(complex.to_labels(rest));
  }
  return SimplicialComplex::generated_by(raw);
}


SimplicialComplex closed_star(const SimplicialComplex& complex, Vertex v) {
  if (v < 1 || v > complex.num_vertices()) {
    throw Error(ErrorCode::VertexNotInComplex, "vertex id " + std::to_string(v));
  }
  LabeledFacets raw;
  for (const Face& facet : complex.facets()) {
    if (std::binary_search(facet.begin(), facet.end(), v)) raw.push_back(complex.to_labels(facet));
  }
  return SimplicialComplex::from_facets(raw);
}

SimplicialComplex skeleton(const SimplicialComplex& complex, int k) {
  if (k < 0 || k > complex.dim()) {
    throw Error(ErrorCode::BadSkeletonDim, "skeleton dimension " + std::to_string(k));
  }
  LabeledFacets raw;
  for (const Face& f : complex.faces(k)) raw.push_back(complex.to_labels(f));
  for (const Face& facet : complex.facets()) {
    if (static_cast<int>(facet.size()) - 1 < k) raw.push_back(complex.to_labels(facet));
  }
  return SimplicialComplex::from_facets(raw);
}

SimplicialComplex generated_subcomplex(const SimplicialComplex& complex,
                                       const std::vector<Face>& faces) {
  LabeledFacets raw;
  raw.reserve(faces.size());
  for (const Face& f : faces) raw.push_back(complex.to_labels(f));
  return SimplicialComplex::generated_by(raw);
}

std::vector<std::vector<Vertex>> connected_components(const SimplicialComplex& complex) {
  const int n = complex.num_vertices();
  std::vector<int> parent(static_cast<std::size_t>(n + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const Face& e : complex.faces(1)) {
    int a = find(e[0]);
    int b = find(e[1]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<Vertex>> groups(static_cast<std::size_t>(n + 1));
  for (Vertex v = 1; v <= n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<Vertex>> out;
  for (auto& g : groups) {
    if (!g.empty()) out.push_back(std::move(g));
  }
  return out;
}

std::vector<SimplicialComplex> component_complexes(const SimplicialComplex& complex) {
  std::vector<SimplicialComplex> out;
  for (const auto& verts : connected_components(complex)) {
    std::vector<Face> mine;
    for (const Face& facet : complex.facets()) {
      if (std::binary_search(verts.begin(), verts.end(), facet.front())) mine.push_back(facet);
    }
    out.push_back(generated_subcomplex(complex, mine));
  }
  return out;
}

bool is_connected(const SimplicialComplex& complex) {
  return connected_components(complex).size() <= 1;
}

}  // namespace facenum

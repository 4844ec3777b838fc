#include "facenum/manifold.hpp"

#include <algorithm>

#include "facenum/errors.hpp"
#include "facenum/homology.hpp"

namespace facenum {

namespace {

struct FaceScan {
  std::vector<Witness> witnesses;
  std::vector<Face> boundary_faces;
};

// Link conditions for every nonempty face.
FaceScan scan_faces(const SimplicialComplex& complex, const FieldSpec& field) {
  FaceScan scan;
  const int d = complex.rank();
  for (int k = 0; k <= complex.dim(); ++k) {
    for (const Face& f : complex.faces(k)) {
      const int top = d - static_cast<int>(f.size()) - 1;
      const IntSeq b = betti(link(complex, f), field);
      bool ok = true;
      for (int j = b.first(); j <= b.last(); ++j) {
        if (j < top && b[j] != 0) {
          scan.witnesses.push_back({complex.to_labels(f), j, "homology below top degree"});
          ok = false;
        }
      }
      if (b[top] > 1) {
        scan.witnesses.push_back({complex.to_labels(f), top, "top Betti number exceeds 1"});
        ok = false;
      }
      if (ok && b[top] == 0) scan.boundary_faces.push_back(f);
    }
  }
  return scan;
}

bool witness_less(const Witness& a, const Witness& b) {
  if (a.face.size() != b.face.size()) return a.face.size() < b.face.size();
  if (a.face != b.face) return a.face < b.face;
  return a.degree < b.degree;
}

ManifoldReport analyze(const SimplicialComplex& complex, const FieldSpec& field) {
  ManifoldReport report;
  report.field = field;
  report.is_pure = complex.is_pure();
  if (!report.is_pure) report.witnesses.push_back({{}, -1, "complex is not pure"});

  FaceScan scan = scan_faces(complex, field);
  report.is_manifold = report.is_pure && scan.witnesses.empty();
  for (auto& w : scan.witnesses) report.witnesses.push_back(std::move(w));
  report.boundary = generated_subcomplex(complex, scan.boundary_faces);
  report.connected = is_connected(complex);

  if (!report.has_boundary()) {
    report.boundary_is_closed_manifold = true;
  } else {
    const SimplicialComplex& bd = report.boundary;
    bool ok = bd.is_pure() && bd.dim() == complex.dim() - 1;
    if (ok) {
      FaceScan inner = scan_faces(bd, field);
      ok = inner.witnesses.empty() && inner.boundary_faces.empty();
    }
    report.boundary_is_closed_manifold = ok;
    if (!ok) {
      report.witnesses.push_back(
          {{}, complex.dim() - 1, "boundary is not a closed homology manifold of dimension d-2"});
    }
  }

  if (report.is_manifold && report.connected) {
    const int d = complex.rank();
    if (report.has_boundary()) {
      report.orientable = betti_relative(complex, report.boundary, field)[d - 1] == 1;
    } else {
      const IntSeq b = betti(complex, field);
      report.orientable = b[d - 1] == b[0] + 1;
    }
  }
  std::stable_sort(report.witnesses.begin(), report.witnesses.end(), witness_less);
  return report;
}

}  // namespace

ManifoldReport is_homology_manifold(const SimplicialComplex& complex, const FieldSpec& field) {
  return analyze(complex, field);
}

SimplicialComplex boundary_complex(const SimplicialComplex& complex, const FieldSpec& field) {
  ManifoldReport report = analyze(complex, field);
  if (!report.is_manifold) {
    throw Error(ErrorCode::NotAManifold, "not a homology manifold over " + field.to_string());
  }
  return report.boundary;
}

bool is_orientable(const SimplicialComplex& complex, const FieldSpec& field) {
  ManifoldReport report = analyze(complex, field);
  if (!report.is_manifold) {
    throw Error(ErrorCode::NotAManifold, "not a homology manifold over " + field.to_string());
  }
  if (!report.connected) throw Error(ErrorCode::Disconnected, "orientability needs a connected complex");
  return report.orientable;
}

}  // namespace facenum

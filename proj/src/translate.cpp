#include "smallcancel/generators.hpp"

namespace smallcancel {

FlatResult translate_subcomplex(const TwoComplex& X, const FlatCertificate& cert, int dx, int dy) {
  std::vector<Index> faces;
  std::string missing;
  for (const auto& id : cert.faces) {
    std::string moved = shift_identifier(id, dx, dy);
    auto f = X.find_face(moved);
    if (!f) {
      missing += (missing.empty() ? "" : ", ") + moved;
      continue;
    }
    faces.push_back(*f);
  }
  if (!missing.empty()) throw OutOfPatch("shifted faces outside the patch: " + missing);
  return check_flat(cert.kind, X, Subcomplex(X, std::move(faces)), cert.margin);
}

}  // namespace smallcancel

#pragma once

#include <functional>
#include <stdexcept>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smallcancel/complex.hpp"
#include "smallcancel/flats.hpp"

namespace smallcancel {

enum class Family { Triangular, Square, Hexagonal, QuasiFlatPlane, PaperExample };

std::string_view to_string(Family f);
Family family_from_string(std::string_view s);  // throws std::invalid_argument

using KeepRule = std::function<bool(int, int)>;

struct PatchSpec {
  Family family = Family::Square;
  int radius = 1;
  KeepRule keep;  // quasi-flat family only; null means keep nothing
};

/// A generated complex together with the properties it carries by construction.
struct Patch {
  TwoComplex complex;
  PatchSpec spec;
  std::vector<std::string> assertions;  // e.g. "simply-connected", "C(4)", "T(4)"
  std::optional<std::pair<int, int>> periods;
  std::string base_face;
};

/// Faces within gallery hop distance r of the base face of the infinite tiling.
Patch generate_tiling(Family family, int radius);
Patch generate_quasi_flat_plane(int radius, const KeepRule& keep);
Patch generate_paper_example(int radius);
Patch generate(const PatchSpec& spec);

bool paper_example_keep(int i, int j);

/// Quotient of the periodic complex by m Z x n Z. Throws std::invalid_argument
/// when the periods are too small (or odd, for the paper-example family).
Patch quotient_by_lattice(Family family, int m, int n);

/// Contracts the given edges, merging their endpoints. `naming` receives the
/// sorted identifiers of each merged class and returns the new vertex id.
TwoComplex contract_edges(const TwoComplex& X, const std::vector<std::string>& edges,
                          const std::function<std::string(const std::vector<std::string>&)>& naming = {});

/// Lattice translation of a coordinate-carrying identifier (f_a_b, f_U_a_b,
/// h_a_b, v_i_j, v_i_j_l, v_D_i_j, ...): the first two integer fields move.
std::string shift_identifier(const std::string& id, int dx, int dy);

/// Coordinates (first two integer fields) of a generated identifier.
std::optional<std::pair<int, int>> identifier_coordinates(const std::string& id);

class OutOfPatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Moves a certificate's faces by a lattice vector and re-runs its checker on
/// the shifted faces of X. Throws OutOfPatch if some shifted face is missing.
FlatResult translate_subcomplex(const TwoComplex& X, const FlatCertificate& cert, int dx, int dy);

}  // namespace smallcancel

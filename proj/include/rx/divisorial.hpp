#ifndef RX_DIVISORIAL_HPP
#define RX_DIVISORIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "rx/polytope.hpp"

namespace rx {

/// Concave piecewise-affine function: the minimum of finitely many affine
/// pieces. Identical pieces are deduplicated at construction.
class PiecewiseAffine {
  public:
    explicit PiecewiseAffine(std::vector<AffineFunc> pieces);
    const std::vector<AffineFunc>& pieces() const { return pieces_; }
    Rat value_at(const RatVec& u) const;

  private:
    std::vector<AffineFunc> pieces_;
};

/// A divisorial polytope: a base polytope together with one concave
/// piecewise-affine function per marker; absent markers are identically zero.
/// The reserved marker name "generic" may not appear in the map.
struct DivisorialPolytope {
    Polytope box;
    std::map<std::string, PiecewiseAffine> psi;

    /// Value of the marker's function at u; 0 for absent markers.
    Rat psi_value(const std::string& marker, const RatVec& u) const;
    /// Pointwise sum of all marker functions at u.
    Rat degree_at(const RatVec& u) const;
};

/// One cell of the common refinement: the region where a fixed piece of every
/// marker attains its minimum, with the induced affine degree function.
struct SubdivisionCell {
    Polytope cell;
    std::map<std::string, AffineFunc> active;
    AffineFunc degree;  // sum of the active pieces
};

struct Subdivision {
    std::vector<SubdivisionCell> cells;
    std::vector<RatVec> vertices;  // deduplicated cell vertices, sorted
};

/// Common refinement of the regions of linearity over all markers. Only
/// full-dimensional cells are kept; their interiors are disjoint and their
/// union is the box.
Subdivision refinement(const DivisorialPolytope& dp);

struct DHResult {
    Rat volume;
    RatVec barycenter;
};

/// Volume and barycenter of the measure with density (degree + 2) on the box,
/// integrated exactly cell by cell.
DHResult dh_barycenter_and_volume(const DivisorialPolytope& dp);
DHResult dh_barycenter_and_volume(const DivisorialPolytope& dp, const Subdivision& sub);

struct ValidationReport {
    std::vector<std::string> violations;
    std::vector<std::string> warnings;
    bool ok() const { return violations.empty(); }
};

/// Checks the Fano conditions, report-style: (a) interior lattice origin and
/// lattice box vertices, (b) integral marker values at subdivision vertices,
/// (c) degree >= -2 at box vertices and not identically -2, (d) the shape of
/// each affine piece (advisory warnings only), (e) facets carrying degree
/// > -2 lie at lattice distance one.
ValidationReport validate_fano(const DivisorialPolytope& dp);
ValidationReport validate_fano(const DivisorialPolytope& dp, const Subdivision& sub);

} // namespace rx

#endif

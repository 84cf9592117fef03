#ifndef RX_DEGENERATION_HPP
#define RX_DEGENERATION_HPP

#include <string>
#include <vector>

#include "rx/divisorial.hpp"

namespace rx {

/// Either a marker in the support of psi or the reserved generic point.
struct Label {
    static Label generic() { return Label{true, ""}; }
    static Label marker(std::string name) { return Label{false, std::move(name)}; }
    bool is_generic = false;
    std::string name;
    std::string str() const { return is_generic ? "generic" : name; }
    bool operator==(const Label& o) const = default;
    // markers sort lexicographically, generic last
    bool operator<(const Label& o) const {
        if (is_generic != o.is_generic) return !is_generic;
        return name < o.name;
    }
};

/// Candidates are the support markers plus one generic label; a candidate y
/// survives iff on every refinement cell at most one other marker has a
/// non-integral active gradient.
std::vector<Label> admissible_labels(const DivisorialPolytope& dp);
std::vector<Label> admissible_labels(const DivisorialPolytope& dp, const Subdivision& sub);

/// The degeneration polytope in one dimension higher: convex hull of the
/// upper graph 1 + psi_y and the lower graph -1 - sum_{z != y} psi_z over the
/// subdivision vertices.
Polytope build_delta(const DivisorialPolytope& dp, const Label& y);
Polytope build_delta(const DivisorialPolytope& dp, const Subdivision& sub, const Label& y);

/// Full analysis of one degeneration polytope.
struct Degeneration {
    Label label;
    Polytope delta;
    RatVec bc;                    // uniform-density barycenter
    bool degenerate_center = false;  // bc == 0: ratio 1, never contributes
    Rat t_star;                   // ray parameter of the boundary hit (unset when degenerate)
    RatVec q;                     // t_star * (-bc)
    Cone sigma;                   // outer normals at the minimal face of q
    bool some_ray_in_H = false;
    bool all_rays_in_H = false;
    Rat ratio;                    // t_star / (1 + t_star), or 1 when degenerate
    bool contributes = false;     // = some_ray_in_H
};

/// Requires the origin strictly interior to delta.
Degeneration analyze_degeneration(const Polytope& delta, const Label& label);

/// Membership tests for the open upper halfspace H (last coordinate > 0).
bool some_ray_in_upper(const Cone& c);
bool all_rays_in_upper(const Cone& c);

} // namespace rx

#endif

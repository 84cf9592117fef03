#include "rx/degeneration.hpp"

#include <algorithm>

#include "rx/errors.hpp"

namespace rx {

std::vector<Label> admissible_labels(const DivisorialPolytope& dp) {
    return admissible_labels(dp, refinement(dp));
}

std::vector<Label> admissible_labels(const DivisorialPolytope& dp, const Subdivision& sub) {
    std::vector<Label> candidates;
    for (const auto& [marker, f] : dp.psi) candidates.push_back(Label::marker(marker));
    candidates.push_back(Label::generic());

    std::vector<Label> kept;
    for (const Label& y : candidates) {
        bool ok = true;
        for (const SubdivisionCell& c : sub.cells) {
            int non_integral = 0;
            for (const auto& [marker, g] : c.active) {
                if (!y.is_generic && marker == y.name) continue;
                if (!is_integral(g.gradient)) ++non_integral;
            }
            if (non_integral > 1) {
                ok = false;
                break;
            }
        }
        if (ok) kept.push_back(y);
    }
    return kept;
}

Polytope build_delta(const DivisorialPolytope& dp, const Label& y) {
    return build_delta(dp, refinement(dp), y);
}

Polytope build_delta(const DivisorialPolytope& dp, const Subdivision& sub, const Label& y) {
    std::vector<RatVec> points;
    points.reserve(2 * sub.vertices.size());
    for (const RatVec& u : sub.vertices) {
        Rat psi_y = y.is_generic ? Rat(0) : dp.psi_value(y.name, u);
        Rat upper = Rat(1) + psi_y;
        Rat lower = Rat(-1) - (dp.degree_at(u) - psi_y);
        RatVec top(u), bottom(u);
        top.push_back(upper);
        bottom.push_back(lower);
        points.push_back(std::move(top));
        points.push_back(std::move(bottom));
    }
    return convex_hull(points);
}

Degeneration analyze_degeneration(const Polytope& delta, const Label& label) {
    if (!delta.origin_interior()) throw OriginNotInteriorError("the origin is not strictly interior to degeneration '" + label.str() + "'");

    Degeneration deg;
    deg.label = label;
    deg.delta = delta;

    Moments m = moments_affine_density(delta, AffineFunc{zero_vec(delta.dim()), Rat(1)});
    deg.bc = scale(Rat(1) / m.mass, m.first_moment);

    if (is_zero(deg.bc)) {
        deg.degenerate_center = true;
        deg.ratio = Rat(1);
        deg.contributes = false;
        return deg;
    }

    RayHit hit = ray_boundary_hit(delta, neg(deg.bc));
    deg.t_star = hit.t_star;
    deg.q = hit.point;
    deg.sigma = normal_cone(delta, hit.point);
    deg.some_ray_in_H = some_ray_in_upper(deg.sigma);
    deg.all_rays_in_H = all_rays_in_upper(deg.sigma);
    deg.ratio = deg.t_star / (Rat(1) + deg.t_star);
    deg.contributes = deg.some_ray_in_H;
    return deg;
}

bool some_ray_in_upper(const Cone& c) {
    return std::any_of(c.rays.begin(), c.rays.end(), [](const IntVec& r) { return r.back() > 0; });
}

bool all_rays_in_upper(const Cone& c) {
    if (c.rays.empty()) return false;
    return std::all_of(c.rays.begin(), c.rays.end(), [](const IntVec& r) { return r.back() > 0; });
}

} // namespace rx

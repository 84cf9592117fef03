#include "rx/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "rx/errors.hpp"

namespace rx {

Rat pairing_value(const Polytope& p, const RatVec& b, const RatVec& w, const Rat& t) {
    return t * dot(b, w) + (Rat(1) - t) * support_value(p, w).value;
}

Rat sup_t_nonneg(const Polytope& p, const RatVec& b, const RatVec& w) {
    Rat bw = dot(b, w);
    if (bw >= Rat(0)) return Rat(1);
    Rat h = support_value(p, w).value;
    return h / (h - bw);
}

Rat path_ratio(const PathInstance& inst, const Rat& s) {
    RatVec ws = add(scale(s, inst.n), scale(Rat(1) - s, inst.w));
    Rat bw = dot(inst.b, ws);
    if (!(bw < Rat(0))) throw DirectionNotInDualConeError();
    Rat h = support_value(inst.p, ws).value;
    return h / (h - bw);
}

Rat df_t_product(const Polytope& box, const RatVec& bc_nu, const RatVec& w, const Rat& t) {
    return pairing_value(box, bc_nu, w, t);
}

Rat df_t_nonproduct(const Polytope& delta, const RatVec& v_prime, const Rat& t) {
    Moments m = moments_affine_density(delta, AffineFunc{zero_vec(delta.dim()), Rat(1)});
    RatVec bc = scale(Rat(1) / m.mass, m.first_moment);
    return pairing_value(delta, bc, v_prime, t);
}

Rat base_ratio(const Polytope& box, const RatVec& bc_nu) {
    if (!box.origin_interior()) throw OriginNotInteriorError();
    if (is_zero(bc_nu)) return Rat(1);
    RayHit hit = ray_boundary_hit(box, neg(bc_nu));
    return hit.t_star / (Rat(1) + hit.t_star);
}

std::string RSource::str() const {
    switch (kind) {
        case RSourceKind::Base: return "base";
        case RSourceKind::Semistable: return "semistable";
        case RSourceKind::Degeneration: return "degeneration:" + label.str();
    }
    return "";
}

namespace {

RatVec drop_last(const RatVec& v) { return RatVec(v.begin(), v.end() - 1); }

RxReport assemble(const Polytope& box, const RatVec& bc_nu, std::vector<Degeneration> degs,
                  std::vector<std::string> validation) {
    std::sort(degs.begin(), degs.end(),
              [](const Degeneration& a, const Degeneration& b) { return a.label < b.label; });

    RxReport rep;
    rep.bc_nu = bc_nu;
    rep.base = base_ratio(box, bc_nu);
    rep.degenerations = std::move(degs);
    rep.validation = std::move(validation);

    if (is_zero(bc_nu)) {
        rep.r = Rat(1);
        rep.source = RSource{RSourceKind::Semistable, Label{}};
        return rep;
    }
    rep.r = rep.base;
    rep.source = RSource{RSourceKind::Base, Label{}};
    for (const Degeneration& d : rep.degenerations) {
        if (d.contributes && d.ratio < rep.r) {
            rep.r = d.ratio;
            rep.source = RSource{RSourceKind::Degeneration, d.label};
        }
    }
    return rep;
}

RxReport compute_divisorial(const DivisorialInput& in) {
    const DivisorialPolytope& dp = in.dp;
    if (!dp.box.origin_interior()) throw OriginNotInteriorError("the origin is not strictly interior to the box");

    bool all_minus_two = true;
    for (const RatVec& v : dp.box.vertices()) {
        Rat deg = dp.degree_at(v);
        if (deg < Rat(-2))
            throw std::invalid_argument("divisorial polytope: degree < -2 at box vertex " + vec_str(v));
        if (deg != Rat(-2)) all_minus_two = false;
    }
    if (all_minus_two) throw std::invalid_argument("divisorial polytope: degree identically -2");

    Subdivision sub = refinement(dp);
    DHResult dh = dh_barycenter_and_volume(dp, sub);

    std::vector<Degeneration> degs;
    for (const Label& y : admissible_labels(dp, sub))
        degs.push_back(analyze_degeneration(build_delta(dp, sub, y), y));

    ValidationReport fano = validate_fano(dp, sub);
    std::vector<std::string> validation(fano.violations);
    validation.insert(validation.end(), fano.warnings.begin(), fano.warnings.end());

    return assemble(dp.box, dh.barycenter, std::move(degs), std::move(validation));
}

RxReport compute_degenerations(const DegenerationsInput& in) {
    const Polytope& box = in.box;
    if (!box.origin_interior()) throw OriginNotInteriorError("the origin is not strictly interior to the box");
    if (!in.dh_barycenter && in.deltas.empty())
        throw std::invalid_argument("degenerations input: need dh_barycenter or at least one degeneration");

    std::vector<Degeneration> degs;
    std::vector<std::string> validation;
    for (const DeltaSpec& spec : in.deltas) {
        Polytope delta = convex_hull(spec.vertices);
        if (delta.dim() != box.dim() + 1)
            throw std::invalid_argument("degeneration '" + spec.label + "': expected dimension dim+1");
        degs.push_back(analyze_degeneration(delta, Label::marker(spec.label)));
        if (!(project_drop_last(delta) == box))
            validation.push_back("degeneration '" + spec.label + "' does not project onto the box");
    }

    std::optional<RatVec> bc_nu = in.dh_barycenter;
    for (const Degeneration& d : degs) {
        RatVec projected = drop_last(d.bc);
        if (!bc_nu) {
            bc_nu = projected;
        } else if (*bc_nu != projected) {
            throw InconsistentBarycentersError("degeneration '" + d.label.str() + "' projects its barycenter to " +
                                               vec_str(projected) + ", expected " + vec_str(*bc_nu));
        }
    }
    return assemble(box, *bc_nu, std::move(degs), std::move(validation));
}

} // namespace

RxReport compute_rx(const RxInput& input) {
    if (const auto* div = std::get_if<DivisorialInput>(&input)) return compute_divisorial(*div);
    return compute_degenerations(std::get<DegenerationsInput>(input));
}

} // namespace rx

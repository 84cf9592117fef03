#include "rx/divisorial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "rx/errors.hpp"

namespace rx {

namespace {

// g <= g' as a halfspace in primitive-integer form, or nullopt when the
// gradients agree (then the comparison is trivially true or the cell empty).
std::optional<Halfspace> dominance_halfspace(const AffineFunc& g, const AffineFunc& g_other, bool& infeasible) {
    RatVec n = sub(g.gradient, g_other.gradient);
    Rat c = g_other.constant - g.constant;
    if (is_zero(n)) {
        if (c < Rat(0)) infeasible = true;
        return std::nullopt;
    }
    IntVec prim = primitive(n);
    // scale factor from n to prim is positive, so the inequality keeps direction
    std::size_t k = 0;
    while (prim[k] == 0) ++k;
    Rat factor = Rat(prim[k]) / n[k];
    return Halfspace{prim, c * factor};
}

AffineFunc sum_of(const std::map<std::string, AffineFunc>& active, int dim) {
    AffineFunc total{zero_vec(dim), Rat(0)};
    for (const auto& [marker, g] : active) {
        total.gradient = add(total.gradient, g.gradient);
        total.constant += g.constant;
    }
    return total;
}

} // namespace

PiecewiseAffine::PiecewiseAffine(std::vector<AffineFunc> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw std::invalid_argument("PiecewiseAffine: needs at least one piece");
    const std::size_t d = pieces_[0].gradient.size();
    for (const AffineFunc& g : pieces_)
        if (g.gradient.size() != d) throw std::invalid_argument("PiecewiseAffine: mixed dimensions");
    std::sort(pieces_.begin(), pieces_.end(), [](const AffineFunc& a, const AffineFunc& b) {
        if (a.gradient != b.gradient) return lex_less(a.gradient, b.gradient);
        return a.constant < b.constant;
    });
    pieces_.erase(std::unique(pieces_.begin(), pieces_.end()), pieces_.end());
}

Rat PiecewiseAffine::value_at(const RatVec& u) const {
    Rat best = pieces_[0].value_at(u);
    for (std::size_t i = 1; i < pieces_.size(); ++i) best = min(best, pieces_[i].value_at(u));
    return best;
}

Rat DivisorialPolytope::psi_value(const std::string& marker, const RatVec& u) const {
    auto it = psi.find(marker);
    return it == psi.end() ? Rat(0) : it->second.value_at(u);
}

Rat DivisorialPolytope::degree_at(const RatVec& u) const {
    Rat d(0);
    for (const auto& [marker, f] : psi) d += f.value_at(u);
    return d;
}

Subdivision refinement(const DivisorialPolytope& dp) {
    const int d = dp.box.dim();
    Subdivision sub;

    std::vector<std::string> markers;
    for (const auto& [m, f] : dp.psi) markers.push_back(m);

    std::vector<std::size_t> choice(markers.size(), 0);
    while (true) {
        bool infeasible = false;
        std::vector<Halfspace> cons(dp.box.facets());
        std::map<std::string, AffineFunc> active;
        for (std::size_t mi = 0; mi < markers.size() && !infeasible; ++mi) {
            const auto& pieces = dp.psi.at(markers[mi]).pieces();
            const AffineFunc& g = pieces[choice[mi]];
            active.emplace(markers[mi], g);
            for (std::size_t pi = 0; pi < pieces.size(); ++pi) {
                if (pi == choice[mi]) continue;
                if (auto h = dominance_halfspace(g, pieces[pi], infeasible)) cons.push_back(*h);
                if (infeasible) break;
            }
        }
        if (!infeasible) {
            std::vector<RatVec> verts = hrep_vertices(d, cons);
            if (static_cast<int>(verts.size()) >= d + 1 && affine_rank(verts) == d) {
                SubdivisionCell cell{convex_hull(verts), active, sum_of(active, d)};
                sub.cells.push_back(std::move(cell));
            }
        }
        // next choice tuple
        std::size_t mi = 0;
        for (; mi < markers.size(); ++mi) {
            if (++choice[mi] < dp.psi.at(markers[mi]).pieces().size()) break;
            choice[mi] = 0;
        }
        if (mi == markers.size()) break;
    }

    for (const SubdivisionCell& c : sub.cells)
        for (const RatVec& v : c.cell.vertices()) sub.vertices.push_back(v);
    std::sort(sub.vertices.begin(), sub.vertices.end(), LexLess{});
    sub.vertices.erase(std::unique(sub.vertices.begin(), sub.vertices.end()), sub.vertices.end());

    // The cells must tile the box exactly.
    Rat cell_total(0);
    for (const SubdivisionCell& c : sub.cells) cell_total += volume(c.cell);
    if (cell_total != volume(dp.box)) throw std::logic_error("refinement: cells do not tile the box");

    return sub;
}

DHResult dh_barycenter_and_volume(const DivisorialPolytope& dp) {
    return dh_barycenter_and_volume(dp, refinement(dp));
}

DHResult dh_barycenter_and_volume(const DivisorialPolytope& dp, const Subdivision& sub) {
    const int d = dp.box.dim();
    Rat vol(0);
    RatVec moment = zero_vec(d);
    for (const SubdivisionCell& c : sub.cells) {
        AffineFunc density{c.degree.gradient, c.degree.constant + Rat(2)};
        Moments m = moments_affine_density(c.cell, density);
        vol += m.mass;
        moment = add(moment, m.first_moment);
    }
    if (!(vol > Rat(0))) throw ZeroVolumeError();
    return DHResult{vol, scale(Rat(1) / vol, moment)};
}

ValidationReport validate_fano(const DivisorialPolytope& dp) {
    return validate_fano(dp, refinement(dp));
}

ValidationReport validate_fano(const DivisorialPolytope& dp, const Subdivision& sub) {
    ValidationReport rep;
    auto violation = [&](const std::string& s) { rep.violations.push_back(s); };
    auto warning = [&](const std::string& s) { rep.warnings.push_back(s); };

    // (a) interior lattice origin, lattice vertices
    if (!dp.box.origin_interior())
        violation("(a) the origin is not strictly interior to the box");
    for (const RatVec& v : dp.box.vertices())
        if (!is_integral(v))
            violation("(a) box vertex " + vec_str(v) + " is not a lattice point");

    // (b) integral marker values at subdivision vertices
    for (const auto& [marker, f] : dp.psi)
        for (const RatVec& u : sub.vertices)
            if (!f.value_at(u).is_integer())
                violation("(b) marker '" + marker + "' takes non-integral value " + f.value_at(u).str() +
                          " at subdivision vertex " + vec_str(u));

    // (c) degree >= -2 at box vertices, not identically -2
    bool all_minus_two = true;
    for (const RatVec& v : dp.box.vertices()) {
        Rat deg = dp.degree_at(v);
        if (deg < Rat(-2))
            violation("(c) degree " + deg.str() + " < -2 at box vertex " + vec_str(v));
        if (deg != Rat(-2)) all_minus_two = false;
    }
    if (all_minus_two) violation("(c) degree is identically -2 on the box");

    // (d) piece shape (<v,u> - beta + 1)/beta with beta a positive integer and
    // v = beta*gradient primitive — advisory only.
    for (const auto& [marker, f] : dp.psi) {
        for (const AffineFunc& g : f.pieces()) {
            Rat denom = Rat(1) + g.constant;
            std::string where = "(d) marker '" + marker + "' piece with gradient " + vec_str(g.gradient) +
                                " and constant " + g.constant.str();
            if (denom.is_zero()) {
                warning(where + ": constant -1 admits no positive beta");
                continue;
            }
            Rat beta = Rat(1) / denom;
            if (!(beta > Rat(0)) || !beta.is_integer()) {
                warning(where + ": beta = " + beta.str() + " is not a positive integer");
                continue;
            }
            RatVec v = scale(beta, g.gradient);
            if (!is_integral(v)) {
                warning(where + ": beta*gradient " + vec_str(v) + " is not a lattice vector");
                continue;
            }
            if (is_zero(v)) {
                warning(where + ": beta*gradient is zero, not a primitive lattice vector");
                continue;
            }
            IntVec vi;
            for (const Rat& x : v) vi.push_back(x.num());
            if (content(vi) != 1)
                warning(where + ": beta*gradient " + vec_str(v) + " is not primitive");
        }
    }

    // (e) facets where the degree is not identically -2 sit at lattice distance 1
    for (std::size_t fi = 0; fi < dp.box.facets().size(); ++fi) {
        const Halfspace& h = dp.box.facets()[fi];
        bool deg_minus_two_on_facet = true;
        for (const RatVec& u : sub.vertices) {
            if (dot(h.normal, u) != h.offset) continue;
            if (dp.degree_at(u) != Rat(-2)) {
                deg_minus_two_on_facet = false;
                break;
            }
        }
        if (!deg_minus_two_on_facet && h.offset != Rat(1))
            violation("(e) facet " + vec_str(h.normal) + " <= " + h.offset.str() +
                      " is not at lattice distance 1 from the origin");
    }

    return rep;
}

} // namespace rx

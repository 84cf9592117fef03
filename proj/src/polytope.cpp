#include "rx/polytope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "rx/errors.hpp"

namespace rx {

namespace {

// Oriented supporting plane through the given points, with the reference
// point strictly on the <= side. Points must be affinely independent.
Halfspace plane_through(const std::vector<RatVec>& pts, const RatVec& reference) {
    auto n = hyperplane_normal(pts);
    if (!n) throw std::logic_error("plane_through: affinely dependent points");
    Rat off = dot(*n, pts[0]);
    Rat side = dot(*n, reference);
    if (side == off) throw std::logic_error("plane_through: reference on plane");
    if (side > off) {
        for (Int& x : *n) x = -x;
        off = -off;
    }
    return Halfspace{*n, off};
}

struct WorkFacet {
    Halfspace plane;
    std::vector<int> verts;  // sorted point indices, exactly dim of them
    bool alive = true;
};

} // namespace

Rat Simplex::volume() const {
    const std::size_t d = vertices.empty() ? 0 : vertices[0].size();
    if (vertices.size() != d + 1) throw std::invalid_argument("Simplex: needs dim+1 vertices");
    RatMat rows;
    for (std::size_t i = 1; i < vertices.size(); ++i) rows.push_back(sub(vertices[i], vertices[0]));
    Rat v = det(rows);
    Int fact(1);
    for (std::size_t i = 2; i <= d; ++i) fact *= Int(static_cast<long>(i));
    return v.abs() / Rat(fact);
}

Polytope Polytope::from_points(const std::vector<RatVec>& points) {
    if (points.empty()) throw EmptyInputError("convex_hull: no points");
    const std::size_t d = points[0].size();
    if (d == 0) throw std::invalid_argument("convex_hull: zero-dimensional ambient space");
    for (const RatVec& p : points)
        if (p.size() != d) throw std::invalid_argument("convex_hull: mixed dimensions");

    std::vector<RatVec> pts(points);
    std::sort(pts.begin(), pts.end(), LexLess{});
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    if (pts.size() < d + 1) throw NotFullDimensionalError();

    if (d == 1) {
        Polytope p;
        p.dim_ = 1;
        p.vertices_ = {pts.front(), pts.back()};
        p.facets_ = {Halfspace{IntVec{Int(-1)}, -pts.front()[0]}, Halfspace{IntVec{Int(1)}, pts.back()[0]}};
        p.facet_vertices_ = {{0}, {1}};
        return p;
    }

    // Greedy affinely independent seed simplex.
    std::vector<int> seed{0};
    for (std::size_t i = 1; i < pts.size() && seed.size() < d + 1; ++i) {
        std::vector<RatVec> cand;
        for (int s : seed) cand.push_back(pts[s]);
        cand.push_back(pts[i]);
        if (affine_rank(cand) == static_cast<int>(seed.size())) seed.push_back(static_cast<int>(i));
    }
    if (seed.size() < d + 1) throw NotFullDimensionalError();

    RatVec c0 = zero_vec(static_cast<int>(d));
    for (int s : seed) c0 = add(c0, pts[s]);
    c0 = scale(Rat(1, static_cast<long>(d + 1)), c0);

    std::vector<WorkFacet> facets;
    for (std::size_t drop = 0; drop < seed.size(); ++drop) {
        std::vector<int> idx;
        std::vector<RatVec> fpts;
        for (std::size_t j = 0; j < seed.size(); ++j) {
            if (j == drop) continue;
            idx.push_back(seed[j]);
            fpts.push_back(pts[seed[j]]);
        }
        std::sort(idx.begin(), idx.end());
        facets.push_back(WorkFacet{plane_through(fpts, c0), idx, true});
    }

    std::vector<bool> in_seed(pts.size(), false);
    for (int s : seed) in_seed[s] = true;

    for (std::size_t pi = 0; pi < pts.size(); ++pi) {
        if (in_seed[pi]) continue;
        const RatVec& p = pts[pi];
        std::vector<int> visible;
        for (std::size_t fi = 0; fi < facets.size(); ++fi) {
            if (!facets[fi].alive) continue;
            if (dot(facets[fi].plane.normal, p) > facets[fi].plane.offset)
                visible.push_back(static_cast<int>(fi));
        }
        if (visible.empty()) continue;

        // Ridges of the visible region seen exactly once lie on the horizon.
        std::map<std::vector<int>, int> ridge_count;
        for (int fi : visible) {
            const std::vector<int>& vs = facets[fi].verts;
            for (std::size_t drop = 0; drop < vs.size(); ++drop) {
                std::vector<int> ridge;
                for (std::size_t j = 0; j < vs.size(); ++j)
                    if (j != drop) ridge.push_back(vs[j]);
                ++ridge_count[ridge];
            }
        }
        for (int fi : visible) facets[fi].alive = false;
        for (const auto& [ridge, count] : ridge_count) {
            if (count != 1) continue;
            std::vector<int> idx(ridge);
            idx.push_back(static_cast<int>(pi));
            std::sort(idx.begin(), idx.end());
            std::vector<RatVec> fpts;
            for (int v : idx) fpts.push_back(pts[v]);
            facets.push_back(WorkFacet{plane_through(fpts, c0), idx, true});
        }
    }

    std::vector<Halfspace> planes;
    for (const WorkFacet& f : facets)
        if (f.alive) planes.push_back(f.plane);

    Polytope poly;
    poly.dim_ = static_cast<int>(d);
    poly.finalize(pts, std::move(planes));
    return poly;
}

void Polytope::finalize(const std::vector<RatVec>& points, std::vector<Halfspace> planes) {
    auto plane_less = [](const Halfspace& a, const Halfspace& b) {
        if (a.normal != b.normal) return lex_less(a.normal, b.normal);
        return a.offset < b.offset;
    };
    std::sort(planes.begin(), planes.end(), plane_less);
    planes.erase(std::unique(planes.begin(), planes.end()), planes.end());

    for (const RatVec& p : points)
        for (const Halfspace& h : planes)
            if (dot(h.normal, p) > h.offset)
                throw std::logic_error("convex_hull: point escapes computed facets");

    // A point is a vertex iff its tight facet normals span the ambient space.
    for (const RatVec& p : points) {
        RatMat tight;
        for (const Halfspace& h : planes)
            if (dot(h.normal, p) == h.offset) tight.push_back(rat_vec(h.normal));
        if (tight.size() >= static_cast<std::size_t>(dim_) && rank(tight) == dim_)
            vertices_.push_back(p);
    }

    facets_ = std::move(planes);
    facet_vertices_.assign(facets_.size(), {});
    for (std::size_t fi = 0; fi < facets_.size(); ++fi) {
        std::vector<RatVec> on_facet;
        for (std::size_t vi = 0; vi < vertices_.size(); ++vi) {
            if (dot(facets_[fi].normal, vertices_[vi]) == facets_[fi].offset) {
                facet_vertices_[fi].push_back(static_cast<int>(vi));
                on_facet.push_back(vertices_[vi]);
            }
        }
        if (affine_rank(on_facet) != dim_ - 1)
            throw std::logic_error("convex_hull: facet is not spanned by vertices");
    }
}

bool Polytope::contains(const RatVec& p) const {
    for (const Halfspace& h : facets_)
        if (dot(h.normal, p) > h.offset) return false;
    return true;
}

bool Polytope::strictly_contains(const RatVec& p) const {
    for (const Halfspace& h : facets_)
        if (dot(h.normal, p) >= h.offset) return false;
    return true;
}

std::vector<int> Polytope::tight_facets(const RatVec& p) const {
    std::vector<int> tight;
    for (std::size_t fi = 0; fi < facets_.size(); ++fi) {
        Rat v = dot(facets_[fi].normal, p);
        if (v > facets_[fi].offset) throw FaceNotInPolytopeError();
        if (v == facets_[fi].offset) tight.push_back(static_cast<int>(fi));
    }
    return tight;
}

bool Polytope::origin_interior() const {
    for (const Halfspace& h : facets_)
        if (!(h.offset > Rat(0))) return false;
    return true;
}

RatVec Polytope::vertex_centroid() const {
    RatVec c = zero_vec(dim_);
    for (const RatVec& v : vertices_) c = add(c, v);
    return scale(Rat(1, static_cast<long>(vertices_.size())), c);
}

SupportResult support_value(const Polytope& p, const RatVec& w) {
    if (static_cast<int>(w.size()) != p.dim()) throw std::invalid_argument("support_value: dimension mismatch");
    SupportResult res;
    res.value = dot(p.vertices()[0], w);
    res.vertices = {0};
    for (std::size_t i = 1; i < p.vertices().size(); ++i) {
        Rat v = dot(p.vertices()[i], w);
        if (v > res.value) {
            res.value = v;
            res.vertices = {static_cast<int>(i)};
        } else if (v == res.value) {
            res.vertices.push_back(static_cast<int>(i));
        }
    }
    return res;
}

RayHit ray_boundary_hit(const Polytope& p, const RatVec& dir) {
    if (static_cast<int>(dir.size()) != p.dim())
        throw std::invalid_argument("ray_boundary_hit: dimension mismatch");
    if (is_zero(dir)) throw std::invalid_argument("ray_boundary_hit: zero direction");
    if (!p.origin_interior()) throw OriginNotInteriorError();
    bool found = false;
    Rat best(0);
    for (const Halfspace& h : p.facets()) {
        Rat denom = dot(h.normal, dir);
        if (denom > Rat(0)) {
            Rat t = h.offset / denom;
            if (!found || t < best) {
                best = t;
                found = true;
            }
        }
    }
    if (!found) throw UnboundedDirectionError();
    RayHit hit;
    hit.t_star = best;
    hit.point = scale(best, dir);
    hit.facets = p.tight_facets(hit.point);
    return hit;
}

Cone normal_cone(const Polytope& p, const RatVec& boundary_point) {
    if (!p.contains(boundary_point)) throw FaceNotInPolytopeError();
    Cone cone;
    for (int fi : p.tight_facets(boundary_point)) cone.rays.push_back(p.facets()[fi].normal);
    return cone;
}

std::vector<Simplex> triangulate(const Polytope& p) {
    std::vector<Simplex> out;
    if (p.dim() == 1) {
        out.push_back(Simplex{{p.vertices().front(), p.vertices().back()}});
        return out;
    }
    const RatVec apex = p.vertices()[0];  // lex-min vertex
    for (std::size_t fi = 0; fi < p.facets().size(); ++fi) {
        const std::vector<int>& fverts = p.facet_vertices()[fi];
        if (std::find(fverts.begin(), fverts.end(), 0) != fverts.end()) continue;

        // Drop a coordinate with nonzero normal entry: an affine bijection
        // from the facet hyperplane onto R^{d-1}.
        std::size_t k = 0;
        while (p.facets()[fi].normal[k] == 0) ++k;
        std::map<RatVec, RatVec, LexLess> lift;
        std::vector<RatVec> shadow;
        for (int vi : fverts) {
            const RatVec& v = p.vertices()[vi];
            RatVec s;
            for (std::size_t c = 0; c < v.size(); ++c)
                if (c != k) s.push_back(v[c]);
            lift[s] = v;
            shadow.push_back(s);
        }
        Polytope facet_poly = convex_hull(shadow);
        for (const Simplex& ss : triangulate(facet_poly)) {
            Simplex full;
            full.vertices.push_back(apex);
            for (const RatVec& sv : ss.vertices) full.vertices.push_back(lift.at(sv));
            out.push_back(std::move(full));
        }
    }
    return out;
}

Moments moments_affine_density(const std::vector<Simplex>& cells, const AffineFunc& f) {
    if (cells.empty()) throw std::invalid_argument("moments_affine_density: no cells");
    const std::size_t d = cells[0].vertices[0].size();
    Moments m{Rat(0), zero_vec(static_cast<int>(d))};
    const Rat d1(static_cast<long>(d + 1));
    const Rat d2(static_cast<long>((d + 1) * (d + 2)));
    for (const Simplex& s : cells) {
        Rat vol = s.volume();
        if (vol.is_zero()) continue;
        std::vector<Rat> y;
        y.reserve(s.vertices.size());
        for (const RatVec& v : s.vertices) y.push_back(f.value_at(v));
        Rat ysum(0);
        for (const Rat& yi : y) ysum += yi;
        m.mass += vol * ysum / d1;
        // integral of x*f = sum_{i,j} v_i y_j * vol * (1+delta_ij) / ((d+1)(d+2))
        for (std::size_t i = 0; i < s.vertices.size(); ++i) {
            Rat coeff = (ysum + y[i]) * vol / d2;
            m.first_moment = add(m.first_moment, scale(coeff, s.vertices[i]));
        }
    }
    return m;
}

Moments moments_affine_density(const Polytope& p, const AffineFunc& f) {
    if (static_cast<int>(f.gradient.size()) != p.dim())
        throw std::invalid_argument("moments_affine_density: dimension mismatch");
    return moments_affine_density(triangulate(p), f);
}

Polytope project_drop_last(const Polytope& p) {
    if (p.dim() < 2) throw std::invalid_argument("project_drop_last: dimension must be >= 2");
    std::vector<RatVec> shadow;
    for (const RatVec& v : p.vertices()) shadow.emplace_back(v.begin(), v.end() - 1);
    return convex_hull(shadow);
}

Polytope apply_unimodular(const Polytope& p, const IntMat& u) {
    if (static_cast<int>(u.size()) != p.dim()) throw NotUnimodularError("matrix size mismatch");
    if (!is_unimodular(u)) throw NotUnimodularError();
    std::vector<RatVec> mapped;
    for (const RatVec& v : p.vertices()) mapped.push_back(mat_vec(u, v));
    return convex_hull(mapped);
}

std::vector<RatVec> hrep_vertices(int dim, const std::vector<Halfspace>& halfspaces) {
    const std::size_t d = static_cast<std::size_t>(dim);
    std::vector<RatVec> found;
    std::vector<std::size_t> pick(d);
    auto feasible = [&](const RatVec& x) {
        for (const Halfspace& h : halfspaces)
            if (dot(h.normal, x) > h.offset) return false;
        return true;
    };
    // Enumerate all d-subsets of the constraint set.
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    if (halfspaces.size() < d) return found;
    while (true) {
        RatMat a;
        RatVec b;
        for (std::size_t i : idx) {
            a.push_back(rat_vec(halfspaces[i].normal));
            b.push_back(halfspaces[i].offset);
        }
        if (auto x = solve_square(a, b); x && feasible(*x)) found.push_back(*x);

        // next combination
        std::size_t pos = d;
        while (pos > 0) {
            --pos;
            if (idx[pos] + (d - pos) < halfspaces.size()) break;
            if (pos == 0) {
                std::sort(found.begin(), found.end(), LexLess{});
                found.erase(std::unique(found.begin(), found.end()), found.end());
                return found;
            }
        }
        ++idx[pos];
        for (std::size_t i = pos + 1; i < d; ++i) idx[i] = idx[i - 1] + 1;
    }
}

std::vector<int> boundary_cycle_2d(const Polytope& p) {
    if (p.dim() != 2) throw UnsupportedDimensionError();
    RatVec c = p.vertex_centroid();
    std::vector<int> order(p.vertices().size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    auto half = [&](const RatVec& v) {
        // 0 for angle in [0, pi), 1 for [pi, 2pi): exact half-plane split
        if (v[1] > Rat(0)) return 0;
        if (v[1] < Rat(0)) return 1;
        return v[0] > Rat(0) ? 0 : 1;
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        RatVec va = sub(p.vertices()[a], c), vb = sub(p.vertices()[b], c);
        int ha = half(va), hb = half(vb);
        if (ha != hb) return ha < hb;
        Rat cross = va[0] * vb[1] - va[1] * vb[0];
        return cross > Rat(0);
    });
    return order;
}

Rat volume(const Polytope& p) {
    Rat v(0);
    for (const Simplex& s : triangulate(p)) v += s.volume();
    return v;
}

} // namespace rx

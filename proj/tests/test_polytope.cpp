#include <doctest.h>

#include <algorithm>

#include "rx/errors.hpp"
#include "rx/polytope.hpp"
#include "test_util.hpp"

using namespace rx;
using namespace rxt;

namespace {

bool has_facet(const Polytope& p, const IntVec& normal, const Rat& offset) {
    return std::any_of(p.facets().begin(), p.facets().end(),
                       [&](const Halfspace& h) { return h.normal == normal && h.offset == offset; });
}

} // namespace

TEST_CASE("hull of the square discards the interior point") {
    Polytope p = convex_hull({rv({1, 1}), rv({1, -1}), rv({-1, 1}), rv({-1, -1}), rv({0, 0})});
    CHECK(p.vertices().size() == 4);
    CHECK(p.facets().size() == 4);
    CHECK(has_facet(p, iv({1, 0}), Rat(1)));
    CHECK(has_facet(p, iv({-1, 0}), Rat(1)));
    CHECK(has_facet(p, iv({0, 1}), Rat(1)));
    CHECK(has_facet(p, iv({0, -1}), Rat(1)));
}

TEST_CASE("hull of the 2.30 degeneration has the five expected facets") {
    Polytope d1 = delta1_230();
    CHECK(d1.vertices().size() == 6);
    CHECK(d1.facets().size() == 5);
    CHECK(has_facet(d1, iv({0, 1, 0}), Rat(1)));
    CHECK(has_facet(d1, iv({0, 0, 1}), Rat(1)));
    CHECK(has_facet(d1, iv({-1, -1, -2}), Rat(1)));
    CHECK(has_facet(d1, iv({-1, 1, -2}), Rat(1)));
    CHECK(has_facet(d1, iv({1, 0, 1}), Rat(1)));
}

TEST_CASE("degenerate hulls are rejected") {
    CHECK_THROWS_AS(convex_hull({}), EmptyInputError);
    CHECK_THROWS_AS(convex_hull({rv({0, 0}), rv({1, 1}), rv({2, 2})}), NotFullDimensionalError);
    CHECK_THROWS_AS(convex_hull({rv({0, 0}), rv({1, 1})}), NotFullDimensionalError);
}

TEST_CASE("hull matches brute-force facet enumeration on random clouds") {
    Rng rng(20260808);
    for (int dim = 2; dim <= 4; ++dim) {
        for (int it = 0; it < 12; ++it) {
            std::vector<RatVec> pts;
            for (int i = 0; i < dim + 4; ++i) {
                RatVec p;
                for (int c = 0; c < dim; ++c) p.push_back(rng.rat(-5, 5));
                pts.push_back(p);
            }
            Polytope hull = [&] {
                try {
                    return convex_hull(pts);
                } catch (const NotFullDimensionalError&) {
                    pts.push_back(rv(std::vector<long>(dim, 6)));  // force full rank and retry
                    return convex_hull(pts);
                }
            }();
            // soundness: every input point inside, every vertex an input point
            for (const RatVec& p : pts) CHECK(hull.contains(p));
            for (const RatVec& v : hull.vertices())
                CHECK(std::find(pts.begin(), pts.end(), v) != pts.end());
            // completeness: facets agree with the independent enumeration
            std::vector<Halfspace> expected = brute_force_facets(pts);
            REQUIRE(hull.facets().size() == expected.size());
            for (std::size_t i = 0; i < expected.size(); ++i) {
                CHECK(hull.facets()[i].normal == expected[i].normal);
                CHECK(hull.facets()[i].offset == expected[i].offset);
            }
        }
    }
}

TEST_CASE("support values and attaining faces") {
    Polytope sq = unit_square();
    SupportResult r = support_value(sq, rv({1, 2}));
    CHECK(r.value == Rat(3));
    REQUIRE(r.vertices.size() == 1);
    CHECK(sq.vertices()[r.vertices[0]] == rv({1, 1}));

    Polytope pent = pentagon230();
    r = support_value(pent, rv({0, 1}));
    CHECK(r.value == Rat(1));
    REQUIRE(r.vertices.size() == 2);
    std::vector<RatVec> att{pent.vertices()[r.vertices[0]], pent.vertices()[r.vertices[1]]};
    std::sort(att.begin(), att.end(), LexLess{});
    CHECK(att[0] == rv({-2, 1}));
    CHECK(att[1] == rv({2, 1}));

    CHECK(support_value(delta1_230(), rv({0, 0, 1})).value == Rat(1));
}

TEST_CASE("support function is subadditive and positively homogeneous") {
    Rng rng(7);
    for (int dim = 2; dim <= 4; ++dim) {
        Polytope p = random_polytope(rng, dim);
        for (int it = 0; it < 30; ++it) {
            RatVec w1, w2;
            for (int c = 0; c < dim; ++c) {
                w1.push_back(rng.rat(-4, 4));
                w2.push_back(rng.rat(-4, 4));
            }
            Rat both = support_value(p, add(w1, w2)).value;
            CHECK(both <= support_value(p, w1).value + support_value(p, w2).value);
            Rat lambda = rng.rat(1, 5);
            CHECK(support_value(p, scale(lambda, w1)).value == lambda * support_value(p, w1).value);
        }
    }
}

TEST_CASE("ray boundary hits") {
    Polytope sq = unit_square();
    RayHit hit = ray_boundary_hit(sq, rv({-1, 0}));
    CHECK(hit.t_star == Rat(1));
    CHECK(hit.point == rv({-1, 0}));
    REQUIRE(hit.facets.size() == 1);
    CHECK(sq.facets()[hit.facets[0]].normal == iv({-1, 0}));

    hit = ray_boundary_hit(pentagon230(), rvq({{0, 1}, {6, 23}}));
    CHECK(hit.t_star == Rat(23, 6));
    CHECK(hit.point == rv({0, 1}));

    Polytope d1 = delta1_230();
    hit = ray_boundary_hit(d1, rvq({{0, 1}, {6, 23}, {-19, 92}}));
    CHECK(hit.t_star == Rat(46, 31));
    CHECK(hit.point == rvq({{0, 1}, {12, 31}, {-19, 62}}));
    REQUIRE(hit.facets.size() == 1);
    CHECK(d1.facets()[hit.facets[0]].normal == iv({-1, 1, -2}));
}

TEST_CASE("ray errors") {
    Polytope shifted = convex_hull({rv({0, 0}), rv({2, 0}), rv({0, 2}), rv({2, 2})});
    CHECK_THROWS_AS(ray_boundary_hit(shifted, rv({1, 1})), OriginNotInteriorError);
    CHECK_THROWS_AS(ray_boundary_hit(unit_square(), rv({0, 0})), std::invalid_argument);
}

TEST_CASE("ray hit is on the boundary, and only on the reported face") {
    Rng rng(99);
    for (int dim = 2; dim <= 4; ++dim) {
        for (int it = 0; it < 10; ++it) {
            Polytope p = random_origin_interior_polytope(rng, dim);
            RatVec dir;
            for (int c = 0; c < dim; ++c) dir.push_back(rng.rat(-3, 3));
            if (is_zero(dir)) dir[0] = Rat(1);
            RayHit hit = ray_boundary_hit(p, dir);
            CHECK(p.contains(hit.point));
            CHECK(hit.facets == p.tight_facets(hit.point));
            CHECK(!hit.facets.empty());
            RatVec beyond = scale(hit.t_star + Rat(1), dir);
            CHECK(!p.contains(beyond));
        }
    }
}

TEST_CASE("normal cones at vertices, facets, and boundary points") {
    Polytope sq = unit_square();
    Cone c = normal_cone(sq, rv({1, 1}));
    REQUIRE(c.rays.size() == 2);
    std::vector<IntVec> rays(c.rays);
    std::sort(rays.begin(), rays.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
    CHECK(rays[0] == iv({0, 1}));
    CHECK(rays[1] == iv({1, 0}));

    c = normal_cone(sq, rv({1, 0}));
    REQUIRE(c.rays.size() == 1);
    CHECK(c.rays[0] == iv({1, 0}));

    // centroid of the slanted quadrilateral facet of the 2.30 degeneration
    RatVec centroid = scale(Rat(1, 4), add(add(rv({-3, 0, 1}), rv({3, 0, -2})), add(rv({-2, 1, 1}), rv({2, 1, -1}))));
    c = normal_cone(delta1_230(), centroid);
    REQUIRE(c.rays.size() == 1);
    CHECK(c.rays[0] == iv({-1, 1, -2}));

    CHECK_THROWS_AS(normal_cone(sq, rv({2, 0})), FaceNotInPolytopeError);
}

TEST_CASE("triangulations cover the polytope") {
    auto total = [](const std::vector<Simplex>& ts) {
        Rat v(0);
        for (const Simplex& s : ts) v += s.volume();
        return v;
    };
    CHECK(total(triangulate(unit_square())) == Rat(4));
    CHECK(triangulate(unit_square()).size() == 2);
    CHECK(total(triangulate(delta1_230())) == Rat(23, 3));

    Polytope simplex = convex_hull({rv({0, 0, 0}), rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})});
    auto ts = triangulate(simplex);
    REQUIRE(ts.size() == 1);
    CHECK(ts[0].volume() == Rat(1, 6));
}

TEST_CASE("moments of affine densities over simplices") {
    Polytope tri = convex_hull({rv({0, 0}), rv({1, 0}), rv({0, 1})});
    Moments m = moments_affine_density(tri, AffineFunc{rv({0, 0}), Rat(1)});
    CHECK(m.mass == Rat(1, 2));
    CHECK(m.first_moment == rvq({{1, 6}, {1, 6}}));

    m = moments_affine_density(tri, AffineFunc{rv({1, 0}), Rat(0)});
    CHECK(m.mass == Rat(1, 6));
    CHECK(m.first_moment == rvq({{1, 12}, {1, 24}}));
    CHECK(scale(Rat(1) / m.mass, m.first_moment) == rvq({{1, 2}, {1, 4}}));

    m = moments_affine_density(delta1_230(), AffineFunc{rv({0, 0, 0}), Rat(1)});
    CHECK(m.mass == Rat(23, 3));
    CHECK(scale(Rat(1) / m.mass, m.first_moment) == rvq({{0, 1}, {-6, 23}, {19, 92}}));
}

TEST_CASE("moments are invariant under re-triangulation") {
    Rng rng(4242);
    for (int dim = 2; dim <= 3; ++dim) {
        for (int it = 0; it < 8; ++it) {
            Polytope p = random_polytope(rng, dim);
            RatVec g;
            for (int c = 0; c < dim; ++c) g.push_back(rng.rat(-2, 2));
            AffineFunc f{g, rng.rat(0, 3) + Rat(20)};  // keep density positive
            auto t1 = triangulate(p);
            auto t2 = barycentric_split(t1);
            Moments m1 = moments_affine_density(t1, f);
            Moments m2 = moments_affine_density(t2, f);
            CHECK(m1.mass == m2.mass);
            CHECK(m1.first_moment == m2.first_moment);
        }
    }
}

TEST_CASE("projection drops the last coordinate") {
    CHECK(project_drop_last(delta1_230()) == pentagon230());

    Polytope prism = convex_hull({rv({-1, -1, 0}), rv({-1, 1, 0}), rv({1, -1, 0}), rv({1, 1, 0}),
                                  rv({-1, -1, 1}), rv({-1, 1, 1}), rv({1, -1, 1}), rv({1, 1, 1})});
    CHECK(project_drop_last(prism) == unit_square());

    Polytope wedge = convex_hull({rv({-1, 0}), rv({1, 0}), rv({0, 1})});
    Polytope seg = project_drop_last(wedge);
    CHECK(seg.dim() == 1);
    CHECK(seg.vertices()[0] == rv({-1}));
    CHECK(seg.vertices()[1] == rv({1}));
}

TEST_CASE("unimodular images") {
    Polytope sq = unit_square();
    IntMat id{{Int(1), Int(0)}, {Int(0), Int(1)}};
    CHECK(apply_unimodular(sq, id) == sq);
    IntMat swap{{Int(0), Int(1)}, {Int(1), Int(0)}};
    CHECK(apply_unimodular(sq, swap) == sq);

    IntMat shear{{Int(1), Int(1)}, {Int(0), Int(1)}};
    Polytope sheared = apply_unimodular(pentagon230(), shear);
    const auto& vs = sheared.vertices();
    CHECK(std::find(vs.begin(), vs.end(), rv({-1, 1})) != vs.end());
    CHECK(std::find(vs.begin(), vs.end(), rv({-2, 1})) == vs.end());
    CHECK(vs.size() == 5);

    IntMat bad{{Int(2), Int(0)}, {Int(0), Int(1)}};
    CHECK_THROWS_AS(apply_unimodular(sq, bad), NotUnimodularError);
}

TEST_CASE("mass is unimodular-invariant") {
    Rng rng(515);
    for (int dim = 2; dim <= 3; ++dim) {
        for (int it = 0; it < 6; ++it) {
            Polytope p = random_polytope(rng, dim);
            IntMat u = random_unimodular(rng, dim);
            RatVec g;
            for (int c = 0; c < dim; ++c) g.push_back(rng.rat(-1, 1));
            AffineFunc f{g, Rat(30)};
            // f composed with the inverse map: gradient transforms by inverse-transpose
            IntMat uinv = inverse_unimodular(u);
            AffineFunc f_pullback{mat_vec(transpose(uinv), g), Rat(30)};
            Moments lhs = moments_affine_density(apply_unimodular(p, u), f_pullback);
            Moments rhs = moments_affine_density(p, f);
            CHECK(lhs.mass == rhs.mass);
        }
    }
}

TEST_CASE("hrep vertex enumeration recovers the square") {
    std::vector<Halfspace> hs{{iv({1, 0}), Rat(1)}, {iv({-1, 0}), Rat(1)}, {iv({0, 1}), Rat(1)}, {iv({0, -1}), Rat(1)}};
    auto vs = hrep_vertices(2, hs);
    REQUIRE(vs.size() == 4);
    CHECK(convex_hull(vs) == unit_square());
}

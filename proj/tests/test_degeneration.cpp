#include <doctest.h>

#include <algorithm>

#include "rx/degeneration.hpp"
#include "rx/errors.hpp"
#include "test_util.hpp"

using namespace rx;
using namespace rxt;

namespace {

Polytope segment() { return convex_hull({rv({-1}), rv({1})}); }

AffineFunc af(std::vector<long> grad, long c) { return AffineFunc{rv(std::move(grad)), Rat(c)}; }
AffineFunc afq(std::vector<std::pair<long, long>> grad, long c) {
    return AffineFunc{rvq(std::move(grad)), Rat(c)};
}

DivisorialPolytope symmetric_1d() {
    DivisorialPolytope dp{segment(), {}};
    dp.psi.emplace("0", PiecewiseAffine({af({0}, 0), af({-1}, 0)}));
    dp.psi.emplace("inf", PiecewiseAffine({af({0}, 0), af({1}, 0)}));
    return dp;
}

DivisorialPolytope asymmetric_1d() {
    DivisorialPolytope dp{segment(), {}};
    dp.psi.emplace("0", PiecewiseAffine({af({0}, 0), af({-1}, 0)}));
    return dp;
}

bool has_label(const std::vector<Label>& labels, const Label& y) {
    return std::find(labels.begin(), labels.end(), y) != labels.end();
}

} // namespace

TEST_CASE("labels sort markers first, generic last") {
    CHECK(Label::marker("0") < Label::generic());
    CHECK(Label::marker("0") < Label::marker("inf"));
    CHECK(Label::generic().str() == "generic");
}

TEST_CASE("all labels admissible when every gradient is integral") {
    std::vector<Label> labels = admissible_labels(symmetric_1d());
    REQUIRE(labels.size() == 3);
    CHECK(has_label(labels, Label::marker("0")));
    CHECK(has_label(labels, Label::marker("inf")));
    CHECK(has_label(labels, Label::generic()));
}

TEST_CASE("one non-integral slope per cell is allowed") {
    DivisorialPolytope dp{segment(), {}};
    dp.psi.emplace("0", PiecewiseAffine({af({0}, 0), afq({{-1, 2}}, 0)}));
    dp.psi.emplace("inf", PiecewiseAffine({af({0}, 0), afq({{1, 2}}, 0)}));
    std::vector<Label> labels = admissible_labels(dp);
    REQUIRE(labels.size() == 3);  // each cell sees at most one non-integral z != y
}

TEST_CASE("two coincident non-integral slopes exclude the generic label") {
    DivisorialPolytope dp{segment(), {}};
    dp.psi.emplace("0", PiecewiseAffine({af({0}, 0), afq({{1, 2}}, 0)}));
    dp.psi.emplace("inf", PiecewiseAffine({af({0}, 0), afq({{1, 2}}, 0)}));
    std::vector<Label> labels = admissible_labels(dp);
    REQUIRE(labels.size() == 2);  // cell [-1,0] sees two non-integral gradients
    CHECK(has_label(labels, Label::marker("0")));
    CHECK(has_label(labels, Label::marker("inf")));
    CHECK(!has_label(labels, Label::generic()));
}

TEST_CASE("delta of the symmetric example at marker 0 is the hexagon") {
    Polytope delta = build_delta(symmetric_1d(), Label::marker("0"));
    Polytope hexagon = convex_hull(
        {rv({-1, 1}), rv({0, 1}), rv({1, 0}), rv({1, -1}), rv({0, -1}), rv({-1, 0})});
    CHECK(delta == hexagon);
}

TEST_CASE("delta over an empty psi is the prism") {
    DivisorialPolytope dp{unit_square(), {}};
    Polytope delta = build_delta(dp, Label::generic());
    Polytope cube = convex_hull({rv({-1, -1, -1}), rv({-1, -1, 1}), rv({-1, 1, -1}), rv({-1, 1, 1}),
                                 rv({1, -1, -1}), rv({1, -1, 1}), rv({1, 1, -1}), rv({1, 1, 1})});
    CHECK(delta == cube);
}

TEST_CASE("delta of the asymmetric example is the pentagon") {
    Polytope delta = build_delta(asymmetric_1d(), Label::marker("0"));
    Polytope pentagon =
        convex_hull({rv({-1, 1}), rv({0, 1}), rv({1, 0}), rv({1, -1}), rv({-1, -1})});
    CHECK(delta == pentagon);
}

TEST_CASE("analysis of the 2.30 threefold degeneration") {
    Degeneration deg = analyze_degeneration(delta1_230(), Label::marker("delta_1"));
    CHECK(deg.bc == rvq({{0, 1}, {-6, 23}, {19, 92}}));
    CHECK(!deg.degenerate_center);
    CHECK(deg.t_star == Rat(46, 31));
    CHECK(deg.q == rvq({{0, 1}, {12, 31}, {-19, 62}}));
    REQUIRE(deg.sigma.rays.size() == 1);
    CHECK(deg.sigma.rays[0] == iv({-1, 1, -2}));
    CHECK(!deg.some_ray_in_H);
    CHECK(!deg.all_rays_in_H);
    CHECK(!deg.contributes);
    CHECK(deg.ratio == Rat(46, 77));
}

TEST_CASE("a centrally symmetric delta has bc = 0 and never contributes") {
    Polytope hexagon = convex_hull(
        {rv({-1, 1}), rv({0, 1}), rv({1, 0}), rv({1, -1}), rv({0, -1}), rv({-1, 0})});
    Degeneration deg = analyze_degeneration(hexagon, Label::marker("0"));
    CHECK(deg.degenerate_center);
    CHECK(deg.ratio == Rat(1));
    CHECK(!deg.contributes);
}

TEST_CASE("analysis of a small triangle with upward exit") {
    Polytope tri = convex_hull({rv({1, -2}), rv({1, 1}), rv({-2, 0})});
    Degeneration deg = analyze_degeneration(tri, Label::marker("t"));
    CHECK(deg.bc == rvq({{0, 1}, {-1, 3}}));
    CHECK(deg.t_star == Rat(2));
    CHECK(deg.q == rvq({{0, 1}, {2, 3}}));
    REQUIRE(deg.sigma.rays.size() == 1);
    CHECK(deg.sigma.rays[0] == iv({-1, 3}));
    CHECK(deg.some_ray_in_H);
    CHECK(deg.all_rays_in_H);
    CHECK(deg.contributes);
    CHECK(deg.ratio == Rat(2, 3));
}

TEST_CASE("analysis requires a strictly interior origin") {
    Polytope off = convex_hull({rv({0, 0}), rv({2, 0}), rv({0, 2})});
    CHECK_THROWS_AS(analyze_degeneration(off, Label::generic()), OriginNotInteriorError);
}

TEST_CASE("projection and fiber-length consistency on random divisorial polytopes") {
    Rng rng(2001);
    for (int it = 0; it < 12; ++it) {
        int dim = static_cast<int>(rng.intin(1, 2));
        DivisorialPolytope dp = random_divisorial(rng, dim);
        Subdivision sub = refinement(dp);
        DHResult dh = dh_barycenter_and_volume(dp, sub);
        for (const Label& y : admissible_labels(dp, sub)) {
            Polytope delta = build_delta(dp, sub, y);
            CHECK(project_drop_last(delta) == dp.box);
            Moments m = moments_affine_density(delta, AffineFunc{zero_vec(delta.dim()), Rat(1)});
            CHECK(m.mass == dh.volume);
            RatVec bc = scale(Rat(1) / m.mass, m.first_moment);
            CHECK(RatVec(bc.begin(), bc.end() - 1) == dh.barycenter);
        }
    }
}

TEST_CASE("ratio equals the euclidean |q| / |q - bc| numerically") {
    Rng rng(2002);
    int checked = 0;
    for (int it = 0; it < 40 && checked < 20; ++it) {
        int dim = static_cast<int>(rng.intin(2, 3));
        Polytope delta = random_origin_interior_polytope(rng, dim);
        Degeneration deg = analyze_degeneration(delta, Label::generic());
        if (deg.degenerate_center) continue;
        ++checked;
        auto norm = [](const RatVec& v) {
            double s = 0;
            for (const Rat& x : v) s += x.to_double() * x.to_double();
            return std::sqrt(s);
        };
        double lhs = deg.ratio.to_double();
        double rhs = norm(deg.q) / norm(sub(deg.q, deg.bc));
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
    CHECK(checked > 0);
}

TEST_CASE("halfspace membership agrees with brute-force nonnegative combinations") {
    Rng rng(2003);
    for (int it = 0; it < 50; ++it) {
        int dim = static_cast<int>(rng.intin(2, 4));
        Cone cone;
        int nrays = static_cast<int>(rng.intin(1, 4));
        for (int r = 0; r < nrays; ++r) {
            RatVec v;
            for (int c = 0; c < dim; ++c) v.push_back(Rat(rng.intin(-3, 3)));
            if (is_zero(v)) v[0] = Rat(1);
            cone.rays.push_back(primitive(v));
        }
        // exhaust all small nonnegative coefficient tuples: a combination with
        // positive last coordinate exists iff some generator has one
        bool expect_some = false;
        std::vector<long> coeff(cone.rays.size(), 0);
        for (;;) {
            Rat last(0);
            for (std::size_t r = 0; r < cone.rays.size(); ++r)
                last += Rat(coeff[r]) * Rat(cone.rays[r].back());
            if (last > Rat(0)) {
                expect_some = true;
                break;
            }
            std::size_t pos = 0;
            while (pos < coeff.size() && ++coeff[pos] > 3) coeff[pos++] = 0;
            if (pos == coeff.size()) break;
        }
        CHECK(some_ray_in_upper(cone) == expect_some);
        if (all_rays_in_upper(cone)) CHECK(some_ray_in_upper(cone));
    }
}

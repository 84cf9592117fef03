#include <doctest.h>

#include <cmath>

#include "rx/divisorial.hpp"
#include "rx/oracle.hpp"
#include "test_util.hpp"

using namespace rx;
using namespace rxt;

namespace {

// Flattens a divisorial polytope's density 2 + deg psi into a double-valued
// evaluator, independent of the refinement machinery.
std::function<double(const std::vector<double>&)> density_of(const DivisorialPolytope& dp) {
    std::vector<std::vector<std::pair<std::vector<double>, double>>> markers;
    for (const auto& [name, f] : dp.psi) {
        std::vector<std::pair<std::vector<double>, double>> pieces;
        for (const AffineFunc& g : f.pieces()) pieces.emplace_back(to_double(g.gradient), g.constant.to_double());
        markers.push_back(std::move(pieces));
    }
    return [markers](const std::vector<double>& x) {
        double deg = 0.0;
        for (const auto& pieces : markers) {
            double best = 0.0;
            bool first = true;
            for (const auto& [grad, c] : pieces) {
                double v = c;
                for (std::size_t i = 0; i < grad.size(); ++i) v += grad[i] * x[i];
                best = first ? v : std::min(best, v);
                first = false;
            }
            deg += best;
        }
        return deg + 2.0;
    };
}

double uniform_density(const std::vector<double>&) { return 1.0; }

} // namespace

TEST_CASE("identical configs give identical oracle output") {
    Polytope tri = convex_hull({rv({0, 0}), rv({1, 0}), rv({0, 1})});
    OracleConfig cfg{42, 20000, 1000};
    McMoments a = mc_moments(tri, uniform_density, cfg);
    McMoments b = mc_moments(tri, uniform_density, cfg);
    CHECK(a.mass == b.mass);
    CHECK(a.barycenter == b.barycenter);
    OracleConfig other{43, 20000, 1000};
    CHECK(mc_moments(tri, uniform_density, other).mass != a.mass);
}

TEST_CASE("monte carlo mass of the unit triangle") {
    Polytope tri = convex_hull({rv({0, 0}), rv({1, 0}), rv({0, 1})});
    OracleConfig cfg{7, 100000, 1000};
    McMoments m = mc_moments(tri, uniform_density, cfg);
    CHECK(std::abs(m.mass - 0.5) < 4 * m.mass_stderr);
    CHECK(std::abs(m.barycenter[0] - 1.0 / 3.0) < 0.01);
    CHECK(std::abs(m.barycenter[1] - 1.0 / 3.0) < 0.01);
}

TEST_CASE("monte carlo barycenter of the 2.30 degeneration") {
    OracleConfig cfg{11, 100000, 1000};
    McMoments m = mc_moments(delta1_230(), uniform_density, cfg);
    CHECK(std::abs(m.barycenter[0] - 0.0) < 0.02);
    CHECK(std::abs(m.barycenter[1] - (-6.0 / 23.0)) < 0.02);
    CHECK(std::abs(m.barycenter[2] - (19.0 / 92.0)) < 0.02);
}

TEST_CASE("monte carlo agrees with the exact dh integrals") {
    DivisorialPolytope dp{convex_hull({rv({-1}), rv({1})}), {}};
    dp.psi.emplace("0", PiecewiseAffine({AffineFunc{rv({0}), Rat(0)}, AffineFunc{rv({-1}), Rat(0)}}));
    OracleConfig cfg{13, 100000, 1000};
    McMoments m = mc_moments(dp.box, density_of(dp), cfg);
    CHECK(std::abs(m.mass - 3.5) < 4 * m.mass_stderr);
    CHECK(std::abs(m.barycenter[0] - (-2.0 / 21.0)) < 0.01);
}

TEST_CASE("monte carlo vs exact on random divisorial polytopes") {
    Rng rng(5001);
    for (int it = 0; it < 50; ++it) {
        int dim = static_cast<int>(rng.intin(1, 2));
        DivisorialPolytope dp = random_divisorial(rng, dim);
        DHResult dh = dh_barycenter_and_volume(dp);
        OracleConfig cfg{static_cast<std::uint64_t>(9000 + it), 30000, 1000};
        McMoments m = mc_moments(dp.box, density_of(dp), cfg);
        CHECK(std::abs(m.mass - dh.volume.to_double()) < 4 * m.mass_stderr + 1e-9);
    }
}

TEST_CASE("degenerate bounding boxes are rejected") {
    // a segment in 1-d cannot degenerate, so fabricate a thin box query via dim-2 hull
    Polytope tri = convex_hull({rv({0, 0}), rv({1, 0}), rv({0, 1})});
    OracleConfig cfg{1, 10, 10};
    CHECK_NOTHROW(mc_moments(tri, uniform_density, cfg));
}

TEST_CASE("grid search for the sup over t") {
    OracleConfig cfg{1, 100, 1000};
    double g = grid_sup_t(unit_square(), rvq({{1, 2}, {0, 1}}), rv({-1, 0}), cfg);
    CHECK(std::abs(g - 2.0 / 3.0) <= 2.0 / 1000.0);
    g = grid_sup_t(pentagon230(), rvq({{0, 1}, {-6, 23}}), rv({0, 1}), cfg);
    CHECK(std::abs(g - 23.0 / 29.0) <= 2.0 / 1000.0);
    g = grid_sup_t(unit_square(), rvq({{1, 2}, {0, 1}}), rv({1, 0}), cfg);
    CHECK(g == 1.0);
}

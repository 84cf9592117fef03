#include "rx/oracle.hpp"

#include <cmath>
#include <random>

#include "rx/errors.hpp"

namespace rx {

namespace {

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

McMoments mc_moments(const Polytope& p, const std::function<double(const std::vector<double>&)>& density,
                     const OracleConfig& cfg) {
    const int d = p.dim();
    std::vector<double> lo(d), hi(d);
    for (int c = 0; c < d; ++c) {
        lo[c] = p.vertices()[0][c].to_double();
        hi[c] = lo[c];
        for (const RatVec& v : p.vertices()) {
            lo[c] = std::min(lo[c], v[c].to_double());
            hi[c] = std::max(hi[c], v[c].to_double());
        }
        if (!(hi[c] > lo[c])) throw DegenerateBoundingBoxError();
    }
    double box_vol = 1.0;
    for (int c = 0; c < d; ++c) box_vol *= hi[c] - lo[c];

    std::vector<std::vector<double>> normals;
    std::vector<double> offsets;
    for (const Halfspace& h : p.facets()) {
        std::vector<double> n;
        n.reserve(h.normal.size());
        for (const Int& x : h.normal) n.push_back(x.get_d());
        normals.push_back(std::move(n));
        offsets.push_back(h.offset.to_double());
    }

    std::mt19937_64 rng(cfg.seed);
    std::vector<double> x(d);
    double sum = 0.0, sum_sq = 0.0;
    std::vector<double> weighted(d, 0.0);
    for (std::size_t it = 0; it < cfg.samples; ++it) {
        for (int c = 0; c < d; ++c) x[c] = lo[c] + (hi[c] - lo[c]) * uniform01(rng);
        bool inside = true;
        for (std::size_t f = 0; f < normals.size() && inside; ++f) {
            double s = 0.0;
            for (int c = 0; c < d; ++c) s += normals[f][c] * x[c];
            inside = s <= offsets[f];
        }
        double val = inside ? density(x) : 0.0;
        sum += val;
        sum_sq += val * val;
        if (inside)
            for (int c = 0; c < d; ++c) weighted[c] += val * x[c];
    }

    const double n = static_cast<double>(cfg.samples);
    McMoments out;
    out.mass = box_vol * sum / n;
    double variance = sum_sq / n - (sum / n) * (sum / n);
    out.mass_stderr = box_vol * std::sqrt(std::max(variance, 0.0) / n);
    out.barycenter.assign(d, 0.0);
    if (sum != 0.0)
        for (int c = 0; c < d; ++c) out.barycenter[c] = weighted[c] / sum;
    return out;
}

double grid_sup_t(const Polytope& p, const RatVec& b, const RatVec& w, const OracleConfig& cfg) {
    double max_val = dot(p.vertices()[0], w).to_double();
    for (const RatVec& v : p.vertices()) max_val = std::max(max_val, dot(v, w).to_double());
    double bw = dot(b, w).to_double();
    double best = -1.0;
    for (std::size_t i = 0; i <= cfg.grid_steps; ++i) {
        double t = static_cast<double>(i) / static_cast<double>(cfg.grid_steps);
        if (t * bw + (1.0 - t) * max_val >= 0.0) best = t;
    }
    return best < 0.0 ? 0.0 : best;
}

} // namespace rx

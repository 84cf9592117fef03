#ifndef RX_ORACLE_HPP
#define RX_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "rx/polytope.hpp"

namespace rx {

/// Deterministic floating-point oracles used to cross-check the exact engine.
/// PRNG: std::mt19937_64 seeded with `seed`, consumed sequentially; uniform
/// doubles are built from the top 53 bits, so identical configs give
/// identical streams on any conforming platform.
struct OracleConfig {
    std::uint64_t seed = 1;
    std::size_t samples = 100000;
    std::size_t grid_steps = 1000;
};

struct McMoments {
    double mass = 0.0;
    std::vector<double> barycenter;
    double mass_stderr = 0.0;
};

/// Rejection-sampling estimate of the integral of `density` over P and of the
/// density-weighted barycenter.
McMoments mc_moments(const Polytope& p, const std::function<double(const std::vector<double>&)>& density,
                     const OracleConfig& cfg);

/// Largest t on the uniform grid {i/steps} with the pairing value >= 0,
/// evaluated in floating point. Returns 0.0 when no grid point qualifies.
double grid_sup_t(const Polytope& p, const RatVec& b, const RatVec& w, const OracleConfig& cfg);

} // namespace rx

#endif

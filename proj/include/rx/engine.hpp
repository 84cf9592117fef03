#ifndef RX_ENGINE_HPP
#define RX_ENGINE_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rx/degeneration.hpp"

namespace rx {

/// t <b, w> + (1 - t) max_{x in P} <x, w> : the pairing whose sign change in t
/// drives every ratio in the engine.
Rat pairing_value(const Polytope& p, const RatVec& b, const RatVec& w, const Rat& t);

/// sup { t in [0,1] : pairing_value(P, b, w, t) >= 0 } in closed form:
/// 1 when <b, w> >= 0, else max / (max - <b, w>).
Rat sup_t_nonneg(const Polytope& p, const RatVec& b, const RatVec& w);

/// A ray-to-normal interpolation instance: directions w(s) = s*n + (1-s)*w
/// must pair positively with -b.
struct PathInstance {
    Polytope p;
    RatVec b;  // interior, nonzero
    RatVec n;  // outer normal at the boundary hit of the ray through -b
    RatVec w;
};
/// Ratio h / (h - <b, w(s)>) with h the support value in direction w(s).
/// Strictly decreasing in s away from the normal cone of the hit point.
Rat path_ratio(const PathInstance& inst, const Rat& s);

/// Twisted invariant of a product configuration in combinatorial form.
Rat df_t_product(const Polytope& box, const RatVec& bc_nu, const RatVec& w, const Rat& t);

/// Twisted invariant of a non-product configuration with toric special fiber.
Rat df_t_nonproduct(const Polytope& delta, const RatVec& v_prime, const Rat& t);

/// t* / (1 + t*) for the boundary hit of the ray through -bc_nu; 1 when
/// bc_nu = 0. Requires the origin strictly interior.
Rat base_ratio(const Polytope& box, const RatVec& bc_nu);

struct DivisorialInput {
    DivisorialPolytope dp;
};
struct DeltaSpec {
    std::string label;
    std::vector<RatVec> vertices;
};
struct DegenerationsInput {
    Polytope box;
    std::optional<RatVec> dh_barycenter;
    std::vector<DeltaSpec> deltas;
};
using RxInput = std::variant<DivisorialInput, DegenerationsInput>;

enum class RSourceKind { Base, Degeneration, Semistable };
struct RSource {
    RSourceKind kind = RSourceKind::Base;
    Label label;  // set for Degeneration
    std::string str() const;
};

struct RxReport {
    RatVec bc_nu;
    Rat base;
    std::vector<Degeneration> degenerations;  // sorted by label
    Rat r;
    RSource source;
    std::vector<std::string> validation;
};

/// Top-level computation: base ratio plus the ratios of every contributing
/// degeneration, minimized. Semistable inputs (bc_nu = 0) return 1.
RxReport compute_rx(const RxInput& input);

} // namespace rx

#endif

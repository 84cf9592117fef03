#ifndef RX_POLYTOPE_HPP
#define RX_POLYTOPE_HPP

#include <vector>

#include "rx/linalg.hpp"

namespace rx {

/// The closed halfspace {x : <normal, x> <= offset}. Normals are primitive
/// integer vectors; offsets stay rational.
struct Halfspace {
    IntVec normal;
    Rat offset;
    bool operator==(const Halfspace& o) const { return normal == o.normal && offset == o.offset; }
};

/// A polyhedral cone given by generators (for our faces: the primitive outer
/// normals of the facets through the face).
struct Cone {
    std::vector<IntVec> rays;
};

struct Simplex {
    std::vector<RatVec> vertices;  // dim+1 affinely independent points
    Rat volume() const;            // Lebesgue: |det| / dim!
};

/// u |-> <gradient, u> + constant
struct AffineFunc {
    RatVec gradient;
    Rat constant;
    Rat value_at(const RatVec& u) const { return dot(gradient, u) + constant; }
    bool operator==(const AffineFunc& o) const {
        return gradient == o.gradient && constant == o.constant;
    }
};

/// A full-dimensional convex polytope carrying both representations.
/// Vertices are sorted lexicographically and facets by (normal, offset), so
/// equal point sets produce identical objects regardless of input order.
class Polytope {
  public:
    Polytope() = default;  // empty placeholder; every real instance comes from from_points

    /// Exact convex hull (incremental facet enumeration). Discards interior
    /// and non-extreme boundary points. Throws EmptyInputError and
    /// NotFullDimensionalError.
    static Polytope from_points(const std::vector<RatVec>& points);

    int dim() const { return dim_; }
    const std::vector<RatVec>& vertices() const { return vertices_; }
    const std::vector<Halfspace>& facets() const { return facets_; }
    /// Sorted vertex indices tight on each facet, parallel to facets().
    const std::vector<std::vector<int>>& facet_vertices() const { return facet_vertices_; }

    bool contains(const RatVec& p) const;
    bool strictly_contains(const RatVec& p) const;
    /// Indices of facets tight at p; p must satisfy every facet inequality.
    std::vector<int> tight_facets(const RatVec& p) const;
    /// True iff every facet offset is positive.
    bool origin_interior() const;
    RatVec vertex_centroid() const;
    bool operator==(const Polytope& o) const { return dim_ == o.dim_ && vertices_ == o.vertices_; }

  private:
    void finalize(const std::vector<RatVec>& points, std::vector<Halfspace> planes);
    int dim_ = 0;
    std::vector<RatVec> vertices_;
    std::vector<Halfspace> facets_;
    std::vector<std::vector<int>> facet_vertices_;
};

inline Polytope convex_hull(const std::vector<RatVec>& points) { return Polytope::from_points(points); }

struct SupportResult {
    Rat value;
    std::vector<int> vertices;  // indices of the vertices attaining the max
};
/// max_{x in P} <x, w> together with the attaining (minimal) face.
SupportResult support_value(const Polytope& p, const RatVec& w);

struct RayHit {
    Rat t_star;
    RatVec point;
    std::vector<int> facets;  // tight facets at the hit: the minimal face
};
/// First boundary point of the ray {t*dir : t >= 0}. Requires the origin
/// strictly interior and dir != 0.
RayHit ray_boundary_hit(const Polytope& p, const RatVec& dir);

/// Cone generated by the primitive outer normals of all facets through the
/// minimal face containing the given boundary point.
Cone normal_cone(const Polytope& p, const RatVec& boundary_point);

/// Simplices with disjoint interiors covering P (fan from the lex-min vertex).
std::vector<Simplex> triangulate(const Polytope& p);

struct Moments {
    Rat mass;            // integral of f
    RatVec first_moment; // integral of x*f(x), componentwise
};
/// Exact integrals of an affine density over P, via the barycentric monomial
/// formulas per simplex. Independent of the triangulation used.
Moments moments_affine_density(const Polytope& p, const AffineFunc& f);
Moments moments_affine_density(const std::vector<Simplex>& cells, const AffineFunc& f);

/// Image of P under dropping the last coordinate.
Polytope project_drop_last(const Polytope& p);

/// Image of P under a unimodular integer matrix.
Polytope apply_unimodular(const Polytope& p, const IntMat& u);

/// All vertices of the (assumed bounded) intersection of halfspaces, by basis
/// enumeration. Intended for the small systems of the refinement subdivision.
std::vector<RatVec> hrep_vertices(int dim, const std::vector<Halfspace>& halfspaces);

/// Vertex indices of a 2-d polytope in counterclockwise boundary order.
std::vector<int> boundary_cycle_2d(const Polytope& p);

Rat volume(const Polytope& p);

} // namespace rx

#endif

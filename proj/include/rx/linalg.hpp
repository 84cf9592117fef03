#ifndef RX_LINALG_HPP
#define RX_LINALG_HPP

#include <optional>
#include <string>
#include <vector>

#include "rx/rational.hpp"

namespace rx {

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;
using RatMat = std::vector<RatVec>;  // row-major
using IntMat = std::vector<IntVec>;  // row-major

RatVec rat_vec(const IntVec& v);
RatVec zero_vec(int dim);
bool is_zero(const RatVec& v);
bool is_zero(const IntVec& v);

Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const IntVec& a, const RatVec& b);
Int dot(const IntVec& a, const IntVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec neg(const RatVec& a);
RatVec scale(const Rat& c, const RatVec& v);

bool lex_less(const RatVec& a, const RatVec& b);
bool lex_less(const IntVec& a, const IntVec& b);
struct LexLess {
    bool operator()(const RatVec& a, const RatVec& b) const { return lex_less(a, b); }
    bool operator()(const IntVec& a, const IntVec& b) const { return lex_less(a, b); }
};
std::string vec_str(const RatVec& v);
std::string vec_str(const IntVec& v);
std::vector<double> to_double(const RatVec& v);

/// gcd of the absolute values of the entries (0 for the zero vector).
Int content(const IntVec& v);
/// Clears denominators and divides by the content. The zero vector is rejected.
/// The sign of the input direction is preserved.
IntVec primitive(const RatVec& v);
bool is_integral(const RatVec& v);

Rat det(RatMat a);
int rank(RatMat a);
/// Rank of {p_i - p_0}: r+1 affinely independent points have affine_rank r.
int affine_rank(const std::vector<RatVec>& pts);
/// Unique solution of the square system a·x = b, or nullopt if singular.
std::optional<RatVec> solve_square(RatMat a, RatVec b);
std::optional<RatMat> inverse(const RatMat& a);

RatVec mat_vec(const RatMat& m, const RatVec& v);
RatVec mat_vec(const IntMat& m, const RatVec& v);
RatMat transpose(const RatMat& m);
IntMat transpose(const IntMat& m);
RatMat rat_mat(const IntMat& m);

bool is_unimodular(const IntMat& u);
/// Exact inverse of a unimodular integer matrix (throws NotUnimodularError).
IntMat inverse_unimodular(const IntMat& u);

/// A primitive normal of the hyperplane through d affinely independent points
/// in dimension d; nullopt if the points are affinely dependent.
std::optional<IntVec> hyperplane_normal(const std::vector<RatVec>& pts);

} // namespace rx

#endif

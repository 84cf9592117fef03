#include "rx/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rx {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

Int gcd_int(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int lcm_int(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

} // namespace

RatVec rat_vec(const IntVec& v) {
    RatVec r;
    r.reserve(v.size());
    for (const Int& x : v) r.emplace_back(x);
    return r;
}

RatVec zero_vec(int dim) { return RatVec(static_cast<std::size_t>(dim), Rat(0)); }

bool is_zero(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_zero(); });
}

bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Rat dot(const RatVec& a, const RatVec& b) {
    require_same_dim(a.size(), b.size(), "dot");
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
    require_same_dim(a.size(), b.size(), "dot");
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

Int dot(const IntVec& a, const IntVec& b) {
    require_same_dim(a.size(), b.size(), "dot");
    Int s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec add(const RatVec& a, const RatVec& b) {
    require_same_dim(a.size(), b.size(), "add");
    RatVec r(a);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
    require_same_dim(a.size(), b.size(), "sub");
    RatVec r(a);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

RatVec neg(const RatVec& a) {
    RatVec r;
    r.reserve(a.size());
    for (const Rat& x : a) r.push_back(-x);
    return r;
}

RatVec scale(const Rat& c, const RatVec& v) {
    RatVec r;
    r.reserve(v.size());
    for (const Rat& x : v) r.push_back(c * x);
    return r;
}

bool lex_less(const RatVec& a, const RatVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_less(const IntVec& a, const IntVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string vec_str(const RatVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ")";
    return os.str();
}

std::string vec_str(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get_str();
    os << ")";
    return os.str();
}

std::vector<double> to_double(const RatVec& v) {
    std::vector<double> r;
    r.reserve(v.size());
    for (const Rat& x : v) r.push_back(x.to_double());
    return r;
}

Int content(const IntVec& v) {
    Int g(0);
    for (const Int& x : v) g = gcd_int(g, x);
    return g;
}

IntVec primitive(const RatVec& v) {
    Int l(1);
    for (const Rat& x : v) l = lcm_int(l, x.den());
    IntVec w;
    w.reserve(v.size());
    for (const Rat& x : v) w.push_back(x.num() * (l / x.den()));
    Int g = content(w);
    if (g == 0) throw std::invalid_argument("primitive: zero vector");
    for (Int& x : w) x /= g;
    return w;
}

bool is_integral(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_integer(); });
}

Rat det(RatMat a) {
    const std::size_t n = a.size();
    for (const RatVec& row : a) require_same_dim(row.size(), n, "det");
    Rat d(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            d = -d;
        }
        d *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            Rat f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return d;
}

int rank(RatMat a) {
    if (a.empty()) return 0;
    const std::size_t cols = a[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t piv = row;
        while (piv < a.size() && a[piv][col].is_zero()) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[row]);
        for (std::size_t r = row + 1; r < a.size(); ++r) {
            if (a[r][col].is_zero()) continue;
            Rat f = a[r][col] / a[row][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
        }
        ++row;
    }
    return static_cast<int>(row);
}

int affine_rank(const std::vector<RatVec>& pts) {
    if (pts.empty()) return -1;
    RatMat diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
    return rank(diffs);
}

std::optional<RatVec> solve_square(RatMat a, RatVec b) {
    const std::size_t n = a.size();
    require_same_dim(b.size(), n, "solve_square");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            Rat f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    RatVec x(n, Rat(0));
    for (std::size_t i = n; i-- > 0;) {
        Rat s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
        x[i] = s / a[i][i];
    }
    return x;
}

std::optional<RatMat> inverse(const RatMat& a) {
    const std::size_t n = a.size();
    RatMat cols;
    for (std::size_t j = 0; j < n; ++j) {
        RatVec e(n, Rat(0));
        e[j] = Rat(1);
        auto x = solve_square(a, e);
        if (!x) return std::nullopt;
        cols.push_back(*x);
    }
    RatMat inv(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = cols[j][i];
    return inv;
}

RatVec mat_vec(const RatMat& m, const RatVec& v) {
    RatVec r;
    r.reserve(m.size());
    for (const RatVec& row : m) r.push_back(dot(row, v));
    return r;
}

RatVec mat_vec(const IntMat& m, const RatVec& v) {
    RatVec r;
    r.reserve(m.size());
    for (const IntVec& row : m) r.push_back(dot(row, v));
    return r;
}

RatMat transpose(const RatMat& m) {
    if (m.empty()) return {};
    RatMat t(m[0].size(), RatVec(m.size(), Rat(0)));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

IntMat transpose(const IntMat& m) {
    if (m.empty()) return {};
    IntMat t(m[0].size(), IntVec(m.size(), Int(0)));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

RatMat rat_mat(const IntMat& m) {
    RatMat r;
    r.reserve(m.size());
    for (const IntVec& row : m) r.push_back(rat_vec(row));
    return r;
}

bool is_unimodular(const IntMat& u) {
    if (u.empty()) return false;
    for (const IntVec& row : u)
        if (row.size() != u.size()) return false;
    Rat d = det(rat_mat(u));
    return d == Rat(1) || d == Rat(-1);
}

IntMat inverse_unimodular(const IntMat& u) {
    if (!is_unimodular(u)) throw NotUnimodularError();
    auto inv = inverse(rat_mat(u));
    IntMat r;
    for (const RatVec& row : *inv) {
        IntVec irow;
        for (const Rat& x : row) {
            if (!x.is_integer()) throw NotUnimodularError("inverse is not integral");
            irow.push_back(x.num());
        }
        r.push_back(irow);
    }
    return r;
}

std::optional<IntVec> hyperplane_normal(const std::vector<RatVec>& pts) {
    if (pts.empty()) return std::nullopt;
    const std::size_t d = pts[0].size();
    if (pts.size() != d) throw std::invalid_argument("hyperplane_normal: need exactly dim points");
    if (d == 1) return IntVec{Int(1)};
    RatMat a;
    for (std::size_t i = 1; i < d; ++i) a.push_back(sub(pts[i], pts[0]));
    // Reduced row echelon form of the (d-1) x d difference matrix.
    std::size_t row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < d && row < a.size(); ++col) {
        std::size_t piv = row;
        while (piv < a.size() && a[piv][col].is_zero()) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[row]);
        Rat p = a[row][col];
        for (std::size_t c = 0; c < d; ++c) a[row][c] /= p;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            Rat f = a[r][col];
            for (std::size_t c = 0; c < d; ++c) a[r][c] -= f * a[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (row != d - 1) return std::nullopt;  // points affinely dependent
    std::vector<bool> is_pivot(d, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (free_col < d && is_pivot[free_col]) ++free_col;
    RatVec n(d, Rat(0));
    n[free_col] = Rat(1);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) n[pivot_col[r]] = -a[r][free_col];
    return primitive(n);
}

} // namespace rx

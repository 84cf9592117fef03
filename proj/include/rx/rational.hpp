#ifndef RX_RATIONAL_HPP
#define RX_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <ostream>
#include <string>
#include <utility>

#include "rx/errors.hpp"

namespace rx {

using Int = mpz_class;

/// Exact rational scalar. Canonical by construction: lowest terms, positive
/// denominator. All arithmetic is exact; division by zero throws.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}          // NOLINT: implicit by design
    Rat(long n) : v_(long(n)) {}   // NOLINT
    Rat(const Int& n) : v_(n) {}   // NOLINT
    Rat(const Int& num, const Int& den) {
        if (den == 0) throw DivisionByZeroError();
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rat(long num, long den) : Rat(Int(num), Int(den)) {}

    /// Strict parser for the interchange format: "p" or "p/q", base 10,
    /// optional leading minus on p only, q > 0. "1/0" is rejected.
    static Rat parse(const std::string& s) {
        auto fail = [&](const char* why) -> Rat {
            throw RationalParseError("bad rational '" + s + "': " + why);
        };
        std::size_t i = 0;
        bool neg = false;
        if (i < s.size() && s[i] == '-') {
            neg = true;
            ++i;
        }
        std::size_t num_start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == num_start) return fail("expected digits");
        std::string num = s.substr(num_start, i - num_start);
        std::string den = "1";
        if (i < s.size()) {
            if (s[i] != '/') return fail("unexpected character");
            ++i;
            std::size_t den_start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == den_start) return fail("expected digits after '/'");
            if (i != s.size()) return fail("unexpected trailing characters");
            den = s.substr(den_start);
            if (den.find_first_not_of('0') == std::string::npos) return fail("zero denominator");
        }
        Int n(num, 10);
        if (neg) n = -n;
        return Rat(n, Int(den, 10));
    }

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }
    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    Rat abs() const { return from_mpq(::abs(v_)); }

    /// Canonical string, "p" or "p/q": the interchange format.
    std::string str() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }

    Rat operator-() const { return from_mpq(-v_); }
    Rat operator+(const Rat& o) const { return from_mpq(v_ + o.v_); }
    Rat operator-(const Rat& o) const { return from_mpq(v_ - o.v_); }
    Rat operator*(const Rat& o) const { return from_mpq(v_ * o.v_); }
    Rat operator/(const Rat& o) const {
        if (o.v_ == 0) throw DivisionByZeroError();
        return from_mpq(v_ / o.v_);
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }
    bool operator<=(const Rat& o) const { return v_ <= o.v_; }
    bool operator>(const Rat& o) const { return v_ > o.v_; }
    bool operator>=(const Rat& o) const { return v_ >= o.v_; }

  private:
    static Rat from_mpq(mpq_class q) {
        Rat r;
        r.v_ = std::move(q);  // results of mpq arithmetic are canonical
        return r;
    }
    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

} // namespace rx

#endif

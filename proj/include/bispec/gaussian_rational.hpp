#pragma once

#include <gmpxx.h>
#include <string>
#include <string_view>

#include "bispec/errors.hpp"

namespace bispec {

/// Exact element of Q(i): re + im*i with both parts arbitrary-precision rationals.
/// Both parts are kept in GMP canonical form (lowest terms, positive denominator);
/// zero is always (0/1, 0/1).
class GR {
  public:
    GR() : re_(0), im_(0) {}
    GR(long n) : re_(n), im_(0) {}
    GR(long num, long den);
    explicit GR(const mpq_class& re) : re_(re), im_(0) {}
    GR(const mpq_class& re, const mpq_class& im) : re_(re), im_(im) {}

    static GR i() { return GR(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GR conj() const { return GR(re_, -im_); }
    /// re^2 + im^2, exact.
    mpq_class norm2() const { return re_ * re_ + im_ * im_; }

    GR operator-() const { return GR(-re_, -im_); }
    GR operator+(const GR& o) const { return GR(re_ + o.re_, im_ + o.im_); }
    GR operator-(const GR& o) const { return GR(re_ - o.re_, im_ - o.im_); }
    GR operator*(const GR& o) const;
    GR operator/(const GR& o) const;
    GR inv() const;

    GR& operator+=(const GR& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GR& operator-=(const GR& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GR& operator*=(const GR& o) { *this = *this * o; return *this; }

    bool operator==(const GR& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GR& o) const { return !(*this == o); }

    /// Total order used for canonical bases: real part first, then imaginary.
    bool operator<(const GR& o) const {
        int c = cmp(re_, o.re_);
        if (c != 0) return c < 0;
        return cmp(im_, o.im_) < 0;
    }

    /// Canonical text form: "0", "5/6", "i", "-2i", "1/2+3/4i", "1/2-i".
    std::string str() const;
    /// Inverse of str(); rejects anything else.
    static GR parse(std::string_view s);

    double to_double() const { return re_.get_d(); }

  private:
    mpq_class re_, im_;
};

inline GR::GR(long num, long den) : re_(num, den), im_(0) {
    if (den == 0) throw DivisionByZero();
    re_.canonicalize();
}

inline GR GR::operator*(const GR& o) const {
    // Pure-real operands dominate in practice; skip the imaginary work for them.
    if (sgn(im_) == 0 && sgn(o.im_) == 0) return GR(re_ * o.re_);
    if (sgn(im_) == 0) return GR(mpq_class(re_ * o.re_), mpq_class(re_ * o.im_));
    if (sgn(o.im_) == 0) return GR(mpq_class(re_ * o.re_), mpq_class(im_ * o.re_));
    return GR(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
}

inline GR GR::inv() const {
    if (is_zero()) throw DivisionByZero();
    if (sgn(im_) == 0) return GR(mpq_class(1 / re_));
    mpq_class n = norm2();
    return GR(mpq_class(re_ / n), mpq_class(-im_ / n));
}

inline GR GR::operator/(const GR& o) const { return *this * o.inv(); }

std::string to_string(const GR& v);

} // namespace bispec

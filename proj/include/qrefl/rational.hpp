#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

#include "qrefl/errors.hpp"

namespace qrefl {

// Exact complex rational re + im*i. Both parts are GMP rationals kept in
// canonical lowest-terms form, so operator== is structural equality.
class GaussRational {
public:
    GaussRational() : re_(0), im_(0) {}
    GaussRational(long n) : re_(n), im_(0) {}
    GaussRational(mpq_class re, mpq_class im = 0)
        : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussRational ratio(long num, long den) {
        if (den == 0) throw Error("DivisionByZero", "zero denominator");
        return GaussRational(mpq_class(num, den));
    }
    // num/den * i
    static GaussRational imag_ratio(long num = 1, long den = 1) {
        if (den == 0) throw Error("DivisionByZero", "zero denominator");
        return GaussRational(0, mpq_class(num, den));
    }
    static GaussRational i() { return imag_ratio(1, 1); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
        return GaussRational(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
        return GaussRational(a.re_ - b.re_, a.im_ - b.im_);
    }
    GaussRational operator-() const { return GaussRational(-re_, -im_); }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return GaussRational(a.re_ * b.re_ - a.im_ * b.im_,
                             a.re_ * b.im_ + a.im_ * b.re_);
    }
    GaussRational& operator+=(const GaussRational& o) { return *this = *this + o; }
    GaussRational& operator-=(const GaussRational& o) { return *this = *this - o; }
    GaussRational& operator*=(const GaussRational& o) { return *this = *this * o; }

    GaussRational conj() const { return GaussRational(re_, -im_); }
    mpq_class norm2() const { return re_ * re_ + im_ * im_; }

    GaussRational inverse() const {
        if (is_zero()) throw Error("DivisionByZero", "inverse of zero");
        mpq_class n = norm2();
        return GaussRational(re_ / n, -im_ / n);
    }
    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
        return a * b.inverse();
    }

    // Integer power; negative exponents go through inverse().
    GaussRational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        GaussRational acc(1), base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) {
        return !(a == b);
    }

    std::complex<double> to_complex() const {
        return {re_.get_d(), im_.get_d()};
    }

    std::string to_string() const {
        if (im_ == 0) return re_.get_str();
        std::string im_part = im_.get_str() + "i";
        if (re_ == 0) return im_part;
        if (im_ > 0) return re_.get_str() + "+" + im_part;
        return re_.get_str() + im_part;
    }

private:
    mpq_class re_, im_;
};

} // namespace qrefl

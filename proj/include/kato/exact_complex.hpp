#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "kato/rational.hpp"

namespace kato {

// Gaussian rational: the coefficient field for all symbolic work.
// Arithmetic is exact; equality is decidable.
class ExactComplex {
public:
    ExactComplex() : re_(0), im_(0) {}
    ExactComplex(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
    ExactComplex(Rational re, Rational im = Rational(0))
        : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static ExactComplex zero() { return ExactComplex(); }
    static ExactComplex one() { return ExactComplex(1); }
    static ExactComplex i() { return ExactComplex(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool isZero() const { return re_ == 0 && im_ == 0; }
    bool isReal() const { return im_ == 0; }

    // |z|^2 as an exact rational.
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    ExactComplex conj() const { return ExactComplex(re_, -im_); }

    // Throws MathError on zero.
    ExactComplex inverse() const;

    // Exact square root within Q(i) when one exists.
    std::optional<ExactComplex> sqrtInField() const;

    ExactComplex operator-() const { return ExactComplex(-re_, -im_); }

    ExactComplex& operator+=(const ExactComplex& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    ExactComplex& operator-=(const ExactComplex& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    ExactComplex& operator*=(const ExactComplex& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
    friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
    friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
    friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
        return a * b.inverse();
    }
    friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }

    // Serialization: "p/q+r/s*i" with lowest-terms rationals; pure-real values
    // print as "p/q", pure-imaginary as "r/s*i", and zero as "0".
    std::string str() const;
    static ExactComplex parse(const std::string& s);

    double reDouble() const { return re_.get_d(); }
    double imDouble() const { return im_.get_d(); }

private:
    Rational re_;
    Rational im_;
};

std::ostream& operator<<(std::ostream& os, const ExactComplex& z);

}  // namespace kato

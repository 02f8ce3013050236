#pragma once

#include "kato/exact_complex.hpp"

namespace kato {

// Quadratic extension Q(i)[w]/(w^2 - d), built on demand for conjugacy tests
// at loci like a1^2 = -1/2 that have no Gaussian-rational solution.
//
// A value is a + b*w. The defining constant d travels with each value; values
// with b == 0 are compatible with any extension, and mixing two distinct
// non-trivial extensions is an error.
class QuadExt {
public:
    QuadExt() : a_(), b_(), d_() {}
    QuadExt(long v) : a_(v), b_(), d_() {}  // NOLINT: implicit by design
    explicit QuadExt(ExactComplex a) : a_(std::move(a)), b_(), d_() {}
    QuadExt(ExactComplex a, ExactComplex b, ExactComplex d)
        : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
        if (b_.isZero()) d_ = ExactComplex();
    }

    static QuadExt zero() { return QuadExt(); }
    static QuadExt one() { return QuadExt(1); }
    // The adjoined root w of w^2 = d.
    static QuadExt root(const ExactComplex& d) {
        return QuadExt(ExactComplex(), ExactComplex::one(), d);
    }

    const ExactComplex& base() const { return a_; }
    const ExactComplex& rootPart() const { return b_; }

    bool isZero() const { return a_.isZero() && b_.isZero(); }

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        ExactComplex d = mergeD(x, y);
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        ExactComplex d = mergeD(x, y);
        return QuadExt(x.a_ - y.a_, x.b_ - y.b_, d);
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        ExactComplex d = mergeD(x, y);
        return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }

    QuadExt inverse() const {
        if (isZero()) throw MathError("division by zero in QuadExt");
        // (a + bw)^-1 = (a - bw) / (a^2 - b^2 d); the denominator vanishes
        // only if d is a square in Q(i), which defeats the extension.
        ExactComplex n = a_ * a_ - b_ * b_ * d_;
        if (n.isZero()) throw MathError("defining constant of QuadExt is a square; inverse degenerates");
        ExactComplex ninv = n.inverse();
        return QuadExt(a_ * ninv, -b_ * ninv, d_);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    std::string str() const {
        if (b_.isZero()) return a_.str();
        std::string out = "(" + a_.str() + ")+(" + b_.str() + ")*w[w^2=" + d_.str() + "]";
        return out;
    }

private:
    static ExactComplex mergeD(const QuadExt& x, const QuadExt& y) {
        if (x.b_.isZero()) return y.d_;
        if (y.b_.isZero()) return x.d_;
        if (x.d_ != y.d_) throw MathError("mixing values from different quadratic extensions");
        return x.d_;
    }

    ExactComplex a_;
    ExactComplex b_;
    ExactComplex d_;
};

inline std::ostream& operator<<(std::ostream& os, const QuadExt& v) { return os << v.str(); }

}  // namespace kato

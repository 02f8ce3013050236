#pragma once

#include <array>
#include <string>
#include <utility>

#include "kato/series.hpp"

namespace kato {

template <Field K>
struct Mat2 {
    K a, b, c, d;  // row-major [[a, b], [c, d]]

    K trace() const { return a + d; }
    K det() const { return a * d - b * c; }
    bool invertible() const { return !det().isZero(); }

    Mat2 inverse() const {
        K dt = det();
        if (dt.isZero()) throw MathError("singular 2x2 matrix");
        K di = dt.inverse();
        return Mat2{d * di, -b * di, -c * di, a * di};
    }
    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                    x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

// A pair of truncated bivariate series: the objects F, sigma, phi live here.
// Germs fix the origin unless explicitly flagged affine-shifted; the shifted
// variant carries its constant term and is used by the non-minimal (b != 0)
// and hypersurface paths.
template <Field K>
class Germ2 {
public:
    Germ2() : f1_(), f2_(), affine_(false) {}

    Germ2(Series2<K> f1, Series2<K> f2, bool affineShifted = false)
        : f1_(std::move(f1)), f2_(std::move(f2)), affine_(affineShifted) {
        if (!affine_ && (!f1_.at(0, 0).isZero() || !f2_.at(0, 0).isZero()))
            throw InputError("germ does not fix the origin; pass affineShifted=true to allow this");
    }

    static Germ2 identity(int order) {
        return Germ2(Series2<K>::monomial(1, 0, K::one(), order),
                     Series2<K>::monomial(0, 1, K::one(), order));
    }

    const Series2<K>& f1() const { return f1_; }
    const Series2<K>& f2() const { return f2_; }
    bool affineShifted() const { return affine_; }
    bool isExact() const { return f1_.isExact() && f2_.isExact(); }
    int order() const { return std::min(f1_.order(), f2_.order()); }

    Germ2 truncated(int newOrder) const {
        return Germ2(f1_.truncated(newOrder), f2_.truncated(newOrder), affine_);
    }

    Mat2<K> jacobianAtZero() const {
        return Mat2<K>{f1_.at(1, 0), f1_.at(0, 1), f2_.at(1, 0), f2_.at(0, 1)};
    }

    std::pair<K, K> constantTerm() const { return {f1_.at(0, 0), f2_.at(0, 0)}; }

    std::pair<K, K> evaluated(const K& z1, const K& z2) const {
        return {f1_.evaluated(z1, z2), f2_.evaluated(z1, z2)};
    }

    std::string str() const { return "(" + f1_.str() + ", " + f2_.str() + ")"; }

private:
    Series2<K> f1_;
    Series2<K> f2_;
    bool affine_;
};

// outer(inner): substitution performed exactly, truncated to the minimum
// order. An affine-shifted inner is accepted only when the outer components
// are exact polynomials; feeding it to a pure truncation is rejected.
template <Field K>
Germ2<K> germ_compose(const Germ2<K>& outer, const Germ2<K>& inner) {
    bool innerShifted = !inner.f1().at(0, 0).isZero() || !inner.f2().at(0, 0).isZero();
    if (innerShifted && !outer.isExact())
        throw MathError(
            "order mismatch: affine-shifted inner germ composed into a truncated outer germ");
    Series2<K> g1 = outer.f1().composed(inner.f1(), inner.f2());
    Series2<K> g2 = outer.f2().composed(inner.f1(), inner.f2());
    bool shifted = !g1.at(0, 0).isZero() || !g2.at(0, 0).isZero();
    return Germ2<K>(std::move(g1), std::move(g2), shifted);
}

// Compositional inverse of an origin-fixing germ with invertible linear part,
// computed by Newton-style correction degree by degree.
template <Field K>
Germ2<K> germ_inverse(const Germ2<K>& g) {
    if (g.affineShifted() || !g.constantTerm().first.isZero() || !g.constantTerm().second.isZero())
        throw MathError("germ_inverse requires an origin-fixing germ");
    Mat2<K> L = g.jacobianAtZero();
    if (!L.invertible()) throw MathError("germ_inverse: singular linear part");
    Mat2<K> Li = L.inverse();

    int order = g.order();
    if (g.isExact()) order = std::max(g.f1().degree(), g.f2().degree());  // inverse is a series anyway

    auto linApply = [&](const Mat2<K>& m, const Series2<K>& s1, const Series2<K>& s2) {
        return std::make_pair(s1.scaled(m.a) + s2.scaled(m.b), s1.scaled(m.c) + s2.scaled(m.d));
    };

    Series2<K> z1 = Series2<K>::monomial(1, 0, K::one(), order);
    Series2<K> z2 = Series2<K>::monomial(0, 1, K::one(), order);
    auto [h1, h2] = linApply(Li, z1, z2);
    Germ2<K> gt = g.truncated(order);

    for (int it = 0; it < order; ++it) {
        Germ2<K> h(h1, h2);
        Germ2<K> r = germ_compose(gt, h);
        Series2<K> e1 = r.f1() - z1;
        Series2<K> e2 = r.f2() - z2;
        if (e1.isZeroValue() && e2.isZeroValue()) break;
        auto [d1, d2] = linApply(Li, e1, e2);
        h1 = h1 - d1;
        h2 = h2 - d2;
    }
    return Germ2<K>(h1, h2);
}

}  // namespace kato

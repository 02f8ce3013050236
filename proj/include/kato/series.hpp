#pragma once

#include <algorithm>
#include <concepts>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kato/error.hpp"

namespace kato {

template <typename K>
concept Field = requires(K a, K b) {
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a.inverse() } -> std::convertible_to<K>;
    { a.isZero() } -> std::convertible_to<bool>;
    { a == b } -> std::convertible_to<bool>;
    { K::zero() } -> std::convertible_to<K>;
    { K::one() } -> std::convertible_to<K>;
    { a.str() } -> std::convertible_to<std::string>;
};

// Order value meaning "this series is an exact polynomial, not a truncation".
inline constexpr int kExactOrder = 1 << 28;

// Truncated bivariate formal power series over an exact field K.
// Coefficients are stored densely by total degree: monomial z1^j z2^k with
// d = j + k lives at offset d(d+1)/2 + k. Everything with j + k > degreeCap()
// is identically zero; for truncated series the tail is unknown rather than
// zero, and `order` records the truncation degree (inclusive).
template <Field K>
class Series2 {
public:
    Series2() : order_(0), maxDeg_(0), c_(1, K::zero()) {}

    explicit Series2(int order) : order_(order), maxDeg_(capFor(order, 0)), c_(size(maxDeg_), K::zero()) {
        if (order < 0) throw InputError("negative series order");
    }

    static Series2 zero(int order) { return Series2(order); }

    static Series2 constant(const K& v, int order) {
        Series2 s(order);
        s.set(0, 0, v);
        return s;
    }

    static Series2 monomial(int j, int k, const K& v, int order) {
        Series2 s(order);
        s.set(j, k, v);
        return s;
    }

    // Exact polynomial (order = kExactOrder); storage sized by its degree.
    static Series2 polynomial() {
        Series2 s;
        s.order_ = kExactOrder;
        return s;
    }

    int order() const { return order_; }
    bool isExact() const { return order_ == kExactOrder; }
    int degreeCap() const { return isExact() ? maxDeg_ : std::min(order_, maxDeg_); }

    const K& at(int j, int k) const {
        if (j < 0 || k < 0 || j + k > degreeCap()) return zeroK();
        return c_[idx(j + k, k)];
    }

    void set(int j, int k, const K& v) {
        if (j < 0 || k < 0) throw InputError("negative exponent");
        if (!isExact() && j + k > order_) {
            if (!v.isZero()) throw InputError("coefficient beyond truncation order");
            return;
        }
        ensureDeg(j + k);
        c_[idx(j + k, k)] = v;
    }

    void add(int j, int k, const K& v) { set(j, k, at(j, k) + v); }

    bool isZeroValue() const {
        for (const K& v : c_)
            if (!v.isZero()) return false;
        return true;
    }

    // Lowest total degree with a nonzero coefficient; -1 for the zero series.
    int valuation() const {
        for (int d = 0; d <= degreeCap(); ++d)
            for (int k = 0; k <= d; ++k)
                if (!c_[idx(d, k)].isZero()) return d;
        return -1;
    }

    // Actual degree of the stored polynomial part.
    int degree() const {
        for (int d = degreeCap(); d >= 0; --d)
            for (int k = 0; k <= d; ++k)
                if (!c_[idx(d, k)].isZero()) return d;
        return 0;
    }

    Series2 truncated(int newOrder) const {
        if (newOrder >= order_) return *this;
        Series2 out(newOrder);
        for (int d = 0; d <= std::min(degreeCap(), newOrder); ++d)
            for (int k = 0; k <= d; ++k) out.c_[idx(d, k)] = c_[idx(d, k)];
        return out;
    }

    Series2 operator-() const {
        Series2 out = *this;
        for (K& v : out.c_) v = -v;
        return out;
    }

    friend Series2 operator+(const Series2& a, const Series2& b) { return combined(a, b, false); }
    friend Series2 operator-(const Series2& a, const Series2& b) { return combined(a, b, true); }

    friend Series2 operator*(const Series2& a, const Series2& b) {
        int order = std::min(a.order_, b.order_);
        Series2 out;
        out.order_ = order;
        int cap = std::min(a.degree() + b.degree(), order == kExactOrder ? a.degree() + b.degree() : order);
        out.ensureDeg(std::max(cap, 0));
        for (int da = 0; da <= a.degreeCap(); ++da)
            for (int ka = 0; ka <= da; ++ka) {
                const K& va = a.c_[idx(da, ka)];
                if (va.isZero()) continue;
                for (int db = 0; db + da <= cap && db <= b.degreeCap(); ++db)
                    for (int kb = 0; kb <= db; ++kb) {
                        const K& vb = b.c_[idx(db, kb)];
                        if (vb.isZero()) continue;
                        out.c_[idx(da + db, ka + kb)] = out.c_[idx(da + db, ka + kb)] + va * vb;
                    }
            }
        return out;
    }

    Series2 scaled(const K& v) const {
        Series2 out = *this;
        for (K& c : out.c_) c = c * v;
        return out;
    }

    // Substitution f(s1, s2). Truncation is sound when either this series is
    // exact, or the substituted pair has no constant term.
    Series2 composed(const Series2& s1, const Series2& s2) const {
        bool shifted = !s1.at(0, 0).isZero() || !s2.at(0, 0).isZero();
        if (shifted && !isExact())
            throw MathError(
                "affine-shifted series substituted into a truncation; "
                "the result would be invalid at every degree");
        int order = std::min({order_, s1.order_, s2.order_});
        int cap;
        if (order == kExactOrder)
            cap = degree() * std::max({s1.degree(), s2.degree(), 1});
        else
            cap = order;

        Series2 out;
        out.order_ = order;
        out.ensureDeg(cap);

        // Row-by-row Horner in s1 with cached powers of s2.
        std::vector<Series2> pow2(1, constantLike(K::one(), order, cap));
        for (int k = 1; k <= degree(); ++k) pow2.push_back(clip(pow2.back() * s2, order, cap));

        Series2 acc = constantLike(K::zero(), order, cap);
        for (int j = degree(); j >= 0; --j) {
            Series2 row = constantLike(K::zero(), order, cap);
            for (int k = 0; j + k <= degree(); ++k) {
                const K& v = at(j, k);
                if (!v.isZero()) row = row + pow2[k].scaled(v);
            }
            if (j == degree())
                acc = row;
            else
                acc = clip(acc * s1, order, cap) + row;
        }
        return clip(acc, order, cap);
    }

    // Exact evaluation at a point (used for the hypersurface tests).
    K evaluated(const K& z1, const K& z2) const {
        std::vector<K> p2(degreeCap() + 1, K::one());
        for (int k = 1; k <= degreeCap(); ++k) p2[k] = p2[k - 1] * z2;
        K acc = K::zero();
        for (int j = degreeCap(); j >= 0; --j) {
            K row = K::zero();
            for (int k = 0; j + k <= degreeCap(); ++k) {
                const K& v = at(j, k);
                if (!v.isZero()) row = row + v * p2[k];
            }
            acc = acc * z1 + row;
        }
        return acc;
    }

    Series2 d1() const {  // d/dz1
        Series2 out;
        out.order_ = isExact() ? kExactOrder : std::max(order_ - 1, 0);
        out.ensureDeg(std::max(degreeCap() - 1, 0));
        for (int d = 1; d <= degreeCap(); ++d)
            for (int k = 0; k < d; ++k) {
                const K& v = c_[idx(d, k)];
                if (!v.isZero()) out.set(d - 1 - k, k, mulInt(v, d - k));
            }
        return out;
    }

    Series2 d2() const {  // d/dz2
        Series2 out;
        out.order_ = isExact() ? kExactOrder : std::max(order_ - 1, 0);
        out.ensureDeg(std::max(degreeCap() - 1, 0));
        for (int d = 1; d <= degreeCap(); ++d)
            for (int k = 1; k <= d; ++k) {
                const K& v = c_[idx(d, k)];
                if (!v.isZero()) out.set(d - k, k - 1, mulInt(v, k));
            }
        return out;
    }

    // Value equality on the shared domain plus identical truncation order.
    friend bool operator==(const Series2& a, const Series2& b) {
        if (a.order_ != b.order_) return false;
        int cap = std::max(a.degreeCap(), b.degreeCap());
        for (int d = 0; d <= cap; ++d)
            for (int k = 0; k <= d; ++k)
                if (!(a.at(d - k, k) == b.at(d - k, k))) return false;
        return true;
    }
    friend bool operator!=(const Series2& a, const Series2& b) { return !(a == b); }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (int d = 0; d <= degreeCap(); ++d)
            for (int k = 0; k <= d; ++k) {
                const K& v = c_[idx(d, k)];
                if (v.isZero()) continue;
                if (!first) os << " + ";
                first = false;
                os << "(" << v.str() << ")";
                if (d - k > 0) os << "*z1^" << (d - k);
                if (k > 0) os << "*z2^" << k;
            }
        if (first) os << "0";
        if (!isExact()) os << " +O(deg " << order_ + 1 << ")";
        return os.str();
    }

private:
    static int size(int deg) { return (deg + 1) * (deg + 2) / 2; }
    static int idx(int d, int k) { return d * (d + 1) / 2 + k; }
    static int capFor(int order, int deg) { return order == kExactOrder ? deg : order; }

    static const K& zeroK() {
        static const K z = K::zero();
        return z;
    }

    static K mulInt(const K& v, int n) {
        K acc = K::zero();
        K base = v;
        int m = n;
        while (m > 0) {
            if (m & 1) acc = acc + base;
            base = base + base;
            m >>= 1;
        }
        return acc;
    }

    void ensureDeg(int deg) {
        if (deg > maxDeg_) {
            maxDeg_ = deg;
            c_.resize(size(maxDeg_), K::zero());
        }
    }

    static Series2 constantLike(const K& v, int order, int cap) {
        Series2 s;
        s.order_ = order;
        s.ensureDeg(cap);
        s.c_[0] = v;
        return s;
    }

    static Series2 clip(Series2 s, int order, int cap) {
        if (s.degreeCap() <= cap) {
            s.order_ = order;
            return s;
        }
        Series2 out;
        out.order_ = order;
        out.ensureDeg(cap);
        for (int d = 0; d <= cap; ++d)
            for (int k = 0; k <= d; ++k) out.c_[idx(d, k)] = s.c_[idx(d, k)];
        return out;
    }

    static Series2 combined(const Series2& a, const Series2& b, bool sub) {
        int order = std::min(a.order_, b.order_);
        Series2 out;
        out.order_ = order;
        int cap = std::max(a.degreeCap(), b.degreeCap());
        if (order != kExactOrder) cap = std::min(cap, order);
        out.ensureDeg(cap);
        for (int d = 0; d <= cap; ++d)
            for (int k = 0; k <= d; ++k) {
                const K& x = a.at(d - k, k);
                const K& y = b.at(d - k, k);
                out.c_[idx(d, k)] = sub ? x - y : x + y;
            }
        return out;
    }

    int order_;
    int maxDeg_;
    std::vector<K> c_;
};

}  // namespace kato

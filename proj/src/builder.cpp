#include "kato/builder.hpp"

#include <cmath>

namespace kato {

namespace {

using CSeries = Series2<ExactComplex>;
using CGerm = Germ2<ExactComplex>;

// Chart map of Pi_i read in the chart of O_i, landing in the chart of O_{i-1}
// shifted to that point: (uv + a, v + b) from the unprimed chart,
// (v + a, uv + b) from the primed one. Exact polynomials.
CGerm chart_map(Chart inputChart, const ExactComplex& a, const ExactComplex& b) {
    CSeries uv = CSeries::polynomial();
    uv.set(1, 1, ExactComplex::one());
    CSeries v = CSeries::polynomial();
    v.set(0, 1, ExactComplex::one());

    CSeries first, second;
    if (inputChart == Chart::Unprimed) {
        first = uv;
        second = v;
    } else {
        first = v;
        second = uv;
    }
    first.set(0, 0, a);
    second.set(0, 0, b);
    return CGerm(std::move(first), std::move(second), !a.isZero() || !b.isZero());
}

}  // namespace

Germ2<ExactComplex> build_germ(const KatoSpec& spec, int order) {
    if (order < 2) throw InputError("order must be >= 2");
    validate_spec(spec);

    const BlowupStep& last = spec.steps[spec.n - 1];
    CSeries s1 = spec.sigma.germ.f1().truncated(order);
    CSeries s2 = spec.sigma.germ.f2().truncated(order);
    s1.set(0, 0, last.a);
    s2.set(0, 0, last.b);
    CGerm acc(std::move(s1), std::move(s2), !last.a.isZero() || !last.b.isZero());

    for (int i = spec.n - 1; i >= 1; --i) {
        const BlowupStep& prev = spec.steps[i - 1];
        acc = germ_compose(chart_map(spec.steps[i].chart, prev.a, prev.b), acc);
    }
    acc = germ_compose(chart_map(spec.steps[0].chart, ExactComplex(), ExactComplex()), acc);
    return acc;
}

TraceMonomial trace_monomial(const KatoSpec& spec) {
    if (!spec.minimal())
        throw InputError("trace_monomial requires a minimal spec (all b = 0)");
    validate_spec(spec);
    TraceMonomial out;
    out.value = spec.sigma.d2s2();
    out.factors.emplace_back("d2_sigma2(0)", out.value);
    for (int j : spec.J()) {
        const ExactComplex& aj = spec.steps[j].a;
        out.value = out.value * aj;
        out.factors.emplace_back("a_" + std::to_string(j), aj);
    }
    return out;
}

bool trace_domain_check(const KatoSpec& spec) {
    return trace_monomial(spec).value.norm2() < 1;
}

namespace {

using CD = std::complex<double>;

CD eval_double(const CSeries& f, CD z1, CD z2) {
    CD acc = 0.0;
    for (int j = f.degreeCap(); j >= 0; --j) {
        CD row = 0.0;
        CD p2 = 1.0;
        for (int k = 0; j + k <= f.degreeCap(); ++k) {
            const ExactComplex& c = f.at(j, k);
            if (!c.isZero()) row += CD(c.reDouble(), c.imDouble()) * p2;
            p2 *= z2;
        }
        acc = acc * z1 + row;
    }
    return acc;
}

}  // namespace

FixedPointResult fixed_point_analysis(const Germ2<ExactComplex>& germ, double tolerance,
                                      int maxIterations) {
    if (tolerance <= 0) throw InputError("tolerance must be positive");
    FixedPointResult out;

    const CSeries& f1 = germ.f1();
    const CSeries& f2 = germ.f2();
    CSeries f1u = f1.d1(), f1v = f1.d2(), f2u = f2.d1(), f2v = f2.d2();

    CD z1 = 0.0, z2 = 0.0;
    auto residualAt = [&](CD a, CD b) {
        CD r1 = eval_double(f1, a, b) - a;
        CD r2 = eval_double(f2, a, b) - b;
        return std::max(std::abs(r1), std::abs(r2));
    };

    double res = residualAt(z1, z2);
    int it = 0;
    for (; it < maxIterations && res >= tolerance; ++it) {
        CD r1 = eval_double(f1, z1, z2) - z1;
        CD r2 = eval_double(f2, z1, z2) - z2;
        CD j11 = eval_double(f1u, z1, z2) - 1.0;
        CD j12 = eval_double(f1v, z1, z2);
        CD j21 = eval_double(f2u, z1, z2);
        CD j22 = eval_double(f2v, z1, z2) - 1.0;
        CD det = j11 * j22 - j12 * j21;
        if (std::abs(det) < 1e-300) break;
        CD d1 = (r1 * j22 - r2 * j12) / det;
        CD d2 = (r2 * j11 - r1 * j21) / det;
        // Damped step: halve until the residual stops growing.
        double scale = 1.0;
        double next = residualAt(z1 - d1, z2 - d2);
        for (int h = 0; h < 40 && next > res; ++h) {
            scale *= 0.5;
            next = residualAt(z1 - scale * d1, z2 - scale * d2);
        }
        if (next > res) break;
        z1 -= scale * d1;
        z2 -= scale * d2;
        res = next;
    }

    out.iterations = it;
    out.z1 = z1;
    out.z2 = z2;
    out.residual = res;
    out.converged = res < tolerance;

    // Eigenvalues of DF at the fixed point, via the characteristic polynomial.
    CD j11 = eval_double(f1u, z1, z2);
    CD j12 = eval_double(f1v, z1, z2);
    CD j21 = eval_double(f2u, z1, z2);
    CD j22 = eval_double(f2v, z1, z2);
    CD tr = j11 + j22;
    CD det = j11 * j22 - j12 * j21;
    CD disc = std::sqrt(tr * tr - 4.0 * det);
    out.eig1 = (tr + disc) / 2.0;
    out.eig2 = (tr - disc) / 2.0;
    out.contracting = out.converged && std::abs(out.eig1) < 1.0 && std::abs(out.eig2) < 1.0;
    return out;
}

FixedPointResult fixed_point_analysis(const KatoSpec& spec, int order, double tolerance,
                                      int maxIterations) {
    return fixed_point_analysis(build_germ(spec, order), tolerance, maxIterations);
}

}  // namespace kato

#include "kato/spec.hpp"

#include <sstream>

namespace kato {

namespace {

// Whether the unprimed origin of W_j carries a second curve. This holds
// exactly when O_{j-1} is a corner, which unrolls to: walk back over steps
// that sit at an unprimed origin; the chain grounds at a primed origin and
// breaks at any step with a != 0. Only charts and positions matter here.
bool chain_grounds(const KatoSpec& spec, long j) {
    for (int walked = 0; walked <= spec.n; ++walked) {
        const BlowupStep& prev = spec.step(j - 1 - walked);
        if (!prev.a.isZero()) return false;
        if (prev.chart == Chart::Primed) return true;
    }
    throw InputError("invalid step list: every step sits at an unprimed origin, the corner chain never grounds");
}

}  // namespace

bool unprimed_corner_available(const KatoSpec& spec, long j) { return chain_grounds(spec, j); }

std::vector<std::string> validate_spec(const KatoSpec& spec) {
    if (spec.n < 1) throw InputError("n must be >= 1");
    if (int(spec.steps.size()) != spec.n)
        throw InputError("steps list must have exactly n entries");

    std::vector<std::string> warnings;

    for (int i = 0; i < spec.n; ++i) {
        const BlowupStep& s = spec.steps[i];
        std::ostringstream where;
        where << "step " << i << ": ";
        if (s.kind == StepKind::Corner && !s.a.isZero())
            throw InputError(where.str() + "corner steps must have a = 0");
        if (s.chart == Chart::Primed && s.a.isZero() && s.kind == StepKind::Generic)
            throw InputError(where.str() +
                             "the primed-chart origin always lies on two curves; "
                             "a generic point there is inconsistent");
        if (s.chart == Chart::Unprimed && s.kind == StepKind::Corner &&
            !unprimed_corner_available(spec, i))
            throw InputError(where.str() +
                             "corner requested at the unprimed origin, but only one curve passes there");
        if (s.chart == Chart::Unprimed && s.kind == StepKind::Generic && s.a.isZero() &&
            unprimed_corner_available(spec, i))
            throw InputError(where.str() +
                             "generic point placed at the unprimed origin where a curve corner sits");
    }

    const auto& sg = spec.sigma;
    if (sg.germ.affineShifted())
        throw InputError("sigma must fix the origin; position shifts come from the step data");
    if (!sg.germ.jacobianAtZero().invertible())
        throw MathError("sigma has a singular linear part");
    if (sg.d2s2().isZero())
        throw MathError(
            "d2(sigma_2)(0) = 0 is rejected: the trace monomial would degenerate identically");
    if (!sg.d1s2IsZero())
        warnings.push_back(
            "sigma: d1(sigma_2)(0) != 0; the normalization placing sigma^-1(C_{n-1}) at the "
            "primed origin of chart 0 is assumed anyway");
    if (!sg.d2s1IsZero())
        warnings.push_back(
            "sigma: d2(sigma_1)(0) != 0; the unprimed-origin curve assignment of the sigma-wrap "
            "is convention-dependent");
    return warnings;
}

KatoSpec with_derived_kinds(const KatoSpec& spec) {
    KatoSpec out = spec;
    for (int i = 0; i < out.n; ++i) {
        BlowupStep& s = out.steps[i];
        if (!s.a.isZero())
            s.kind = StepKind::Generic;
        else if (s.chart == Chart::Primed)
            s.kind = StepKind::Corner;
        else
            s.kind = chain_grounds(out, i) ? StepKind::Corner : StepKind::Generic;
    }
    return out;
}

}  // namespace kato

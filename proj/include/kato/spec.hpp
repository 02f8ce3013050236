#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kato/exact_complex.hpp"
#include "kato/germ.hpp"

namespace kato {

enum class Chart { Unprimed, Primed };
enum class StepKind { Generic, Corner };

// Descriptor of the blown-up point O_i on the exceptional curve C_i.
// Position (a, 0) in the chosen chart of W_i; a = 0 in the primed chart is
// the point at infinity (the corner with the previous curve), a = 0 in the
// unprimed chart is the opposite corner when one exists there. b is the
// transversal offset; b != 0 leaves the curve and deforms to a non-minimal
// surface.
struct BlowupStep {
    Chart chart = Chart::Unprimed;
    StepKind kind = StepKind::Generic;
    ExactComplex a;
    ExactComplex b;
};

struct SigmaGerm {
    Germ2<ExactComplex> germ;  // invertible, sigma(0) = 0 in the chart of O_{n-1}

    bool d1s2IsZero() const { return germ.f2().at(1, 0).isZero(); }
    bool d2s1IsZero() const { return germ.f1().at(0, 1).isZero(); }
    ExactComplex d2s2() const { return germ.f2().at(0, 1); }
};

// Combinatorial presentation of a marked surface: n blow-up steps plus the
// glueing germ sigma. Step i produces C_i and stores the point O_i; the
// chart-map parameter a_{i-1} of Pi_i therefore lives on step i-1, and step 0
// (blowing the ball origin) needs no extra position data of its own.
struct KatoSpec {
    int n = 0;
    std::vector<BlowupStep> steps;
    SigmaGerm sigma;

    // I_infty(C_0): indices whose blown-up point sits in the primed chart.
    std::vector<int> J() const {
        std::vector<int> out;
        for (int i = 0; i < n; ++i)
            if (steps[i].chart == Chart::Primed) out.push_back(i);
        return out;
    }

    bool minimal() const {
        for (const auto& s : steps)
            if (!s.b.isZero()) return false;
        return true;
    }

    const BlowupStep& step(long j) const {  // periodic access, any integer index
        long m = j % n;
        if (m < 0) m += n;
        return steps[size_t(m)];
    }
};

// Validates chart/kind/position consistency, the corner incidence rules and
// sigma's linear part. Returns accumulated warnings (convention violations
// that do not block computation).
std::vector<std::string> validate_spec(const KatoSpec& spec);

// True when the unprimed-chart origin of W_j carries a second curve, i.e.
// when a corner can be requested there. Periodic in j.
bool unprimed_corner_available(const KatoSpec& spec, long j);

// Copy of the spec with each step's kind derived from its values: a point is
// a corner exactly when it sits at a chart origin shared by two curves.
KatoSpec with_derived_kinds(const KatoSpec& spec);

}  // namespace kato

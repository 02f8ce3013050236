#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "kato/spec.hpp"

namespace kato {

// The exact truncated composition F = Pi_0 ... Pi_{n-1} sigma in the charts
// fixed by the step list. With all b = 0 the result fixes the origin; any
// nonzero b (or a shift on the last step) yields an affine-shifted germ whose
// constant term is recorded.
Germ2<ExactComplex> build_germ(const KatoSpec& spec, int order);

struct TraceMonomial {
    ExactComplex value;
    // Symbolic product form: d2(sigma_2)(0) times a_j over j in J.
    std::vector<std::pair<std::string, ExactComplex>> factors;
};

// tr DF(0) = d2(sigma_2)(0) * prod_{j in J} a_j, without building the germ.
TraceMonomial trace_monomial(const KatoSpec& spec);

// |t(a)| < 1, decided exactly on |t|^2.
bool trace_domain_check(const KatoSpec& spec);

struct FixedPointResult {
    bool converged = false;
    int iterations = 0;
    std::complex<double> z1, z2;      // the fixed point zeta
    std::complex<double> eig1, eig2;  // eigenvalues of DF(zeta)
    bool contracting = false;
    double residual = 0.0;
};

// Newton iteration from the origin on the floating evaluation of the exact
// polynomial map. Non-convergence is reported in the result, not thrown.
FixedPointResult fixed_point_analysis(const Germ2<ExactComplex>& germ,
                                      double tolerance = 1e-12, int maxIterations = 200);

FixedPointResult fixed_point_analysis(const KatoSpec& spec, int order,
                                      double tolerance = 1e-12, int maxIterations = 200);

}  // namespace kato

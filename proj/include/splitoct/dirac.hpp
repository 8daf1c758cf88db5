#pragma once

#include <array>
#include <complex>

#include "splitoct/rational.hpp"

namespace splitoct {

struct FourMomentum {
    double E = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;
    double p3 = 0.0;
};

struct FourInterval {
    double t = 0.0;
    double r1 = 0.0;
    double r2 = 0.0;
    double r3 = 0.0;
};

struct SolutionParams {
    double a0 = 0.0;
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
    double S1 = 0.0;
    double S2 = 0.0;
    double S3 = 0.0;
    double hbar = 1.0;
};

struct QuaternionValue {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

// Embeds (E, p) and (t, r) over units u_0..u_3, multiplies in the split
// algebra with complex floating coefficients, and returns the real part of
// the u_0 coefficient of P * conj(R).  Algebraically this equals Et - p.r.
double phase_D(const FourMomentum& P, const FourInterval& R);

// Same computation with exact rational four-vectors (component order
// E,p1,p2,p3 and t,r1,r2,r3).
Rational phase_D_exact(const std::array<Rational, 4>& P, const std::array<Rational, 4>& R);

// e^{a0} (cos S + i sin S)
std::complex<double> plane_wave(double a0, double S);

// Quaternion exponential exp(a0 + i a1 S1 + j a2 S2 + k a3 S3) in closed
// form: with v = (a1 S1, a2 S2, a3 S3) and theta = |v|, the value is
// e^{a0} (cos theta + (v/theta) sin theta), degenerating to e^{a0} at
// theta = 0.  Throws std::invalid_argument when params.hbar <= 0.
QuaternionValue quaternion_solution(const SolutionParams& params);

// Collapse to the complex subalgebra spanned by 1 and i.  Requires
// a2 = a3 = 0 (throws std::invalid_argument otherwise); agrees with
// plane_wave(a0, a1*S1).
std::complex<double> reduce_to_complex(const SolutionParams& params);

}  // namespace splitoct

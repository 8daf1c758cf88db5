#include "splitoct/dirac.hpp"

#include <cmath>
#include <stdexcept>

#include "splitoct/split_octonion.hpp"

namespace splitoct {

double phase_D(const FourMomentum& P, const FourInterval& R) {
    using C = std::complex<double>;
    SplitOctonion<C> p, r;
    p.c[0] = C(P.E);
    p.c[1] = C(P.p1);
    p.c[2] = C(P.p2);
    p.c[3] = C(P.p3);
    r.c[0] = C(R.t);
    r.c[1] = C(R.r1);
    r.c[2] = C(R.r2);
    r.c[3] = C(R.r3);
    SplitOctonion<C> prod = p * split_conj(r);
    return prod.c[0].real();
}

Rational phase_D_exact(const std::array<Rational, 4>& P, const std::array<Rational, 4>& R) {
    SplitOctonion<GaussianRational> p, r;
    for (int k = 0; k < 4; ++k) {
        p.c[static_cast<std::size_t>(k)] = GaussianRational(P[static_cast<std::size_t>(k)]);
        r.c[static_cast<std::size_t>(k)] = GaussianRational(R[static_cast<std::size_t>(k)]);
    }
    SplitOctonion<GaussianRational> prod = p * split_conj(r);
    return prod.c[0].re;
}

std::complex<double> plane_wave(double a0, double S) {
    return std::exp(a0) * std::complex<double>(std::cos(S), std::sin(S));
}

QuaternionValue quaternion_solution(const SolutionParams& params) {
    if (!(params.hbar > 0.0)) throw std::invalid_argument("hbar must be positive");
    const double v1 = params.a1 * params.S1;
    const double v2 = params.a2 * params.S2;
    const double v3 = params.a3 * params.S3;
    const double theta = std::sqrt(v1 * v1 + v2 * v2 + v3 * v3);
    const double scale = std::exp(params.a0);
    QuaternionValue q;
    if (theta == 0.0) {
        q.w = scale;
        return q;
    }
    const double s = std::sin(theta) / theta;
    q.w = scale * std::cos(theta);
    q.x = scale * s * v1;
    q.y = scale * s * v2;
    q.z = scale * s * v3;
    return q;
}

std::complex<double> reduce_to_complex(const SolutionParams& params) {
    if (params.a2 != 0.0 || params.a3 != 0.0)
        throw std::invalid_argument("reduction to the complex subalgebra needs a2 = a3 = 0");
    return plane_wave(params.a0, params.a1 * params.S1);
}

}  // namespace splitoct

#include "paritylab/periods.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace paritylab {

namespace {

using cplx = std::complex<double>;

// roots of the monic cubic x^3 + a x^2 + b x + c
std::array<cplx, 3> cubic_roots(double a, double b, double c) {
    // depressed form t^3 + pt + q, x = t - a/3
    double p = b - a * a / 3.0;
    double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    cplx disc = cplx(q * q / 4.0 + p * p * p / 27.0, 0.0);
    cplx sq = std::sqrt(disc);
    cplx u3 = -q / 2.0 + sq;
    if (std::abs(u3) < 1e-30) u3 = -q / 2.0 - sq;
    cplx u = std::pow(u3, 1.0 / 3.0);
    const cplx zeta(-0.5, std::sqrt(3.0) / 2.0);
    std::array<cplx, 3> roots;
    for (int k = 0; k < 3; ++k) {
        cplx uk = u * (k == 0 ? cplx(1) : (k == 1 ? zeta : zeta * zeta));
        cplx t = uk - p / (3.0 * uk);
        roots[k] = t - a / 3.0;
        // one Newton step on the original cubic polishes the root
        cplx x = roots[k];
        for (int it = 0; it < 3; ++it) {
            cplx f = ((x + a) * x + b) * x + c;
            cplx df = (3.0 * x + 2.0 * a) * x + b;
            if (std::abs(df) > 1e-300) x -= f / df;
        }
        roots[k] = x;
    }
    return roots;
}

} // namespace

cplx complex_agm(cplx a, cplx b) {
    for (int i = 0; i < 200; ++i) {
        if (std::abs(a - b) <= 1e-17 * std::abs(a)) break;
        cplx a1 = (a + b) / 2.0;
        cplx b1 = std::sqrt(a * b);
        // right choice: |a1 - b1| <= |a1 + b1|, ties broken toward Im(b1/a1) > 0
        if (std::abs(a1 - b1) > std::abs(a1 + b1) ||
            (std::abs(std::abs(a1 - b1) - std::abs(a1 + b1)) < 1e-15 * std::abs(a1) &&
             std::imag(b1 / a1) < 0))
            b1 = -b1;
        a = a1;
        b = b1;
    }
    return a;
}

double PeriodLattice::covolume() const { return std::abs(omega1 * std::imag(omega2)); }

PeriodLattice period_lattice(const CurveModel& e) {
    const double pi = std::numbers::pi;
    // completed square: y^2 = (x - e1)(x - e2)(x - e3), omega = dx/2y
    double B2 = e.b2().get_d(), B4 = e.b4().get_d(), B6 = e.b6().get_d();
    auto roots = cubic_roots(B2 / 4.0, B4 / 2.0, B6 / 4.0);
    double disc = e.discriminant().get_d();

    PeriodLattice L;
    if (disc > 0) {
        // three real roots e1 > e2 > e3
        std::array<double, 3> er = {std::real(roots[0]), std::real(roots[1]),
                                    std::real(roots[2])};
        std::sort(er.begin(), er.end(), std::greater<double>());
        double m1 = complex_agm(std::sqrt(er[0] - er[2]), std::sqrt(er[0] - er[1])).real();
        double m2 = complex_agm(std::sqrt(er[0] - er[2]), std::sqrt(er[1] - er[2])).real();
        L.omega1 = pi / m1;
        L.omega2 = cplx(0.0, pi / m2);
        L.components = 2;
        return L;
    }
    // one real root e1 and a conjugate pair m +- ni: rhombic lattice
    // generated by omega1 and (omega1 + i*omega_im)/2, with
    //   omega1  = 2 pi / agm(2 sqrt(beta), sqrt(2 beta + 2(e1 - m)))
    //   omega_im = 2 pi / agm(2 sqrt(beta), sqrt(2 beta - 2(e1 - m)))
    // where beta = |e1 - (m + ni)|.
    int ri = 0;
    for (int k = 1; k < 3; ++k)
        if (std::abs(std::imag(roots[k])) < std::abs(std::imag(roots[ri]))) ri = k;
    double e1 = std::real(roots[ri]);
    double mm = std::real(roots[(ri + 1) % 3]);
    double nn = std::abs(std::imag(roots[(ri + 1) % 3]));
    double beta = std::sqrt((e1 - mm) * (e1 - mm) + nn * nn);
    double omega1 =
        2 * pi / complex_agm(2 * std::sqrt(beta), std::sqrt(2 * beta + 2 * (e1 - mm))).real();
    double omega_im =
        2 * pi / complex_agm(2 * std::sqrt(beta), std::sqrt(2 * beta - 2 * (e1 - mm))).real();
    L.omega1 = omega1;
    L.omega2 = cplx(omega1 / 2.0, omega_im / 2.0);
    L.components = 1;
    return L;
}

double real_period(const CurveModel& e) {
    PeriodLattice L = period_lattice(e);
    return L.components * L.omega1;
}

double complex_place_term(const CurveModel& e) {
    return 4.0 * period_lattice(e).covolume();
}

}  // namespace paritylab

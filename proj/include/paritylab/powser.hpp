#pragma once

// Truncated power series over Q (coefficient vectors indexed by the power
// of q), and the Tate-curve expansions built from them.

#include "paritylab/qpoly.hpp"

namespace paritylab {

// series are vectors of length order+1; index = exponent of q
using QSeries = std::vector<Rat>;

QSeries ps_zero(int order);
QSeries ps_add(const QSeries& a, const QSeries& b);
QSeries ps_sub(const QSeries& a, const QSeries& b);
QSeries ps_mul(const QSeries& a, const QSeries& b); // truncated to min size
QSeries ps_scale(const QSeries& a, const Rat& c);
// substitute q -> q^k
QSeries ps_stretch(const QSeries& a, int k);

// z^shift / (1 - q^n)^c expanded to the series order (c in {1,2,3})
QSeries ps_geom(int order, int n, int c, int shift, bool alternating);

// Tate curve data: E_q: y^2 + xy = x^3 + a4(q) x + a6(q), the 2-torsion
// coordinates for u = -1 and for the u = sqrt(q) case (as series on E_{q^2}),
// and the transformed model E-dagger obtained from the 2-isogenous curve.
struct TateSeries {
    int order;
    QSeries a4, a6;             // coefficients of E_q
    QSeries x_m1, y_m1;         // X(-1, q), Y(-1, q)
    QSeries x_sq, y_sq;         // X(q, q^2), Y(q, q^2)
    QSeries a_m1, b_m1;         // translated 2-isogeny form at u = -1
    QSeries a4_dagger, a6_dagger; // E-dagger coefficients (a1 = 1 model)
};

TateSeries tate_q_expansions(int order);

}  // namespace paritylab

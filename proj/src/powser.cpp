#include "paritylab/powser.hpp"

namespace paritylab {

QSeries ps_zero(int order) { return QSeries(order + 1, Rat(0)); }

QSeries ps_add(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QSeries ps_sub(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QSeries ps_mul(const QSeries& a, const QSeries& b) {
    size_t n = std::min(a.size(), b.size());
    QSeries r(n, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; i + j < n; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

QSeries ps_scale(const QSeries& a, const Rat& c) {
    QSeries r = a;
    for (auto& x : r) x *= c;
    return r;
}

QSeries ps_stretch(const QSeries& a, int k) {
    QSeries r(a.size(), Rat(0));
    for (size_t i = 0; i * k < a.size(); ++i) r[i * k] = a[i];
    return r;
}

QSeries ps_geom(int order, int n, int c, int shift, bool alternating) {
    // z^shift / (1 -+ q^n)^c = sum_{j>=0} binom(j+c-1, c-1) (+-1)^j q^(nj+shift)
    QSeries r = ps_zero(order);
    for (int j = 0; n * j + shift <= order; ++j) {
        long binom = 1;
        if (c == 2) binom = j + 1;
        if (c == 3) binom = (long)(j + 1) * (j + 2) / 2;
        Rat coef(binom);
        if (alternating && (j % 2)) coef = -coef;
        r[n * j + shift] += coef;
    }
    return r;
}

TateSeries tate_q_expansions(int order) {
    if (order < 2 || order > 64) throw std::invalid_argument("tate_q_expansions: order out of range");
    TateSeries S;
    S.order = order;

    // s_k(q) = sum_n n^k q^n/(1 - q^n)
    auto s_k = [&](int k) {
        QSeries r = ps_zero(order);
        for (int n = 1; n <= order; ++n) {
            Int nk = pow_int(Int(n), k);
            for (int j = n; j <= order; j += n) r[j] += Rat(nk);
        }
        return r;
    };
    QSeries s3 = s_k(3), s5 = s_k(5);
    S.a4 = ps_scale(s3, Rat(-5));
    S.a6 = ps_scale(ps_add(ps_scale(s3, Rat(5)), ps_scale(s5, Rat(7))), Rat(-1, 12));

    // X(-1, q) = -1/4 + sum_n [ -2 q^n/(1+q^n)^2 - 2 q^n/(1-q^n)^2 ]
    QSeries x = ps_zero(order);
    x[0] = Rat(-1, 4);
    for (int n = 1; n <= order; ++n) {
        x = ps_add(x, ps_scale(ps_geom(order, n, 2, n, true), Rat(-2)));
        x = ps_add(x, ps_scale(ps_geom(order, n, 2, n, false), Rat(-2)));
    }
    S.x_m1 = x;

    // Y(u,q) = u^2/(1-u)^3 + sum_n [ q^2n u^2/(1-q^n u)^3
    //          - q^n u^-1/(1-q^n u^-1)^3 + q^n/(1-q^n)^2 ];
    // at u = -1: 1/8 + sum_n [ q^2n/(1+q^n)^3 + q^n/(1+q^n)^3 + q^n/(1-q^n)^2 ]
    QSeries y = ps_zero(order);
    y[0] = Rat(1, 8);
    for (int n = 1; n <= order; ++n) {
        y = ps_add(y, ps_geom(order, n, 3, 2 * n, true));
        y = ps_add(y, ps_geom(order, n, 3, n, true));
        y = ps_add(y, ps_geom(order, n, 2, n, false));
    }
    S.y_m1 = y;

    // Case 2 on E_{q^2}: X(q, q^2), Y(q, q^2) as series in q
    QSeries x2 = ps_geom(order, 1, 2, 1, false); // q/(1-q)^2
    QSeries y2 = ps_geom(order, 1, 3, 2, false); // q^2/(1-q)^3
    for (int n = 1; 2 * n - 1 <= order; ++n) {
        x2 = ps_add(x2, ps_geom(order, 2 * n + 1, 2, 2 * n + 1, false));
        x2 = ps_add(x2, ps_geom(order, 2 * n - 1, 2, 2 * n - 1, false));
        x2 = ps_sub(x2, ps_scale(ps_geom(order, 2 * n, 2, 2 * n, false), Rat(2)));
        y2 = ps_add(y2, ps_geom(order, 2 * n + 1, 3, 4 * n + 2, false));
        y2 = ps_sub(y2, ps_geom(order, 2 * n - 1, 3, 2 * n - 1, false));
        y2 = ps_add(y2, ps_geom(order, 2 * n, 2, 2 * n, false));
    }
    S.x_sq = x2;
    S.y_sq = y2;

    // translated 2-isogeny form at u = -1: r = -X(-1,q),
    // a = 1/4 - 3r, b = a4 - r/2 + 3r^2
    QSeries r = ps_scale(S.x_m1, Rat(-1));
    QSeries a = ps_scale(r, Rat(-3));
    a[0] += Rat(1, 4);
    QSeries b = ps_add(ps_sub(S.a4, ps_scale(r, Rat(1, 2))), ps_scale(ps_mul(r, r), Rat(3)));
    S.a_m1 = a;
    S.b_m1 = b;

    // E' = [0, -2a, 0, delta, 0], delta = a^2 - 4b; then the substitution
    // x -> 4x + (1/2 - 2r), y -> 8y + 4x, i.e. [u=2, rt=1/2-2r, s=1, t=0]:
    //   a4+ = (delta + 2 rt (-2a) + 3 rt^2) / 16
    //   a6+ = (rt delta + rt^2 (-2a) + rt^3) / 64
    QSeries delta = ps_sub(ps_mul(a, a), ps_scale(b, Rat(4)));
    QSeries rt = ps_scale(r, Rat(-2));
    rt[0] += Rat(1, 2);
    QSeries m2a = ps_scale(a, Rat(-2));
    QSeries a4d = ps_add(delta, ps_add(ps_scale(ps_mul(rt, m2a), Rat(2)),
                                       ps_scale(ps_mul(rt, rt), Rat(3))));
    S.a4_dagger = ps_scale(a4d, Rat(1, 16));
    QSeries a6d = ps_add(ps_mul(rt, delta),
                         ps_add(ps_mul(ps_mul(rt, rt), m2a), ps_mul(rt, ps_mul(rt, rt))));
    S.a6_dagger = ps_scale(a6d, Rat(1, 64));
    return S;
}

}  // namespace paritylab

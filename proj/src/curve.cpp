#include "paritylab/curve.hpp"

#include <algorithm>
#include <sstream>

namespace paritylab {

CurveModel::CurveModel(Rat a1, Rat a2, Rat a3, Rat a4, Rat a6)
    : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)),
      a6_(std::move(a6)) {
    // inputs constructed as num/den pairs may arrive non-canonical
    a1_.canonicalize();
    a2_.canonicalize();
    a3_.canonicalize();
    a4_.canonicalize();
    a6_.canonicalize();
    Rat b2v = b2(), b4v = b4(), b6v = b6(), b8v = b8();
    disc_ = -b2v * b2v * b8v - 8 * b4v * b4v * b4v - 27 * b6v * b6v + 9 * b2v * b4v * b6v;
    if (disc_ == 0) throw std::invalid_argument("CurveModel: singular model");
}

Rat CurveModel::b8() const {
    return a1_ * a1_ * a6_ + 4 * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ - a4_ * a4_;
}

Rat CurveModel::c6() const {
    Rat b2v = b2();
    return -b2v * b2v * b2v + 36 * b2v * b4() - 216 * b6();
}

bool CurveModel::is_integral() const {
    for (const Rat* a : {&a1_, &a2_, &a3_, &a4_, &a6_})
        if (a->get_den() != 1) return false;
    return true;
}

bool CurveModel::operator==(const CurveModel& o) const {
    return a1_ == o.a1_ && a2_ == o.a2_ && a3_ == o.a3_ && a4_ == o.a4_ && a6_ == o.a6_;
}

std::string CurveModel::to_string() const {
    std::ostringstream os;
    os << "[" << a1_ << "," << a2_ << "," << a3_ << "," << a4_ << "," << a6_ << "]";
    return os.str();
}

CurveModel ModelMap::apply(const CurveModel& e) const {
    if (u == 0) throw std::invalid_argument("ModelMap: u = 0");
    Rat u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
    Rat na1 = (e.a1() + 2 * s) / u;
    Rat na2 = (e.a2() - s * e.a1() + 3 * r - s * s) / u2;
    Rat na3 = (e.a3() + r * e.a1() + 2 * t) / u3;
    Rat na4 = (e.a4() - s * e.a3() + 2 * r * e.a2() - (t + r * s) * e.a1() + 3 * r * r - 2 * s * t) / u4;
    Rat na6 = (e.a6() + r * e.a4() + r * r * e.a2() + r * r * r - t * e.a3() - t * t - r * t * e.a1()) / u6;
    return CurveModel(na1, na2, na3, na4, na6);
}

ModelMap ModelMap::compose(const ModelMap& then) const {
    ModelMap m;
    m.u = u * then.u;
    m.r = r + u * u * then.r;
    m.s = s + u * then.s;
    m.t = t + u * u * then.r * s + u * u * u * then.t;
    return m;
}

ModelMap ModelMap::inverse() const {
    // solve compose(inv) = identity
    ModelMap inv;
    inv.u = 1 / u;
    inv.r = -r / (u * u);
    inv.s = -s / u;
    inv.t = (r * s - t) / (u * u * u);
    return inv;
}

CurveModel short_model(const CurveModel& e) {
    return CurveModel(Rat(0), Rat(0), Rat(0), -27 * e.c4(), -54 * e.c6());
}

CurveModel quadratic_twist(const CurveModel& e, const Rat& d) {
    if (d == 0) throw std::invalid_argument("quadratic_twist: d = 0");
    Rat A = -27 * e.c4(), B = -54 * e.c6();
    return CurveModel(Rat(0), Rat(0), Rat(0), d * d * A, d * d * d * B);
}

std::vector<Rat> rational_two_torsion_x(const CurveModel& e) {
    QPoly two_div = {e.b6(), 2 * e.b4(), e.b2(), Rat(4)};
    return qpoly_rational_roots(two_div);
}

TwoIsogenyData two_isogeny_pair(const CurveModel& e, const Rat& P_x) {
    QPoly two_div = {e.b6(), 2 * e.b4(), e.b2(), Rat(4)};
    if (qpoly_eval(two_div, P_x) != 0)
        throw std::invalid_argument("two_isogeny_pair: x is not a rational 2-torsion abscissa");
    // complete the square, then translate P to the origin
    ModelMap sq{Rat(1), Rat(0), -e.a1() / 2, -e.a3() / 2};
    ModelMap tr{Rat(1), P_x, Rat(0), Rat(0)};
    ModelMap total = sq.compose(tr);
    CurveModel src = total.apply(e);
    // src is y^2 = x^3 + a x^2 + b x
    Rat a = src.a2(), b = src.a4();
    Rat delta = a * a - 4 * b;
    if (b == 0 || delta == 0) throw std::invalid_argument("two_isogeny_pair: degenerate isogeny");
    CurveModel target(Rat(0), -2 * a, Rat(0), delta, Rat(0));
    return TwoIsogenyData{a, b, delta, src, target, total};
}

// ---- division polynomials ----

namespace {

// univariate representation: psi_n = f_n(x) for odd n, psi_n = psi2 * g_n(x)
// for even n, with psi2^2 = S(x) = 4x^3 + b2 x^2 + 2 b4 x + b6.
struct DivPolys {
    QPoly S;
    std::vector<QPoly> part; // part[n]: f_n (n odd) or g_n (n even)
};

DivPolys division_polys_upto(const CurveModel& e, int nmax) {
    Rat b2 = e.b2(), b4 = e.b4(), b6 = e.b6(), b8 = e.b8();
    DivPolys d;
    d.S = {b6, 2 * b4, b2, Rat(4)};
    auto& ps = d.part;
    ps.resize(std::max(nmax + 1, 6));
    ps[0] = {};       // psi_0 = 0
    ps[1] = {Rat(1)}; // f_1
    ps[2] = {Rat(1)}; // g_2
    ps[3] = {b8, 3 * b6, 3 * b4, b2, Rat(3)};
    ps[4] = {b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8, 10 * b6, 5 * b4, b2, Rat(2)};
    for (int n = 5; n <= nmax; ++n) {
        if (n % 2) {
            int m = (n - 1) / 2; // n = 2m+1: psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3
            QPoly t1 = qpoly_mul(ps[m + 2], qpoly_mul(ps[m], qpoly_mul(ps[m], ps[m])));
            QPoly t2 = qpoly_mul(ps[m - 1], qpoly_mul(ps[m + 1], qpoly_mul(ps[m + 1], ps[m + 1])));
            // attach the psi2 factors: if m even, t1 carries psi2^4 -> S^2;
            // if m odd, t2 carries psi2^4 -> S^2.
            if (m % 2 == 0) {
                t1 = qpoly_mul(t1, qpoly_mul(d.S, d.S));
            } else {
                t2 = qpoly_mul(t2, qpoly_mul(d.S, d.S));
            }
            ps[n] = qpoly_sub(t1, t2);
        } else {
            int m = n / 2; // psi_{2m} = psi_m (psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2) / psi2
            // In the f/g representation the psi2 factors cancel identically
            // in both parity cases: g_{2m} = part_m (part_{m+2} part_{m-1}^2
            // - part_{m-2} part_{m+1}^2).
            QPoly t1 = qpoly_mul(ps[m + 2], qpoly_mul(ps[m - 1], ps[m - 1]));
            QPoly t2 = qpoly_mul(ps[m - 2], qpoly_mul(ps[m + 1], ps[m + 1]));
            ps[n] = qpoly_mul(ps[m], qpoly_sub(t1, t2));
        }
    }
    return d;
}

} // namespace

QPoly division_polynomial(const CurveModel& e, int l) {
    if (l < 1 || l % 2 == 0) throw std::invalid_argument("division_polynomial: odd l required");
    if (l == 1) return {Rat(1)};
    return division_polys_upto(e, l).part[l];
}

CurveModel velu_isogenous(const CurveModel& e, const QPoly& kernel_poly) {
    QPoly h = qpoly_trim(kernel_poly);
    int n = qpoly_deg(h);
    if (n <= 0) return e; // identity isogeny
    if (h[n] != 1) throw std::invalid_argument("velu_isogenous: kernel polynomial must be monic");
    int l = 2 * n + 1;
    if (l != 3 && l != 5 && l != 7)
        throw std::invalid_argument("velu_isogenous: kernel degree must be 1, 2 or 3");
    QPoly psi = division_polynomial(e, l);
    if (!qpoly_divides(h, psi))
        throw std::invalid_argument("velu_isogenous: kernel polynomial is not l-torsion");

    // stability under doubling: x(2P) = (x^4 - b4 x^2 - 2 b6 x - b8)/S(x)
    QPoly num = {-e.b8(), -2 * e.b6(), -e.b4(), Rat(0), Rat(1)};
    QPoly den = {e.b6(), 2 * e.b4(), e.b2(), Rat(4)};
    // h(num/den) * den^n mod h must vanish
    QPoly acc = {Rat(0)};
    QPoly num_pow = {Rat(1)};
    std::vector<QPoly> den_pows(n + 1);
    den_pows[0] = {Rat(1)};
    for (int i = 1; i <= n; ++i) den_pows[i] = qpoly_mul(den_pows[i - 1], den);
    for (int i = 0; i <= n; ++i) {
        if (h[i] != 0)
            acc = qpoly_add(acc, qpoly_scale(qpoly_mul(num_pow, den_pows[n - i]), h[i]));
        if (i < n) num_pow = qpoly_divmod(qpoly_mul(num_pow, num), h).second;
    }
    if (qpoly_deg(qpoly_divmod(acc, h).second) >= 0)
        throw std::invalid_argument("velu_isogenous: kernel not stable under doubling");

    Rat s1 = n >= 1 ? -h[n - 1] : Rat(0);
    Rat s2 = n >= 2 ? h[n - 2] : Rat(0);
    Rat s3 = n >= 3 ? -h[n - 3] : Rat(0);
    Rat b2 = e.b2(), b4 = e.b4(), b6 = e.b6();
    Rat t = 6 * (s1 * s1 - 2 * s2) + b2 * s1 + n * b4;
    Rat w = 10 * (s1 * s1 * s1 - 3 * s1 * s2 + 3 * s3) + 2 * b2 * (s1 * s1 - 2 * s2) +
            3 * b4 * s1 + n * b6;
    return CurveModel(e.a1(), e.a2(), e.a3(), e.a4() - 5 * t, e.a6() - b2 * t - 7 * w);
}

std::vector<QPoly> rational_kernel_polynomials(const CurveModel& e, int l) {
    if (l != 3 && l != 5 && l != 7)
        throw std::invalid_argument("rational_kernel_polynomials: l must be 3, 5 or 7");
    int d = (l - 1) / 2;
    QPoly psi = qpoly_monic(division_polynomial(e, l));
    std::vector<QPoly> out;
    for (const QPoly& h : qpoly_monic_factors_of_degree(psi, d)) {
        try {
            velu_isogenous(e, h); // runs the torsion + stability validation
            out.push_back(h);
        } catch (const std::invalid_argument&) {
        }
    }
    return out;
}

CurveModel integral_model(const CurveModel& e, ModelMap* map_out) {
    Int den(1);
    for (const Rat* a : {&e.a1(), &e.a2(), &e.a3(), &e.a4(), &e.a6()}) {
        Int d = a->get_den();
        Int g = gcd(den, d);
        den = den / g * d;
    }
    // u = 1/den scales a_i by den^i; overkill but always integral
    ModelMap m{Rat(1, den), Rat(0), Rat(0), Rat(0)};
    CurveModel out = m.apply(e);
    if (map_out) *map_out = m;
    return out;
}

}  // namespace paritylab

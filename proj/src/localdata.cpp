#include "paritylab/localdata.hpp"

#include <cassert>
#include <sstream>

namespace paritylab {

std::string KodairaType::to_string() const {
    std::ostringstream os;
    switch (cls) {
    case KodairaClass::I0: return "I0";
    case KodairaClass::In: os << "I" << n; return os.str();
    case KodairaClass::II: return "II";
    case KodairaClass::III: return "III";
    case KodairaClass::IV: return "IV";
    case KodairaClass::I0star: return "I0*";
    case KodairaClass::Instar: os << "I" << n << "*"; return os.str();
    case KodairaClass::IVstar: return "IV*";
    case KodairaClass::IIIstar: return "III*";
    case KodairaClass::IIstar: return "II*";
    }
    return "?";
}

std::string to_string(ReductionType r) {
    switch (r) {
    case ReductionType::Good: return "good";
    case ReductionType::SplitMult: return "split multiplicative";
    case ReductionType::NonsplitMult: return "nonsplit multiplicative";
    case ReductionType::AdditivePotMult: return "additive (potentially multiplicative)";
    case ReductionType::AdditivePotGood: return "additive (potentially good)";
    }
    return "?";
}

bool LocalData::operator==(const LocalData& o) const {
    return kodaira == o.kodaira && conductor_exponent == o.conductor_exponent &&
           tamagawa == o.tamagawa && min_disc_valuation == o.min_disc_valuation &&
           reduction == o.reduction;
}

namespace {

// Weierstrass model with coefficients in the exact quadratic ring Q(w).
struct WModel {
    Qw a1, a2, a3, a4, a6;

    Qw b2() const { return a1 * a1 + a2 * Rat(4); }
    Qw b4() const { return a3 * a1 + a4 * Rat(2); }
    Qw b6() const { return a3 * a3 + a6 * Rat(4); }
    Qw b8() const {
        return a1 * a1 * a6 + a2 * a6 * Rat(4) - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    }
    Qw disc() const {
        Qw B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
        return -(B2 * B2 * B8) - B4 * B4 * B4 * Rat(8) - B6 * B6 * Rat(27) + B2 * B4 * B6 * Rat(9);
    }
    bool is_rational() const {
        return a1.is_rational() && a2.is_rational() && a3.is_rational() && a4.is_rational() &&
               a6.is_rational();
    }
};

long val_or_big(const Qw& x, long big = 1 << 28) {
    auto v = x.valuation();
    return v ? *v : big;
}

// [u=1, r, s, t] translation
WModel translate(const WModel& m, const Qw& r, const Qw& s, const Qw& t) {
    WModel n;
    n.a1 = m.a1 + s * Rat(2);
    n.a2 = m.a2 - s * m.a1 + r * Rat(3) - s * s;
    n.a3 = m.a3 + r * m.a1 + t * Rat(2);
    n.a4 = m.a4 - s * m.a3 + r * m.a2 * Rat(2) - (t + r * s) * m.a1 + r * r * Rat(3) -
           s * t * Rat(2);
    n.a6 = m.a6 + r * m.a4 + r * r * m.a2 + r * r * r - t * m.a3 - t * t - r * t * m.a1;
    return n;
}

// x -> p^2 x, y -> p^3 y: a_i divided by p^i
WModel rescale_down(const WModel& m) {
    WModel n;
    n.a1 = m.a1.shift(-1);
    n.a2 = m.a2.shift(-2);
    n.a3 = m.a3.shift(-3);
    n.a4 = m.a4.shift(-4);
    n.a6 = m.a6.shift(-6);
    return n;
}

struct CubicInfo {
    enum { Distinct, Double, Triple } shape;
    int rational_roots = 0; // for Distinct
    Fq repeated;            // for Double/Triple
};

CubicInfo cubic_structure(const FqPoly& P, const FqCtx& ctx) {
    CubicInfo info{CubicInfo::Distinct, 0, Fq(ctx, 0)};
    FqPoly dP = fqpoly_derivative(P);
    if (fqpoly_deg(dP) < 0) {
        // char 3, P = T^3 + c: triple root, cube roots via inverse Frobenius
        info.shape = CubicInfo::Triple;
        info.repeated = (-P[0]).pow(ctx.q() / 3);
        return info;
    }
    FqPoly g = fqpoly_gcd(P, dP);
    int dg = fqpoly_deg(g);
    if (dg == 0) {
        info.shape = CubicInfo::Distinct;
        info.rational_roots = fqpoly_count_roots(P, ctx);
        return info;
    }
    if (dg == 1) {
        info.shape = CubicInfo::Double;
        info.repeated = -(g[0] * g[1].inverse());
        return info;
    }
    // dg == 2: g = (T - rho)^2
    if (ctx.p() == 2) {
        Fq rho = (g[0] * g[2].inverse()).sqrt();
        FqPoly sq = fqpoly_mul(FqPoly{rho, Fq(ctx, 1)}, FqPoly{rho, Fq(ctx, 1)});
        auto [quot, rem] = fqpoly_divmod(P, sq);
        (void)rem;
        Fq sigma = -(quot[0] * quot[1].inverse());
        info.shape = (sigma == rho) ? CubicInfo::Triple : CubicInfo::Double;
        info.repeated = rho;
        return info;
    }
    info.shape = CubicInfo::Triple;
    info.repeated = -(g[1] * (g[2] * Fq(ctx, 2)).inverse());
    return info;
}

// Y^2 + bY - c over F_q
struct QuadInfo {
    bool distinct;
    bool rational;
};

QuadInfo quad_structure(const Fq& b, const Fq& c, const FqCtx& ctx) {
    QuadInfo qi{false, false};
    if (ctx.p() == 2) {
        qi.distinct = !b.is_zero();
        if (qi.distinct) {
            // Y = bZ reduces to Z^2 + Z = c/b^2; solvable iff Tr(c/b^2) = 0
            Fq u = c * (b * b).inverse();
            qi.rational = fq_trace(u) == 0;
        }
        return qi;
    }
    Fq disc = b * b + c * Fq(ctx, 4);
    qi.distinct = !disc.is_zero();
    qi.rational = disc.is_square();
    return qi;
}

Fq quad_double_root(const Fq& b, const Fq& c, const FqCtx& ctx) {
    if (ctx.p() == 2) return c.sqrt();
    (void)c;
    return -(b * Fq(ctx, 2).inverse());
}

// singular point of the reduced curve (requires v(disc) > 0)
std::pair<Fq, Fq> singular_point(const WModel& m, const FqCtx& ctx) {
    Fq A1 = m.a1.reduce(), A2 = m.a2.reduce(), A3 = m.a3.reduce(), A4 = m.a4.reduce(),
       A6 = m.a6.reduce();
    if (ctx.p() == 2) {
        if (!A1.is_zero()) {
            Fq x0 = A3 * A1.inverse();
            Fq y0 = (x0 * x0 + A4) * A1.inverse();
            return {x0, y0};
        }
        Fq x0 = A4.sqrt();
        Fq y0 = (x0 * x0 * x0 + A2 * x0 * x0 + A4 * x0 + A6).sqrt();
        return {x0, y0};
    }
    Fq B2 = m.b2().reduce(), B4 = m.b4().reduce(), B6 = m.b6().reduce();
    FqPoly g = {B6, B4 * Fq(ctx, 2), B2, Fq(ctx, 4)};
    FqPoly dg = fqpoly_derivative(g);
    Fq x0(ctx, 0);
    if (fqpoly_deg(dg) < 0) {
        // char 3 with b2 = b4 = 0 mod p: triple root
        Fq z = -(B6 * Fq(ctx, 4).inverse());
        x0 = z.pow(ctx.q() / 3);
    } else {
        FqPoly h = fqpoly_gcd(g, dg);
        int dh = fqpoly_deg(h);
        if (dh == 1) {
            x0 = -(h[0] * h[1].inverse());
        } else if (dh == 2) {
            x0 = -(h[1] * (h[2] * Fq(ctx, 2)).inverse());
        } else {
            throw std::logic_error("singular_point: no repeated root though disc = 0");
        }
    }
    Fq y0 = -(A1 * x0 + A3) * Fq(ctx, 2).inverse();
    return {x0, y0};
}

// full run retaining the final (minimal) model; ctx must outlive the
// returned model (its Qw elements point to it)
LocalData tate_run(const CurveModel& e, const LocalField& K, const FqCtx& ctx,
                   WModel* final_model) {
    const Int& p = K.p;

    WModel m{Qw(ctx, e.a1()), Qw(ctx, e.a2()), Qw(ctx, e.a3()), Qw(ctx, e.a4()), Qw(ctx, e.a6())};

    long scaling = 0;
    {
        long k = 0;
        auto need = [&](const Qw& a, int i) {
            long v = val_or_big(a);
            if (v < 0) k = std::max(k, (-v + i - 1) / i);
        };
        need(m.a1, 1);
        need(m.a2, 2);
        need(m.a3, 3);
        need(m.a4, 4);
        need(m.a6, 6);
        if (k > 0) {
            m.a1 = m.a1.shift(k);
            m.a2 = m.a2.shift(2 * k);
            m.a3 = m.a3.shift(3 * k);
            m.a4 = m.a4.shift(4 * k);
            m.a6 = m.a6.shift(6 * k);
            scaling = -k;
        }
    }

    LocalData out;
    Rat j = e.j_invariant();
    bool pot_mult = (j != 0) && (*valuation(j, p) < 0);

    const Qw zero(ctx, Rat(0));
    const long LOOP_BOUND = 64;
    for (long pass = 0;; ++pass) {
        if (pass >= LOOP_BOUND) throw std::logic_error("tate_algorithm: loop bound exceeded");
        long vdisc = val_or_big(m.disc());

        if (vdisc == 0) {
            out.kodaira = {KodairaClass::I0, 0};
            out.conductor_exponent = 0;
            out.tamagawa = 1;
            out.min_disc_valuation = 0;
            out.scaling_valuation = scaling;
            out.reduction = ReductionType::Good;
            break;
        }

        // move singular point to the origin
        auto [x0, y0] = singular_point(m, ctx);
        m = translate(m, lift(x0), zero, lift(y0));
        assert(val_or_big(m.a3) >= 1 && val_or_big(m.a4) >= 1 && val_or_big(m.a6) >= 1);

        if (val_or_big(m.b2()) == 0) {
            out.kodaira = {KodairaClass::In, vdisc};
            out.conductor_exponent = 1;
            out.min_disc_valuation = vdisc;
            out.scaling_valuation = scaling;
            QuadInfo qi = quad_structure(m.a1.reduce(), m.a2.reduce(), ctx);
            assert(qi.distinct);
            if (qi.rational) {
                out.reduction = ReductionType::SplitMult;
                out.tamagawa = vdisc;
            } else {
                out.reduction = ReductionType::NonsplitMult;
                out.tamagawa = (vdisc % 2 == 0) ? 2 : 1;
            }
            break;
        }

        out.reduction = pot_mult ? ReductionType::AdditivePotMult : ReductionType::AdditivePotGood;
        out.min_disc_valuation = vdisc;
        out.scaling_valuation = scaling;

        if (val_or_big(m.a6) < 2) {
            out.kodaira = {KodairaClass::II, 0};
            out.conductor_exponent = int(vdisc);
            out.tamagawa = 1;
            break;
        }
        if (val_or_big(m.b8()) < 3) {
            out.kodaira = {KodairaClass::III, 0};
            out.conductor_exponent = int(vdisc) - 1;
            out.tamagawa = 2;
            break;
        }
        if (val_or_big(m.b6()) < 3) {
            QuadInfo qi = quad_structure(m.a3.shift(-1).reduce(), m.a6.shift(-2).reduce(), ctx);
            assert(qi.distinct);
            out.kodaira = {KodairaClass::IV, 0};
            out.conductor_exponent = int(vdisc) - 2;
            out.tamagawa = qi.rational ? 3 : 1;
            break;
        }

        // normalize: p | a1, a2;  p^2 | a3, a4;  p^3 | a6
        {
            Qw s = (p == 2) ? lift(m.a2.reduce().sqrt()) : -(m.a1 * Rat(1, 2));
            m = translate(m, zero, s, zero);
            Fq rho = quad_double_root(m.a3.shift(-1).reduce(), m.a6.shift(-2).reduce(), ctx);
            m = translate(m, zero, zero, lift(rho).shift(1));
            assert(val_or_big(m.a1) >= 1 && val_or_big(m.a2) >= 1);
            assert(val_or_big(m.a3) >= 2 && val_or_big(m.a4) >= 2 && val_or_big(m.a6) >= 3);
        }

        FqPoly P = {m.a6.shift(-3).reduce(), m.a4.shift(-2).reduce(), m.a2.shift(-1).reduce(),
                    Fq(ctx, 1)};
        CubicInfo ci = cubic_structure(P, ctx);
        if (ci.shape == CubicInfo::Distinct) {
            out.kodaira = {KodairaClass::I0star, 0};
            out.conductor_exponent = int(vdisc) - 4;
            out.tamagawa = 1 + ci.rational_roots;
            break;
        }

        if (ci.shape == CubicInfo::Double) {
            m = translate(m, lift(ci.repeated).shift(1), zero, zero);
            assert(val_or_big(m.a2) == 1);
            assert(val_or_big(m.a4) >= 3 && val_or_big(m.a6) >= 4);
            long n = 0;
            bool rational = false;
            for (long level = 1;; ++level) {
                Fq b = m.a3.shift(-(level + 1)).reduce();
                Fq c = m.a6.shift(-(2 * level + 2)).reduce();
                QuadInfo qy = quad_structure(b, c, ctx);
                if (qy.distinct) {
                    n = 2 * level - 1;
                    rational = qy.rational;
                    break;
                }
                m = translate(m, zero, zero, lift(quad_double_root(b, c, ctx)).shift(level + 1));
                Fq qa = m.a2.shift(-1).reduce();
                Fq qb = m.a4.shift(-(level + 2)).reduce();
                Fq qc = m.a6.shift(-(2 * level + 3)).reduce();
                Fq qai = qa.inverse();
                QuadInfo qx = quad_structure(qb * qai, -(qc * qai), ctx);
                if (qx.distinct) {
                    n = 2 * level;
                    rational = qx.rational;
                    break;
                }
                m = translate(m, lift(quad_double_root(qb * qai, -(qc * qai), ctx)).shift(level + 1),
                              zero, zero);
            }
            out.kodaira = {KodairaClass::Instar, n};
            out.conductor_exponent = int(vdisc - 4 - n);
            out.tamagawa = rational ? 4 : 2;
            break;
        }

        // triple root
        m = translate(m, lift(ci.repeated).shift(1), zero, zero);
        assert(val_or_big(m.a2) >= 2 && val_or_big(m.a4) >= 3 && val_or_big(m.a6) >= 4);

        {
            Fq b = m.a3.shift(-2).reduce();
            Fq c = m.a6.shift(-4).reduce();
            QuadInfo qi = quad_structure(b, c, ctx);
            if (qi.distinct) {
                out.kodaira = {KodairaClass::IVstar, 0};
                out.conductor_exponent = int(vdisc) - 6;
                out.tamagawa = qi.rational ? 3 : 1;
                break;
            }
            m = translate(m, zero, zero, lift(quad_double_root(b, c, ctx)).shift(2));
        }

        if (val_or_big(m.a4) < 4) {
            out.kodaira = {KodairaClass::IIIstar, 0};
            out.conductor_exponent = int(vdisc) - 7;
            out.tamagawa = 2;
            break;
        }
        if (val_or_big(m.a6) < 6) {
            out.kodaira = {KodairaClass::IIstar, 0};
            out.conductor_exponent = int(vdisc) - 8;
            out.tamagawa = 1;
            break;
        }
        m = rescale_down(m);
        scaling += 1;
    }

    if (m.is_rational())
        out.minimal_model = CurveModel(m.a1.a(), m.a2.a(), m.a3.a(), m.a4.a(), m.a6.a());

    // Ogg's formula cross-check: v(disc_min) = f + m_components - 1
    if (out.reduction != ReductionType::Good) {
        long comps = 0;
        switch (out.kodaira.cls) {
        case KodairaClass::In: comps = out.kodaira.n; break;
        case KodairaClass::II: comps = 1; break;
        case KodairaClass::III: comps = 2; break;
        case KodairaClass::IV: comps = 3; break;
        case KodairaClass::I0star: comps = 5; break;
        case KodairaClass::Instar: comps = 5 + out.kodaira.n; break;
        case KodairaClass::IVstar: comps = 7; break;
        case KodairaClass::IIIstar: comps = 8; break;
        case KodairaClass::IIstar: comps = 9; break;
        default: comps = 1;
        }
        if (out.min_disc_valuation != out.conductor_exponent + comps - 1)
            throw std::logic_error("tate_algorithm: Ogg consistency check failed");
    }
    if (final_model) *final_model = m;
    return out;
}

} // namespace

LocalData tate_algorithm(const CurveModel& e, const LocalField& K) {
    FqCtx ctx(K.p, K.f);
    return tate_run(e, K, ctx, nullptr);
}

ReductionType reduction_type(const CurveModel& e, const LocalField& K) {
    return tate_algorithm(e, K).reduction;
}

// ---- point counting ----

namespace {

// #E(F_q) of the reduction of a good-reduction model, generic path
Int count_points_fq(const WModel& m, const FqCtx& ctx) {
    if (ctx.q() > 1000000) throw resource_error("count_points: residue field above 10^6");
    Fq A1 = m.a1.reduce(), A2 = m.a2.reduce(), A3 = m.a3.reduce(), A4 = m.a4.reduce(),
       A6 = m.a6.reduce();
    unsigned long pu = ctx.p().get_ui();

    if (pu == 2) {
        Int n = 1;
        for (const Fq& x : fq_elements(ctx)) {
            // y^2 + (a1 x + a3) y = x^3 + a2 x^2 + a4 x + a6
            Fq bb = A1 * x + A3;
            Fq cc = ((x + A2) * x + A4) * x + A6;
            if (bb.is_zero()) {
                n += 1; // unique y = sqrt(cc)
            } else {
                Fq u = cc * (bb * bb).inverse();
                n += (fq_trace(u) == 0) ? 2 : 0;
            }
        }
        return n;
    }

    // odd q: index squares of F_q in a bitmap, then count 1 + chi(g(x))
    unsigned long qsize = ctx.q().get_ui();
    std::vector<bool> sq(qsize, false);
    auto idx = [&](const Fq& z) { return z.a().get_ui() * (ctx.f() == 2 ? pu : 1) +
                                          (ctx.f() == 2 ? z.b().get_ui() : 0); };
    if (ctx.f() == 1) {
        for (unsigned long y = 0; y < pu; ++y) sq[(y * y) % pu] = true;
    } else {
        for (const Fq& z : fq_elements(ctx)) sq[idx(z * z)] = true;
    }
    Fq B2 = m.b2().reduce(), B4 = m.b4().reduce(), B6 = m.b6().reduce();
    Int n = ctx.q() + 1;
    long corr = 0;
    for (const Fq& x : fq_elements(ctx)) {
        Fq g = ((Fq(ctx, 4) * x + B2) * x + Fq(ctx, 2) * B4) * x + B6;
        if (g.is_zero()) continue;
        corr += sq[idx(g)] ? 1 : -1;
    }
    return n + corr;
}

} // namespace

Int count_points(const CurveModel& e, const LocalField& K) {
    FqCtx ctx(K.p, K.f);
    WModel m{};
    LocalData ld = tate_run(e, K, ctx, &m);
    if (!ld.is_good()) throw std::invalid_argument("count_points: bad reduction");
    return count_points_fq(m, ctx);
}

std::string EulerFactor::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        Int c = coeffs[i];
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int a = abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i == 1) os << (a != 1 ? "*T" : "T");
        if (i >= 2) os << (a != 1 ? "*T^" : "T^") << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

EulerFactor euler_factor(const CurveModel& e, const LocalField& K) {
    FqCtx ctx(K.p, K.f);
    WModel m{};
    LocalData ld = tate_run(e, K, ctx, &m);
    switch (ld.reduction) {
    case ReductionType::Good: {
        Int N = count_points_fq(m, ctx);
        Int a = K.q() + 1 - N;
        if (a * a > 4 * K.q()) throw std::logic_error("euler_factor: Hasse bound violated");
        return EulerFactor{{Int(1), -a, K.q()}};
    }
    case ReductionType::SplitMult: return EulerFactor{{Int(1), Int(-1)}};
    case ReductionType::NonsplitMult: return EulerFactor{{Int(1), Int(1)}};
    default: return EulerFactor{{Int(1)}};
    }
}

// ---- local C-terms ----

long LocalCTerm::ord2() const { return *valuation(value, Int(2)); }

std::optional<long> LocalCTerm::ordp(const Int& p) const { return valuation(value, p); }

LocalCTerm local_c_term(const CurveModel& e, const Rat& u_scale, const LocalField& K) {
    if (u_scale == 0) throw std::invalid_argument("local_c_term: zero differential scale");
    LocalData ld = tate_algorithm(e, K);
    LocalCTerm t;
    t.tamagawa = ld.tamagawa;
    // omega_model = u_total^{-1} omega_Neron with v_p(u_total) = scaling_valuation,
    // and omega = u_scale * omega_model, so |omega/omega^o|_v = q^(scaling - v(u_scale)).
    long vu = *valuation(u_scale, K.p);
    t.q_exponent = ld.scaling_valuation - vu;
    Rat q(K.q());
    t.value = Rat(ld.tamagawa);
    for (long i = 0; i < t.q_exponent; ++i) t.value *= q;
    for (long i = 0; i > t.q_exponent; --i) t.value /= q;
    return t;
}

// ---- perturbation stability ----

bool perturbation_stable_at(const CurveModel& e, const LocalField& K, long depth) {
    if (depth < 1) return false;
    LocalData base = tate_algorithm(e, K);
    Rat pk(1);
    for (long i = 0; i < depth; ++i) pk *= Rat(K.p);
    std::vector<Rat> ts = {Rat(1), Rat(2), Rat(3), Rat(K.p - 1), Rat(7)};
    auto perturbed = [&](int which, const Rat& t) {
        Rat d = pk * t;
        Rat a1 = e.a1() + (which == 0 || which == 5 ? d : Rat(0));
        Rat a2 = e.a2() + (which == 1 || which == 5 ? d : Rat(0));
        Rat a3 = e.a3() + (which == 2 || which == 5 ? d : Rat(0));
        Rat a4 = e.a4() + (which == 3 || which == 5 ? d : Rat(0));
        Rat a6 = e.a6() + (which == 4 || which == 5 ? d : Rat(0));
        return CurveModel(a1, a2, a3, a4, a6);
    };
    for (int which = 0; which <= 5; ++which) {
        for (const Rat& t : ts) {
            try {
                CurveModel pe = perturbed(which, t);
                if (!(tate_algorithm(pe, K) == base)) return false;
            } catch (const std::invalid_argument&) {
                return false;
            }
        }
    }
    return true;
}

long perturbation_stability_depth(const CurveModel& e, const LocalField& K, long limit) {
    for (long d = 1; d <= limit; ++d)
        if (perturbation_stable_at(e, K, d)) return d;
    throw resource_error("perturbation_stability_depth: no stable depth below limit");
}

}  // namespace paritylab

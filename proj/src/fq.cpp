#include "paritylab/fq.hpp"

#include <cassert>

namespace paritylab {

FqCtx::FqCtx(const Int& p, int f) : p_(p), f_(f) {
    if (!is_prime(p)) throw std::invalid_argument("FqCtx: p not prime");
    if (f != 1 && f != 2) throw std::invalid_argument("FqCtx: f must be 1 or 2");
    q_ = f == 1 ? p : p * p;
    if (p == 2) {
        // x^2 + x + 1
        c0_ = -1, c1_ = -1;
    } else {
        c0_ = least_nonresidue(p), c1_ = 0;
    }
}

Fq::Fq(const FqCtx& ctx, const Int& a, const Int& b) : ctx_(&ctx), a_(mod(a, ctx)), b_(mod(b, ctx)) {
    if (ctx.f() == 1 && b_ != 0) throw std::invalid_argument("Fq: non-trivial w-part in prime field");
}

Fq Fq::operator+(const Fq& o) const { return Fq(*ctx_, a_ + o.a_, b_ + o.b_); }
Fq Fq::operator-(const Fq& o) const { return Fq(*ctx_, a_ - o.a_, b_ - o.b_); }
Fq Fq::operator-() const { return Fq(*ctx_, -a_, -b_); }

Fq Fq::operator*(const Fq& o) const {
    // (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2,  w^2 = c1 w + c0
    Int bd = b_ * o.b_;
    return Fq(*ctx_, a_ * o.a_ + bd * ctx_->c0(), a_ * o.b_ + b_ * o.a_ + bd * ctx_->c1());
}

Fq Fq::pow(const Int& e) const {
    if (e < 0) return inverse().pow(-e);
    Fq r(*ctx_, 1), base = *this;
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

Fq Fq::inverse() const {
    if (is_zero()) throw std::domain_error("Fq: inverse of zero");
    if (b_ == 0) return Fq(*ctx_, invmod(a_, ctx_->p()));
    // norm = (a + bw)(a + b*conj(w)); conj(w) = c1 - w
    // (a + bw)(a + b c1 - bw) = a^2 + a b c1 - b^2 c0
    Int n = a_ * a_ + a_ * b_ * ctx_->c1() - b_ * b_ * ctx_->c0();
    Int ninv = invmod(n, ctx_->p());
    return Fq(*ctx_, (a_ + b_ * ctx_->c1()) * ninv, -b_ * ninv);
}

Fq Fq::frobenius() const {
    if (ctx_->f() == 1 || b_ == 0) return *this;
    if (ctx_->p() == 2) return *this * *this;
    // odd p, w^2 = r non-residue: w^p = -w
    return Fq(*ctx_, a_, -b_);
}

bool Fq::is_square() const {
    if (is_zero()) return true;
    if (ctx_->p() == 2) return true; // squaring is bijective in char 2
    return pow((ctx_->q() - 1) / 2) == Fq(*ctx_, 1);
}

Fq Fq::sqrt() const {
    const Int& p = ctx_->p();
    if (is_zero()) return *this;
    if (p == 2) {
        // inverse Frobenius: z^(q/2)
        return ctx_->f() == 1 ? *this : pow(2);
    }
    if (!is_square()) throw std::domain_error("Fq: sqrt of non-square");
    const Int& q = ctx_->q();
    // Tonelli-Shanks in F_q.  Deterministic non-residue scan.
    Int Q = q - 1;
    unsigned long s = mpz_scan1(Q.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(Q.get_mpz_t(), Q.get_mpz_t(), s);
    Fq z(*ctx_, 0);
    bool found = false;
    for (Int a = 1; a < p && !found; ++a) {
        for (Int b = 0; b < p && !found; ++b) {
            if (ctx_->f() == 1 && b > 0) break;
            Fq cand = ctx_->f() == 1 ? Fq(*ctx_, a) : Fq(*ctx_, b, a); // sweep w-part first
            if (!cand.is_zero() && !cand.is_square()) {
                z = cand;
                found = true;
            }
        }
    }
    Fq c = z.pow(Q);
    Fq t = pow(Q);
    Fq r = pow((Q + 1) / 2);
    unsigned long m = s;
    const Fq one(*ctx_, 1);
    while (t != one) {
        Fq t2 = t;
        unsigned long i = 0;
        while (t2 != one) {
            t2 = t2 * t2;
            ++i;
        }
        Fq b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b;
        m = i;
        c = b * b;
        t = t * c;
        r = r * b;
    }
    return r;
}

Int fq_trace(const Fq& x) {
    if (x.ctx().f() == 1) return x.a();
    Fq t = x + x.frobenius();
    assert(t.b() == 0);
    return t.a();
}

Int fq_norm(const Fq& x) {
    if (x.ctx().f() == 1) return x.a();
    Fq n = x * x.frobenius();
    assert(n.b() == 0);
    return n.a();
}

std::vector<Fq> fq_elements(const FqCtx& ctx) {
    if (ctx.q() > 1048576) throw resource_error("fq_elements: field too large to enumerate");
    std::vector<Fq> out;
    unsigned long p = ctx.p().get_ui();
    if (ctx.f() == 1) {
        for (unsigned long a = 0; a < p; ++a) out.emplace_back(ctx, Int(a));
    } else {
        for (unsigned long a = 0; a < p; ++a)
            for (unsigned long b = 0; b < p; ++b) out.emplace_back(ctx, Int(a), Int(b));
    }
    return out;
}

// ---- polynomials over F_q ----

FqPoly fqpoly_trim(FqPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

int fqpoly_deg(const FqPoly& p) {
    for (int i = int(p.size()) - 1; i >= 0; --i)
        if (!p[i].is_zero()) return i;
    return -1;
}

FqPoly fqpoly_mul(const FqPoly& x, const FqPoly& y) {
    if (x.empty() || y.empty()) return {};
    const FqCtx& ctx = x.front().ctx();
    FqPoly r(x.size() + y.size() - 1, Fq(ctx, 0));
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j) r[i + j] = r[i + j] + x[i] * y[j];
    return fqpoly_trim(r);
}

FqPoly fqpoly_mod(FqPoly x, const FqPoly& m) {
    x = fqpoly_trim(std::move(x));
    FqPoly mm = fqpoly_trim(m);
    int dm = fqpoly_deg(mm);
    if (dm < 0) throw std::invalid_argument("fqpoly_mod: zero modulus");
    Fq lead_inv = mm[dm].inverse();
    while (fqpoly_deg(x) >= dm) {
        int dx = fqpoly_deg(x);
        Fq c = x[dx] * lead_inv;
        for (int i = 0; i <= dm; ++i) x[dx - dm + i] = x[dx - dm + i] - c * mm[i];
        x = fqpoly_trim(std::move(x));
    }
    return x;
}

FqPoly fqpoly_gcd(FqPoly x, FqPoly y) {
    x = fqpoly_trim(std::move(x));
    y = fqpoly_trim(std::move(y));
    while (fqpoly_deg(y) >= 0) {
        FqPoly r = fqpoly_mod(x, y);
        x = y;
        y = r;
    }
    int d = fqpoly_deg(x);
    if (d >= 0) {
        Fq li = x[d].inverse();
        for (auto& c : x) c = c * li;
    }
    return x;
}

FqPoly fqpoly_derivative(const FqPoly& p) {
    if (p.size() <= 1) return {};
    const FqCtx& ctx = p.front().ctx();
    FqPoly d(p.size() - 1, Fq(ctx, 0));
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Fq(ctx, Int(i));
    return fqpoly_trim(d);
}

Fq fqpoly_eval(const FqPoly& p, const Fq& x) {
    Fq r(x.ctx(), 0);
    for (int i = int(p.size()) - 1; i >= 0; --i) r = r * x + p[i];
    return r;
}

FqPoly fqpoly_monic(FqPoly p) {
    p = fqpoly_trim(std::move(p));
    int d = fqpoly_deg(p);
    if (d < 0) return p;
    Fq li = p[d].inverse();
    for (auto& c : p) c = c * li;
    return p;
}

std::pair<FqPoly, FqPoly> fqpoly_divmod(const FqPoly& a, const FqPoly& b) {
    FqPoly r = fqpoly_trim(a), bb = fqpoly_trim(b);
    int db = fqpoly_deg(bb);
    if (db < 0) throw std::invalid_argument("fqpoly_divmod: division by zero");
    int da = fqpoly_deg(r);
    if (da < db) return {{}, r};
    const FqCtx& ctx = bb[db].ctx();
    FqPoly q(da - db + 1, Fq(ctx, 0));
    Fq li = bb[db].inverse();
    while ((da = fqpoly_deg(r)) >= db) {
        Fq c = r[da] * li;
        q[da - db] = c;
        for (int i = 0; i <= db; ++i) r[da - db + i] = r[da - db + i] - c * bb[i];
        r = fqpoly_trim(std::move(r));
    }
    return {fqpoly_trim(q), r};
}

FqPoly fqpoly_sub(const FqPoly& a, const FqPoly& b) {
    if (a.empty() && b.empty()) return {};
    const FqCtx& ctx = a.empty() ? b.front().ctx() : a.front().ctx();
    FqPoly r(std::max(a.size(), b.size()), Fq(ctx, 0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
    return fqpoly_trim(r);
}

FqPoly fqpoly_powmod(const FqPoly& base0, const Int& e, const FqPoly& m, const FqCtx& ctx) {
    FqPoly acc = {Fq(ctx, 1)};
    FqPoly base = fqpoly_mod(base0, m);
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = fqpoly_mod(fqpoly_mul(acc, base), m);
        base = fqpoly_mod(fqpoly_mul(base, base), m);
        k >>= 1;
    }
    return acc;
}

void fqpoly_ext_gcd(const FqPoly& a, const FqPoly& b, const FqCtx& ctx, FqPoly& g, FqPoly& u,
                    FqPoly& v) {
    FqPoly r0 = fqpoly_trim(a), r1 = fqpoly_trim(b);
    FqPoly s0 = {Fq(ctx, 1)}, s1 = {};
    FqPoly t0 = {}, t1 = {Fq(ctx, 1)};
    while (fqpoly_deg(r1) >= 0) {
        auto [q, r] = fqpoly_divmod(r0, r1);
        FqPoly ns = fqpoly_sub(s0, fqpoly_mul(q, s1));
        FqPoly nt = fqpoly_sub(t0, fqpoly_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(ns);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    int d = fqpoly_deg(r0);
    if (d >= 0) {
        Fq li = r0[d].inverse();
        for (auto& c : r0) c = c * li;
        for (auto& c : s0) c = c * li;
        for (auto& c : t0) c = c * li;
    }
    g = std::move(r0);
    u = std::move(s0);
    v = std::move(t0);
}

int fqpoly_count_roots(const FqPoly& p, const FqCtx& ctx) {
    FqPoly pp = fqpoly_trim(p);
    int d = fqpoly_deg(pp);
    if (d <= 0) return 0;
    FqPoly x = {Fq(ctx, 0), Fq(ctx, 1)};
    FqPoly xq = fqpoly_powmod(x, ctx.q(), pp, ctx);
    FqPoly diff = xq;
    diff.resize(std::max<size_t>(diff.size(), 2), Fq(ctx, 0));
    diff[1] = diff[1] - Fq(ctx, 1);
    FqPoly g = fqpoly_gcd(pp, fqpoly_trim(diff));
    return std::max(fqpoly_deg(g), 0);
}

std::vector<Fq> fqpoly_roots_deg2(const FqPoly& p, const FqCtx& ctx) {
    FqPoly pp = fqpoly_trim(p);
    int d = fqpoly_deg(pp);
    std::vector<Fq> roots;
    if (d == 1) {
        roots.push_back(-(pp[0] * pp[1].inverse()));
        return roots;
    }
    if (d != 2) throw std::invalid_argument("fqpoly_roots_deg2: degree must be 1 or 2");
    if (ctx.p() == 2) {
        for (const Fq& x : fq_elements(ctx))
            if (fqpoly_eval(pp, x).is_zero()) roots.push_back(x);
        return roots;
    }
    Fq a = pp[2], b = pp[1], c = pp[0];
    Fq disc = b * b - Fq(ctx, 4) * a * c;
    if (!disc.is_square()) return roots;
    Fq s = disc.sqrt();
    Fq inv2a = (Fq(ctx, 2) * a).inverse();
    roots.push_back((-b + s) * inv2a);
    if (!s.is_zero()) roots.push_back((-b - s) * inv2a);
    return roots;
}

// ---- Qw ----

Qw Qw::operator+(const Qw& o) const { return Qw(*ctx_, a_ + o.a_, b_ + o.b_); }
Qw Qw::operator-(const Qw& o) const { return Qw(*ctx_, a_ - o.a_, b_ - o.b_); }
Qw Qw::operator-() const { return Qw(*ctx_, -a_, -b_); }
Qw Qw::operator*(const Rat& r) const { return Qw(*ctx_, a_ * r, b_ * r); }
Qw Qw::operator+(const Rat& r) const { return Qw(*ctx_, a_ + r, b_); }

Qw Qw::operator*(const Qw& o) const {
    Rat bd = b_ * o.b_;
    return Qw(*ctx_, a_ * o.a_ + bd * Rat(ctx_->c0()), a_ * o.b_ + b_ * o.a_ + bd * Rat(ctx_->c1()));
}

std::optional<long> Qw::valuation() const {
    if (is_zero()) return std::nullopt;
    const Int& p = ctx_->p();
    auto vrat = [&](const Rat& x) -> std::optional<long> {
        if (x == 0) return std::nullopt;
        return paritylab::valuation(x.get_num(), p) - paritylab::valuation(x.get_den(), p);
    };
    std::optional<long> va = vrat(a_), vb = vrat(b_);
    if (!va) return vb;
    if (!vb) return va;
    return std::min(*va, *vb);
}

Fq Qw::reduce() const {
    const Int& p = ctx_->p();
    auto red = [&](const Rat& x) -> Int {
        if (x == 0) return Int(0);
        if (mpz_divisible_p(x.get_den().get_mpz_t(), p.get_mpz_t()))
            throw std::domain_error("Qw::reduce: negative valuation");
        return Int(x.get_num() % p) * invmod(Int(x.get_den() % p), p);
    };
    return Fq(*ctx_, red(a_), red(b_));
}

Qw Qw::shift(long k) const {
    Rat f(1);
    Rat p(ctx_->p());
    for (long i = 0; i < k; ++i) f *= p;
    for (long i = 0; i > k; --i) f /= p;
    return Qw(*ctx_, a_ * f, b_ * f);
}

Qw lift(const Fq& x) {
    return Qw(x.ctx(), Rat(x.a()), Rat(x.b()));
}

}  // namespace paritylab

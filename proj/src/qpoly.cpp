#include "paritylab/qpoly.hpp"

#include <algorithm>
#include <cassert>

namespace paritylab {

QPoly qpoly_trim(QPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int qpoly_deg(const QPoly& p) {
    for (int i = int(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

QPoly qpoly_add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return qpoly_trim(r);
}

QPoly qpoly_sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return qpoly_trim(r);
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return qpoly_trim(r);
}

QPoly qpoly_scale(const QPoly& a, const Rat& c) {
    QPoly r = a;
    for (auto& x : r) x *= c;
    return qpoly_trim(r);
}

std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b) {
    QPoly r = qpoly_trim(a), bb = qpoly_trim(b);
    int db = qpoly_deg(bb);
    if (db < 0) throw std::invalid_argument("qpoly_divmod: division by zero");
    int da = qpoly_deg(r);
    if (da < db) return {{}, r};
    QPoly q(da - db + 1, Rat(0));
    Rat li = 1 / bb[db];
    while ((da = qpoly_deg(r)) >= db) {
        Rat c = r[da] * li;
        q[da - db] = c;
        for (int i = 0; i <= db; ++i) r[da - db + i] -= c * bb[i];
        r = qpoly_trim(std::move(r));
    }
    return {qpoly_trim(q), r};
}

bool qpoly_divides(const QPoly& b, const QPoly& a) {
    return qpoly_deg(qpoly_divmod(a, b).second) < 0;
}

QPoly qpoly_monic(QPoly p) {
    p = qpoly_trim(std::move(p));
    int d = qpoly_deg(p);
    if (d < 0) return p;
    Rat li = 1 / p[d];
    for (auto& c : p) c *= li;
    return p;
}

QPoly qpoly_gcd(QPoly a, QPoly b) {
    a = qpoly_trim(std::move(a));
    b = qpoly_trim(std::move(b));
    while (qpoly_deg(b) >= 0) {
        QPoly r = qpoly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return qpoly_monic(std::move(a));
}

QPoly qpoly_derivative(const QPoly& p) {
    if (p.size() <= 1) return {};
    QPoly d(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Rat(Int(i));
    return qpoly_trim(d);
}

Rat qpoly_eval(const QPoly& p, const Rat& x) {
    Rat r(0);
    for (int i = int(p.size()) - 1; i >= 0; --i) r = r * x + p[i];
    return r;
}

Rat qpoly_resultant(const QPoly& a0, const QPoly& b0) {
    QPoly a = qpoly_trim(a0), b = qpoly_trim(b0);
    int da = qpoly_deg(a), db = qpoly_deg(b);
    if (da < 0 || db < 0) return Rat(0);
    Rat res(1);
    while (true) {
        int m = qpoly_deg(a), n = qpoly_deg(b);
        if (n == 0) {
            Rat t(1);
            for (int i = 0; i < m; ++i) t *= b[0];
            return res * t;
        }
        QPoly r = qpoly_divmod(a, b).second;
        int dr = qpoly_deg(r);
        if (dr < 0) return Rat(0);
        Rat t(1);
        for (int i = 0; i < m - dr; ++i) t *= b[n];
        if ((m % 2) && (n % 2)) res = -res;
        res *= t;
        a = std::move(b);
        b = std::move(r);
    }
}

Rat qpoly_discriminant(const QPoly& p) {
    int n = qpoly_deg(p);
    if (n < 1) throw std::invalid_argument("qpoly_discriminant: degree < 1");
    Rat r = qpoly_resultant(p, qpoly_derivative(p));
    Rat d = r / p[n];
    if (((n * (n - 1)) / 2) % 2) d = -d;
    return d;
}

ZPoly qpoly_primitive_z(const QPoly& p) {
    QPoly q = qpoly_trim(p);
    Int den(1);
    for (const auto& c : q) {
        Int g = gcd(den, c.get_den());
        den = den / g * c.get_den();
    }
    ZPoly z(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        Rat scaled = q[i] * Rat(den);
        scaled.canonicalize();
        z[i] = scaled.get_num();
    }
    Int content(0);
    for (const auto& c : z) content = gcd(content, c);
    if (content > 1)
        for (auto& c : z) c /= content;
    if (!z.empty() && z.back() < 0)
        for (auto& c : z) c = -c;
    return z;
}

namespace {

std::vector<Int> divisors(const Int& n) {
    std::vector<Int> ds = {Int(1)};
    for (const auto& [p, e] : factorize(n).primes) {
        size_t sz = ds.size();
        Int pk(1);
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < sz; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

} // namespace

std::vector<Rat> qpoly_rational_roots(const QPoly& p) {
    ZPoly z = qpoly_primitive_z(p);
    std::vector<Rat> roots;
    if (z.size() <= 1) return roots;
    size_t shift = 0;
    while (shift < z.size() && z[shift] == 0) ++shift;
    if (shift) {
        roots.emplace_back(0);
        z.erase(z.begin(), z.begin() + shift);
    }
    if (z.size() <= 1) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    QPoly q(z.size());
    for (size_t i = 0; i < z.size(); ++i) q[i] = Rat(z[i]);
    for (const Int& num : divisors(abs(z.front()))) {
        for (const Int& den : divisors(abs(z.back()))) {
            for (int s : {1, -1}) {
                Rat cand(s * num, den);
                cand.canonicalize();
                if (qpoly_eval(q, cand) == 0 &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

int qpoly_real_root_count(const QPoly& p) {
    QPoly f = qpoly_trim(p);
    int d = qpoly_deg(f);
    if (d <= 0) return 0;
    QPoly g = qpoly_gcd(f, qpoly_derivative(f));
    if (qpoly_deg(g) > 0) f = qpoly_divmod(f, g).first;
    std::vector<QPoly> chain = {f, qpoly_derivative(f)};
    while (qpoly_deg(chain.back()) > 0) {
        QPoly r = qpoly_divmod(chain[chain.size() - 2], chain.back()).second;
        if (qpoly_deg(r) < 0) break;
        chain.push_back(qpoly_scale(r, Rat(-1)));
    }
    auto sign_changes = [&](bool at_plus_inf) {
        int changes = 0, prev = 0;
        for (const QPoly& q : chain) {
            int dq = qpoly_deg(q);
            if (dq < 0) continue;
            int s = sgn(q[dq]);
            if (!at_plus_inf && dq % 2) s = -s;
            if (prev != 0 && s != 0 && s != prev) ++changes;
            if (s != 0) prev = s;
        }
        return changes;
    };
    return sign_changes(false) - sign_changes(true);
}

// ---- factorization over F_p ----

FqPoly zpoly_reduce(const ZPoly& p, const FqCtx& ctx) {
    FqPoly r;
    r.reserve(p.size());
    for (const auto& c : p) r.emplace_back(ctx, c);
    return fqpoly_trim(r);
}

namespace {

FqPoly fqpoly_addp(const FqPoly& a, const FqPoly& b) {
    if (a.empty() && b.empty()) return {};
    const FqCtx& ctx = a.empty() ? b.front().ctx() : a.front().ctx();
    FqPoly r(std::max(a.size(), b.size()), Fq(ctx, 0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
    return fqpoly_trim(r);
}

// equal-degree splitting of a squarefree product of degree-d irreducibles
void edf(const FqPoly& f, int d, const FqCtx& ctx, std::vector<FqPoly>& out, unsigned long& seed) {
    int n = fqpoly_deg(f);
    if (n == d) {
        out.push_back(fqpoly_monic(f));
        return;
    }
    const Int& q = ctx.q();
    for (int attempt = 0; attempt < 1000; ++attempt) {
        FqPoly a(n, Fq(ctx, 0));
        for (int i = 0; i < n; ++i) {
            seed = seed * 6364136223846793005ull + 1442695040888963407ull;
            a[i] = Fq(ctx, Int((seed >> 16) % q.get_ui()));
        }
        a = fqpoly_trim(std::move(a));
        if (fqpoly_deg(a) < 1) continue;
        FqPoly g = fqpoly_gcd(f, a);
        if (fqpoly_deg(g) > 0 && fqpoly_deg(g) < n) {
            edf(g, d, ctx, out, seed);
            edf(fqpoly_divmod(f, g).first, d, ctx, out, seed);
            return;
        }
        FqPoly b;
        if (ctx.p() == 2) {
            // trace map: a + a^2 + a^4 + ... + a^(2^(d-1)) mod f
            FqPoly t = fqpoly_mod(a, f), acc = t;
            for (int i = 1; i < d; ++i) {
                t = fqpoly_mod(fqpoly_mul(t, t), f);
                acc = fqpoly_addp(acc, t);
            }
            b = acc;
        } else {
            Int e = (pow_int(q, d) - 1) / 2;
            b = fqpoly_powmod(a, e, f, ctx);
            if (b.empty()) b = {Fq(ctx, 0)};
            b[0] = b[0] - Fq(ctx, 1);
            b = fqpoly_trim(std::move(b));
        }
        FqPoly h = fqpoly_gcd(f, b);
        int dh = fqpoly_deg(h);
        if (dh > 0 && dh < n) {
            edf(h, d, ctx, out, seed);
            edf(fqpoly_divmod(f, h).first, d, ctx, out, seed);
            return;
        }
    }
    throw std::runtime_error("edf: did not converge");
}

// factor a squarefree monic polynomial: distinct-degree then equal-degree
void factor_squarefree(FqPoly f, const FqCtx& ctx, std::vector<FqPoly>& out, unsigned long& seed) {
    FqPoly x = {Fq(ctx, 0), Fq(ctx, 1)};
    FqPoly xq = fqpoly_mod(x, f);
    for (int d = 1; fqpoly_deg(f) > 0; ++d) {
        if (2 * d > fqpoly_deg(f)) {
            out.push_back(fqpoly_monic(f));
            return;
        }
        xq = fqpoly_powmod(xq, ctx.q(), f, ctx);
        FqPoly g = fqpoly_gcd(f, fqpoly_sub(xq, x));
        if (fqpoly_deg(g) > 0) {
            edf(g, d, ctx, out, seed);
            f = fqpoly_divmod(f, g).first;
            xq = fqpoly_mod(xq, f);
        }
    }
}

// distinct monic irreducible divisors of f
void distinct_irreducibles(FqPoly f, const FqCtx& ctx, std::vector<FqPoly>& out,
                           unsigned long& seed) {
    f = fqpoly_monic(std::move(f));
    if (fqpoly_deg(f) <= 0) return;
    FqPoly d = fqpoly_derivative(f);
    if (fqpoly_deg(d) < 0) {
        // f = g(x^p)
        FqPoly g;
        unsigned long p = ctx.p().get_ui();
        for (size_t i = 0; i < f.size(); i += p) g.push_back(f[i]);
        distinct_irreducibles(fqpoly_trim(g), ctx, out, seed);
        return;
    }
    FqPoly c = fqpoly_gcd(f, d);
    FqPoly u = fqpoly_divmod(f, c).first; // squarefree part
    factor_squarefree(u, ctx, out, seed);
    distinct_irreducibles(c, ctx, out, seed);
}

} // namespace

std::vector<FqFactor> fqpoly_factor(const FqPoly& input, const FqCtx& ctx) {
    if (ctx.f() != 1) throw std::invalid_argument("fqpoly_factor: prime field only");
    std::vector<FqFactor> result;
    FqPoly f = fqpoly_monic(input);
    if (fqpoly_deg(f) <= 0) return result;

    unsigned long seed = 0x5EEDF00Dul;
    std::vector<FqPoly> irr;
    distinct_irreducibles(f, ctx, irr, seed);

    // dedupe
    std::vector<FqPoly> unique_irr;
    for (const auto& g : irr) {
        bool dup = false;
        for (const auto& h : unique_irr)
            if (fqpoly_deg(g) == fqpoly_deg(h) && fqpoly_deg(fqpoly_sub(g, h)) < 0) dup = true;
        if (!dup) unique_irr.push_back(g);
    }

    for (const auto& g : unique_irr) {
        int m = 0;
        FqPoly rem = f;
        while (true) {
            auto [q2, r2] = fqpoly_divmod(rem, g);
            if (fqpoly_deg(r2) >= 0) break;
            rem = q2;
            ++m;
        }
        if (m > 0) result.push_back({g, m});
    }
    std::sort(result.begin(), result.end(), [](const FqFactor& a, const FqFactor& b) {
        int da = fqpoly_deg(a.factor), db = fqpoly_deg(b.factor);
        if (da != db) return da < db;
        for (int i = da; i >= 0; --i)
            if (a.factor[i].a() != b.factor[i].a()) return a.factor[i].a() < b.factor[i].a();
        return false;
    });
    return result;
}

// ---- rational factor search ----

namespace {

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

void zpoly_mod_inplace(ZPoly& a, const Int& m) {
    for (auto& c : a) {
        c %= m;
        if (c < 0) c += m;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly fqpoly_to_z(const FqPoly& q) {
    ZPoly z(q.size());
    for (size_t i = 0; i < q.size(); ++i) z[i] = q[i].a();
    return z;
}

// num/den = a mod M with |num|, den <= sqrt(M/2); nullopt if none exists
std::optional<Rat> rational_reconstruct(const Int& a, const Int& M) {
    Int bound = isqrt(M / 2);
    Int r0 = M, r1 = a % M;
    if (r1 < 0) r1 += M;
    Int t0 = 0, t1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (abs(t1) > bound || t1 == 0) return std::nullopt;
    Rat res(r1, t1);
    res.canonicalize();
    return res;
}

} // namespace

std::vector<QPoly> qpoly_monic_factors_of_degree(const QPoly& poly, int d) {
    QPoly f = qpoly_monic(poly);
    int n = qpoly_deg(f);
    std::vector<QPoly> found;
    if (d <= 0 || d > 4 || n < d) return found;
    if (d == n) {
        found.push_back(f);
        return found;
    }
    if (d == 1) {
        for (const Rat& r : qpoly_rational_roots(f)) found.push_back({-r, Rat(1)});
        return found;
    }

    ZPoly fz = qpoly_primitive_z(f);
    Int lead = fz.back();

    // prime of good reduction: squarefree mod p, leading coefficient a unit
    Int p(0);
    for (Int cand = 5; cand < 20000; cand = cand + 2) {
        if (!is_prime(cand)) continue;
        if (mpz_divisible_p(lead.get_mpz_t(), cand.get_mpz_t())) continue;
        FqCtx probe(cand, 1);
        FqPoly fp = zpoly_reduce(fz, probe);
        if (fqpoly_deg(fp) != n) continue;
        if (fqpoly_deg(fqpoly_gcd(fp, fqpoly_derivative(fp))) <= 0) {
            p = cand;
            break;
        }
    }
    if (p == 0) throw std::runtime_error("qpoly_monic_factors_of_degree: no good prime found");

    FqCtx ctx(p, 1);
    FqPoly fp = zpoly_reduce(fz, ctx);
    std::vector<FqFactor> facs = fqpoly_factor(fp, ctx);
    int m = int(facs.size());
    if (m >= 30) throw resource_error("qpoly_monic_factors_of_degree: too many modular factors");

    // Coefficient height bound for a monic degree-d factor of monic f, with
    // enough slack that rational reconstruction of num/den (den | lead^d)
    // succeeds: p^k > 2*B^2 with B = (2(1+H))^d * lead^d.
    Rat height(0);
    for (const auto& c : f)
        if (abs(c) > height) height = abs(c);
    Rat boundr(1);
    for (int i = 0; i < d; ++i) boundr *= 2 * (1 + height) * Rat(abs(lead));
    boundr.canonicalize();
    Int bound = boundr.get_num() / boundr.get_den() + 1;

    Int pk = p;
    while (pk < 2 * bound * bound) pk *= p;

    for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
        int deg = 0;
        for (int i = 0; i < m; ++i)
            if (mask & (1ul << i)) deg += fqpoly_deg(facs[i].factor);
        if (deg != d) continue;

        FqPoly gp = {Fq(ctx, 1)};
        for (int i = 0; i < m; ++i)
            if (mask & (1ul << i)) gp = fqpoly_mul(gp, facs[i].factor);
        // skip subsets using a repeated modular factor beyond its multiplicity
        bool bad = false;
        for (int i = 0; i < m; ++i)
            if ((mask & (1ul << i)) && facs[i].multiplicity > 1) bad = true;
        if (bad) continue;
        FqPoly hp = fqpoly_divmod(fp, gp).first;
        FqPoly gg, uu, vv;
        fqpoly_ext_gcd(gp, hp, ctx, gg, uu, vv);
        if (fqpoly_deg(gg) != 0) continue; // g, h not coprime mod p; skip

        ZPoly g = fqpoly_to_z(gp);
        ZPoly h = fqpoly_to_z(hp);

        // linear Hensel lifting of f = g*h (g monic) from p up to pk
        Int mod_now = p;
        while (mod_now < pk) {
            ZPoly gh = zpoly_mul(g, h);
            ZPoly e(std::max(fz.size(), gh.size()), Int(0));
            for (size_t i = 0; i < fz.size(); ++i) e[i] += fz[i];
            for (size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
            for (auto& c : e) c /= mod_now; // exact by construction
            FqPoly ep = zpoly_reduce(e, ctx);

            // delta_g = v*e mod g ; delta_h = u*e + ((v*e) div g)*h
            auto [quot, dg] = fqpoly_divmod(fqpoly_mul(vv, ep), gp);
            FqPoly dh = fqpoly_addp(fqpoly_mul(uu, ep), fqpoly_mul(quot, hp));
            auto add_scaled = [&](ZPoly& target, const FqPoly& delta) {
                if (target.size() < delta.size()) target.resize(delta.size(), Int(0));
                for (size_t i = 0; i < delta.size(); ++i) target[i] += mod_now * delta[i].a();
            };
            add_scaled(g, dg);
            add_scaled(h, dh);
            mod_now *= p;
            zpoly_mod_inplace(g, mod_now);
            zpoly_mod_inplace(h, mod_now);
        }

        QPoly cand(d + 1);
        bool recon_ok = true;
        for (int i = 0; i < d && recon_ok; ++i) {
            Int c = i < int(g.size()) ? g[i] : Int(0);
            auto r = rational_reconstruct(c, mod_now);
            if (!r) {
                recon_ok = false;
                break;
            }
            cand[i] = *r;
        }
        if (!recon_ok) continue;
        cand[d] = 1;
        if (qpoly_divides(cand, f)) {
            bool dup = false;
            for (const auto& known : found)
                if (known == cand) dup = true;
            if (!dup) found.push_back(cand);
        }
    }
    return found;
}

bool qpoly_is_irreducible(const QPoly& p) {
    QPoly f = qpoly_monic(p);
    int n = qpoly_deg(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    for (int d = 1; 2 * d <= n; ++d)
        if (!qpoly_monic_factors_of_degree(f, d).empty()) return false;
    return true;
}

}  // namespace paritylab

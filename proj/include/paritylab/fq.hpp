#pragma once

// Residue fields F_q with q = p or p^2, and the exact quadratic ring
// Q(w) sitting inside the unramified quadratic extension of Q_p.
//
// For odd p the F_{p^2} modulus is x^2 - r with r the least positive
// non-residue mod p; for p = 2 it is x^2 + x + 1.  The same w is used to
// present the unramified quadratic field: its integers are Z_p[w], so
// elements with rational coordinates can be handled exactly.

#include <vector>

#include "paritylab/arith.hpp"

namespace paritylab {

class FqCtx {
  public:
    FqCtx(const Int& p, int f);

    const Int& p() const { return p_; }
    int f() const { return f_; }
    const Int& q() const { return q_; }
    // x^2 = c1*x + c0 is the reduction rule for the generator
    const Int& c0() const { return c0_; }
    const Int& c1() const { return c1_; }

  private:
    Int p_;
    int f_;
    Int q_;
    Int c0_, c1_;
};

// An element of F_q, q = p^f, as a + b*w (b = 0 when f = 1).
class Fq {
  public:
    Fq() : ctx_(nullptr) {}
    Fq(const FqCtx& ctx, const Int& a) : ctx_(&ctx), a_(mod(a, ctx)), b_(0) {}
    Fq(const FqCtx& ctx, const Int& a, const Int& b);

    const FqCtx& ctx() const { return *ctx_; }
    const Int& a() const { return a_; }
    const Int& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool in_prime_field() const { return b_ == 0; }

    Fq operator+(const Fq& o) const;
    Fq operator-(const Fq& o) const;
    Fq operator*(const Fq& o) const;
    Fq operator-() const;
    bool operator==(const Fq& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const Fq& o) const { return !(*this == o); }

    Fq inverse() const;
    Fq pow(const Int& e) const;
    Fq frobenius() const; // x -> x^p

    bool is_square() const;
    // A square root (throws std::domain_error if none exists).
    Fq sqrt() const;

  private:
    static Int mod(const Int& x, const FqCtx& c) {
        Int r = x % c.p();
        if (r < 0) r += c.p();
        return r;
    }
    const FqCtx* ctx_;
    Int a_, b_;
};

// Trace and norm to F_p.
Int fq_trace(const Fq& x);
Int fq_norm(const Fq& x);

// All elements of F_q (q small; throws resource_error above 2^20).
std::vector<Fq> fq_elements(const FqCtx& ctx);

// ---- small polynomial helpers over F_q ----

// Polynomials are coefficient vectors, constant term first.
using FqPoly = std::vector<Fq>;

FqPoly fqpoly_trim(FqPoly p);
int fqpoly_deg(const FqPoly& p); // -1 for zero
FqPoly fqpoly_mul(const FqPoly& x, const FqPoly& y);
FqPoly fqpoly_mod(FqPoly x, const FqPoly& m);
FqPoly fqpoly_gcd(FqPoly x, FqPoly y); // monic
FqPoly fqpoly_derivative(const FqPoly& p);
Fq fqpoly_eval(const FqPoly& p, const Fq& x);

FqPoly fqpoly_monic(FqPoly p);
std::pair<FqPoly, FqPoly> fqpoly_divmod(const FqPoly& a, const FqPoly& b);
FqPoly fqpoly_sub(const FqPoly& a, const FqPoly& b);
// base^e mod m
FqPoly fqpoly_powmod(const FqPoly& base, const Int& e, const FqPoly& m, const FqCtx& ctx);
// g = gcd(a,b) monic with u*a + v*b = g
void fqpoly_ext_gcd(const FqPoly& a, const FqPoly& b, const FqCtx& ctx, FqPoly& g, FqPoly& u,
                    FqPoly& v);

// Number of distinct roots of p in F_q (via gcd with x^q - x).
int fqpoly_count_roots(const FqPoly& p, const FqCtx& ctx);

// Roots of a polynomial of degree <= 2 (all of them, without multiplicity).
std::vector<Fq> fqpoly_roots_deg2(const FqPoly& p, const FqCtx& ctx);

// ---- the exact quadratic ring Q(w) ----

// Elements a + b*w with a, b in Q and w the generator of the F_q context
// (w^2 = c1*w + c0 with small integer c0, c1).  For f = 1 the b-coordinate
// stays identically zero.
class Qw {
  public:
    Qw() : ctx_(nullptr), a_(0), b_(0) {}
    Qw(const FqCtx& ctx, Rat a) : ctx_(&ctx), a_(std::move(a)), b_(0) {}
    Qw(const FqCtx& ctx, Rat a, Rat b) : ctx_(&ctx), a_(std::move(a)), b_(std::move(b)) {}

    const FqCtx& ctx() const { return *ctx_; }
    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    Qw operator+(const Qw& o) const;
    Qw operator-(const Qw& o) const;
    Qw operator*(const Qw& o) const;
    Qw operator-() const;
    bool operator==(const Qw& o) const { return a_ == o.a_ && b_ == o.b_; }

    Qw operator*(const Rat& r) const;
    Qw operator+(const Rat& r) const;
    Qw operator-(const Rat& r) const { return *this + Rat(-r); }

    // v_p on the unramified quadratic field: min of coordinate valuations.
    // nullopt = +infinity.
    std::optional<long> valuation() const;

    // Reduction mod p (requires valuation >= 0).
    Fq reduce() const;

    // Exact division by p^k (k may be negative).
    Qw shift(long k) const;

  private:
    const FqCtx* ctx_;
    Rat a_, b_;
};

// Lift of a residue element (coordinates lifted to [0,p) integers).
Qw lift(const Fq& x);

}  // namespace paritylab

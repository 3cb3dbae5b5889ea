#pragma once

// Dense univariate polynomials over Q (and Z), with the factorization
// helpers the rest of the library needs: rational roots, Sturm sequences,
// factorization mod p, Hensel lifting and small rational factor search.

#include <vector>

#include "paritylab/fq.hpp"

namespace paritylab {

// Coefficient vectors, constant term first.
using QPoly = std::vector<Rat>;
using ZPoly = std::vector<Int>;

QPoly qpoly_trim(QPoly p);
int qpoly_deg(const QPoly& p);
QPoly qpoly_add(const QPoly& a, const QPoly& b);
QPoly qpoly_sub(const QPoly& a, const QPoly& b);
QPoly qpoly_mul(const QPoly& a, const QPoly& b);
QPoly qpoly_scale(const QPoly& a, const Rat& c);
// quotient and remainder; b != 0
std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b);
bool qpoly_divides(const QPoly& b, const QPoly& a); // b | a exactly
QPoly qpoly_gcd(QPoly a, QPoly b);                  // monic
QPoly qpoly_derivative(const QPoly& p);
Rat qpoly_eval(const QPoly& p, const Rat& x);
QPoly qpoly_monic(QPoly p);

Rat qpoly_resultant(const QPoly& a, const QPoly& b);
Rat qpoly_discriminant(const QPoly& p);

// Primitive integer polynomial proportional to p (content removed).
ZPoly qpoly_primitive_z(const QPoly& p);

// All rational roots (with multiplicity stripped).
std::vector<Rat> qpoly_rational_roots(const QPoly& p);

// Number of distinct real roots, by Sturm's theorem.
int qpoly_real_root_count(const QPoly& p);

// Irreducibility over Q (degree <= 4 by root/factor search; higher degrees
// by mod-p factor degree patterns plus rational factor search).
bool qpoly_is_irreducible(const QPoly& p);

// ---- arithmetic mod p ----

// Reduce an integer polynomial mod p (context must have f = 1).
FqPoly zpoly_reduce(const ZPoly& p, const FqCtx& ctx);

struct FqFactor {
    FqPoly factor; // monic irreducible
    int multiplicity;
};

// Full factorization over F_p (f = 1 context), deterministic output order.
std::vector<FqFactor> fqpoly_factor(const FqPoly& p, const FqCtx& ctx);

// ---- rational factor search ----

// Monic rational factors of the given degree d (1 <= d <= 4) of a monic
// rational polynomial, via mod-p factorization, Hensel lifting, and subset
// recombination.  Returns every monic degree-d factor.
std::vector<QPoly> qpoly_monic_factors_of_degree(const QPoly& p, int d);

}  // namespace paritylab

#pragma once

// Exact integer and rational arithmetic: valuations, factorization,
// primality, square classes and quadratic residue symbols.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "paritylab/errors.hpp"

namespace paritylab {

using Int = mpz_class;
using Rat = mpq_class;

// ---- primality and factorization ----

// Deterministic Miller-Rabin, valid for 0 <= n < 3.3*10^24.
bool is_prime(const Int& n);

struct Factorization {
    int sign = 1;                                 // -1 for negative input
    std::vector<std::pair<Int, unsigned>> primes; // ascending, exponents >= 1

    Int value() const; // sign * prod p^e
};

// Complete factorization of n != 0.  Trial division up to 10^6 followed by
// Brent-Pollard rho; guaranteed for |n| <= 10^18, best effort above.
Factorization factorize(const Int& n);

// Distinct prime divisors of n != 0, ascending.
std::vector<Int> prime_divisors(const Int& n);

// ---- valuations ----

// v_p(n) for n != 0.
long valuation(const Int& n, const Int& p);

// v_p(x); std::nullopt encodes +infinity (x = 0).  Throws if p is not prime.
std::optional<long> valuation(const Rat& x, const Int& p);

// x / p^v_p(x) as a rational (x != 0).
Rat prime_to_p_part(const Rat& x, const Int& p);

// ---- squares and square classes ----

bool is_square(const Int& n);
bool is_square(const Rat& x);
Int isqrt(const Int& n); // floor sqrt, n >= 0

// An element of Q^x / (Q^x)^2, stored as its unique squarefree integer
// representative.  The sign is kept: -1 and 1 are distinct classes.
class SquareClass {
  public:
    SquareClass() : rep_(1) {}
    explicit SquareClass(const Int& squarefree_rep);

    const Int& representative() const { return rep_; }

    SquareClass operator*(const SquareClass& o) const;
    bool operator==(const SquareClass& o) const { return rep_ == o.rep_; }
    bool operator!=(const SquareClass& o) const { return rep_ != o.rep_; }
    bool is_trivial() const { return rep_ == 1; }

  private:
    Int rep_;
};

// The class of x != 0 in Q^x/(Q^x)^2.
SquareClass square_class(const Rat& x);

// ---- residue symbols ----

// Legendre symbol (a|p) in {-1,0,+1}, p an odd prime.
int legendre_symbol(const Int& a, const Int& p);

// Legendre symbol over F_q, q = p^f with f in {1,2}, p odd: 0 if p | a,
// else +1 iff a is a square in F_q.  For f = 2 every unit of F_p is a square.
int legendre_symbol_q(const Int& a, const Int& p, int f);

// Kronecker symbol (a|n), the usual extension of Jacobi to all n.
int kronecker_symbol(const Int& a, const Int& n);

// a^e mod m (m > 1, e >= 0)
Int powmod(const Int& a, const Int& e, const Int& m);

// Inverse of a mod m; throws std::invalid_argument if gcd(a,m) != 1.
Int invmod(const Int& a, const Int& m);

// Smallest positive quadratic non-residue mod the odd prime p.
Int least_nonresidue(const Int& p);

// ---- misc small helpers ----

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int pow_int(const Int& base, unsigned long e);

// Parse "a" or "a/b" into an exact rational.  Throws on malformed input.
Rat parse_rational(const std::string& s);

// Canonical "num/den" rendering ("num" when den = 1).
std::string rational_to_string(const Rat& x);

}  // namespace paritylab

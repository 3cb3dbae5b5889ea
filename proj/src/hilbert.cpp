#include "paritylab/hilbert.hpp"

#include <set>

namespace paritylab {

namespace {

// residue of the unit part of x mod p^k (x nonzero)
Int unit_part_mod(const Rat& x, const Int& p, const Int& pk) {
    Rat u = prime_to_p_part(x, p);
    Int num = u.get_num() % pk;
    if (num < 0) num += pk;
    return (num * invmod(Int(u.get_den() % pk), pk)) % pk;
}

} // namespace

int hilbert_symbol(const Rat& x, const Rat& y, const PlaceQ& v) {
    if (x == 0 || y == 0) throw std::invalid_argument("hilbert_symbol: zero argument");
    if (v.is_real()) return (x < 0 && y < 0) ? -1 : 1;
    const Int& p = v.prime();
    long a = *valuation(x, p), b = *valuation(y, p);
    if (p == 2) {
        // classical formula via the unit parts u, w mod 8:
        // (x,y)_2 = (-1)^( eps(u) eps(w) + a omega(w) + b omega(u) )
        Int u = unit_part_mod(x, p, Int(8));
        Int w = unit_part_mod(y, p, Int(8));
        auto eps = [](const Int& z) { return ((z - 1) / 2) % 2 != 0; }; // z = 1,3,5,7
        auto omg = [](const Int& z) { return ((z * z - 1) / 8) % 2 != 0; };
        bool minus = (eps(u) && eps(w)) ^ (a % 2 != 0 && omg(w)) ^ (b % 2 != 0 && omg(u));
        return minus ? -1 : 1;
    }
    // odd p: (x,y) = (-1)^(ab (p-1)/2) (u|p)^b (w|p)^a
    Rat u = prime_to_p_part(x, p), w = prime_to_p_part(y, p);
    int s = 1;
    if ((a % 2) && (b % 2) && ((p - 1) / 2) % 2 != 0) s = -s;
    if (b % 2) {
        int lu = legendre_symbol(Int(u.get_num() % p * invmod(Int(u.get_den() % p), p)), p);
        s *= lu;
    }
    if (a % 2) {
        int lw = legendre_symbol(Int(w.get_num() % p * invmod(Int(w.get_den() % p), p)), p);
        s *= lw;
    }
    return s;
}

int hilbert_symbol(const Rat& x, const Rat& y, const Int& p) {
    return hilbert_symbol(x, y, PlaceQ::finite(p));
}

ProductFormulaReport product_formula_check(const Rat& x, const Rat& y) {
    if (x == 0 || y == 0) throw std::invalid_argument("product_formula_check: zero argument");
    ProductFormulaReport rep;
    std::set<Int> primes = {Int(2)};
    for (const Rat* z : {&x, &y}) {
        for (const Int& p : prime_divisors(z->get_num())) primes.insert(p);
        for (const Int& p : prime_divisors(z->get_den())) primes.insert(p);
    }
    int prod = hilbert_symbol(x, y, PlaceQ::real());
    rep.symbols[PlaceQ::real()] = prod;
    for (const Int& p : primes) {
        int s = hilbert_symbol(x, y, PlaceQ::finite(p));
        rep.symbols[PlaceQ::finite(p)] = s;
        prod *= s;
    }
    rep.product = prod;
    if (prod != 1) throw std::logic_error("product_formula_check: product is not 1");
    return rep;
}

TameCyclicExt::TameCyclicExt(Int prime, int res_degree, int ram_degree)
    : p(std::move(prime)), f(res_degree), e(ram_degree) {
    if (!is_prime(p)) throw std::invalid_argument("TameCyclicExt: p not prime");
    if (f < 1 || e < 1) throw std::invalid_argument("TameCyclicExt: bad degrees");
    if (e * f <= 1) throw std::invalid_argument("TameCyclicExt: trivial extension");
    if (mpz_divisible_p(Int(e).get_mpz_t(), p.get_mpz_t()) && e > 1)
        throw unsupported_error("TameCyclicExt: wild extension (p | e)");
    if (e > 1 && (p - 1) % e != 0)
        throw std::invalid_argument("TameCyclicExt: no cyclic extension with this (e,f) over Q_p");
}

int artin_symbol_minus_one(const TameCyclicExt& ext) {
    // norms of units are exactly the units whose residue is an e-th power in
    // F_p^x; -1 is one iff e is odd or (p-1)/e is even
    if (ext.e == 1) return 1; // unramified: all units are norms
    if (ext.e % 2 == 1) return 1;
    return (((ext.p - 1) / ext.e) % 2 == 0) ? 1 : -1;
}

int artin_symbol_minus_one_quadratic(const Int& p, const Rat& d) {
    if (d == 0) throw std::invalid_argument("artin_symbol_minus_one_quadratic: d = 0");
    if (is_square(d)) return 1; // trivial extension
    return hilbert_symbol(Rat(-1), d, p);
}

}  // namespace paritylab

#include "paritylab/arith.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace paritylab {

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int powmod(const Int& a, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int invmod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::invalid_argument("invmod: argument not invertible");
    return r;
}

// ---- primality ----

namespace {

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned long s) {
    Int x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true; // a witnesses compositeness
}

} // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    static const unsigned long small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (unsigned long p : small) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    // The first 13 primes give a deterministic test below 3.3*10^24
    // (Sorenson-Webster).  Inputs are expected to stay within that range.
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    for (unsigned long a : small)
        if (miller_rabin_witness(n, Int(a), d, s)) return false;
    return true;
}

// ---- factorization ----

namespace {

// Brent's cycle variant of Pollard rho; n odd composite, not a prime power of
// a tiny prime.  Returns a non-trivial factor.
Int pollard_brent(const Int& n, unsigned long seed) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(seed);
    while (true) {
        Int y = rng.get_z_range(n - 3) + 1;
        Int c = rng.get_z_range(n - 3) + 1;
        Int x = y, ys = y, q = 1, g = 1;
        const unsigned long m = 128;
        unsigned long r = 1;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && g == 1; k += m) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = (y * y + c) % n;
                    q = q * (x > y ? x - y : y - x) % n;
                }
                g = gcd(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (g != n) return g;
        ++seed;
    }
}

void factor_into(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    // perfect power shortcut keeps rho off squares
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
            Int r;
            if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                std::map<Int, unsigned> sub;
                factor_into(r, sub);
                for (auto& [p, e] : sub) out[p] += e * k;
                return;
            }
        }
    }
    Int d = pollard_brent(n, 0xD0CB5EED);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

Factorization factorize(const Int& n) {
    if (n == 0) throw std::invalid_argument("factorize: n = 0");
    Factorization f;
    Int m = n;
    if (m < 0) {
        f.sign = -1;
        m = -m;
    }
    std::map<Int, unsigned> acc;
    // trial division first
    for (unsigned long p = 2; p < 1000000ul && m > 1; p += (p == 2 ? 1 : 2)) {
        if (Int(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            acc[Int(p)] += 1;
            m /= p;
        }
    }
    if (m > 1) factor_into(m, acc);
    f.primes.assign(acc.begin(), acc.end());
    return f;
}

Int Factorization::value() const {
    Int v = sign;
    for (const auto& [p, e] : primes) v *= pow_int(p, e);
    return v;
}

std::vector<Int> prime_divisors(const Int& n) {
    std::vector<Int> ps;
    for (const auto& [p, e] : factorize(n).primes) ps.push_back(p);
    return ps;
}

// ---- valuations ----

long valuation(const Int& n, const Int& p) {
    if (n == 0) throw std::invalid_argument("valuation: n = 0");
    Int m = n;
    long v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++v;
    }
    return v;
}

std::optional<long> valuation(const Rat& x, const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("valuation: p is not prime");
    if (x == 0) return std::nullopt;
    return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

Rat prime_to_p_part(const Rat& x, const Int& p) {
    if (x == 0) throw std::invalid_argument("prime_to_p_part: x = 0");
    long v = valuation(x.get_num(), p) - valuation(x.get_den(), p);
    Rat pr(p);
    Rat r = x;
    for (; v > 0; --v) r /= pr;
    for (; v < 0; ++v) r *= pr;
    return r;
}

// ---- squares ----

bool is_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t());
}

bool is_square(const Rat& x) {
    return is_square(Int(x.get_num())) && is_square(Int(x.get_den()));
}

Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

SquareClass::SquareClass(const Int& rep) : rep_(rep) {
    if (rep_ == 0) throw std::invalid_argument("SquareClass: zero representative");
    for (const auto& [p, e] : factorize(rep_).primes)
        if (e > 1) throw std::invalid_argument("SquareClass: representative not squarefree");
}

SquareClass SquareClass::operator*(const SquareClass& o) const {
    return square_class(Rat(rep_ * o.rep_));
}

SquareClass square_class(const Rat& x) {
    if (x == 0) throw std::invalid_argument("square_class: x = 0");
    // x and num*den differ by den^2
    Int n = x.get_num() * x.get_den();
    Int rep = n < 0 ? -1 : 1;
    for (const auto& [p, e] : factorize(n).primes)
        if (e % 2) rep *= p;
    return SquareClass(rep);
}

// ---- residue symbols ----

int legendre_symbol(const Int& a, const Int& p) {
    if (p == 2) throw unsupported_error("legendre_symbol: p = 2");
    int r = mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
    return r;
}

int legendre_symbol_q(const Int& a, const Int& p, int f) {
    if (p == 2) throw unsupported_error("legendre_symbol_q: p = 2");
    if (f != 1 && f != 2) throw std::invalid_argument("legendre_symbol_q: f must be 1 or 2");
    if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) return 0;
    if (f == 2) return 1; // F_p^x lands inside the squares of F_{p^2}
    return legendre_symbol(a, p);
}

int kronecker_symbol(const Int& a, const Int& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

Int least_nonresidue(const Int& p) {
    for (Int r = 2;; ++r)
        if (legendre_symbol(r, p) == -1) return r;
}

// ---- parsing / printing ----

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("parse_rational: bad input '" + s + "'");
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return r;
}

std::string rational_to_string(const Rat& x) {
    return x.get_str();
}

}  // namespace paritylab

#pragma once

// Hilbert symbols over R and Q_p (all p), the product formula, and the
// Artin symbol (-1, F/Q_p) for quadratic and tame cyclic local extensions.

#include <map>
#include <string>

#include "paritylab/arith.hpp"

namespace paritylab {

// a place of Q: the real place or a finite prime
class PlaceQ {
  public:
    static PlaceQ real() { return PlaceQ(); }
    static PlaceQ finite(const Int& p) {
        if (!is_prime(p)) throw std::invalid_argument("PlaceQ: p not prime");
        PlaceQ v;
        v.is_real_ = false;
        v.p_ = p;
        return v;
    }

    bool is_real() const { return is_real_; }
    const Int& prime() const {
        if (is_real_) throw std::logic_error("PlaceQ: real place has no prime");
        return p_;
    }
    std::string to_string() const { return is_real_ ? "real" : p_.get_str(); }
    bool operator==(const PlaceQ& o) const { return is_real_ == o.is_real_ && p_ == o.p_; }
    bool operator<(const PlaceQ& o) const {
        if (is_real_ != o.is_real_) return is_real_; // real place sorts first
        return p_ < o.p_;
    }

  private:
    PlaceQ() : is_real_(true), p_(0) {}
    bool is_real_;
    Int p_;
};

// (x, y)_v in {-1, +1}; x, y nonzero
int hilbert_symbol(const Rat& x, const Rat& y, const PlaceQ& v);

// convenience overload at a finite prime
int hilbert_symbol(const Rat& x, const Rat& y, const Int& p);

struct ProductFormulaReport {
    std::map<PlaceQ, int> symbols; // real place and every p | 2 num den of x, y
    int product = 1;
};

// evaluates (x,y) at the real place and every prime dividing 2xy and asserts
// the product is +1 (throws std::logic_error otherwise)
ProductFormulaReport product_formula_check(const Rat& x, const Rat& y);

// A tame cyclic extension of Q_p with residue degree f and ramification
// degree e.  Tameness requires p not dividing e; cyclic realizability over
// Q_p additionally requires e | p - 1 (checked at construction).
struct TameCyclicExt {
    Int p;
    int f = 1;
    int e = 1;

    TameCyclicExt(Int prime, int res_degree, int ram_degree);
    int degree() const { return e * f; }
};

// +1 iff -1 is a norm from the extension: for tame cyclic F/Q_p this holds
// iff the image of -1 in F_p^x is an e-th power, i.e. iff (p-1)/e is even
// or e is odd.
int artin_symbol_minus_one(const TameCyclicExt& ext);

// Quadratic case by generator: (-1, Q_p(sqrt(d))/Q_p) = hilbert(-1, d)_p.
// Supports p = 2 and ramified d, unlike the tame route.
int artin_symbol_minus_one_quadratic(const Int& p, const Rat& d);

}  // namespace paritylab

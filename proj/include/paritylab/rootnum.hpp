#pragma once

// Local root numbers by reduction-type classification, and the global root
// number over Q as a product over places.

#include "paritylab/hilbert.hpp"
#include "paritylab/localdata.hpp"

namespace paritylab {

struct LocalRootNumber {
    int value = 1; // in {-1, +1}
    // true when the value is defined through the proven 2-isogeny identity
    // (additive reduction at p in {2,3} with a rational 2-torsion point)
    // rather than by the independent classification
    bool via_isogeny_formula = false;
};

// w(E/K_v) for a finite place.  Good +1; split mult -1; nonsplit +1;
// additive potentially multiplicative: (-1, gamma)_v with gamma the class of
// -c6 (p >= 5); additive potentially good (p >= 5): the Rohrlich table keyed
// by e = 12/gcd(v(Delta_min), 12).  Additive p in {2,3} with a rational
// 2-torsion point routes through the 2-isogeny parity identity; otherwise
// unsupported_error.
LocalRootNumber local_root_number_ex(const CurveModel& e, const LocalField& K);
int local_root_number(const CurveModel& e, const LocalField& K);

// archimedean places: always -1
int archimedean_root_number();

// w(E/Q) = -1 * prod over bad primes
struct GlobalRootNumber {
    int value = 1;
    bool any_formula_defined = false;
};
GlobalRootNumber global_root_number_ex(const CurveModel& e);
int global_root_number_Q(const CurveModel& e);

// w(E/K_p) for additive places carrying an l-isogeny (p not dividing l,
// l >= 5): equals the Artin symbol (-1, F/K_p) with F = K_p(ker phi).
// A trivial extension (F = K_p) is passed as std::nullopt.
int isogeny_root_number(const CurveModel& e, const LocalField& K, int l,
                        const std::optional<TameCyclicExt>& ext);

// quadratic-extension variant: F = Q_p(sqrt(d))
int isogeny_root_number_quadratic(const CurveModel& e, const LocalField& K, int l, const Rat& d);

}  // namespace paritylab

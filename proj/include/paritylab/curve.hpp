#pragma once

// Weierstrass models over Q: standard invariants, model transformations,
// quadratic twists, the translated 2-isogeny form, and Velu's formulas for
// odd-prime-degree isogenies with rational kernel polynomial.

#include <optional>
#include <string>

#include "paritylab/qpoly.hpp"

namespace paritylab {

class CurveModel {
  public:
    // y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6; throws if singular
    CurveModel(Rat a1, Rat a2, Rat a3, Rat a4, Rat a6);

    const Rat& a1() const { return a1_; }
    const Rat& a2() const { return a2_; }
    const Rat& a3() const { return a3_; }
    const Rat& a4() const { return a4_; }
    const Rat& a6() const { return a6_; }

    Rat b2() const { return a1_ * a1_ + 4 * a2_; }
    Rat b4() const { return 2 * a4_ + a1_ * a3_; }
    Rat b6() const { return a3_ * a3_ + 4 * a6_; }
    Rat b8() const;
    Rat c4() const { return b2() * b2() - 24 * b4(); }
    Rat c6() const;
    const Rat& discriminant() const { return disc_; }
    Rat j_invariant() const { return c4() * c4() * c4() / disc_; }

    bool is_integral() const;
    bool operator==(const CurveModel& o) const;

    std::string to_string() const;

  private:
    Rat a1_, a2_, a3_, a4_, a6_;
    Rat disc_;
};

// Invertible change of Weierstrass coordinates x = u^2 x' + r,
// y = u^3 y' + s u^2 x' + t.
struct ModelMap {
    Rat u{1}, r{0}, s{0}, t{0};

    CurveModel apply(const CurveModel& e) const;
    // this map followed by `then`
    ModelMap compose(const ModelMap& then) const;
    ModelMap inverse() const;
};

// Quadratic twist by d != 0, on the completed-square short form:
// y^2 = x^3 - 27 c4 x - 54 c6  ->  y^2 = x^3 - 27 c4 d^2 x - 54 c6 d^3.
CurveModel quadratic_twist(const CurveModel& e, const Rat& d);

// Short form y^2 = x^3 + A x + B of e (isomorphic over Q).
CurveModel short_model(const CurveModel& e);

// The 2-isogeny standard form: source y^2 = x^3 + a x^2 + b x with the
// chosen 2-torsion point at the origin, target y^2 = x^3 - 2a x^2 + d x,
// d = a^2 - 4b, isogeny (x,y) -> (x + a + b/x, y - by/x^2).
struct TwoIsogenyData {
    Rat a, b, delta;
    CurveModel source; // E_{a,b}
    CurveModel target; // E'
    ModelMap from_input; // input model -> source coordinates
};

// P_x must be a root of the 2-division polynomial 4x^3 + b2 x^2 + 2b4 x + b6.
TwoIsogenyData two_isogeny_pair(const CurveModel& e, const Rat& P_x);

// x-coordinates of the rational 2-torsion points (roots of the 2-division
// polynomial), ascending.
std::vector<Rat> rational_two_torsion_x(const CurveModel& e);

// The l-division polynomial as a univariate polynomial in x (odd l >= 1).
QPoly division_polynomial(const CurveModel& e, int l);

// Quotient curve by the kernel cut out by a monic rational kernel polynomial
// (degree (l-1)/2 dividing the l-division polynomial, stable under doubling).
// An empty/constant kernel polynomial (l = 1) returns e unchanged.
CurveModel velu_isogenous(const CurveModel& e, const QPoly& kernel_poly);

// Monic rational kernel polynomials of l-isogenies from e (odd l in {3,5,7}).
std::vector<QPoly> rational_kernel_polynomials(const CurveModel& e, int l);

// Scaling map to a model with p-integral coefficients for every prime
// (u = 1/n makes a_i scale by n^i).
CurveModel integral_model(const CurveModel& e, ModelMap* map_out = nullptr);

}  // namespace paritylab

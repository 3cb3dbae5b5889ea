#pragma once

// Archimedean periods of real elliptic curves via the (complex) AGM:
// the total real measure of E(R), and the period lattice data needed for
// the complex-place term of the C-product.

#include <complex>

#include "paritylab/curve.hpp"

namespace paritylab {

struct PeriodLattice {
    double omega1 = 0;             // real period (> 0), generator of L cap R
    std::complex<double> omega2;   // second basis period, Im > 0
    int components = 1;            // #components of E(R): 2 iff disc > 0

    double covolume() const; // |Im(conj(omega1) * omega2)|
};

// Basis of the period lattice of (E, dx/(2y + a1 x + a3)) over C, with
// omega1 the positive real period.
PeriodLattice period_lattice(const CurveModel& e);

// Integral of |omega| over E(R): components * omega1.  Absolute accuracy
// around 1e-12 at desk scale.
double real_period(const CurveModel& e);

// |2 * int_{E(C)} omega ^ bar(omega)| = 4 * covolume, the complex-place
// term of the C-product (orientation taken positively).
double complex_place_term(const CurveModel& e);

// complex optimal AGM (right-choice square roots)
std::complex<double> complex_agm(std::complex<double> a, std::complex<double> b);

}  // namespace paritylab

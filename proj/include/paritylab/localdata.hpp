#pragma once

// Tate's algorithm over Q_p and over the unramified quadratic extension,
// reduction types with splitness, Tamagawa numbers, local C-terms, Euler
// factors, and the perturbation-stability check.

#include <string>

#include "paritylab/curve.hpp"
#include "paritylab/fq.hpp"

namespace paritylab {

// An unramified local field: completion Q_p (f = 1) or its unramified
// quadratic extension (f = 2).  The uniformizer is p, residue field F_q.
struct LocalField {
    Int p;
    int f = 1;

    LocalField(Int prime, int res_degree = 1) : p(std::move(prime)), f(res_degree) {
        if (!is_prime(p)) throw std::invalid_argument("LocalField: p not prime");
        if (f != 1 && f != 2) throw std::invalid_argument("LocalField: f must be 1 or 2");
    }
    Int q() const { return f == 1 ? p : p * p; }
};

enum class KodairaClass { I0, In, II, III, IV, I0star, Instar, IVstar, IIIstar, IIstar };

struct KodairaType {
    KodairaClass cls = KodairaClass::I0;
    long n = 0; // for In / In*

    std::string to_string() const;
    bool operator==(const KodairaType& o) const { return cls == o.cls && n == o.n; }
};

enum class ReductionType { Good, SplitMult, NonsplitMult, AdditivePotMult, AdditivePotGood };

std::string to_string(ReductionType r);

struct LocalData {
    KodairaType kodaira;
    int conductor_exponent = 0;
    long tamagawa = 1;
    long min_disc_valuation = 0;
    long scaling_valuation = 0; // v_p(u) of the input-to-minimal rescaling
    ReductionType reduction = ReductionType::Good;
    // minimal model, when the algorithm's translations stayed rational
    // (always the case for f = 1)
    std::optional<CurveModel> minimal_model;

    bool is_good() const { return reduction == ReductionType::Good; }
    bool is_multiplicative() const {
        return reduction == ReductionType::SplitMult || reduction == ReductionType::NonsplitMult;
    }
    bool is_additive() const {
        return reduction == ReductionType::AdditivePotMult ||
               reduction == ReductionType::AdditivePotGood;
    }
    bool operator==(const LocalData& o) const;
};

// Run Tate's algorithm for E over K.  Deterministic; always terminates.
LocalData tate_algorithm(const CurveModel& e, const LocalField& K);

ReductionType reduction_type(const CurveModel& e, const LocalField& K);

// ---- Euler factors ----

// Integer polynomial F(T) of degree <= 2 with constant term 1:
// good 1 - aT + qT^2, split mult 1 - T, nonsplit 1 + T, additive 1.
struct EulerFactor {
    ZPoly coeffs; // [1, -a, q] / [1, -1] / [1, 1] / [1]

    int degree() const { return int(coeffs.size()) - 1; }
    Int trace_of_frobenius() const { return coeffs.size() > 1 ? Int(-coeffs[1]) : Int(0); }
    std::string to_string() const; // in the variable T
};

EulerFactor euler_factor(const CurveModel& e, const LocalField& K);

// #E(F_q) for a curve with good reduction at K (exhaustive; q <= 10^6).
Int count_points(const CurveModel& e, const LocalField& K);

// ---- local C-terms  c_v |omega/omega_v|_v ----

struct LocalCTerm {
    long tamagawa = 1;
    long q_exponent = 0; // |omega/omega^o|_v = q^(q_exponent)
    Rat value;           // tamagawa * q^(q_exponent), exact

    long ord2() const;   // 2-adic valuation of value
    std::optional<long> ordp(const Int& p) const;
};

// u_scale expresses the chosen differential against the model's standard
// one: omega = u_scale * omega_model.
LocalCTerm local_c_term(const CurveModel& e, const Rat& u_scale, const LocalField& K);

// ---- perturbation stability (continuity of local data) ----

// True if every sampled perturbation of each a_i by p^depth * t leaves the
// local data unchanged.
bool perturbation_stable_at(const CurveModel& e, const LocalField& K, long depth);

// Minimal depth (searched from `from` up to `limit`) at which the local data
// is stable under the sampled perturbations; throws resource_error if none
// is found below the limit.
long perturbation_stability_depth(const CurveModel& e, const LocalField& K, long limit = 64);

}  // namespace paritylab

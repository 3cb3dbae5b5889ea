#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "paritylab/curve.hpp"

using namespace paritylab;

namespace {
CurveModel curve(int a1, int a2, int a3, int a4, int a6) {
    return CurveModel(Rat(a1), Rat(a2), Rat(a3), Rat(a4), Rat(a6));
}
const CurveModel e91b1 = curve(0, 1, 1, -7, 5);
const CurveModel e91b2 = curve(0, 1, 1, 13, 42);
} // namespace

TEST_CASE("standard invariants") {
    CHECK(e91b1.discriminant() == Rat(-91));
    CHECK(square_class(e91b1.discriminant()).representative() == -91);
    CHECK(e91b2.discriminant() == Rat(-753571)); // -7^3 13^3
    CHECK(square_class(e91b2.discriminant()).representative() == -91);

    CurveModel cm = curve(0, 0, 0, -1, 0); // y^2 = x^3 - x
    CHECK(cm.discriminant() == 64);
    CHECK(cm.j_invariant() == 1728);

    // E_{a,b} form: disc = 16 b^2 (a^2 - 4b)
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coef(-20, 20);
    for (int i = 0; i < 1000; ++i) {
        int a = coef(rng), b = coef(rng);
        if (b == 0 || a * a == 4 * b) continue;
        CurveModel eab(Rat(0), Rat(a), Rat(0), Rat(b), Rat(0));
        CHECK(eab.discriminant() == Rat(16 * b * b) * Rat(a * a - 4 * b));
        CHECK(eab.c4() * eab.c4() * eab.c4() - eab.c6() * eab.c6() ==
              1728 * eab.discriminant());
    }
}

TEST_CASE("c4^3 - c6^2 = 1728 disc on random long models") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> coef(-9, 9);
    int done = 0;
    while (done < 1000) {
        try {
            CurveModel e = curve(coef(rng), coef(rng), coef(rng), coef(rng), coef(rng));
            CHECK(e.c4() * e.c4() * e.c4() - e.c6() * e.c6() == 1728 * e.discriminant());
            ++done;
        } catch (const std::invalid_argument&) {
        }
    }
}

TEST_CASE("model maps compose and invert") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> coef(-5, 5), uu(1, 4);
    int done = 0;
    while (done < 300) {
        try {
            CurveModel e = curve(coef(rng), coef(rng), coef(rng), coef(rng), coef(rng));
            ModelMap m1{Rat(uu(rng)), Rat(coef(rng)), Rat(coef(rng)), Rat(coef(rng))};
            Rat u2(uu(rng), uu(rng));
            u2.canonicalize();
            ModelMap m2{u2, Rat(coef(rng)), Rat(coef(rng)), Rat(coef(rng))};
            CurveModel away = m2.apply(m1.apply(e));
            CHECK(away == m1.compose(m2).apply(e));
            CHECK(m1.inverse().apply(m1.apply(e)) == e);
            // invariant weights
            CurveModel t = m1.apply(e);
            Rat u4 = m1.u * m1.u * m1.u * m1.u;
            CHECK(t.c4() == e.c4() / u4);
            CHECK(t.discriminant() == e.discriminant() / (u4 * u4 * u4));
            ++done;
        } catch (const std::invalid_argument&) {
        }
    }
}

TEST_CASE("quadratic twist") {
    // short-form rule y^2 = x^3+ax+b -> y^2 = x^3+d^2 a x + d^3 b
    CurveModel e = curve(0, 0, 0, -2, 3);
    CurveModel t = quadratic_twist(e, Rat(5));
    CurveModel s = short_model(e);
    CHECK(t.a4() == 25 * s.a4());
    CHECK(t.a6() == 125 * s.a6());

    // identity twist: same j
    CHECK(quadratic_twist(e91b1, Rat(1)).j_invariant() == e91b1.j_invariant());
    CHECK_THROWS_AS(quadratic_twist(e, Rat(0)), std::invalid_argument);

    std::mt19937 rng(31);
    std::uniform_int_distribution<int> coef(-9, 9);
    int done = 0;
    while (done < 200) {
        int d = coef(rng);
        if (d == 0) continue;
        try {
            CurveModel x = curve(coef(rng), coef(rng), coef(rng), coef(rng), coef(rng));
            CurveModel xd = quadratic_twist(x, Rat(d));
            CHECK(xd.j_invariant() == x.j_invariant());
            // twisting twice returns an isomorphic curve
            CurveModel xdd = quadratic_twist(xd, Rat(d));
            CHECK(xdd.j_invariant() == x.j_invariant());
            CHECK(square_class(xdd.discriminant() * x.discriminant()).is_trivial() ==
                  square_class(Rat(1)).is_trivial());
            // disc class of twist by square of the same short model matches
            CHECK(square_class(quadratic_twist(x, Rat(d * d)).discriminant()) ==
                  square_class(short_model(x).discriminant()));
            ++done;
        } catch (const std::invalid_argument&) {
        }
    }
}

TEST_CASE("two isogeny standard form") {
    // y^2 = x(x+2)(x-3) = x^3 - x^2 - 6x with P = (0,0)
    CurveModel e480 = curve(0, -1, 0, -6, 0);
    TwoIsogenyData iso = two_isogeny_pair(e480, Rat(0));
    CHECK(iso.a == -1);
    CHECK(iso.b == -6);
    CHECK(iso.delta == 25);
    CHECK(iso.target == CurveModel(Rat(0), Rat(2), Rat(0), Rat(25), Rat(0)));

    CurveModel cm = curve(0, 0, 0, 1, 0); // y^2 = x^3 + x
    TwoIsogenyData iso2 = two_isogeny_pair(cm, Rat(0));
    CHECK(iso2.a == 0);
    CHECK(iso2.b == 1);
    CHECK(iso2.delta == -4);

    CHECK_THROWS_AS(two_isogeny_pair(cm, Rat(3)), std::invalid_argument);

    // duality sanity: 2-isogeny from the target at x = 0 lands on a curve
    // with the j-invariant of (a twist of) the source
    TwoIsogenyData dual = two_isogeny_pair(iso.target, Rat(0));
    CHECK(dual.target.j_invariant() == e480.j_invariant());
}

TEST_CASE("division polynomial degrees and 91b kernel") {
    for (int l : {3, 5, 7}) {
        QPoly psi = division_polynomial(e91b1, l);
        CHECK(qpoly_deg(psi) == (l * l - 1) / 2);
    }
    QPoly psi3 = division_polynomial(e91b1, 3);
    CHECK(qpoly_eval(psi3, Rat(1)) == 0); // x = 1 is 3-torsion

    auto kernels = rational_kernel_polynomials(e91b1, 3);
    REQUIRE(kernels.size() == 1);
    CHECK(kernels[0] == QPoly{Rat(-1), Rat(1)});
}

TEST_CASE("velu") {
    // 91b1 --3-isogeny--> 91b2, exactly
    CurveModel img = velu_isogenous(e91b1, {Rat(-1), Rat(1)});
    CHECK(img == e91b2);
    CHECK(square_class(img.discriminant()).representative() == -91);

    // degenerate kernel: identity
    CHECK(velu_isogenous(e91b1, {Rat(1)}) == e91b1);
    CHECK(velu_isogenous(e91b1, {}) == e91b1);

    // dual direction: some rational 3-kernel of 91b2 maps back to j(91b1)
    auto back = rational_kernel_polynomials(e91b2, 3);
    bool hits_source = false;
    for (const auto& k : back)
        if (velu_isogenous(e91b2, k).j_invariant() == e91b1.j_invariant()) hits_source = true;
    CHECK(hits_source);

    // a junk kernel polynomial is rejected
    CHECK_THROWS_AS(velu_isogenous(e91b1, QPoly{Rat(5), Rat(1)}), std::invalid_argument);
}

TEST_CASE("velu on a curve with 5- and 7-isogenies") {
    // X0(5)-type example: 11a1 = [0,-1,1,-10,-20] admits a rational 5-isogeny
    CurveModel e11 = curve(0, -1, 1, -10, -20);
    auto k5 = rational_kernel_polynomials(e11, 5);
    REQUIRE(k5.size() >= 1);
    CurveModel e11img = velu_isogenous(e11, k5[0]);
    CHECK(e11img.j_invariant() != e11.j_invariant());
    // isogenous curves share conductor; disc of the image is 11-power times square
    auto cls = square_class(e11img.discriminant() / e11.discriminant());
    // both curves have bad reduction only at 11
    Int rep = cls.representative();
    CHECK((rep == 1 || rep == 11 || rep == -11 || rep == -1));

    // 26b1 = [1,-1,1,-3,3] admits a rational 7-isogeny
    CurveModel e26 = curve(1, -1, 1, -3, 3);
    auto k7 = rational_kernel_polynomials(e26, 7);
    REQUIRE(k7.size() >= 1);
    CurveModel e26img = velu_isogenous(e26, k7[0]);
    CHECK(e26img.j_invariant() != e26.j_invariant());
}

TEST_CASE("integral model") {
    CurveModel e(Rat(1, 2), Rat(0), Rat(1, 3), Rat(-2), Rat(5, 4));
    ModelMap m;
    CurveModel z = integral_model(e, &m);
    CHECK(z.is_integral());
    CHECK(m.apply(e) == z);
    CHECK(z.j_invariant() == e.j_invariant());
}

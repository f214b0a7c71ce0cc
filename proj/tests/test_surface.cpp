#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dplct/factor.hpp"
#include "dplct/parse.hpp"
#include "dplct/surface.hpp"

using namespace dplct;

static BlowupPoint pt(long x, long y) { return BlowupPoint{QPoly(Rational(x)), QPoly(Rational(y))}; }

static SurfaceModel weier(const std::string& a, const std::string& b) {
    return SurfaceModel::weierstrass(to_binary_form_of_degree(parse_poly(a), 4),
                                     to_binary_form_of_degree(parse_poly(b), 6));
}

TEST_CASE("fixed variants") {
    auto p = validate(SurfaceModel::plane());
    CHECK(p.degree == 9);
    CHECK(p.type == SurfaceType::P2);
    auto q = validate(SurfaceModel::quadric_product());
    CHECK(q.degree == 8);
    CHECK(q.type == SurfaceType::P1xP1);
}

TEST_CASE("blow-up general position") {
    auto v = validate(SurfaceModel::blowup({pt(1, 0), pt(2, 0), pt(0, 1)}));
    CHECK(v.degree == 6);
    CHECK(v.type == SurfaceType::BlowupGeneral);

    auto f1 = validate(SurfaceModel::blowup({pt(0, 0)}));
    CHECK(f1.degree == 8);
    CHECK(f1.type == SurfaceType::F1);

    CHECK_THROWS_AS(validate(SurfaceModel::blowup({pt(0, 0), pt(1, 0), pt(2, 0)})), validation_error);
    CHECK_THROWS_AS(validate(SurfaceModel::blowup({pt(0, 0), pt(0, 0)})), validation_error);
    CHECK_THROWS_AS(validate(SurfaceModel::blowup({})), validation_error);
    // six points on the conic y = x^2
    CHECK_THROWS_AS(
        validate(SurfaceModel::blowup(
            {pt(0, 0), pt(1, 1), pt(-1, 1), pt(2, 4), pt(-2, 4), pt(3, 9)})),
        validation_error);
}

TEST_CASE("blow-up points over an extension") {
    // points (sqrt2, 0), (-sqrt2, 0), (0, 1): fine over Q[a]/(a^2-2)
    QPoly mod = parse_univariate("x^2 - 2");
    BlowupPoint p1{parse_univariate("x"), QPoly(Rational(0))};
    BlowupPoint p2{QPoly(Rational(0)) - parse_univariate("x"), QPoly(Rational(0))};
    BlowupPoint p3{QPoly(Rational(0)), QPoly(Rational(1))};
    auto v = validate(SurfaceModel::blowup({p1, p2, p3}, mod));
    CHECK(v.degree == 6);

    // reducible modulus (x^2-1): the "points" (x, 0) and (1, 0) collide in one
    // specialization only
    QPoly bad = parse_univariate("x^2 - 1");
    BlowupPoint q1{parse_univariate("x"), QPoly(Rational(0))};
    BlowupPoint q2{QPoly(Rational(1)), QPoly(Rational(0))};
    BlowupPoint q3{QPoly(Rational(0)), QPoly(Rational(1))};
    CHECK_THROWS_WITH_AS(validate(SurfaceModel::blowup({q1, q2, q3}, bad)),
                         "general position holds only in some specializations of the extension",
                         validation_error);

    CHECK_THROWS_AS(validate(SurfaceModel::blowup({p1, p2, p3}, parse_univariate("x^2"))),
                    validation_error);
}

TEST_CASE("double cover quartic smoothness") {
    auto v = validate(SurfaceModel::double_cover(parse_ternary_form("x^4 + y^4 + z^4")));
    CHECK(v.degree == 2);
    CHECK(v.type == SurfaceType::DP2);

    // Klein quartic is smooth
    CHECK_NOTHROW(validate(SurfaceModel::double_cover(parse_ternary_form("x^3 y + y^3 z + z^3 x"))));

    // nodal quartic rejected
    CHECK_THROWS_WITH_AS(
        validate(SurfaceModel::double_cover(parse_ternary_form("x^2 y^2 + y^4 + z^4 + x^4 - 2x^2 z^2 - 2 x^2 y^2"))),
        "branch curve singular", validation_error);
    // cuspidal quartic z y^3 = x^4 is singular at (0:0:1)
    CHECK_THROWS_WITH_AS(validate(SurfaceModel::double_cover(parse_ternary_form("z y^3 - x^4"))),
                         "branch curve singular", validation_error);
    // double conic
    CHECK_THROWS_AS(validate(SurfaceModel::double_cover(parse_ternary_form("(x^2 + y^2 + z^2)^2"))),
                    validation_error);
}

TEST_CASE("quartic smoothness verdict is invariant under projective changes") {
    std::mt19937 rng(90125u);
    std::uniform_int_distribution<long> c(-2, 2);
    TernaryForm fermat = parse_ternary_form("x^4 + y^4 + z^4");
    TernaryForm nodal = parse_ternary_form("x^4 + y^4 - 2 x^2 y^2 + z y^3");  // singular at (1:1:0)?
    int done = 0;
    while (done < 12) {
        std::array<std::array<Rational, 3>, 3> m{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rational(c(rng));
        try {
            invert_3x3(m);
        } catch (const math_error&) {
            continue;
        }
        std::vector<std::string> notes;
        CHECK_NOTHROW(check_quartic_smooth(fermat.linear_change(m), notes));
        ++done;
    }
    (void)nodal;
}

TEST_CASE("weierstrass classification spec values") {
    auto v = validate(weier("s(s^3+t^3)", "s^2(s^4+t^4)"));
    CHECK(v.degree == 1);
    CHECK(v.type == SurfaceType::DP1DuVal);
    REQUIRE(v.singularities.size() == 1);
    CHECK(v.singularities[0].type == DuValType::A1);
    CHECK(v.singularities[0].location == parse_binary_form("s"));

    CHECK_THROWS_WITH_AS(validate(weier("s^2 t^2", "s^3 t^3")), "singularity outside A1/A2 scope",
                         validation_error);

    auto smooth = validate(weier("s^4 + t^4", "s^6 + t^6"));
    CHECK(smooth.type == SurfaceType::DP1Smooth);
    CHECK(smooth.singularities.empty());

    // degenerate: 4a^3 = -27b^2
    CHECK_THROWS_WITH_AS(validate(weier("-3 s^2 t^2", "2 s^3 t^3")),
                         "discriminant vanishes identically", validation_error);

    CHECK_THROWS_AS(validate(weier("0", "0")), validation_error);
}

TEST_CASE("weierstrass cusp entries") {
    auto entries = weierstrass_cusp_entries(parse_binary_form("s(s^3+2t^3)"),
                                            to_binary_form(parse_poly("s(s^5+t^5)")));
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].factor == parse_binary_form("s"));
    CHECK(entries[0].ord_a == 1);
    CHECK(entries[0].ord_b == 1);
    CHECK(entries[0].site == CuspSite::SmoothPoint);

    // a == 0: ord_a is infinite at every root of b; one entry per irreducible factor
    auto e0 = weierstrass_cusp_entries(BinaryForm::zero_of_degree(4),
                                       to_binary_form(parse_poly("s^2 (s^4 + t^4)")));
    REQUIRE(e0.size() == 2);
    for (const auto& e : e0) CHECK(e.ord_a == -1);
    CHECK(e0[0].factor == parse_binary_form("s"));
    CHECK(e0[0].ord_b == 2);
    CHECK(e0[0].site == CuspSite::A2);
    CHECK(e0[1].factor == parse_binary_form("s^4 + t^4"));
    CHECK(e0[1].ord_b == 1);
    CHECK(e0[1].site == CuspSite::SmoothPoint);
}

TEST_CASE("validate is idempotent") {
    auto v1 = validate(weier("s(s^3+t^3)", "s^2(s^4+t^4)"));
    auto v2 = validate(v1.model);
    CHECK(v1.degree == v2.degree);
    CHECK(v1.type == v2.type);
    CHECK(v1.singularities.size() == v2.singularities.size());
}

TEST_CASE("weierstrass singularity multiset invariant under unimodular (s,t) changes") {
    std::mt19937 rng(55501u);
    std::uniform_int_distribution<long> c(-2, 2);
    BinaryForm a0 = parse_binary_form("s(s^3+t^3)");
    BinaryForm b0 = to_binary_form(parse_poly("s^2(s^4+t^4)"));
    auto substitute = [](const BinaryForm& f, long p, long q, long r, long s) {
        // f(p s + q t, r s + t s_coeff): substitute and re-collect
        BinaryForm S = BinaryForm(1, {Rational(p), Rational(q)});
        BinaryForm T = BinaryForm(1, {Rational(r), Rational(s)});
        BinaryForm acc = BinaryForm::zero_of_degree(f.degree());
        for (int i = 0; i <= f.degree(); ++i) {
            if (f.coeff(i).is_zero()) continue;
            BinaryForm term = BinaryForm::constant(f.coeff(i));
            for (int k = 0; k < f.degree() - i; ++k) term = term * S;
            for (int k = 0; k < i; ++k) term = term * T;
            acc = acc + term;
        }
        return acc;
    };
    int done = 0;
    while (done < 50) {
        long p = c(rng), q = c(rng), r = c(rng), s = c(rng);
        if (p * s - q * r == 0) continue;
        auto v = validate(SurfaceModel::weierstrass(substitute(a0, p, q, r, s),
                                                    substitute(b0, p, q, r, s)));
        CHECK(v.type == SurfaceType::DP1DuVal);
        REQUIRE(v.singularities.size() == 1);
        CHECK(v.singularities[0].type == DuValType::A1);
        ++done;
    }
}

TEST_CASE("milnor bound on accepted degree-1 fixtures") {
    const char* fixtures[][2] = {
        {"s(s^3+t^3)", "s^2(s^4+t^4)"},
        {"s^2(s^2+t^2)", "s^2(s^4+2t^4)"},
        {"s^4+t^4", "s^6+t^6"},
        {"s^2 t (s+t)", "s^2 t^2 (s^2 + s t + 3t^2)"},
    };
    for (auto& fx : fixtures) {
        auto v = validate(weier(fx[0], fx[1]));
        int milnor = 0;
        for (const auto& s : v.singularities) milnor += s.type == DuValType::A1 ? 1 : 2;
        CHECK(milnor <= 8);
    }
}

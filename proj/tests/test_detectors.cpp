#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dplct/detectors.hpp"
#include "dplct/lattice.hpp"
#include "dplct/parse.hpp"

using namespace dplct;

static BlowupPoint pt(long x, long y) { return BlowupPoint{QPoly(Rational(x)), QPoly(Rational(y))}; }

static ValidatedSurface cubic_t1() {
    return validate(SurfaceModel::blowup({pt(1, 0), pt(2, 0), pt(0, 1), pt(0, 3), pt(3, 3), pt(5, 5)}));
}
static ValidatedSurface cubic_t2() {
    return validate(SurfaceModel::blowup({pt(0, 0), pt(1, 1), pt(2, 4), pt(3, 9), pt(4, 16), pt(3, 0)}));
}
static ValidatedSurface cubic_generic() {
    return validate(SurfaceModel::blowup({pt(0, 0), pt(1, 0), pt(0, 1), pt(2, 3), pt(3, 1), pt(-1, -2)}));
}

static Rational cst(const QPoly& p) { return p.is_zero() ? Rational(0) : p[0]; }

TEST_CASE("27 lines on a cubic model") {
    auto v = cubic_t2();
    auto lines = lines_on_cubic(v);
    CHECK(lines.size() == 27);
    // matches the abstract line count in the Picard lattice
    CHECK(lines.size() == minus_one_classes(Lattice(6)).size());

    int exceptional = 0, joins = 0, conics = 0;
    for (const auto& l : lines) {
        if (l.kind == LineOnCubic::Kind::Exceptional) ++exceptional;
        if (l.kind == LineOnCubic::Kind::Join) ++joins;
        if (l.kind == LineOnCubic::Kind::Conic) ++conics;
    }
    CHECK(exceptional == 6);
    CHECK(joins == 15);
    CHECK(conics == 6);

    // Join(1,2) vanishes on P1 and P2
    for (const auto& l : lines) {
        if (l.kind != LineOnCubic::Kind::Join || l.i != 1 || l.j != 2) continue;
        Rational a = cst(l.equation[0]), b = cst(l.equation[1]), c = cst(l.equation[2]);
        CHECK((a * Rational(0) + b * Rational(0) + c).is_zero());
        CHECK((a * Rational(1) + b * Rational(1) + c).is_zero());
    }

    // Conic(6) through P1..P5 = (0,0),(1,1),(2,4),(3,9),(4,16) is y = x^2,
    // projectively y z - x^2: coefficients (A,B,C,D,E,F) ~ (-1,0,0,0,1,0)
    for (const auto& l : lines) {
        if (l.kind != LineOnCubic::Kind::Conic || l.i != 6) continue;
        std::vector<Rational> c;
        for (const auto& q : l.equation) c.push_back(cst(q));
        REQUIRE(c.size() == 6);
        // up to scalar
        Rational scale = c[0] / Rational(-1);
        CHECK(!scale.is_zero());
        CHECK(c[0] == scale * Rational(-1));
        CHECK(c[1].is_zero());
        CHECK(c[2].is_zero());
        CHECK(c[3].is_zero());
        CHECK(c[4] == scale * Rational(1));
        CHECK(c[5].is_zero());
    }
}

TEST_CASE("Eckardt T1 fixture: one witness at the origin") {
    auto ws = eckardt_points(cubic_t1());
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].type == EckardtWitness::Type::ThreeJoins);
    std::array<std::array<int, 2>, 3> expected{{{1, 2}, {3, 4}, {5, 6}}};
    CHECK(ws[0].matching == expected);
    // located at the origin (0 : 0 : 1)
    REQUIRE(ws[0].location.size() == 3);
    Rational x = cst(ws[0].location[0]);
    Rational y = cst(ws[0].location[1]);
    Rational z = cst(ws[0].location[2]);
    CHECK(x.is_zero());
    CHECK(y.is_zero());
    CHECK(!z.is_zero());
}

TEST_CASE("Eckardt T2 fixture: one witness {E1, Join(1,6), Conic(6)}") {
    auto ws = eckardt_points(cubic_t2());
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].type == EckardtWitness::Type::ExcJoinConic);
    CHECK(ws[0].i == 1);
    CHECK(ws[0].j == 6);
}

TEST_CASE("generic cubic has no Eckardt points") {
    auto ws = eckardt_points(cubic_generic());
    CHECK(ws.empty());
}

TEST_CASE("Eckardt scan is invariant under affine changes and point permutations") {
    std::mt19937 rng(424242u);
    std::uniform_int_distribution<long> c(-2, 2);
    auto base_points = std::vector<std::pair<long, long>>{{1, 0}, {2, 0}, {0, 1}, {0, 3}, {3, 3}, {5, 5}};
    int done = 0;
    while (done < 50) {
        long a = c(rng), b = c(rng), d = c(rng), e = c(rng);
        if (a * e - b * d == 0) continue;
        long tx = c(rng), ty = c(rng);
        std::vector<std::pair<Rational, Rational>> mapped;
        for (auto [x, y] : base_points)
            mapped.emplace_back(Rational(a * x + b * y + tx), Rational(d * x + e * y + ty));
        std::vector<int> perm{0, 1, 2, 3, 4, 5};
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<BlowupPoint> pts(6);
        for (int k = 0; k < 6; ++k) {
            auto [x, y] = mapped[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
            pts[static_cast<std::size_t>(k)] = BlowupPoint{QPoly(x), QPoly(y)};
        }
        auto ws = eckardt_points(validate(SurfaceModel::blowup(pts)));
        CHECK(ws.size() == 1);
        CHECK(ws[0].type == EckardtWitness::Type::ThreeJoins);
        ++done;
    }
}

TEST_CASE("Fermat quartic has 12 hyperflexes, weighted flex total 24") {
    auto scan = hyperflexes(parse_ternary_form("x^4 + y^4 + z^4"));
    CHECK(scan.hyperflex_count == 12);
    CHECK(scan.weighted_flex_total == 24);
    int total = 0;
    for (const auto& hc : scan.hyperflexes) total += hc.class_size;
    CHECK(total == 12);
}

TEST_CASE("Klein quartic has no hyperflexes, 24 simple flexes") {
    auto scan = hyperflexes(parse_ternary_form("x^3 y + y^3 z + z^3 x"));
    CHECK(scan.hyperflex_count == 0);
    CHECK(scan.weighted_flex_total == 24);
    CHECK(scan.hyperflexes.empty());
}

TEST_CASE("generic perturbation of the Fermat quartic has no hyperflexes") {
    auto scan = hyperflexes(parse_ternary_form("x^4 + y^4 + z^4 + x^2 y z"));
    CHECK(scan.hyperflex_count == 0);
    CHECK(scan.weighted_flex_total == 24);
}

TEST_CASE("hyperflex determinism") {
    auto s1 = hyperflexes(parse_ternary_form("x^4 + y^4 + z^4"));
    auto s2 = hyperflexes(parse_ternary_form("x^4 + y^4 + z^4"));
    REQUIRE(s1.hyperflexes.size() == s2.hyperflexes.size());
    for (std::size_t i = 0; i < s1.hyperflexes.size(); ++i) {
        CHECK(s1.hyperflexes[i].modulus == s2.hyperflexes[i].modulus);
        CHECK(s1.hyperflexes[i].point == s2.hyperflexes[i].point);
        CHECK(s1.hyperflexes[i].tangent == s2.hyperflexes[i].tangent);
    }
    CHECK(s1.notes == s2.notes);
}

TEST_CASE("hyperflex points satisfy the contact-4 definition directly") {
    // oracle: at (1 : zeta : 0) with zeta^4 = -1 the tangent meets x^4+y^4+z^4
    // with contact order 4; restriction to the tangent is z^4 up to unit
    auto mod = ExtScalar::make_modulus(parse_univariate("x^4 + 1"));
    ExtScalar zeta = ExtScalar::generator(mod);
    ExtScalar one = ExtScalar::from_rational(mod, Rational(1));
    ExtScalar zero = ExtScalar::from_rational(mod, Rational(0));
    TernaryForm f = parse_ternary_form("x^4 + y^4 + z^4");
    // point P = (1 : zeta : 0); check it is on the curve: 1 + zeta^4 = 0
    CHECK((one + zeta * zeta * zeta * zeta).is_exact_zero());
    // tangent at P is x + zeta^3 y = 0 (gradient (4, 4 zeta^3, 0));
    // parametrize the tangent by (u, v) -> ( -zeta^3 v + ... ) using
    // P' = (0 : 0 : 1): points u*P + v*P'
    ExtScalar c4 = f.eval(zero, zero, one);  // coefficient of v^4
    CHECK(c4 == one);
    // restriction g(uP + vP') = u^4 (1 + zeta^4) + v^4 = v^4 exactly
    ExtScalar at_u1v1 = f.eval(one, zeta, one);
    CHECK(at_u1v1 == one);
}

TEST_CASE("Klein quartic coordinate flexes have contact exactly 3") {
    // at (1:0:0) the tangent of x^3 y + y^3 z + z^3 x is y = 0; restriction to
    // the tangent line (u, 0, v) is u v^3: contact order 3, not 4
    TernaryForm f = parse_ternary_form("x^3 y + y^3 z + z^3 x");
    CHECK(f.eval(Rational(1), Rational(0), Rational(0)).is_zero());
    // restriction coefficients: f(u,0,v) = u v^3
    CHECK(f.eval(Rational(1), Rational(0), Rational(1)) == Rational(1));
    CHECK(f.eval(Rational(2), Rational(0), Rational(1)) == Rational(2));
}

TEST_CASE("cusp_report spec values") {
    auto none = cusp_report(validate(SurfaceModel::weierstrass(parse_binary_form("s^4+t^4"),
                                                               parse_binary_form("s^6+t^6"))));
    CHECK(none.entries.empty());

    auto a1 = cusp_report(validate(SurfaceModel::weierstrass(
        parse_binary_form("s(s^3+t^3)"), to_binary_form(parse_poly("s^2(s^4+t^4)")))));
    REQUIRE(a1.entries.size() == 1);
    CHECK(a1.entries[0].factor == parse_binary_form("s"));
    CHECK(a1.entries[0].ord_a == 1);
    CHECK(a1.entries[0].ord_b == 2);
    CHECK(a1.entries[0].site == CuspSite::A1);

    auto smoothpt = cusp_report(validate(SurfaceModel::weierstrass(
        parse_binary_form("s(s^3+2t^3)"), to_binary_form(parse_poly("s(s^5+t^5)")))));
    REQUIRE(smoothpt.entries.size() == 1);
    CHECK(smoothpt.entries[0].factor == parse_binary_form("s"));
    CHECK(smoothpt.entries[0].ord_a == 1);
    CHECK(smoothpt.entries[0].ord_b == 1);
    CHECK(smoothpt.entries[0].site == CuspSite::SmoothPoint);
}

TEST_CASE("cusp_report factors multiply into gcd(a,b)") {
    BinaryForm a = to_binary_form(parse_poly("s^2 t (s+t)"));
    BinaryForm b = to_binary_form(parse_poly("s^2 t^2 (s^2 + s t + 3 t^2)"));
    auto rep = cusp_report(validate(SurfaceModel::weierstrass(a, b)));
    BinaryForm prod = BinaryForm::constant(Rational(1));
    for (const auto& e : rep.entries) prod = prod * e.factor;
    BinaryForm g = gcd_binary(a, b);
    // the product of entry factors is the radical of gcd(a,b)
    for (const auto& e : rep.entries) CHECK(order_of_factor(g, e.factor) >= 1);
    CHECK(multiplicity_structure(prod) == multiplicity_structure(gcd_binary(prod, g)));
}

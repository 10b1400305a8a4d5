#include <doctest.h>

#include <fresco/errors.hpp>
#include <fresco/module_lab.hpp>

using namespace fresco;

namespace
{

const ExponentClass half{Rational(1, 2)};
const ExponentClass third{Rational(1, 3)};

XiElement mono(const XiSpace &s, const ExponentClass &c, int m, int j, int k = 0, int cert = 40)
{
    return XiElement::monomial(s, cert, LogMonomial{c, m, j, k});
}

RationalPolynomial poly(std::vector<RootMultiplicity> roots)
{
    return RationalPolynomial::from_roots(roots);
}

const std::vector<Generator> AB{Generator::A, Generator::B};

struct Warning {
    XiSpace space{{half}, 2, 1};
    XiElement phi2 = mono(space, half, 1, 2) + mono(space, half, 0, 0);
    SubModule e = generate({phi2}, AB);
};

} // namespace

TEST_CASE("the warning example")
{
    const Warning w;
    CHECK(b_rank(w.e) == 3);
    CHECK_FALSE(is_simple_pole(w.e));
    const auto bp = bernstein(w.e);
    CHECK(bp.characteristic == poly({{Rational(-3, 2), 2}, {Rational(-1, 2), 1}}));
    CHECK(nilpotent_order(w.e) == 3);
    CHECK(higher_bernstein(w.e, 1) == poly({{Rational(-1, 2), 1}}));
    CHECK(higher_bernstein(w.e, 2) == poly({{Rational(-3, 2), 1}}));
    CHECK(higher_bernstein(w.e, 3) == poly({{Rational(-3, 2), 1}}));
    CHECK_THROWS_AS(higher_bernstein(w.e, 4), Error);
    const SubModule s1 = filtration_level(w.e, 1);
    CHECK(b_rank(s1) == 1);
    CHECK(bernstein(s1).characteristic == poly({{Rational(-5, 2), 1}}));
    CHECK(is_simple_pole(s1));
}

TEST_CASE("rank-one and theme generators")
{
    const XiSpace s({half}, 2, 1);
    const SubModule e_half = generate({mono(s, half, 0, 0)}, AB);
    CHECK(b_rank(e_half) == 1);
    CHECK(is_simple_pole(e_half));
    CHECK(saturate(e_half).same_as(e_half));
    CHECK(bernstein(e_half).minimal == poly({{Rational(-1, 2), 1}}));
    CHECK(higher_bernstein(e_half, 1) == bernstein(e_half).minimal);
    CHECK(semisimple_filtration(e_half).size() == 2);

    const SubModule theme = generate({mono(s, half, 0, 1)}, AB);
    CHECK(b_rank(theme) == 2);
    const SubModule sat = saturate(theme);
    CHECK(b_rank(sat) == 2);
    CHECK(sat.contains(mono(s, half, 0, 0)));
    CHECK_FALSE(theme.contains(mono(s, half, 0, 0)));
    CHECK(saturate(sat).same_as(sat));
    CHECK(is_simple_pole(sat));
    CHECK(bernstein(theme).minimal == poly({{Rational(-1, 2), 2}}));

    const SubModule zero = generate(s, 20, {}, AB);
    CHECK(b_rank(zero) == 0);
    CHECK(nilpotent_order(zero) == 0);
}

TEST_CASE("normalization")
{
    const Warning w;
    const SubModule be = b_times(w.e);
    CHECK(normalize_in(be, w.e).same_as(w.e));
    const SubModule s1 = filtration_level(w.e, 1);
    CHECK(is_normal_in(s1, w.e));
    CHECK(normalize_in(s1, w.e).same_as(s1));
    CHECK_FALSE(is_normal_in(be, w.e));
}

TEST_CASE("two-generator example: B^1 sees both exponents")
{
    const XiSpace s({third, half}, 1, 2);
    const SubModule e = generate({mono(s, half, 0, 1, 0), mono(s, third, 0, 0, 1)}, AB);
    CHECK(b_rank(e) == 3);
    CHECK(nilpotent_order(e) == 2);
    CHECK(higher_bernstein(e, 1) == poly({{Rational(-1, 2), 1}, {Rational(-1, 3), 1}}));
    const SubModule s1 = filtration_level(saturate(e), 1);
    const SubModule direct = generate({mono(s, half, 0, 0, 0), mono(s, third, 0, 0, 1)}, AB);
    CHECK(s1.same_as(direct));
    const SubModule prim = primitive_quotient(e, half);
    CHECK(b_rank(prim) == 2);
    CHECK(saturate(prim).same_as(primitive_quotient(saturate(e), half)));
    CHECK(bernstein(primitive_quotient(saturate(e), third)).minimal == poly({{Rational(-1, 3), 1}}));
}

TEST_CASE("quotients")
{
    const Warning w;
    const SubModule s1 = filtration_level(w.e, 1);
    const QuotientModule q = quotient(w.e, s1);
    CHECK(b_rank(q) == 2);
    // Lemma-style re-embedding: S_h(E/S_1) is the image of S_{h+1}(E)
    const SubModule g = log_shift(w.e);
    CHECK(b_rank(g) == 2);
    for (int h = 0; h <= 2; ++h) {
        CHECK(filtration_level(g, h).same_as(log_shift(filtration_level(w.e, h + 1))));
    }
    CHECK(bernstein(q).characteristic == bernstein(g).characteristic);
    const QuotientModule whole = quotient(w.e, generate(w.space, 40, {}, AB));
    CHECK(b_rank(whole) == 3);
    CHECK(bernstein(whole).characteristic == bernstein(w.e).characteristic);
    CHECK(quotient(w.e, w.e).dim() == 0);
    CHECK_THROWS_AS(quotient(w.e, b_times(w.e)), Error);
}

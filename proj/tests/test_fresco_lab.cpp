#include <doctest.h>

#include <fresco/errors.hpp>
#include <fresco/fresco_lab.hpp>

using namespace fresco;

namespace
{

const ExponentClass half{Rational(1, 2)};
const ExponentClass third{Rational(1, 3)};
const ExponentClass one{Rational(1)};
const std::vector<Generator> AB{Generator::A, Generator::B};

XiElement mono(const XiSpace &s, const ExponentClass &c, int m, int j, int k = 0, int cert = 40)
{
    return XiElement::monomial(s, cert, LogMonomial{c, m, j, k});
}

RationalPolynomial poly(std::vector<RootMultiplicity> roots)
{
    return RationalPolynomial::from_roots(roots);
}

SubModule warning_fresco()
{
    const XiSpace s({half}, 2, 1);
    return generate({mono(s, half, 1, 2) + mono(s, half, 0, 0)}, AB);
}

ABOperator lin(const Rational &l, int q = 24)
{
    return ABOperator::linear(l, q);
}

} // namespace

TEST_CASE("fresco test")
{
    const XiSpace s({half}, 0, 2);
    CHECK(is_fresco(warning_fresco()));
    CHECK(is_fresco(generate({mono(s, half, 0, 0)}, AB)));
    CHECK_FALSE(is_fresco(generate({mono(s, half, 0, 0, 0), mono(s, half, 0, 0, 1)}, AB)));
}

TEST_CASE("Jordan–Hölder data of the warning fresco")
{
    const SubModule f = warning_fresco();
    const auto jh = jordan_holder(f);
    REQUIRE(jh.chain.size() == 3);
    for (int k = 0; k < 3; ++k) {
        CHECK(b_rank(jh.chain[static_cast<std::size_t>(k)]) == k + 1);
        CHECK(is_fresco(jh.chain[static_cast<std::size_t>(k)]));
    }
    const auto ch = bernstein(f).characteristic;
    CHECK(jordan_holder_product(jh) == ch);
    // exact-sequence rule along every prefix
    for (std::size_t k = 0; k + 1 < jh.chain.size(); ++k) {
        const SubModule &fk = jh.chain[k];
        const int r = jh.co_ranks[k];
        const auto quotient_ch = bernstein(quotient(f, fk)).characteristic;
        CHECK(bernstein(fk).characteristic.shifted(-r) * quotient_ch == ch);
    }
    // saturation as a sum of b^{j-r} F_j
    const SubModule sat = saturate(f);
    Echelon sum;
    for (std::size_t k = 0; k < jh.chain.size(); ++k) {
        const SubModule part = b_inverse_power(jh.chain[k], jh.co_ranks[k]);
        CHECK(sat.contains(part));
        for (const auto &row : part.rows_at(sat.threshold())) {
            sum.insert(row);
        }
    }
    CHECK(SubModule(f.frame(), f.guard(), sat.closure(), sum).same_as(sat));
    // normalization of G# in F# is b^{-g} G#
    for (std::size_t k = 0; k + 1 < jh.chain.size(); ++k) {
        const SubModule gs = saturate(jh.chain[k]);
        CHECK(normalize_in(gs, sat).same_as(b_inverse_power(gs, jh.co_ranks[k])));
    }
}

TEST_CASE("shifted higher Bernstein polynomials agree with the standard ones")
{
    const SubModule f = warning_fresco();
    RationalPolynomial prod = RationalPolynomial::constant(1);
    for (int j = 1; j <= 3; ++j) {
        const auto shifted = higher_bernstein_shifted(f, j);
        CHECK(shifted == higher_bernstein(f, j));
        prod = prod * shifted;
    }
    CHECK(prod == bernstein(f).characteristic);
    CHECK(filtration_co_rank(f, 1) == 2);
    CHECK_THROWS_AS(higher_bernstein_shifted(f, 0), Error);
}

TEST_CASE("kernel realization")
{
    const XiSpace s1({one}, 1, 1);
    const ABOperator r = compose(lin(2), lin(1));
    const auto ker = kernel_realize(r, s1, 20);
    const XiElement log2 = mono(s1, one, 0, 2, 0, 20) * 2;
    REQUIRE_FALSE(ker.empty());
    const SubModule span = generate(s1, ker.front().cert_degree(), ker, {Generator::B}, 4);
    CHECK(span.contains(log2.truncated(ker.front().cert_degree())));
    const SubModule theme = generate({ker.front()}, AB, 4);
    CHECK(b_rank(theme) == 2);
    CHECK(bernstein(theme).characteristic == poly({{Rational(-1), 2}}));

    const XiSpace sh({half}, 0, 1);
    const auto e_half = kernel_realize(lin(Rational(1, 2)), sh, 20);
    REQUIRE(e_half.size() == 1);
    CHECK(e_half.front() == mono(sh, half, 0, 0, 0, 19));
}

TEST_CASE("Jordan chains")
{
    const SubModule f = warning_fresco();
    const auto jc = find_jordan_chain(f, half, 2);
    CHECK(jc.m >= 1);
    REQUIRE(jc.chain.size() == 2);
    const Rational beta = Rational(1, 2) + jc.m;
    for (std::size_t j = 0; j < 2; ++j) {
        const XiElement &w = jc.chain[j];
        XiElement rhs = act(Generator::B, w) * beta;
        if (j > 0) {
            rhs = rhs + act(Generator::B, jc.chain[j - 1]);
        }
        CHECK(act(Generator::A, w) == rhs);
        CHECK(f.contains(w));
    }
    const XiSpace sh({half}, 0, 1);
    const auto rank1 = find_jordan_chain(generate({mono(sh, half, 0, 0)}, AB), half, 1);
    CHECK(rank1.m == 0);
    CHECK(rank1.chain.front() == mono(sh, half, 0, 0));
    CHECK_THROWS_AS(find_jordan_chain(generate({mono(sh, half, 0, 0)}, AB), half, 2), Error);
}

TEST_CASE("witness frescos")
{
    const XiSpace s({third, half}, 1, 2);
    const SubModule e = generate({mono(s, half, 0, 1, 0), mono(s, third, 0, 0, 1)}, AB);
    const XiElement z = find_witness_fresco(e, 1, Rational(1, 2), 3);
    const SubModule fz = generate({z}, AB);
    const auto roots = bernstein(fz).characteristic;
    CHECK(roots(Rational(-3, 2)) == 0);
    CHECK(roots(Rational(-1, 2)) != 0);

    const SubModule f = warning_fresco();
    const XiElement w = find_witness_fresco(f, 3, Rational(3, 2));
    CHECK(higher_bernstein(generate({w}, AB), 3)(Rational(-3, 2)) == 0);
}

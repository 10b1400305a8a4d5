#include <doctest.h>

#include <fresco/errors.hpp>
#include <fresco/operator_algebra.hpp>

#include <random>

using namespace fresco;

namespace
{

constexpr int Q = 16;

ABOperator A()
{
    return ABOperator::a(Q);
}
ABOperator B()
{
    return ABOperator::b(Q);
}
ABOperator lin(const Rational &l)
{
    return ABOperator::linear(l, Q);
}
ABOperator scalar(const Rational &c)
{
    return ABOperator::series(BSeries::constant(c, Q));
}

ABOperator random_operator(std::mt19937_64 &rng, int max_a = 3)
{
    std::uniform_int_distribution<int> coeff(-4, 4), adeg(0, max_a), bdeg(0, 4);
    ABOperator p(Q);
    for (int t = 0; t < 4; ++t) {
        const int q = adeg(rng);
        BSeries s = p.row(q);
        s[bdeg(rng)] += coeff(rng);
        p.set_row(q, s);
    }
    return p;
}

// Value of (a - l_1 b)...(a - l_p b) e_beta as a multiple of e_{beta+p}, computed
// one factor at a time from the rightmost: (a - l b) e_g = (1 - l/g) e_{g+1}.
Rational rho(const std::vector<Rational> &lambdas, const Rational &beta)
{
    Rational acc = 1;
    Rational g = beta;
    for (auto it = lambdas.rbegin(); it != lambdas.rend(); ++it) {
        acc *= 1 - *it / g;
        g += 1;
    }
    return acc;
}

StructureWord linear_word(const std::vector<Rational> &lambdas)
{
    StructureWord w;
    for (const auto &l : lambdas) {
        w.factors.emplace_back(LinearFactor{l});
    }
    return w;
}

} // namespace

TEST_CASE("ab - ba = b^2 in normal form")
{
    CHECK(compose(A(), B()) - compose(B(), A()) == compose(B(), B()));
}

TEST_CASE("(a - 2b)(a - b) expands to a^2 - 3ba + b^2 with Bernstein (x+1)^2")
{
    const ABOperator p = compose(lin(2), lin(1));
    const ABOperator expected = compose(A(), A()) - compose(B(), A()) * 3 + compose(B(), B());
    CHECK(p == expected);
    const auto bp = bernstein_homogeneous(p);
    CHECK(bp == RationalPolynomial::from_roots({{Rational(-1), 2}}));
    CHECK(bp.to_string() == "(x+1)^2");
}

TEST_CASE("dividing a^2 by a - b")
{
    const auto [q, r] = divide_linear(compose(A(), A()), 1);
    CHECK(q == A() + B());
    CHECK(r == BSeries::monomial(2, 2, Q));
}

TEST_CASE("Bernstein polynomial errors")
{
    CHECK_THROWS_AS(bernstein_homogeneous(compose(B(), B())), Error);
    try {
        bernstein_homogeneous(compose(B(), B()));
    } catch (const Error &err) {
        CHECK(err.kind() == ErrorKind::NotMonic);
    }
    try {
        bernstein_homogeneous(A() + scalar(1));
    } catch (const Error &err) {
        CHECK(err.kind() == ErrorKind::NotHomogeneous);
    }
    CHECK_THROWS_AS(BSeries::monomial(1, 1, Q).inverse(), Error);
}

TEST_CASE("(a + b)^q = a^{q-1}(a + q b)")
{
    const ABOperator apb = A() + B();
    for (int q = 1; q <= 8; ++q) {
        const ABOperator rhs = compose(power(A(), q - 1), A() + B() * q);
        CHECK(power(apb, q) == rhs);
    }
}

TEST_CASE("series inverse")
{
    BSeries s(Q);
    s[0] = 2;
    s[1] = -3;
    s[4] = Rational(1, 5);
    CHECK(s * s.inverse() == BSeries::constant(1, Q));
}

TEST_CASE("right normal form reassembles the operator")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const ABOperator p = random_operator(rng);
        ABOperator back(Q);
        for (const auto &[q, t] : p.right_normal_form()) {
            back = back + compose(power(A(), q), ABOperator::series(t));
        }
        CHECK(back == p);
    }
}

TEST_CASE("composition is associative and distributive")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        const ABOperator p = random_operator(rng, 2), q = random_operator(rng, 2), r = random_operator(rng, 2);
        CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
        CHECK(compose(p, q + r) == compose(p, q) + compose(p, r));
    }
}

TEST_CASE("division round trip")
{
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> num(1, 12), den(1, 4);
    for (int i = 0; i < 200; ++i) {
        const ABOperator p = random_operator(rng);
        const Rational l(num(rng), den(rng));
        const auto [quo, rem] = divide_linear(p, l);
        CHECK(quo.a_degree() == p.a_degree() - 1);
        CHECK(compose(quo, lin(l)) + ABOperator::series(rem) == p);
    }
}

TEST_CASE("operators act as a ring action on the ambient space")
{
    const XiSpace s({ExponentClass(Rational(1, 2)), ExponentClass(Rational(1))}, 2, 1);
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> c(-3, 3), m(0, 3), j(1, 2);
    for (int i = 0; i < 40; ++i) {
        XiElement x(s, 30);
        x.add(LogMonomial{ExponentClass(Rational(1, 2)), m(rng), j(rng), 0}, c(rng));
        x.add(LogMonomial{ExponentClass(Rational(1)), m(rng), j(rng), 0}, c(rng));
        const ABOperator p = random_operator(rng, 2), q = random_operator(rng, 2);
        CHECK(apply(compose(p, q), x) == apply(p, apply(q, x)));
        CHECK(apply(p + q, x) == apply(p, x) + apply(q, x));
    }
    CHECK(apply(A(), XiElement::monomial(s, 5, LogMonomial{ExponentClass(Rational(1, 2)), 0, 0, 0}))
          == act(Generator::A, XiElement::monomial(s, 5, LogMonomial{ExponentClass(Rational(1, 2)), 0, 0, 0})));
}

TEST_CASE("Bernstein polynomial of linear words against the formal action")
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> len(1, 5), num(1, 15), den(1, 4);
    for (int i = 0; i < 200; ++i) {
        std::vector<Rational> lambdas(static_cast<std::size_t>(len(rng)));
        for (auto &l : lambdas) {
            l = Rational(num(rng), den(rng));
            l.canonicalize();
        }
        const int p = static_cast<int>(lambdas.size());
        const ABOperator op = expand_word(linear_word(lambdas), Q);
        const RationalPolynomial bp = bernstein_homogeneous(op);
        // roots -lambda_j + p - j (j from 1)
        std::vector<RootMultiplicity> roots;
        for (int jj = 1; jj <= p; ++jj) {
            roots.push_back({-lambdas[static_cast<std::size_t>(jj - 1)] + (p - jj), 1});
        }
        CHECK(bp == RationalPolynomial::from_roots(roots));
        // rho(beta) prod_{n<p}(beta+n) = (-1)^p B_P(-beta)
        for (const Rational beta : {Rational(1, 3), Rational(7, 2), Rational(5)}) {
            Rational pochhammer = 1;
            for (int n = 0; n < p; ++n) {
                pochhammer *= beta + n;
            }
            const Rational sign = p % 2 == 0 ? 1 : -1;
            CHECK(rho(lambdas, beta) * pochhammer == sign * bp(-beta));
        }
        // any ordering of the roots rebuilds the same operator
        auto mus = roots;
        std::shuffle(mus.begin(), mus.end(), rng);
        std::vector<Rational> rebuilt;
        for (int jj = 1; jj <= p; ++jj) {
            rebuilt.push_back(-mus[static_cast<std::size_t>(jj - 1)].root + p - jj);
        }
        ABOperator again = ABOperator::identity(Q);
        for (const auto &l : rebuilt) {
            again = compose(again, lin(l));
        }
        CHECK(again == op);
    }
}

TEST_CASE("words with unit factors")
{
    BSeries u(Q);
    u[0] = 1;
    u[1] = 2;
    StructureWord w;
    w.factors.emplace_back(LinearFactor{Rational(3)});
    w.factors.emplace_back(UnitFactor{u, true});
    w.factors.emplace_back(LinearFactor{Rational(2)});
    const ABOperator p = expand_word(w, Q);
    const ABOperator manual = compose(compose(lin(3), ABOperator::series(u.inverse())), lin(2));
    CHECK(p == manual);
    StructureWord bad;
    bad.factors.emplace_back(UnitFactor{BSeries::monomial(1, 1, Q), false});
    CHECK_THROWS_AS(expand_word(bad, Q), Error);
}

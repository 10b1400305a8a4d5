#include <doctest.h>

#include <fresco/errors.hpp>
#include <fresco/fresco_lab.hpp>
#include <fresco/pole_ledger.hpp>

using namespace fresco;

namespace
{

const ExponentClass half{Rational(1, 2)};
const ExponentClass one{Rational(1)};
const std::vector<Generator> AB{Generator::A, Generator::B};

XiElement mono(const XiSpace &s, const ExponentClass &c, int m, int j, int cert = 40)
{
    return XiElement::monomial(s, cert, LogMonomial{c, m, j, 0});
}

// ∫_0^1 t^{lambda+beta-1} (log t)^j dt = (-1)^j j! / (lambda+beta)^{j+1}: a pole of
// order j+1 at -beta, one less at integers where 1/Gamma(lambda) vanishes.
int mellin_order(const Rational &beta, int j)
{
    const bool gamma_zero = beta.get_den() == 1 && beta >= 1;
    return j + 1 - (gamma_zero ? 1 : 0);
}

} // namespace

TEST_CASE("Mellin profiles")
{
    const XiSpace s({half, one}, 2, 1);
    const auto prof = mellin_profile(mono(s, half, 1, 2) + mono(s, half, 0, 0));
    REQUIRE(prof.entries.size() == 2);
    CHECK(prof.entries[0] == PoleEntry{Rational(-1, 2), mellin_order(Rational(1, 2), 0), PoleStatus::Expansion});
    CHECK(prof.entries[1] == PoleEntry{Rational(-3, 2), mellin_order(Rational(3, 2), 2), PoleStatus::Expansion});
    CHECK(prof.entries[1].order == 3);
    const auto slog = mellin_profile(mono(s, one, 1, 1));
    REQUIRE(slog.entries.size() == 1);
    CHECK(slog.entries[0].at == -2);
    CHECK(slog.entries[0].order == mellin_order(Rational(2), 1));
    CHECK(mellin_profile(XiElement(s, 10)).entries.empty());
}

TEST_CASE("pole predictions")
{
    const XiSpace s({half}, 2, 1);
    const SubModule f = generate({mono(s, half, 1, 2) + mono(s, half, 0, 0)}, AB);
    const auto pred = predict_pole(f, half);
    CHECK(pred.order == 3);
    CHECK(pred.at == Rational(-3, 2));
    const auto ladder = xi_ladder(f, half);
    REQUIRE(ladder.size() == 3);
    CHECK(ladder[0].xi == Rational(-1, 2));
    CHECK(ladder[1].xi == Rational(-3, 2));
    CHECK(ladder[2].xi == Rational(-3, 2));
    for (const auto &step : ladder) {
        CHECK_FALSE(step.levels.empty());
    }
    // tie xi_2 = xi_3: two distinct levels carry the root
    CHECK(ladder[1].levels.size() >= 2);

    const SubModule e = generate({mono(s, half, 0, 0)}, AB);
    CHECK(predict_pole(e, half).order == 1);
    CHECK(predict_pole(e, half).at == Rational(-1, 2));
    CHECK(xi_ladder(e, half).size() == 1);

    const XiSpace s1({one}, 1, 1);
    const auto ker = kernel_realize(compose(ABOperator::linear(2, 24), ABOperator::linear(1, 24)), s1, 24);
    const SubModule theme = generate({ker.front()}, AB, 4);
    CHECK(predict_pole(theme, one).order == 2);
    CHECK(predict_pole(theme, one).at == -1);
    CHECK_THROWS_AS(predict_pole(theme, half), Error);

    const auto ledger = pole_ledger(f);
    REQUIRE(ledger.entries.size() == 2);
    CHECK(ledger.max_order(half) == 3);
}

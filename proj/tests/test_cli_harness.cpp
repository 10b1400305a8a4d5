#include <doctest.h>

#include <fresco/cli_harness.hpp>
#include <fresco/errors.hpp>

using namespace fresco;

namespace
{

const ExponentClass half{Rational(1, 2)};
const ExponentClass one{Rational(1)};

Json without_time(Json j)
{
    j.erase("wall_seconds");
    return j;
}

// Coefficient of s^{n+3} (Log s)^2 in (a - l1 b)(a - l2 b)(a - l3 b) s^n (Log s)^2
// modulo the Log s and pure power terms: b s^k (Log s)^2 = s^{k+1} (Log s)^2/(k+1)
// plus lower logs, a is multiplication by s.
Rational top_log_coefficient(const std::vector<Rational> &lambdas, int n)
{
    Rational c = 1;
    int k = n;
    for (auto it = lambdas.rbegin(); it != lambdas.rend(); ++it, ++k) {
        c *= 1 - *it / (k + 1);
    }
    return c;
}

} // namespace

TEST_CASE("element and module JSON")
{
    const Json j = Json::parse(R"({"alpha_set": ["1/2", "1"], "log_bound": 2, "value_dim": 1, "cert_degree": 40,
        "terms": [{"alpha": "1/2", "m": 1, "j": 2, "k": 0, "coeff": "1"}, {"alpha": "1/2", "m": 0, "j": 0, "coeff": "1"}]})");
    const XiElement x = element_from_json(j);
    CHECK(x.cert_degree() == 40);
    CHECK(x.coeff(LogMonomial{half, 1, 2, 0}) == 1);
    CHECK(element_from_json(to_json(x)) == x);

    const ModuleInput single = module_from_json(j);
    REQUIRE(single.generators.size() == 1);
    const ModuleInput back = module_from_json(to_json(single));
    CHECK(generate(back.generators, back.closure).same_as(generate(single.generators, single.closure)));

    Json bad = j;
    bad["terms"][0]["j"] = 3;
    CHECK_THROWS_AS(element_from_json(bad), Error);
    bad = j;
    bad["terms"][0]["coeff"] = "1/0";
    CHECK_THROWS_AS(element_from_json(bad), Error);
    CHECK_THROWS_AS(element_from_json(Json::parse(R"({"log_bound": 1})")), Error);
}

TEST_CASE("operator and word JSON")
{
    const Json j = Json::parse(R"({"trunc_order": 24, "rows": {"0": ["0", "0", "2"], "2": ["1"]}})");
    const ABOperator p = operator_from_json(j);
    const ABOperator want = power(ABOperator::a(24), 2) + power(ABOperator::b(24), 2) * Rational(2);
    CHECK(p == want);
    CHECK(operator_from_json(to_json(p)) == p);
    CHECK_THROWS_AS(operator_from_json(Json::parse(R"({"trunc_order": 4, "rows": {"x": ["1"]}})")), Error);

    const StructureWord w = word_from_json(
        Json::parse(R"({"word": [{"linear": "3"}, {"unit": ["1", "1"], "inverted": true}, {"linear": "2"}]})"));
    REQUIRE(w.factors.size() == 3);
    CHECK(std::get<LinearFactor>(w.factors[0]).lambda == 3);
    CHECK(std::get<UnitFactor>(w.factors[1]).inverted);
    CHECK(to_json(word_from_json(to_json(w))) == to_json(w));

    const Json poly = to_json(RationalPolynomial::from_roots({{Rational(-3, 2), 2}, {Rational(-1, 2), 1}}));
    CHECK(poly["factors"][0]["root"] == "-1/2");
    CHECK(poly["factors"][1]["mult"] == 2);
}

TEST_CASE("registry items")
{
    const Report r = reproduce_s5();
    CHECK(r.ok());
    CHECK(r.properties.size() == 10);
    for (const auto &p : r.properties) {
        CHECK_MESSAGE(p.passed == 1, p.name);
    }
    // the registry's 1/24 against the top-log recursion and the closed form (4 - nu)/24
    CHECK(top_log_coefficient({3, 2, 1}, 1) == Rational(1, 24));
    for (int nu = 0; nu <= 6; ++nu) {
        CHECK(top_log_coefficient({Rational(nu), 2, 1}, 1) == Rational(4 - nu) / 24);
    }
    const XiSpace s({one}, 1, 1);
    const auto p3 = compose(compose(ABOperator::linear(3, 10), ABOperator::linear(2, 10)), ABOperator::linear(1, 10));
    const XiElement img = apply(p3, XiElement::monomial(s, 10, LogMonomial{one, 1, 2, 0}));
    // basis element is s (Log s)^2 / 2, read back in the same normalization
    CHECK(img.coeff(LogMonomial{one, 4, 2, 0}) == top_log_coefficient({3, 2, 1}, 1));
}

TEST_CASE("suite determinism and replay")
{
    SuiteConfig cfg;
    cfg.cases = 3;
    cfg.cert_degree = 30;
    cfg.properties = {"commutation", "higher_divides", "cor_20_1", "shift_rule"};
    const Report a = run_suite(cfg);
    const Report b = run_suite(cfg);
    CHECK(a.ok());
    CHECK(without_time(a.to_json()) == without_time(b.to_json()));
    REQUIRE(a.find("cor_20_1") != nullptr);
    CHECK(a.find("cor_20_1")->passed == 3);

    const RandomFresco f1 = random_fresco(case_seed(7, "x", 0), cfg);
    const RandomFresco f2 = random_fresco(case_seed(7, "x", 0), cfg);
    CHECK(f1.generator == f2.generator);
    CHECK(f1.module.same_as(f2.module));
    CHECK(is_fresco(f1.module));
    CHECK(b_rank(f1.module) <= cfg.rank_max);

    const Report r = replay_case("cor_20_1", case_seed(cfg.seed, "cor_20_1", 0), cfg);
    CHECK(r.ok());
    CHECK_THROWS_AS(replay_case("no_such_property", 1, cfg), Error);
}

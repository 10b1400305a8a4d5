#include <fresco/cli_harness.hpp>
#include <fresco/errors.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

namespace fresco
{

namespace
{

using Rng = std::mt19937_64;

const std::vector<Generator> AB{Generator::A, Generator::B};

std::uint64_t splitmix(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

int uniform(Rng &rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Rational small_rational(Rng &rng)
{
    Rational q(uniform(rng, 1, 3) * (uniform(rng, 0, 1) == 0 ? 1 : -1), uniform(rng, 1, 3));
    q.canonicalize();
    return q;
}

XiSpace random_space(Rng &rng, const SuiteConfig &cfg)
{
    std::vector<Rational> pool = cfg.alpha_pool;
    std::shuffle(pool.begin(), pool.end(), rng);
    const int count = uniform(rng, 1, std::min<int>(2, static_cast<int>(pool.size())));
    std::vector<ExponentClass> classes;
    for (int i = 0; i < count; ++i) {
        classes.emplace_back(pool[static_cast<std::size_t>(i)]);
    }
    return XiSpace(std::move(classes), uniform(rng, 0, cfg.log_bound_max), uniform(rng, 1, cfg.value_dim_max));
}

XiElement random_element(Rng &rng, const XiSpace &space, const SuiteConfig &cfg)
{
    XiElement x(space, cfg.cert_degree);
    while (x.is_zero()) {
        const int terms = uniform(rng, 1, 3);
        for (int t = 0; t < terms; ++t) {
            const ExponentClass &cls =
                space.alpha_set[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(space.alpha_set.size()) - 1))];
            const LogMonomial mono{cls, uniform(rng, 0, cfg.m_max),
                                   uniform(rng, space.min_log(cls), space.max_log(cls)),
                                   uniform(rng, 0, space.value_dim - 1)};
            x.add(mono, small_rational(rng));
        }
    }
    return x;
}

bool retryable(const Error &e)
{
    return e.kind() == ErrorKind::RankUnstable || e.kind() == ErrorKind::GuardExhausted;
}

// Roots of a Bernstein polynomial, which always splits over Q here.
std::vector<Rational> roots_of(const RationalPolynomial &p)
{
    std::vector<Rational> out;
    for (const auto &rm : p.rational_roots()) {
        out.push_back(rm.root);
    }
    return out;
}

// Some root r of p with r - base in N (N* when strict).
bool root_above(const RationalPolynomial &p, const Rational &base, bool strict = false)
{
    for (const auto &r : roots_of(p)) {
        const Rational n = r - base;
        if (n.get_den() == 1 && (strict ? n > 0 : n >= 0)) {
            return true;
        }
    }
    return false;
}

bool same_class(const Rational &root, const ExponentClass &cls)
{
    const Rational n = root + cls.alpha();
    return n.get_den() == 1;
}

std::vector<RationalPolynomial> levels(const SubModule &m)
{
    std::vector<RationalPolynomial> out;
    const int d = nilpotent_order(m);
    for (int j = 1; j <= d; ++j) {
        out.push_back(higher_bernstein(m, j));
    }
    return out;
}

RationalPolynomial product(const std::vector<RationalPolynomial> &ps)
{
    RationalPolynomial out = RationalPolynomial::constant(1);
    for (const auto &p : ps) {
        out = out * p;
    }
    return out;
}

std::string show(const Rational &q)
{
    return format_rational(q);
}

// Collects the first violated assertion of a case.
class Checker
{
public:
    void expect(bool ok, const std::string &what)
    {
        if (!ok && failure_.empty()) {
            failure_ = what;
        }
    }
    const std::string &failure() const
    {
        return failure_;
    }

private:
    std::string failure_;
};

enum class Status { Pass, Fail, Skip };

struct Outcome {
    Status status = Status::Pass;
    std::string detail;
    Json inputs = Json::object();
    int redraws = 0;
};

Outcome finish(const Checker &c, Json inputs, int redraws = 0)
{
    Outcome o;
    o.inputs = std::move(inputs);
    o.redraws = redraws;
    if (!c.failure().empty()) {
        o.status = Status::Fail;
        o.detail = c.failure();
    }
    return o;
}

Outcome skip(Json inputs, int redraws = 0)
{
    Outcome o;
    o.status = Status::Skip;
    o.inputs = std::move(inputs);
    o.redraws = redraws;
    return o;
}

Json module_json(const std::vector<XiElement> &gens)
{
    return to_json(ModuleInput{gens, AB});
}

// ---------------------------------------------------------------- operators

BSeries random_series(Rng &rng, int order, bool unit)
{
    BSeries s(order);
    for (int q = 0; q <= order; ++q) {
        if (uniform(rng, 0, 2) == 0) {
            s[q] = small_rational(rng);
        }
    }
    if (unit && s[0] == 0) {
        s[0] = small_rational(rng);
    }
    return s;
}

ABOperator random_operator(Rng &rng, int order)
{
    ABOperator p(order);
    const int deg = uniform(rng, 0, 4);
    for (int q = 0; q <= deg; ++q) {
        p.set_row(q, random_series(rng, order, q == deg));
    }
    return p;
}

Outcome prop_commutation(std::uint64_t seed, const SuiteConfig &cfg, Json &drawn)
{
    Rng rng(seed);
    const XiElement x = random_element(rng, random_space(rng, cfg), cfg);
    drawn = {{"element", to_json(x)}};
    Checker c;
    const XiElement ab = act(Generator::A, act(Generator::B, x));
    const XiElement ba = act(Generator::B, act(Generator::A, x));
    c.expect(ab - ba == act(Generator::B, act(Generator::B, x)), "ab - ba != b^2 on the element");
    const BSeries s = random_series(rng, 12, false);
    const ABOperator a = ABOperator::a(12);
    const ABOperator sop = ABOperator::series(s);
    c.expect(compose(a, sop) - compose(sop, a) == ABOperator::series(s.commutator_with_a()),
             "[a, S] != b^2 S' for a random series");
    return finish(c, {{"element", to_json(x)}, {"series", to_json(sop)}});
}

Outcome prop_inverse_pair(std::uint64_t seed, const SuiteConfig &cfg, Json &drawn)
{
    Rng rng(seed);
    const XiElement x = random_element(rng, random_space(rng, cfg), cfg);
    drawn = {{"element", to_json(x)}};
    Checker c;
    c.expect(act(Generator::B, act(Generator::B_INV_A, x)) == act(Generator::A, x), "b (b^-1 a) != a");
    c.expect(act(Generator::B_INV_A, act(Generator::B, x)) == act(Generator::A, x) + act(Generator::B, x),
             "(b^-1 a) b != a + b");
    const BSeries s = random_series(rng, 12, true);
    c.expect(s * s.inverse() == BSeries::constant(1, 12), "S S^-1 != 1");
    return finish(c, {{"element", to_json(x)}, {"series", to_json(ABOperator::series(s))}});
}

Outcome prop_division(std::uint64_t seed, const SuiteConfig &, Json &drawn)
{
    Rng rng(seed);
    const int order = 12;
    const ABOperator p = random_operator(rng, order);
    const Rational lambda = small_rational(rng);
    drawn = {{"operator", to_json(p)}, {"lambda", show(lambda)}};
    const LinearDivision div = divide_linear(p, lambda);
    Checker c;
    c.expect(compose(div.quotient, ABOperator::linear(lambda, order)) + ABOperator::series(div.remainder) == p,
             "P != Q (a - lambda b) + R for lambda = " + show(lambda));
    return finish(c, {{"operator", to_json(p)}, {"lambda", show(lambda)}});
}

Outcome prop_exercise(std::uint64_t seed, const SuiteConfig &, Json &drawn)
{
    const int q = static_cast<int>(seed % 8) + 1;
    drawn = {{"q", q}};
    const int order = q + 2;
    const ABOperator a = ABOperator::a(order);
    const ABOperator b = ABOperator::b(order);
    Checker c;
    c.expect(power(a + b, q) == compose(power(a, q - 1), a + b * Rational(q)),
             "(a+b)^q != a^(q-1)(a+qb) for q = " + std::to_string(q));
    return finish(c, {{"q", q}});
}

Outcome prop_word_bernstein(std::uint64_t seed, const SuiteConfig &, Json &drawn)
{
    Rng rng(seed);
    const int k = uniform(rng, 1, 5);
    const int order = 2 * k + 2;
    ABOperator p = ABOperator::identity(order);
    StructureWord w;
    std::vector<RootMultiplicity> roots;
    for (int j = 1; j <= k; ++j) {
        const Rational lambda = small_rational(rng) + uniform(rng, 0, 3);
        w.factors.emplace_back(LinearFactor{lambda});
        p = compose(p, ABOperator::linear(lambda, order));
        roots.push_back({-(lambda - (k - j)), 1});
    }
    drawn = to_json(w);
    Checker c;
    const RationalPolynomial want = RationalPolynomial::from_roots(roots);
    const RationalPolynomial got = bernstein_homogeneous(p);
    c.expect(got == want, "B_P = " + got.to_string() + ", expected " + want.to_string());
    return finish(c, to_json(w));
}

// ---------------------------------------------------------------- modules

struct DrawnModule {
    std::vector<XiElement> gens;
    SubModule module;
    int redraws = 0;
};

constexpr int kDrawBudget = 32;

// Draws from rng until the module has rank in [1, rank_max] and nilpotent
// order at least min_order; every draw depends only on rng, never on cert.
DrawnModule draw_module(Rng &rng, const SuiteConfig &cfg, int gen_lo, int gen_hi, int min_order)
{
    DrawnModule out;
    for (int attempt = 0; attempt < kDrawBudget; ++attempt, ++out.redraws) {
        const XiSpace space = random_space(rng, cfg);
        const int count = uniform(rng, gen_lo, gen_hi);
        std::vector<XiElement> gens;
        for (int i = 0; i < count; ++i) {
            gens.push_back(random_element(rng, space, cfg));
        }
        try {
            SubModule m = generate(gens, AB, cfg.guard);
            const int r = b_rank(m);
            if (r < 1 || r > cfg.rank_max || nilpotent_order(m) < min_order) {
                continue;
            }
            out.gens = std::move(gens);
            out.module = std::move(m);
            return out;
        } catch (const Error &e) {
            if (!retryable(e)) {
                throw;
            }
        }
    }
    throw Error(ErrorKind::GuardExhausted, "no admissible random module within the draw budget");
}

Outcome prop_higher_divides(std::uint64_t seed, const SuiteConfig &cfg, Json &drawn)
{
    Rng rng(seed);
    const DrawnModule dm = draw_module(rng, cfg, 2, 3, 1);
    drawn = module_json(dm.gens);
    const RationalPolynomial be = bernstein(dm.module).minimal;
    Checker c;
    const auto lv = levels(dm.module);
    for (std::size_t j = 0; j < lv.size(); ++j) {
        c.expect(lv[j].divides(be), "B^" + std::to_string(j + 1) + " = " + lv[j].to_string()
                                        + " does not divide B_E = " + be.to_string());
    }
    return finish(c, module_json(dm.gens), dm.redraws);
}

Outcome prop_roots_in_levels(std::uint64_t seed, const SuiteConfig &cfg, Json &drawn)
{
    Rng rng(seed);
    const DrawnModule dm = draw_module(rng, cfg, 2, 3, 1);
    drawn = module_json(dm.gens);
    const RationalPolynomial be = bernstein(dm.module).minimal;
    const auto lv = levels(dm.module);
    Checker c;
    for (const auto &rm : be.rational_roots()) {
        const auto hits = std::count_if(lv.begin(), lv.end(), [&](const auto &p) { return p(rm.root) == 0; });
        c.expect(hits >= 1, "root " + show(rm.root) + " of B_E in no B^j");
        c.expect(hits >= rm.mult, "root " + show(rm.root) + " of multiplicity " + std::to_string(rm.mult)
                                      + " found in only " + std::to_string(hits) + " levels");
    }
    c.expect(be.divides(product(lv)), "B_E does not divide the product of the B^j");
    return finish(c, module_json(dm.gens), dm.redraws);
}

Outcome prop_root_propagation(std::uint64_t seed, const SuiteConfig &cfg, Json &drawn)
{
    Rng rng(seed);
    const DrawnModule dm = draw_module(rng, cfg, 2, 3, 2);
    drawn = module_json(dm.gens);
    const auto lv = levels(dm.module);
    const int d = static_cast<int>(lv.size());
    Checker c;
    // cascade from every level down to 1
    for (int j = 2; j <= d; ++j) {
        for (const auto &beta : roots_of(lv[static_cast<std::size_t>(j - 1)])) {
            for (int h = 1; h < j; ++h) {
                c.expect(root_above(lv[static_cast<std::size_t>(h - 1)], beta),
                         "root " + show(beta) + " of B^" + std::to_string(j) + " has no root of B^" + std::to_string(h)
                             + " above it");
            }
        }
    }
    // the greatest root in its class reaches level 1 and every level below its own
    const RationalPolynomial be = bernstein(dm.module).minimal;
    for (const auto &beta : roots_of(be)) {
        if (root_above(be, beta, true)) {
            continue;
        }
        c.expect(lv.front()(beta) == 0, "greatest root " + show(beta) + " is not a root of B^1");
        for (int j = d; j >= 1; --j) {
            if (lv[static_cast<std::size_t>(j - 1)](beta) != 0) {
                continue;
            }
            for (int h = 1; h <= j; ++h) {
                c.expect(lv[static_cast<std::size_t>(h - 1)](beta) == 0,
                         "greatest root " + show(beta) + " of B^" + std::to_string(j) + " missing from B^"
                             + std::to_string(h));
            }
            break;
        }
    }
    return finish(c, module_json(dm.gens), dm.redraws);
}

Outcome prop_finite_codimension(std::uint64_t seed, const SuiteConfig &cfg, Json &drawn)
{
    Rng rng(seed);
    const DrawnModule dm = draw_module(rng, cfg, 1, 3, 1);
    drawn = module_json(dm.gens);
    std::vector<XiElement> shifted;
    int total = 0;
    for (const auto &g : dm.gens) {
        XiElement x = g;
        const int k = uniform(rng, 0, 2);
        total += k;
        for (int i = 0; i < k; ++i) {
            x = act(Generator::B, x);
        }
        shifted.push_back(x);
    }
    if (total == 0) {
        shifted.front() = act(Generator::B, shifted.front());
    }
    const SubModule &h = dm.module;
    const SubModule g = generate(shifted, AB, cfg.guard);
    Json inputs{{"H", module_json(dm.gens)}, {"G", module_json(shifted)}};
    if (b_rank(g) != b_rank(h)) {
        return skip(inputs, dm.redraws);
    }
    Checker c;
    const RationalPolynomial bg = bernstein(g).minimal;
    const RationalPolynomial bh = bernstein(h).minimal;
    for (const auto &beta : roots_of(bg)) {
        c.expect(root_above(bh, beta), "root " + show(beta) + " of B_G has no root of B_H above it");
    }
    const auto lg = levels(g);
    const auto lh = levels(h);
    for (std::size_t p = 1; p <= lg.size(); ++p) {
        for (const auto &beta : roots_of(lg[p - 1])) {
            bool found = false;
            bool exact = false;
            for (std::size_t q = p; q <= lh.size(); ++q) {
                found = found || root_above(lh[q - 1], beta);
                exact = exact || lh[q - 1](beta) == 0;
            }
            c.expect(found, "root " + show(beta) + " of B^" + std::to_string(p) + "_G has no root of B^q_H, q >= p, "
                                + "above it");
            if (!root_above(bh, beta, true)) {
                c.expect(exact, "root " + show(beta) + " of B^" + std::to_string(p)
                                    + "_G is not a root of any B^q_H, q >= p");
            }
        }
    }
    return finish(c, inputs, dm.redraws);
}

Outcome prop_primitive_saturation(std::uint64_t seed, const SuiteConfig &cfg, Json &drawn)
{
    Rng rng(seed);
    const DrawnModule dm = draw_module(rng, cfg, 1, 3, 1);
    drawn = module_json(dm.gens);
    const SubModule sat = saturate(dm.module);
    Checker c;
    for (const auto &cls : dm.module.space().alpha_set) {
        c.expect(saturate(primitive_quotient(dm.module, cls)).same_as(primitive_quotient(sat, cls)),
                 "saturation and the primitive part of class " + show(cls.alpha()) + " do not commute");
    }
    return finish(c, module_json(dm.gens), dm.redraws);
}

// The factor of p with roots in the class of alpha.
RationalPolynomial class_part(const RationalPolynomial &p, const ExponentClass &cls)
{
    std::vector<RootMultiplicity> keep;
    for (const auto &rm : p.rational_roots()) {
        if (same_class(rm.root, cls)) {
            keep.push_back(rm);
        }
    }
    return RationalPolynomial::from_roots(keep);
}

Outcome prop_primitive_splitting(std::uint64_t seed, const SuiteConfig &cfg, Json &drawn)
{
    Rng rng(seed);
    const DrawnModule dm = draw_module(rng, cfg, 1, 3, 1);
    drawn = module_json(dm.gens);
    const SubModule &e = dm.module;
    const RationalPolynomial be = bernstein(e).minimal;
    const auto le = levels(e);
    RationalPolynomial prod = RationalPolynomial::constant(1);
    std::vector<RationalPolynomial> level_prod(le.size(), RationalPolynomial::constant(1));
    Checker c;
    for (const auto &cls : e.space().alpha_set) {
        const SubModule prim = primitive_quotient(e, cls);
        if (prim.is_zero()) {
            continue;
        }
        const RationalPolynomial bp = bernstein(prim).minimal;
        c.expect(bp == class_part(be, cls), "B of the primitive part of class " + show(cls.alpha()) + " is "
                                                + bp.to_string() + ", not the class part of " + be.to_string());
        prod = prod * bp;
        const auto lp = levels(prim);
        for (std::size_t j = 0; j < lp.size() && j < le.size(); ++j) {
            c.expect(lp[j] == class_part(le[j], cls), "B^" + std::to_string(j + 1) + " of the primitive part of class "
                                                          + show(cls.alpha()) + " is not the class part");
            level_prod[j] = level_prod[j] * lp[j];
        }
    }
    c.expect(prod == be, "B_E is not the product over classes");
    for (std::size_t j = 0; j < le.size(); ++j) {
        c.expect(level_prod[j] == le[j], "B^" + std::to_string(j + 1) + " is not the product over classes");
    }
    return finish(c, module_json(dm.gens), dm.redraws);
}

Outcome prop_quotient_filtration(std::uint64_t seed, const SuiteConfig &cfg, Json &drawn)
{
    Rng rng(seed);
    const DrawnModule dm = draw_module(rng, cfg, 1, 3, 2);
    drawn = module_json(dm.gens);
    const SubModule &e = dm.module;
    const int d = nilpotent_order(e);
    const SubModule g = log_shift(e);
    Checker c;
    c.expect(nilpotent_order(g) == d - 1, "d(E/S_1) != d(E) - 1");
    c.expect(b_rank(g) == b_rank(quotient(e, filtration_level(e, 1))), "log shift and quotient ranks differ");
    for (int h = 1; h < d; ++h) {
        c.expect(filtration_level(g, h).same_as(log_shift(filtration_level(e, h + 1))),
                 "S_" + std::to_string(h) + "(E/S_1) is not the image of S_" + std::to_string(h + 1));
        c.expect(higher_bernstein(g, h) == higher_bernstein(e, h + 1),
                 "B^" + std::to_string(h) + "(E/S_1) != B^" + std::to_string(h + 1) + "(E)");
    }
    return finish(c, module_json(dm.gens), dm.redraws);
}

Outcome prop_rank_monotonicity(std::uint64_t seed, const SuiteConfig &cfg, Json &drawn)
{
    Rng rng(seed);
    const DrawnModule dm = draw_module(rng, cfg, 1, 3, 1);
    drawn = module_json(dm.gens);
    const auto chain = semisimple_filtration(dm.module);
    Checker c;
    int prev = -1;
    for (std::size_t j = 1; j < chain.size(); ++j) {
        const int r = b_rank(chain[j]) - b_rank(chain[j - 1]);
        c.expect(prev < 0 || r <= prev, "rank of S_" + std::to_string(j) + "/S_" + std::to_string(j - 1)
                                            + " exceeds the previous layer");
        prev = r;
    }
    return finish(c, module_json(dm.gens), dm.redraws);
}

// ---------------------------------------------------------------- frescos

struct DrawnFresco {
    RandomFresco f;
    Json inputs;
};

DrawnFresco draw_fresco(std::uint64_t seed, const SuiteConfig &cfg)
{
    RandomFresco f = random_fresco(seed, cfg);
    Json inputs = module_json({f.generator});
    return {std::move(f), std::move(inputs)};
}

Outcome prop_cor_20_1(std::uint64_t seed, const SuiteConfig &cfg, Json &drawn)
{
    const auto [f, inputs] = draw_fresco(seed, cfg);
    drawn = inputs;
    Checker c;
    const RationalPolynomial prod = product(levels(f.module));
    const RationalPolynomial ch = bernstein(f.module).characteristic;
    c.expect(prod == ch, "prod B^j = " + prod.to_string() + " but B_F = " + ch.to_string());
    return finish(c, inputs, f.redraws);
}

Outcome prop_16_12(std::uint64_t seed, const SuiteConfig &cfg, Json &drawn)
{
    const auto [f, inputs] = draw_fresco(seed, cfg);
    drawn = inputs;
    const JordanHolderData jh = jordan_holder(f.module);
    const SubModule sat = saturate(f.module);
    Echelon sum;
    Checker c;
    for (std::size_t k = 0; k < jh.chain.size(); ++k) {
        const SubModule part = b_inverse_power(jh.chain[k], jh.co_ranks[k]);
        c.expect(sat.contains(part), "b^{j-r} F_j not inside the saturation at j = " + std::to_string(k + 1));
        for (const auto &row : part.rows_at(sat.threshold())) {
            sum.insert(row);
        }
    }
    c.expect(SubModule(sat.frame(), sat.guard(), sat.closure(), sum).same_as(sat),
             "sum of b^{j-r} F_j differs from the saturation");
    return finish(c, inputs, f.redraws);
}

Outcome prop_18_12_0(std::uint64_t seed, const SuiteConfig &cfg, Json &drawn)
{
    const auto [f, inputs] = draw_fresco(seed, cfg);
    drawn = inputs;
    const JordanHolderData jh = jordan_holder(f.module);
    const SubModule sat = saturate(f.module);
    Checker c;
    for (std::size_t k = 0; k + 1 < jh.chain.size(); ++k) {
        const SubModule gs = saturate(jh.chain[k]);
        c.expect(normalize_in(gs, sat).same_as(b_inverse_power(gs, jh.co_ranks[k])),
                 "normalization of G# in F# is not b^-g G# for the rank " + std::to_string(k + 1) + " step");
    }
    return finish(c, inputs, f.redraws);
}

Outcome prop_cor_principal(std::uint64_t seed, const SuiteConfig &cfg, Json &drawn)
{
    const auto [f, inputs] = draw_fresco(seed, cfg);
    drawn = inputs;
    const int d = nilpotent_order(f.module);
    Checker c;
    for (int j = 1; j <= d; ++j) {
        const SubModule top = filtration_level(f.module, j);
        const SubModule below = filtration_level(f.module, j - 1);
        const int r = filtration_co_rank(f.module, j);
        const RationalPolynomial q = bernstein(quotient(top, below)).minimal.shifted(Rational(-r));
        const RationalPolynomial h = higher_bernstein(f.module, j);
        c.expect(q == h, "level " + std::to_string(j) + ": shifted quotient gives " + q.to_string() + ", B^j is "
                             + h.to_string());
    }
    return finish(c, inputs, f.redraws);
}

Outcome prop_22_1_2(std::uint64_t seed, const SuiteConfig &cfg, Json &drawn)
{
    const auto [f, inputs] = draw_fresco(seed, cfg);
    drawn = inputs;
    const int d = nilpotent_order(f.module);
    Checker c;
    for (int j = 1; j <= d; ++j) {
        c.expect(higher_bernstein_shifted(f.module, j) == higher_bernstein(f.module, j),
                 "the two definitions of B^" + std::to_string(j) + " differ");
    }
    return finish(c, inputs, f.redraws);
}

Outcome prop_shift_rule(std::uint64_t seed, const SuiteConfig &cfg, Json &drawn)
{
    const auto [f, inputs] = draw_fresco(seed, cfg);
    drawn = inputs;
    const JordanHolderData jh = jordan_holder(f.module);
    const RationalPolynomial ch = bernstein(f.module).characteristic;
    Checker c;
    c.expect(jordan_holder_product(jh) == ch, "Jordan-Hoelder product != B_F");
    for (std::size_t k = 0; k + 1 < jh.chain.size(); ++k) {
        const RationalPolynomial sub = bernstein(jh.chain[k]).characteristic.shifted(Rational(-jh.co_ranks[k]));
        const RationalPolynomial quo = bernstein(quotient(f.module, jh.chain[k])).characteristic;
        c.expect(sub * quo == ch, "exact-sequence rule fails at rank " + std::to_string(k + 1));
    }
    return finish(c, inputs, f.redraws);
}

Outcome prop_jordan_chain(std::uint64_t seed, const SuiteConfig &cfg, Json &drawn)
{
    const auto [f, inputs] = draw_fresco(seed, cfg);
    drawn = inputs;
    Checker c;
    bool any = false;
    for (const auto &cls : f.module.space().alpha_set) {
        const int p = nilpotent_order(primitive_quotient(f.module, cls));
        if (p == 0) {
            continue;
        }
        JordanChain jc;
        try {
            jc = find_jordan_chain(f.module, cls, p);
        } catch (const Error &e) {
            if (e.kind() == ErrorKind::NoRoot) {
                continue;
            }
            throw;
        }
        any = true;
        const Rational beta = cls.alpha() + jc.m;
        c.expect(static_cast<int>(jc.chain.size()) == p, "chain length differs from p");
        for (std::size_t j = 0; j < jc.chain.size(); ++j) {
            const XiElement &w = jc.chain[j];
            XiElement rhs = act(Generator::B, w) * beta;
            if (j > 0) {
                rhs = rhs + act(Generator::B, jc.chain[j - 1]);
            }
            c.expect(act(Generator::A, w) == rhs, "relation a w_j = beta b w_j + b w_{j-1} fails at j = "
                                                       + std::to_string(j + 1));
            c.expect(f.module.contains(w), "chain element outside F");
        }
    }
    return any ? finish(c, inputs, f.redraws) : skip(inputs, f.redraws);
}

Outcome prop_pole_orders(std::uint64_t seed, const SuiteConfig &cfg, Json &drawn)
{
    const auto [f, inputs] = draw_fresco(seed, cfg);
    drawn = inputs;
    const auto basis = f.module.basis_elements();
    Checker c;
    for (const auto &cls : f.module.space().alpha_set) {
        const SubModule prim = primitive_quotient(f.module, cls);
        const int p = nilpotent_order(prim);
        if (p == 0) {
            continue;
        }
        int best = 0;
        for (const auto &x : basis) {
            best = std::max(best, mellin_profile(x).max_order(cls));
        }
        c.expect(best == p, "max Mellin order " + std::to_string(best) + " at class " + show(cls.alpha())
                                + " but d(F^[alpha]) = " + std::to_string(p));
        const RationalPolynomial bp = higher_bernstein(prim, p);
        bool exists = false;
        for (const auto &r : roots_of(bp)) {
            exists = exists || (-r - cls.alpha() >= 0 && same_class(r, cls));
        }
        try {
            const PolePrediction pred = predict_pole(f.module, cls);
            c.expect(pred.order == p && bp(pred.at) == 0 && same_class(pred.at, cls) && -pred.at >= cls.alpha(),
                     "predicted pole " + show(pred.at) + " is not a root of B^p in -alpha - N");
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::NoRoot) {
                throw;
            }
            c.expect(!exists, "predict_pole found no root although B^p has one in -alpha - N");
        }
    }
    return finish(c, inputs, f.redraws);
}

Outcome prop_xi_ladder(std::uint64_t seed, const SuiteConfig &cfg, Json &drawn)
{
    const auto [f, inputs] = draw_fresco(seed, cfg);
    drawn = inputs;
    const auto lv = levels(f.module);
    Checker c;
    for (const auto &cls : f.module.space().alpha_set) {
        if (nilpotent_order(primitive_quotient(f.module, cls)) == 0) {
            continue;
        }
        const auto ladder = xi_ladder(f.module, cls);
        for (std::size_t s = 0; s < ladder.size(); ++s) {
            const LadderStep &step = ladder[s];
            bool some = false;
            for (std::size_t h = s; h < lv.size(); ++h) {
                some = some || lv[h](step.xi) == 0;
            }
            c.expect(some, "xi_" + std::to_string(step.s) + " = " + show(step.xi) + " is a root of no B^{s+j}");
            c.expect(!step.levels.empty(), "ladder reports no level for xi_" + std::to_string(step.s));
            c.expect(s == 0 || step.xi <= ladder[s - 1].xi, "ladder not non-increasing");
        }
    }
    return finish(c, inputs, f.redraws);
}

struct Fingerprint {
    std::vector<RationalPolynomial> polys;
    bool operator==(const Fingerprint &) const = default;
};

Fingerprint fingerprint(const SubModule &m)
{
    const BernsteinPair bp = bernstein(m);
    Fingerprint fp{{bp.minimal, bp.characteristic}};
    for (const auto &p : levels(m)) {
        fp.polys.push_back(p);
    }
    return fp;
}

Outcome prop_truncation_stability(std::uint64_t seed, const SuiteConfig &cfg, Json &drawn)
{
    SuiteConfig wide = cfg;
    wide.cert_degree += 4;
    const auto [f, inputs] = draw_fresco(seed, cfg);
    drawn = inputs;
    const RandomFresco g = random_fresco(seed, wide);
    Checker c;
    if (!(g.generator == f.generator)) {
        return skip(inputs, f.redraws);
    }
    c.expect(fingerprint(f.module) == fingerprint(g.module), "fresco invariants change at cert + 4");
    if (is_fresco(f.module)) {
        c.expect(jordan_holder_product(jordan_holder(f.module)) == jordan_holder_product(jordan_holder(g.module)),
                 "Jordan-Hoelder product changes at cert + 4");
    }
    Rng r1(seed ^ 0x5bd1e995ULL);
    Rng r2(seed ^ 0x5bd1e995ULL);
    const DrawnModule m1 = draw_module(r1, cfg, 2, 3, 1);
    const DrawnModule m2 = draw_module(r2, wide, 2, 3, 1);
    if (m1.redraws == m2.redraws) {
        c.expect(fingerprint(m1.module) == fingerprint(m2.module), "module invariants change at cert + 4");
    }
    return finish(c, {{"fresco", inputs}, {"module", module_json(m1.gens)}}, f.redraws);
}

using PropertyFn = Outcome (*)(std::uint64_t, const SuiteConfig &, Json &);

const std::vector<std::pair<std::string, PropertyFn>> &registry()
{
    static const std::vector<std::pair<std::string, PropertyFn>> props{
        {"commutation", prop_commutation},
        {"inverse_pair", prop_inverse_pair},
        {"division_round_trip", prop_division},
        {"exercise_identity", prop_exercise},
        {"word_bernstein", prop_word_bernstein},
        {"higher_divides", prop_higher_divides},
        {"roots_in_levels", prop_roots_in_levels},
        {"root_propagation", prop_root_propagation},
        {"finite_codimension", prop_finite_codimension},
        {"primitive_saturation", prop_primitive_saturation},
        {"primitive_splitting", prop_primitive_splitting},
        {"quotient_filtration", prop_quotient_filtration},
        {"rank_monotonicity", prop_rank_monotonicity},
        {"cor_20_1", prop_cor_20_1},
        {"prop_16_12", prop_16_12},
        {"cor_18_12_0", prop_18_12_0},
        {"cor_principal", prop_cor_principal},
        {"thm_22_1_2", prop_22_1_2},
        {"shift_rule", prop_shift_rule},
        {"jordan_chain", prop_jordan_chain},
        {"pole_orders", prop_pole_orders},
        {"xi_ladder", prop_xi_ladder},
        {"truncation_stability", prop_truncation_stability},
    };
    return props;
}

PropertyFn lookup(const std::string &name)
{
    for (const auto &[n, fn] : registry()) {
        if (n == name) {
            return fn;
        }
    }
    throw Error(ErrorKind::InvalidInput, "unknown property " + name);
}

constexpr int kRetryBudget = 6;

void run_case(const std::string &name, PropertyFn fn, std::uint64_t seed, const SuiteConfig &cfg,
              PropertyResult &res, std::vector<Counterexample> &cex)
{
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        const std::uint64_t s = attempt == 0 ? seed : splitmix(seed + static_cast<std::uint64_t>(attempt));
        Outcome o;
        Json drawn = Json::object();
        try {
            o = fn(s, cfg, drawn);
        } catch (const Error &e) {
            if (retryable(e)) {
                ++res.retries;
                continue;
            }
            o.status = Status::Fail;
            o.detail = e.what();
            o.inputs = drawn;
        }
        res.retries += o.redraws;
        switch (o.status) {
            case Status::Pass:
                ++res.passed;
                break;
            case Status::Skip:
                ++res.skipped;
                break;
            case Status::Fail:
                ++res.failed;
                cex.push_back({name, s, o.detail, o.inputs});
                break;
        }
        return;
    }
    ++res.skipped;
}

} // namespace

const std::vector<std::string> &property_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto &p : registry()) {
            out.push_back(p.first);
        }
        return out;
    }();
    return names;
}

std::uint64_t case_seed(std::uint64_t suite_seed, const std::string &property, int index)
{
    std::uint64_t h = 1469598103934665603ULL; // FNV-1a
    for (unsigned char ch : property) {
        h = (h ^ ch) * 1099511628211ULL;
    }
    return splitmix(splitmix(suite_seed ^ h) + static_cast<std::uint64_t>(index));
}

RandomFresco random_fresco(std::uint64_t seed, const SuiteConfig &cfg)
{
    Rng rng(seed);
    const DrawnModule dm = draw_module(rng, cfg, 1, 1, 1);
    return {dm.gens.front(), dm.module, dm.redraws};
}

SubModule random_module(std::uint64_t seed, const SuiteConfig &cfg, int min_order, std::vector<XiElement> *gens)
{
    Rng rng(seed);
    DrawnModule dm = draw_module(rng, cfg, 2, 3, min_order);
    if (gens != nullptr) {
        *gens = dm.gens;
    }
    return dm.module;
}

Report run_suite(const SuiteConfig &cfg)
{
    const auto start = std::chrono::steady_clock::now();
    Report report;
    report.title = "property suite";
    const std::vector<std::string> &names = cfg.properties.empty() ? property_names() : cfg.properties;
    for (const auto &name : names) {
        const PropertyFn fn = lookup(name);
        PropertyResult res{name};
        for (int i = 0; i < cfg.cases; ++i) {
            run_case(name, fn, case_seed(cfg.seed, name, i), cfg, res, report.counterexamples);
        }
        report.properties.push_back(res);
    }
    std::sort(report.counterexamples.begin(), report.counterexamples.end(),
              [](const Counterexample &l, const Counterexample &r) {
                  return std::tie(l.property, l.seed) < std::tie(r.property, r.seed);
              });
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

Report replay_case(const std::string &property, std::uint64_t seed, const SuiteConfig &cfg)
{
    const auto start = std::chrono::steady_clock::now();
    Report report;
    report.title = "replay";
    PropertyResult res{property};
    const PropertyFn fn = lookup(property);
    Outcome o;
    Json drawn = Json::object();
    try {
        o = fn(seed, cfg, drawn);
    } catch (const Error &e) {
        o.status = retryable(e) ? Status::Skip : Status::Fail;
        o.detail = e.what();
        o.inputs = drawn;
        if (retryable(e)) {
            ++res.retries;
        }
    }
    if (o.status == Status::Pass) {
        ++res.passed;
    } else if (o.status == Status::Skip) {
        ++res.skipped;
    } else {
        ++res.failed;
        report.counterexamples.push_back({property, seed, o.detail, o.inputs});
    }
    report.properties.push_back(res);
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace fresco

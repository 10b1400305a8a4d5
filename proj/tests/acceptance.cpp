// One line per acceptance criterion; exit status 1 when any line fails.
#include <fresco/cli_harness.hpp>
#include <fresco/errors.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace fresco;

namespace
{

// Pinned limits, seconds.
constexpr double kWarningLimit = 1.0;
constexpr double kRegistryLimit = 30.0;
constexpr double kCor201Limit = 300.0;

constexpr std::uint64_t kSeed = 20240601;
const std::vector<Generator> AB{Generator::A, Generator::B};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void line(int n, bool ok, const std::string &what, const std::string &detail)
{
    std::printf("criterion %d: %s  %s  [%s]\n", n, ok ? "PASS" : "FAIL", what.c_str(), detail.c_str());
    std::fflush(stdout);
    failures += ok ? 0 : 1;
}

RationalPolynomial poly(const std::vector<RootMultiplicity> &roots)
{
    return RationalPolynomial::from_roots(roots);
}

std::string seconds(double s)
{
    std::ostringstream out;
    out.precision(3);
    out << std::fixed << s << " s";
    return out.str();
}

// Suite run restricted to the named properties; every case must pass and
// none may be skipped.
struct SuiteLine {
    bool ok = true;
    std::string detail;
    double wall = 0;
};

SuiteLine suite(const std::vector<std::string> &props, int cases, int min_pass)
{
    SuiteConfig cfg;
    cfg.seed = kSeed;
    cfg.cases = cases;
    cfg.properties = props;
    const Report r = run_suite(cfg);
    SuiteLine out;
    out.wall = r.wall_seconds;
    std::ostringstream d;
    for (const auto &p : r.properties) {
        d << p.name << " " << p.passed << "/" << cases;
        if (p.retries > 0) {
            d << " (" << p.retries << " retries)";
        }
        if (p.skipped > 0) {
            d << " (" << p.skipped << " skipped)";
        }
        d << "; ";
        out.ok = out.ok && p.failed == 0 && p.passed >= min_pass;
    }
    for (const auto &c : r.counterexamples) {
        d << "counterexample " << c.property << " seed " << c.seed << ": " << c.detail << "; ";
    }
    d << seconds(r.wall_seconds);
    out.detail = d.str();
    return out;
}

struct WarningResult {
    std::vector<RationalPolynomial> polys;
    bool ok = false;
};

// phi_2 = s^{alpha+m-1}(Log s)^2/2 + s^{alpha-1}, alpha = 1/2, m = 1.
WarningResult warning_example(int degree)
{
    const ExponentClass half{Rational(1, 2)};
    const XiSpace s({half}, 2, 1);
    const XiElement phi = XiElement::monomial(s, degree, LogMonomial{half, 1, 2, 0})
                          + XiElement::monomial(s, degree, LogMonomial{half, 0, 0, 0});
    const SubModule e = generate({phi}, AB);
    WarningResult out;
    const RationalPolynomial ch = bernstein(e).characteristic;
    const int d = nilpotent_order(e);
    out.polys.push_back(ch);
    bool ok = ch == poly({{Rational(-3, 2), 2}, {Rational(-1, 2), 1}}) && d == 3;
    if (d == 3) {
        const RationalPolynomial b1 = higher_bernstein(e, 1);
        const RationalPolynomial b2 = higher_bernstein(e, 2);
        const RationalPolynomial b3 = higher_bernstein(e, 3);
        out.polys.insert(out.polys.end(), {b1, b2, b3});
        ok = ok && b1 == poly({{Rational(-1, 2), 1}}) && b2 == poly({{Rational(-3, 2), 1}}) && b3 == b2;
        // S_1(E) ≅ E_{5/2}: rank one with Bernstein polynomial x + 5/2
        const SubModule s1 = filtration_level(e, 1);
        const RationalPolynomial bs1 = bernstein(s1).characteristic;
        out.polys.push_back(bs1);
        ok = ok && b_rank(s1) == 1 && bs1 == poly({{Rational(-5, 2), 1}});
    }
    out.ok = ok;
    return out;
}

// Bernstein data that must not move when the certification degree grows.
std::vector<RationalPolynomial> fingerprint(const SubModule &m, bool fresco)
{
    const BernsteinPair bp = bernstein(m);
    std::vector<RationalPolynomial> out{bp.minimal, bp.characteristic};
    for (int j = 1; j <= nilpotent_order(m); ++j) {
        out.push_back(higher_bernstein(m, j));
    }
    if (fresco) {
        out.push_back(jordan_holder_product(jordan_holder(m)));
    }
    return out;
}

} // namespace

int main()
{
    // 1
    {
        const auto t0 = Clock::now();
        WarningResult w;
        std::string err;
        try {
            w = warning_example(40);
        } catch (const Error &e) {
            err = e.what();
        }
        const double t = since(t0);
        line(1, w.ok && t < kWarningLimit, "warning example: B = (x+3/2)^2(x+1/2), B^1, B^2 = B^3, d = 3, S_1 ~ E_{5/2}",
             (err.empty() ? (w.polys.empty() ? "" : "B = " + w.polys.front().to_string() + ", ") : err + ", ")
                 + seconds(t) + " (limit " + seconds(kWarningLimit) + ", D = 40)");
    }
    // 2
    {
        const Report r = run_registry(40);
        std::string detail;
        for (const auto &c : r.counterexamples) {
            detail += c.property + ": " + c.detail + "; ";
        }
        line(2, r.ok() && r.wall_seconds < kRegistryLimit, "example registry items (a)-(e), exact at D = 40",
             detail + std::to_string(r.properties.size()) + " items, " + seconds(r.wall_seconds) + " (limit "
                 + seconds(kRegistryLimit) + ")");
    }
    // 3
    {
        const SuiteLine s = suite({"cor_20_1"}, 200, 200);
        line(3, s.ok && s.wall < kCor201Limit, "prod_j B^j_F = B_F on 200 random frescos",
             s.detail + " (limit " + seconds(kCor201Limit) + ")");
    }
    // 4
    {
        const SuiteLine s = suite({"higher_divides", "roots_in_levels"}, 200, 200);
        line(4, s.ok, "B^j | B_E, roots of B_E in some B^j, multiplicity p in >= p levels; 200 modules", s.detail);
    }
    // 5
    {
        const SuiteLine s = suite({"root_propagation"}, 200, 200);
        line(5, s.ok, "root propagation on 200 random modules with d >= 2", s.detail);
    }
    // 6
    {
        const SuiteLine s = suite({"prop_16_12", "cor_18_12_0", "cor_principal", "thm_22_1_2", "shift_rule"}, 100, 100);
        line(6, s.ok, "fresco structure on 100 random frescos of rank <= 6", s.detail);
    }
    // 7
    {
        const SuiteLine s = suite({"division_round_trip", "commutation"}, 500, 500);
        const SuiteLine w = suite({"word_bernstein"}, 200, 200);
        bool exercise = true;
        for (int q = 1; q <= 8; ++q) {
            const ABOperator a = ABOperator::a(q + 2);
            const ABOperator b = ABOperator::b(q + 2);
            exercise = exercise && power(a + b, q) == compose(power(a, q - 1), a + b * Rational(q));
        }
        line(7, s.ok && w.ok && exercise, "operator algebra: 500 divisions, commutation, (a+b)^q for q <= 8, 200 words",
             s.detail + "; " + w.detail + "; (a+b)^q " + (exercise ? "8/8" : "FAILED"));
    }
    // 8
    {
        const auto t0 = Clock::now();
        std::ostringstream d;
        bool ok = true;
        try {
            const bool warn = warning_example(40).polys == warning_example(44).polys;
            const bool reg = run_registry(44).ok();
            d << "warning example " << (warn ? "stable" : "CHANGED") << "; registry at D = 44 "
              << (reg ? "pass" : "FAIL") << "; ";
            ok = warn && reg;
        } catch (const Error &e) {
            ok = false;
            d << e.what() << "; ";
        }
        SuiteConfig cfg;
        cfg.seed = kSeed;
        SuiteConfig wide = cfg;
        wide.cert_degree += 4;
        struct Source {
            std::string property;
            bool fresco;
            int min_order;
            int cases;
        };
        const std::vector<Source> sources{{"cor_20_1", true, 1, 200},       {"higher_divides", false, 1, 200},
                                          {"root_propagation", false, 2, 200}, {"shift_rule", true, 1, 100},
                                          {"prop_16_12", true, 1, 100}};
        for (const auto &src : sources) {
            int same = 0;
            int compared = 0;
            for (int i = 0; i < src.cases; ++i) {
                const std::uint64_t seed = case_seed(cfg.seed, src.property, i);
                try {
                    if (src.fresco) {
                        const RandomFresco f = random_fresco(seed, cfg);
                        const RandomFresco g = random_fresco(seed, wide);
                        if (!(f.generator == g.generator)) {
                            continue;
                        }
                        ++compared;
                        same += fingerprint(f.module, true) == fingerprint(g.module, true) ? 1 : 0;
                    } else {
                        std::vector<XiElement> g1;
                        std::vector<XiElement> g2;
                        const SubModule m1 = random_module(seed, cfg, src.min_order, &g1);
                        const SubModule m2 = random_module(seed, wide, src.min_order, &g2);
                        if (g1.size() != g2.size() || !std::equal(g1.begin(), g1.end(), g2.begin())) {
                            continue;
                        }
                        ++compared;
                        same += fingerprint(m1, false) == fingerprint(m2, false) ? 1 : 0;
                    }
                } catch (const Error &e) {
                    if (e.kind() != ErrorKind::RankUnstable && e.kind() != ErrorKind::GuardExhausted) {
                        ok = false;
                        d << src.property << " case " << i << ": " << e.what() << "; ";
                    }
                }
            }
            ok = ok && same == compared && compared >= src.cases * 9 / 10;
            d << src.property << " " << same << "/" << compared << "; ";
        }
        // operator outputs at a larger b-truncation
        int words = 0;
        std::mt19937_64 rng(kSeed);
        for (int i = 0; i < 200; ++i) {
            const int k = 1 + static_cast<int>(rng() % 5);
            ABOperator p = ABOperator::identity(2 * k + 2);
            ABOperator q = ABOperator::identity(2 * k + 6);
            for (int j = 0; j < k; ++j) {
                const Rational l(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
                p = compose(p, ABOperator::linear(l, 2 * k + 2));
                q = compose(q, ABOperator::linear(l, 2 * k + 6));
            }
            words += bernstein_homogeneous(p) == bernstein_homogeneous(q) ? 1 : 0;
        }
        ok = ok && words == 200;
        d << "words " << words << "/200; " << seconds(since(t0));
        line(8, ok, "polynomial outputs of criteria 1-7 unchanged at cert_degree + 4", d.str());
    }
    // 9
    {
        const SuiteLine s = suite({"pole_orders", "xi_ladder"}, 100, 100);
        line(9, s.ok, "pole ledger: max Mellin order = d(F^[alpha]), predicted pole a root of B^d, xi_s roots of B^{s+j}",
             s.detail);
    }
    return failures == 0 ? 0 : 1;
}

#include <fresco/cli_harness.hpp>
#include <fresco/errors.hpp>

#include <chrono>
#include <sstream>

namespace fresco
{

namespace
{

const ExponentClass one{Rational(1)};

ABOperator lin(const Rational &lambda, int degree)
{
    return ABOperator::linear(lambda, degree);
}

ABOperator word(const std::vector<Rational> &lambdas, int degree)
{
    ABOperator p = ABOperator::identity(degree);
    for (const auto &l : lambdas) {
        p = compose(p, lin(l, degree));
    }
    return p;
}

// (-b)^p B(-b^{-1}a) rewritten as a product of linear factors: with
// u = b^{-1}a one has b u = (u - 1) b, so the root rho_i contributes
// a - (p - i - rho_i) b.
ABOperator from_bernstein(const RationalPolynomial &bp, int degree)
{
    std::vector<Rational> roots;
    for (const auto &rm : bp.rational_roots()) {
        roots.insert(roots.end(), static_cast<std::size_t>(rm.mult), rm.root);
    }
    if (static_cast<int>(roots.size()) != bp.degree()) {
        throw Error(ErrorKind::NoRoot, "Bernstein polynomial does not split over Q");
    }
    const int p = bp.degree();
    std::vector<Rational> lambdas;
    for (int i = 1; i <= p; ++i) {
        lambdas.push_back(Rational(p - i) - roots[static_cast<std::size_t>(i - 1)]);
    }
    return word(lambdas, degree);
}

RationalPolynomial poly(const std::vector<RootMultiplicity> &roots)
{
    return RationalPolynomial::from_roots(roots);
}

// s^m (Log s)^j in the basis s^m (Log s)^j / j!
LogMonomial log_mono(int m, int j)
{
    return LogMonomial{one, m, j, 0};
}

Rational factorial(int j)
{
    Rational f = 1;
    for (int i = 2; i <= j; ++i) {
        f *= i;
    }
    return f;
}

XiElement s_log(const XiSpace &s, int degree, int m, int j, const Rational &c = 1)
{
    return XiElement::monomial(s, degree, log_mono(m, j), c * factorial(j));
}

// Coefficient of s^m (Log s)^j.
Rational coeff_of(const XiElement &x, int m, int j)
{
    return x.coeff(log_mono(m, j)) / factorial(j);
}

class Recorder
{
public:
    explicit Recorder(Report &r) : report_(r) {}

    void item(const std::string &name, const std::string &expected, const std::string &actual)
    {
        PropertyResult res{name};
        if (expected == actual) {
            res.passed = 1;
        } else {
            res.failed = 1;
            report_.counterexamples.push_back(
                {name, 0, "expected " + expected + ", got " + actual, Json::object()});
        }
        report_.properties.push_back(res);
    }

    // Runs body, turning a library error into a mismatch.
    template <class F>
    void guarded(const std::string &name, const std::string &expected, F body)
    {
        std::string actual;
        try {
            actual = body();
        } catch (const Error &e) {
            actual = std::string("error ") + e.what();
        }
        item(name, expected, actual);
    }

private:
    Report &report_;
};

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

} // namespace

Report run_registry(int deg)
{
    const auto start = std::chrono::steady_clock::now();
    Report report;
    report.title = "example registry";
    Recorder rec(report);

    const XiSpace theme_space({one}, 1, 1);
    const ABOperator p3 = word({3, 2, 1}, deg);
    const ABOperator p4 = compose(word({Rational(13, 4), Rational(5, 2), Rational(7, 4)}, deg), ABOperator::a(deg));
    const ABOperator r = word({2, 1}, deg);
    const int nu = 3;

    rec.guarded("bernstein_P3", poly({{-1, 3}}).to_string(),
                [&] { return bernstein_homogeneous(p3).to_string(); });
    rec.guarded("footnote_identity_P3", "yes",
                [&] { return yes_no(from_bernstein(bernstein_homogeneous(p3), deg) == p3); });
    // hypothesis on Q = P4: B_Q is not a multiple of x+1 or of x+2
    rec.guarded("bernstein_P4_avoids_-1_-2", "x*(x+1/4)*(x+1/2)*(x+3/4) yes", [&] {
        const auto bq = bernstein_homogeneous(p4);
        const bool avoids = bq(Rational(-1)) != 0 && bq(Rational(-2)) != 0;
        return bq.to_string() + " " + yes_no(avoids && from_bernstein(bq, deg) == p4);
    });

    rec.guarded("b_log", "yes", [&] {
        return yes_no(act(Generator::B, s_log(theme_space, deg, 0, 1)) == s_log(theme_space, deg, 1, 1).truncated(deg - 1));
    });
    rec.guarded("b_log_squared", "yes", [&] {
        const XiElement want = s_log(theme_space, deg, 1, 2) - s_log(theme_space, deg, 1, 1, 2);
        return yes_no(act(Generator::B, s_log(theme_space, deg, 0, 2)) == want.truncated(deg - 1));
    });

    // P = (a - nu b)(a - 2b)(a - b) on s (Log s)^2: the s^4 (Log s)^2 term
    rec.guarded("P_on_s_log_squared", format_rational(Rational(Rational(4 - nu) / 24)), [&] {
        const XiElement img = apply(word({nu, 2, 1}, deg), s_log(theme_space, deg, 1, 2));
        return format_rational(coeff_of(img, 4, 2));
    });

    rec.guarded("bernstein_R", poly({{-1, 2}}).to_string(), [&] { return bernstein_homogeneous(r).to_string(); });

    // e generates T = B[a]/B[a](a-2b)(a-b) and is killed by P3 + 4^4 P4
    XiElement e;
    rec.guarded("kernel_uvw_nonzero", "yes", [&] {
        const auto ker = kernel_realize(p3 + p4 * Rational(256), theme_space, deg);
        e = ker.front();
        const Rational u = coeff_of(e, 0, 2);
        const Rational v = coeff_of(e, 1, 2);
        const Rational w2 = coeff_of(e, 2, 2);
        const Rational w3 = coeff_of(e, 3, 2);
        return yes_no(u != 0 && v != 0 && w2 != 0 && w3 != 0);
    });
    SubModule theme;
    rec.guarded("theme_T", "rank 2, B " + poly({{-1, 2}}).to_string() + ", B^2 " + poly({{-1, 1}}).to_string(), [&] {
        theme = generate({e}, {Generator::A, Generator::B});
        return "rank " + std::to_string(b_rank(theme)) + ", B " + bernstein(theme).characteristic.to_string()
               + ", B^2 " + higher_bernstein(theme, 2).to_string();
    });

    // Lemma: B^2 of B[a] R e has the unique root -(k + j), j the smallest of
    // 1, 2, 3 with -j not a root of B_R.
    const int k = r.a_degree();
    const RationalPolynomial br = bernstein_homogeneous(r);
    int j = 0;
    for (int c = 1; c <= 3 && j == 0; ++c) {
        if (br(Rational(-c)) != 0) {
            j = c;
        }
    }
    rec.guarded("sub_theme_R_e", "rank 2, B^2 root " + format_rational(Rational(-(k + j))), [&] {
        const SubModule sub = generate({apply(r, e)}, {Generator::A, Generator::B});
        const auto roots = higher_bernstein(sub, 2).rational_roots();
        std::string root = roots.size() == 1 && roots.front().mult == 1 ? format_rational(roots.front().root)
                                                                        : higher_bernstein(sub, 2).to_string();
        return "rank " + std::to_string(b_rank(sub)) + ", B^2 root " + root;
    });

    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

Report reproduce_s5(int degree)
{
    Report report = run_registry(degree);
    if (!report.ok()) {
        std::ostringstream diff;
        for (const auto &c : report.counterexamples) {
            diff << "\n  " << c.property << ": " << c.detail;
        }
        throw Error(ErrorKind::RegistryMismatch, "registry items differ:" + diff.str());
    }
    return report;
}

} // namespace fresco

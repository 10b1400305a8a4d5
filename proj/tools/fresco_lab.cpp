// fresco-lab: batch front end to the fresco library.
#include <fresco/cli_harness.hpp>
#include <fresco/errors.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

using namespace fresco;

namespace
{

struct Globals {
    std::string report = "text";
    std::optional<int> trunc;
    int guard = default_guard;
};

bool json_out(const Globals &g)
{
    return g.report == "json";
}

// --trunc asserts the input elements are exact up to degree D.
XiElement with_cert(const XiElement &x, const Globals &g)
{
    if (!g.trunc) {
        return x;
    }
    XiElement out(x.space(), *g.trunc);
    for (const auto &[mono, c] : x.terms()) {
        out.add(mono, c);
    }
    return out;
}

SubModule load_module(const std::string &path, const Globals &g)
{
    ModuleInput in = module_from_json(read_json_file(path));
    for (auto &x : in.generators) {
        x = with_cert(x, g);
    }
    return generate(in.generators, in.closure, g.guard);
}

void emit(const Globals &g, const Json &j, const std::string &text)
{
    if (json_out(g)) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << text;
    }
}

std::string poly_line(const std::string &label, const RationalPolynomial &p)
{
    return label + ": " + p.to_string() + "\n";
}

int cmd_bernstein(const Globals &g, const std::string &path)
{
    const SubModule m = load_module(path, g);
    const BernsteinPair bp = bernstein(m);
    const int r = b_rank(m);
    emit(g, {{"rank", r}, {"minimal", to_json(bp.minimal)}, {"characteristic", to_json(bp.characteristic)}},
         "rank: " + std::to_string(r) + "\n" + poly_line("minimal", bp.minimal)
             + poly_line("characteristic", bp.characteristic));
    return 0;
}

int cmd_higher(const Globals &g, const std::string &path, int level)
{
    const RationalPolynomial p = higher_bernstein(load_module(path, g), level);
    emit(g, {{"level", level}, {"polynomial", to_json(p)}}, poly_line("B^" + std::to_string(level), p));
    return 0;
}

int cmd_filtration(const Globals &g, const std::string &path)
{
    const SubModule m = load_module(path, g);
    const auto chain = semisimple_filtration(m);
    Json levels = Json::array();
    std::ostringstream text;
    const int d = static_cast<int>(chain.size()) - 1;
    text << "nilpotent order: " << d << '\n';
    for (int j = 1; j <= d; ++j) {
        const int r = b_rank(chain[static_cast<std::size_t>(j)]);
        const RationalPolynomial bj = higher_bernstein(m, j);
        levels.push_back({{"j", j}, {"rank", r}, {"higher_bernstein", to_json(bj)}});
        text << "S_" << j << ": rank " << r << ", B^" << j << " = " << bj.to_string() << '\n';
    }
    emit(g, {{"nilpotent_order", d}, {"levels", levels}}, text.str());
    return 0;
}

int cmd_saturate(const Globals &g, const std::string &path)
{
    const SubModule m = load_module(path, g);
    const SubModule sat = saturate(m);
    Json basis = Json::array();
    std::ostringstream text;
    text << "rank: " << b_rank(sat) << "\nsimple pole: " << (is_simple_pole(m) ? "yes" : "no") << '\n';
    for (const auto &x : sat.basis_elements()) {
        basis.push_back(to_json(x));
        text << x.to_string() << '\n';
    }
    emit(g, {{"rank", b_rank(sat)}, {"simple_pole", is_simple_pole(m)}, {"basis", basis}}, text.str());
    return 0;
}

int cmd_divide(const Globals &g, const std::string &path, const std::string &lambda)
{
    const ABOperator p = operator_from_json(read_json_file(path));
    const LinearDivision div = divide_linear(p, parse_rational(lambda));
    const ABOperator rem = ABOperator::series(div.remainder);
    emit(g, {{"quotient", to_json(div.quotient)}, {"remainder", to_json(rem)}},
         "quotient: " + div.quotient.to_string() + "\nremainder: " + rem.to_string() + "\n");
    return 0;
}

int cmd_solve_kernel(const Globals &g, const std::string &path, const std::vector<std::string> &alphas,
                     int log_bound, int value_dim)
{
    const ABOperator p = operator_from_json(read_json_file(path));
    std::vector<ExponentClass> classes;
    for (const auto &a : alphas) {
        classes.emplace_back(parse_rational(a));
    }
    const XiSpace space(classes, log_bound, value_dim);
    const auto ker = kernel_realize(p, space, g.trunc.value_or(40));
    Json out = Json::array();
    std::ostringstream text;
    for (const auto &x : ker) {
        out.push_back(to_json(x));
        text << x.to_string() << '\n';
    }
    emit(g, {{"kernel", out}}, text.str());
    return 0;
}

int cmd_jordan_holder(const Globals &g, const std::string &path)
{
    const JordanHolderData jh = jordan_holder(load_module(path, g));
    Json j = to_json(jh);
    j["product"] = to_json(jordan_holder_product(jh));
    std::ostringstream text;
    for (std::size_t k = 0; k < jh.quotient_exponents.size(); ++k) {
        text << "F_" << k + 1 << "/F_" << k << " = E_" << format_rational(jh.quotient_exponents[k]) << ", co-rank "
             << jh.co_ranks[k] << '\n';
    }
    text << poly_line("product", jordan_holder_product(jh));
    emit(g, j, text.str());
    return 0;
}

int cmd_predict(const Globals &g, const std::string &path, const std::string &alpha)
{
    const SubModule f = load_module(path, g);
    const ExponentClass cls(parse_rational(alpha));
    const PolePrediction pred = predict_pole(f, cls);
    PoleProfile prof;
    prof.entries.push_back({pred.at, pred.order, PoleStatus::Guaranteed});
    const auto ladder = xi_ladder(f, cls);
    prof.entries.push_back({ladder.front().xi, pred.order, PoleStatus::UpperBound});
    Json j = to_json(prof);
    Json steps = Json::array();
    std::ostringstream text;
    text << "pole of order " << pred.order << " at " << format_rational(pred.at) << " (guaranteed)\n"
         << "order <= " << pred.order << " on -alpha - N, none above " << format_rational(ladder.front().xi)
         << " (upper bound)\n";
    for (const auto &s : ladder) {
        steps.push_back({{"s", s.s}, {"xi", format_rational(s.xi)}, {"levels", s.levels}});
        text << "xi_" << s.s << " = " << format_rational(s.xi) << ", root of B^h for h in {";
        for (std::size_t i = 0; i < s.levels.size(); ++i) {
            text << (i ? ", " : "") << s.levels[i];
        }
        text << "}\n";
    }
    j["ladder"] = steps;
    emit(g, j, text.str());
    return 0;
}

int emit_report(const Globals &g, const Report &r)
{
    emit(g, r.to_json(), r.to_text());
    return r.ok() ? 0 : 1;
}

std::vector<std::string> split_list(const std::string &s)
{
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact computations on geometric (a,b)-modules and frescos"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--report", g.report, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--trunc", g.trunc, "Truncation degree D (overrides the input cert degree)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--guard", g.guard, "Guard degrees below D")->check(CLI::NonNegativeNumber);

    std::string path;
    int level = 1;
    std::string lambda;
    std::string alpha;
    std::vector<std::string> alphas;
    int log_bound = 0;
    int value_dim = 1;
    SuiteConfig cfg;
    std::string props;
    std::optional<std::uint64_t> replay;

    auto *bern = app.add_subcommand("bernstein", "Bernstein polynomial of a module");
    bern->add_option("module", path, "Module JSON")->required();
    auto *higher = app.add_subcommand("higher-bernstein", "j-th Bernstein polynomial");
    higher->add_option("module", path, "Module JSON")->required();
    higher->add_option("--level", level, "Level j")->required()->check(CLI::PositiveNumber);
    auto *filt = app.add_subcommand("filtration", "Semi-simple filtration ranks and higher Bernstein polynomials");
    filt->add_option("module", path, "Module JSON")->required();
    auto *sat = app.add_subcommand("saturate", "Saturation by b^-1 a");
    sat->add_option("module", path, "Module JSON")->required();
    auto *div = app.add_subcommand("divide", "Divide an operator by a - lambda b");
    div->add_option("operator", path, "Operator JSON")->required();
    div->add_option("--lambda", lambda, "lambda as p/q")->required();
    auto *ker = app.add_subcommand("solve-kernel", "Kernel of an operator in a log-asymptotic space");
    ker->add_option("operator", path, "Operator JSON")->required();
    ker->add_option("--alpha", alphas, "Exponent classes")->required()->delimiter(',');
    ker->add_option("--log-bound", log_bound, "Log bound N")->check(CLI::NonNegativeNumber);
    ker->add_option("--value-dim", value_dim, "Dimension of V")->check(CLI::PositiveNumber);
    auto *jh = app.add_subcommand("jordan-holder", "Jordan-Hoelder data of a fresco");
    jh->add_option("module", path, "Module JSON")->required();
    auto *pred = app.add_subcommand("predict-poles", "Pole predictions for one exponent class");
    pred->add_option("module", path, "Module JSON")->required();
    pred->add_option("--alpha", alpha, "Exponent class p/q")->required();
    auto *check = app.add_subcommand("check", "Randomized property suite");
    check->add_option("--seed", cfg.seed, "Suite seed");
    check->add_option("--cases", cfg.cases, "Cases per property")->check(CLI::NonNegativeNumber);
    check->add_option("--props", props, "Comma-separated property names (default: all)");
    check->add_option("--replay", replay, "Replay one case seed (needs a single --props name)");
    check->add_option("--rank-max", cfg.rank_max, "Largest rank of random modules")->check(CLI::PositiveNumber);
    check->add_option("--m-max", cfg.m_max, "Largest shift in random elements")->check(CLI::NonNegativeNumber);
    auto *s5 = app.add_subcommand("reproduce-s5", "Exact checks of the worked example on the (x+1)^2 theme");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (bern->parsed()) {
            return cmd_bernstein(g, path);
        }
        if (higher->parsed()) {
            return cmd_higher(g, path, level);
        }
        if (filt->parsed()) {
            return cmd_filtration(g, path);
        }
        if (sat->parsed()) {
            return cmd_saturate(g, path);
        }
        if (div->parsed()) {
            return cmd_divide(g, path, lambda);
        }
        if (ker->parsed()) {
            return cmd_solve_kernel(g, path, alphas, log_bound, value_dim);
        }
        if (jh->parsed()) {
            return cmd_jordan_holder(g, path);
        }
        if (pred->parsed()) {
            return cmd_predict(g, path, alpha);
        }
        if (check->parsed()) {
            cfg.properties = split_list(props);
            cfg.guard = g.guard;
            if (g.trunc) {
                cfg.cert_degree = *g.trunc;
            }
            if (replay) {
                if (cfg.properties.size() != 1) {
                    std::cerr << "--replay needs exactly one property in --props\n";
                    return 2;
                }
                return emit_report(g, replay_case(cfg.properties.front(), *replay, cfg));
            }
            return emit_report(g, run_suite(cfg));
        }
        if (s5->parsed()) {
            const Report r = run_registry(g.trunc.value_or(40));
            for (const auto &c : r.counterexamples) {
                std::cerr << error_kind_name(ErrorKind::RegistryMismatch) << ": " << c.property << ": " << c.detail
                          << '\n';
            }
            return emit_report(g, r);
        }
    } catch (const Error &e) {
        std::cerr << "fresco-lab: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

#include <fresco/errors.hpp>
#include <fresco/io.hpp>

#include <fstream>

namespace fresco
{

namespace
{

Rational rational_field(const Json &j)
{
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    throw Error(ErrorKind::InvalidInput, "expected a rational string, got " + j.dump());
}

template <class T>
T field(const Json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw Error(ErrorKind::InvalidInput, std::string("missing field \"") + key + "\"");
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::InvalidInput, std::string("field \"") + key + "\": " + e.what());
    }
}

std::vector<Rational> rational_list(const Json &j)
{
    if (!j.is_array()) {
        throw Error(ErrorKind::InvalidInput, "expected an array of rationals");
    }
    std::vector<Rational> out;
    for (const auto &c : j) {
        out.push_back(rational_field(c));
    }
    return out;
}

Json rational_list_json(const std::vector<Rational> &v)
{
    Json out = Json::array();
    for (const auto &c : v) {
        out.push_back(format_rational(c));
    }
    return out;
}

Generator generator_from_name(const std::string &s)
{
    for (Generator g : {Generator::A, Generator::B, Generator::B_INV_A}) {
        if (s == generator_name(g)) {
            return g;
        }
    }
    throw Error(ErrorKind::InvalidInput, "unknown generator " + s);
}

} // namespace

Json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::InvalidInput, "cannot open " + path);
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
    }
}

Json to_json(const XiSpace &space)
{
    Json classes = Json::array();
    for (const auto &c : space.alpha_set) {
        classes.push_back(format_rational(c.alpha()));
    }
    return {{"alpha_set", classes}, {"log_bound", space.log_bound}, {"value_dim", space.value_dim}};
}

XiSpace space_from_json(const Json &j)
{
    std::vector<ExponentClass> classes;
    for (const auto &a : rational_list(field<Json>(j, "alpha_set"))) {
        classes.emplace_back(a);
    }
    const int dim = j.contains("value_dim") ? field<int>(j, "value_dim") : 1;
    return XiSpace(std::move(classes), field<int>(j, "log_bound"), dim);
}

Json to_json(const XiElement &x)
{
    Json out = to_json(x.space());
    out["cert_degree"] = x.cert_degree();
    Json terms = Json::array();
    for (const auto &[mono, c] : x.terms()) {
        terms.push_back({{"alpha", format_rational(mono.cls.alpha())},
                         {"m", mono.m},
                         {"j", mono.j},
                         {"k", mono.k},
                         {"coeff", format_rational(c)}});
    }
    out["terms"] = terms;
    return out;
}

XiElement element_from_json(const Json &j)
{
    const XiSpace space = space_from_json(j);
    XiElement x(space, field<int>(j, "cert_degree"));
    for (const auto &t : field<Json>(j, "terms")) {
        const LogMonomial mono{ExponentClass(rational_field(field<Json>(t, "alpha"))), field<int>(t, "m"),
                               field<int>(t, "j"), t.contains("k") ? field<int>(t, "k") : 0};
        if (!space.admits(mono)) {
            throw Error(ErrorKind::InvalidInput, "term " + t.dump() + " outside the ambient space");
        }
        x.add(mono, rational_field(field<Json>(t, "coeff")));
    }
    return x;
}

ModuleInput module_from_json(const Json &j)
{
    ModuleInput out;
    if (!j.is_object() || !j.contains("generators")) {
        out.generators.push_back(element_from_json(j));
        return out;
    }
    for (const auto &g : field<Json>(j, "generators")) {
        out.generators.push_back(element_from_json(g));
    }
    if (out.generators.empty()) {
        throw Error(ErrorKind::InvalidInput, "module without generators");
    }
    if (j.contains("closure")) {
        out.closure.clear();
        for (const auto &g : field<std::vector<std::string>>(j, "closure")) {
            out.closure.push_back(generator_from_name(g));
        }
    }
    return out;
}

Json to_json(const ModuleInput &m)
{
    Json gens = Json::array();
    for (const auto &g : m.generators) {
        gens.push_back(to_json(g));
    }
    Json closure = Json::array();
    for (Generator g : m.closure) {
        closure.push_back(generator_name(g));
    }
    return {{"generators", gens}, {"closure", closure}};
}

Json to_json(const ABOperator &p)
{
    Json rows = Json::object();
    for (const auto &[q, s] : p.rows()) {
        rows[std::to_string(q)] = rational_list_json(s.coeffs());
    }
    return {{"trunc_order", p.trunc_order()}, {"rows", rows}};
}

ABOperator operator_from_json(const Json &j)
{
    const int order = field<int>(j, "trunc_order");
    if (order < 0) {
        throw Error(ErrorKind::InvalidInput, "negative truncation order");
    }
    ABOperator p(order);
    const Json rows = field<Json>(j, "rows");
    for (const auto &[key, coeffs] : rows.items()) {
        int q = -1;
        try {
            q = std::stoi(key);
        } catch (const std::exception &) {
        }
        if (q < 0 || std::to_string(q) != key) {
            throw Error(ErrorKind::InvalidInput, "bad a-power \"" + key + "\"");
        }
        p.set_row(q, BSeries(rational_list(coeffs), order));
    }
    return p;
}

Json to_json(const StructureWord &w)
{
    Json out = Json::array();
    for (const auto &f : w.factors) {
        if (const auto *lf = std::get_if<LinearFactor>(&f)) {
            out.push_back({{"linear", format_rational(lf->lambda)}});
        } else {
            const auto &uf = std::get<UnitFactor>(f);
            out.push_back({{"unit", rational_list_json(uf.series.coeffs())}, {"inverted", uf.inverted}});
        }
    }
    return {{"word", out}};
}

StructureWord word_from_json(const Json &j)
{
    StructureWord w;
    for (const auto &f : field<Json>(j, "word")) {
        if (f.contains("linear")) {
            w.factors.emplace_back(LinearFactor{rational_field(f.at("linear"))});
        } else if (f.contains("unit")) {
            const auto coeffs = rational_list(f.at("unit"));
            if (coeffs.empty()) {
                throw Error(ErrorKind::InvalidInput, "empty unit series");
            }
            const bool inv = f.contains("inverted") && field<bool>(f, "inverted");
            w.factors.emplace_back(UnitFactor{BSeries(coeffs, static_cast<int>(coeffs.size()) - 1), inv});
        } else {
            throw Error(ErrorKind::InvalidInput, "word factor " + f.dump() + " is neither linear nor unit");
        }
    }
    return w;
}

Json to_json(const RationalPolynomial &p)
{
    Json out{{"monic_coeffs", rational_list_json(p.monic().coeffs())}, {"display", p.to_string()}};
    if (const auto f = p.factored()) {
        Json factors = Json::array();
        for (const auto &rm : *f) {
            factors.push_back({{"root", format_rational(rm.root)}, {"mult", rm.mult}});
        }
        out["factors"] = factors;
    }
    return out;
}

Json to_json(const JordanHolderData &jh)
{
    Json co = Json::array();
    for (int r : jh.co_ranks) {
        co.push_back(r);
    }
    return {{"quotient_exponents", rational_list_json(jh.quotient_exponents)}, {"co_ranks", co}};
}

Json to_json(const PoleProfile &p)
{
    Json poles = Json::array();
    for (const auto &e : p.entries) {
        poles.push_back({{"at", format_rational(e.at)}, {"order", e.order}, {"status", pole_status_name(e.status)}});
    }
    return {{"poles", poles}};
}

} // namespace fresco

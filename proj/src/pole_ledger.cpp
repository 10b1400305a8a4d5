#include <fresco/errors.hpp>
#include <fresco/pole_ledger.hpp>

#include <algorithm>
#include <map>

namespace fresco
{

namespace
{

bool in_class_ladder(const Rational &at, const ExponentClass &cls)
{
    const Rational n = -at - cls.alpha();
    return n >= 0 && n.get_den() == 1;
}

int primitive_order(const SubModule &prim)
{
    const int p = nilpotent_order(prim);
    if (p == 0) {
        throw Error(ErrorKind::NoAlphaPart, "module has no component in this exponent class");
    }
    return p;
}

} // namespace

const char *pole_status_name(PoleStatus s)
{
    switch (s) {
        case PoleStatus::Guaranteed:
            return "guaranteed";
        case PoleStatus::UpperBound:
            return "upper bound";
        case PoleStatus::Expansion:
            return "expansion";
    }
    return "?";
}

int PoleProfile::max_order(const ExponentClass &cls) const
{
    int best = 0;
    for (const auto &e : entries) {
        if (in_class_ladder(e.at, cls)) {
            best = std::max(best, e.order);
        }
    }
    return best;
}

PoleProfile mellin_profile(const XiElement &x)
{
    std::map<Rational, int> orders;
    for (const auto &[mono, c] : x.terms()) {
        int &o = orders[-mono.exponent()];
        o = std::max(o, monomial_order(mono));
    }
    PoleProfile out;
    for (auto it = orders.rbegin(); it != orders.rend(); ++it) {
        out.entries.push_back({it->first, it->second, PoleStatus::Expansion});
    }
    return out;
}

PolePrediction predict_pole(const SubModule &f, const ExponentClass &cls)
{
    const SubModule prim = primitive_quotient(f, cls);
    const int p = primitive_order(prim);
    for (const auto &rm : higher_bernstein(prim, p).rational_roots()) { // descending
        if (in_class_ladder(rm.root, cls)) {
            return {p, rm.root};
        }
    }
    throw Error(ErrorKind::NoRoot, "B^p of the primitive part has no root in -alpha - N");
}

std::vector<LadderStep> xi_ladder(const SubModule &f, const ExponentClass &cls)
{
    const int p = primitive_order(primitive_quotient(f, cls));
    const int d = nilpotent_order(f);
    // smallest m reached at each order, over the basis at the threshold
    std::vector<int> lowest(static_cast<std::size_t>(p + 1), -1);
    for (const auto &row : f.rows_at(f.threshold())) {
        for (const auto &[i, c] : row) {
            const LogMonomial mono = f.frame().monomial(i);
            if (!(mono.cls == cls)) {
                continue;
            }
            for (int s = 1; s <= std::min(p, monomial_order(mono)); ++s) {
                int &low = lowest[static_cast<std::size_t>(s)];
                low = low < 0 ? mono.m : std::min(low, mono.m);
            }
        }
    }
    std::vector<RationalPolynomial> levels;
    for (int h = 1; h <= d; ++h) {
        levels.push_back(higher_bernstein(f, h));
    }
    std::vector<LadderStep> out;
    for (int s = 1; s <= p; ++s) {
        LadderStep step{s, -(cls.alpha() + lowest[static_cast<std::size_t>(s)]), {}};
        for (int h = s; h <= d; ++h) {
            if (levels[static_cast<std::size_t>(h - 1)](step.xi) == 0) {
                step.levels.push_back(h);
            }
        }
        out.push_back(std::move(step));
    }
    return out;
}

PoleProfile pole_ledger(const SubModule &f)
{
    PoleProfile out;
    for (const auto &cls : f.space().alpha_set) {
        if (nilpotent_order(primitive_quotient(f, cls)) == 0) {
            continue;
        }
        const PolePrediction pred = predict_pole(f, cls);
        out.entries.push_back({pred.at, pred.order, PoleStatus::Guaranteed});
        out.entries.push_back({xi_ladder(f, cls).front().xi, pred.order, PoleStatus::UpperBound});
    }
    std::stable_sort(out.entries.begin(), out.entries.end(),
                     [](const PoleEntry &l, const PoleEntry &r) { return l.at > r.at; });
    return out;
}

} // namespace fresco

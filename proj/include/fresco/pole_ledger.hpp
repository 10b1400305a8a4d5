#ifndef FRESCO_POLE_LEDGER_HPP
#define FRESCO_POLE_LEDGER_HPP

#include <fresco/module_lab.hpp>

#include <string>
#include <vector>

namespace fresco
{

enum class PoleStatus { Guaranteed, UpperBound, Expansion };

const char *pole_status_name(PoleStatus s);

struct PoleEntry {
    Rational at;
    int order = 0;
    PoleStatus status = PoleStatus::Expansion;
    bool operator==(const PoleEntry &) const = default;
};

/// Pole data sorted by decreasing location; locations are distinct within
/// one status.
struct PoleProfile {
    std::vector<PoleEntry> entries;

    /// Largest order at a location of the form -(alpha + n), or 0.
    int max_order(const ExponentClass &cls) const;
};

/// Term-wise poles of the Mellin transform of an expansion: at -(alpha+m)
/// the order is the largest nilpotent order of a monomial there (j+1, or j
/// for alpha = 1 where the Gamma factor absorbs one order).
PoleProfile mellin_profile(const XiElement &x);

struct PolePrediction {
    int order = 0;
    Rational at;
};

/// p = d(F^[alpha]) and the biggest root of B^p of F^[alpha] in -alpha - N.
PolePrediction predict_pole(const SubModule &f, const ExponentClass &cls);

struct LadderStep {
    int s = 0;
    Rational xi;
    /// Every h >= s with B^h_F(xi) = 0.
    std::vector<int> levels;
};

/// xi_s for s = 1..d(F^[alpha]): the biggest location of class alpha where
/// some element of F has expansion order >= s.
std::vector<LadderStep> xi_ladder(const SubModule &f, const ExponentClass &cls);

/// Per class with a nonzero primitive part: the guaranteed pole (order p at
/// the predicted location) and an upper bound (order <= p everywhere in
/// -alpha - N, nothing above xi_1).
PoleProfile pole_ledger(const SubModule &f);

} // namespace fresco

#endif

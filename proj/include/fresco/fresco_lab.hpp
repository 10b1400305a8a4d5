#ifndef FRESCO_FRESCO_LAB_HPP
#define FRESCO_FRESCO_LAB_HPP

#include <fresco/module_lab.hpp>
#include <fresco/operator_algebra.hpp>

#include <cstdint>
#include <vector>

namespace fresco
{

/// dim M/(aM + bM) == 1.
bool is_fresco(const SubModule &m);

struct JordanHolderData {
    std::vector<SubModule> chain;             // F_1 ⊂ ... ⊂ F_r = F, rank k at step k
    std::vector<Rational> quotient_exponents; // F_k/F_{k-1} ≅ E_{gamma_k}
    std::vector<int> co_ranks;                // rank of F/F_k
};

/// One Jordan–Hölder sequence, built from rank-one normal submodules B·y
/// with (a - gamma b)y ∈ F_{k-1}, y ∉ F_{k-1} + bF.
JordanHolderData jordan_holder(const SubModule &f);

/// prod_k (x + gamma_k - co_rank_k): the characteristic Bernstein polynomial
/// predicted by the exact-sequence rule.
RationalPolynomial jordan_holder_product(const JordanHolderData &jh);

/// Co-rank of S_j(F) in F.
int filtration_co_rank(const SubModule &f, int j);

/// B_{S_j(F)/S_{j-1}(F)} with roots moved up by the co-rank of S_j(F).
RationalPolynomial higher_bernstein_shifted(const SubModule &f, int j);

/// Echelon basis (cert D - order of P) of {e : P e = 0} in the given ambient,
/// sorted so that elements with the largest nilpotent order come first.
std::vector<XiElement> kernel_realize(const ABOperator &p, const XiSpace &space, int degree);

struct JordanChain {
    int m = 0;
    std::vector<XiElement> chain; // w_1 .. w_p
};

/// w_1..w_p in F with a w_j = (alpha+m) b w_j + b w_{j-1}, for the smallest
/// such m. Each w_j lives at the single exponent alpha+m with top log term
/// (Log s)^{j-1}/(j-1)! ⊗ v_1 (one more log for alpha = 1).
JordanChain find_jordan_chain(const SubModule &f, const ExponentClass &cls, int p);

/// z ∈ S_j(E) \ S_{j-1}(E) whose fresco B[a]z has, for some h ≥ j, a root of
/// B^h in -beta - ℕ. Candidates are S_j basis vectors, then seeded random
/// combinations of them.
XiElement find_witness_fresco(const SubModule &e, int j, const Rational &beta, std::uint64_t seed = 1,
                              int budget = 64);

} // namespace fresco

#endif

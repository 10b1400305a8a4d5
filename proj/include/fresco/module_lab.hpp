#ifndef FRESCO_MODULE_LAB_HPP
#define FRESCO_MODULE_LAB_HPP

#include <fresco/matrix.hpp>
#include <fresco/polynomial.hpp>
#include <fresco/sparse.hpp>
#include <fresco/xi_space.hpp>

#include <optional>
#include <vector>

namespace fresco
{

inline constexpr int default_guard = 8;

/// A sub-(a,b)-module of SΞ_A^{(N)} ⊗ V, held as the exact ℚ-span of its
/// closure in the truncation V_D = SΞ ⊗ V mod (terms with m > D). Every
/// invariant is read at the threshold T = D - guard and cross-checked at T - 2.
class SubModule
{
public:
    SubModule() = default;
    SubModule(Frame frame, int guard, std::vector<Generator> closure, Echelon span);

    const Frame &frame() const
    {
        return frame_;
    }
    const XiSpace &space() const
    {
        return frame_.space();
    }
    int degree() const
    {
        return frame_.degree();
    }
    int guard() const
    {
        return guard_;
    }
    int threshold() const
    {
        return frame_.degree() - guard_;
    }
    const std::vector<Generator> &closure() const
    {
        return closure_;
    }
    bool closed_under(Generator g) const;
    const Echelon &span() const
    {
        return span_;
    }

    /// Dimension of the image in V_t.
    std::size_t dim_at(int t) const;
    /// Echelon rows of the image in V_t.
    std::vector<SparseVec> rows_at(int t) const;
    std::vector<SparseVec> rows() const;
    /// Basis of the image in V_T as elements (cert T).
    std::vector<XiElement> basis_elements() const;

    bool is_zero() const
    {
        return span_.dim() == 0;
    }
    bool contains(const XiElement &x) const;
    /// Inclusion of images in V_T.
    bool contains(const SubModule &o) const;
    bool same_as(const SubModule &o) const
    {
        return contains(o) && o.contains(*this);
    }

private:
    Frame frame_;
    int guard_ = default_guard;
    std::vector<Generator> closure_;
    Echelon span_;
};

/// Smallest subspace of V_D containing rows and closed under `closure`.
SubModule close_span(const Frame &frame, int guard, const std::vector<SparseVec> &rows,
                     std::vector<Generator> closure);

/// Generation from elements; D defaults to the smallest generator cert.
/// An empty generator list needs an explicit space and degree.
SubModule generate(const std::vector<XiElement> &gens, std::vector<Generator> closure, int guard = default_guard,
                   std::optional<int> degree = std::nullopt);
SubModule generate(const XiSpace &space, int degree, const std::vector<XiElement> &gens,
                   std::vector<Generator> closure, int guard = default_guard);

/// b·M as a module with the closure of M.
SubModule b_times(const SubModule &m);

/// b^{-n}·M, defined when M ⊆ b^n Ξ; read in V_{D-n} (b^{-1} = (b^{-1}a) a^{-1}).
SubModule b_inverse_power(const SubModule &m, int n);

int b_rank(const SubModule &m);
SubModule saturate(const SubModule &m);
bool is_simple_pole(const SubModule &m);

/// N_E(F) = {x in E : b^n x in F for some n}.
SubModule normalize_in(const SubModule &f, const SubModule &e);
/// F ∩ bE = bF, read at the threshold.
bool is_normal_in(const SubModule &f, const SubModule &e);

/// S_j(M) = M ∩ (span of monomials of nilpotent order <= j).
SubModule filtration_level(const SubModule &m, int j);
int nilpotent_order(const SubModule &m);
/// S_0 ⊆ S_1 ⊆ ... ⊆ S_d = M.
std::vector<SubModule> semisimple_filtration(const SubModule &m);

/// Image of M under the shift (Log s)^j/j! -> (Log s)^{j-1}/(j-1)! applied
/// `times` times. The shift commutes with a and b and its kernel on M is
/// S_1(M), so this realizes M/S_times(M) inside the same ambient space.
SubModule log_shift(const SubModule &m, int times = 1);

struct BernsteinPair {
    RationalPolynomial minimal;
    RationalPolynomial characteristic;
};

/// Matrix of -b^{-1}a on X/(Y + bX) computed in V_t. X must be stable under
/// b^{-1}a, and Y ⊆ X.
Matrix bernstein_matrix(const SubModule &x, const std::vector<SparseVec> &y, int t);

BernsteinPair bernstein(const SubModule &m);
/// B^j_M: minimal polynomial of -b^{-1}a on S_j(M#)/S_{j-1}(M#) mod b.
RationalPolynomial higher_bernstein(const SubModule &m, int j);

SubModule primitive_quotient(const SubModule &m, const ExponentClass &cls);

/// E/F for F normal in E, as a coset space with induced actions at T.
class QuotientModule
{
public:
    QuotientModule(SubModule total, SubModule sub);

    const SubModule &total() const
    {
        return total_;
    }
    const SubModule &sub() const
    {
        return sub_;
    }
    const std::vector<SparseVec> &transversal() const
    {
        return transversal_;
    }
    std::size_t dim() const
    {
        return transversal_.size();
    }
    /// Induced action on the transversal coordinates (columns are images).
    const Matrix &action(Generator g) const;
    /// Coordinates of the class of v (v must lie in the total space at T).
    std::vector<Rational> coordinates(const SparseVec &v) const;

private:
    SubModule total_;
    SubModule sub_;
    Echelon sub_echelon_;
    std::vector<SparseVec> transversal_;
    std::vector<int> pivots_;
    Matrix a_, b_, binv_a_;
};

QuotientModule quotient(const SubModule &e, const SubModule &f);
int b_rank(const QuotientModule &q);
/// Bernstein polynomials of E/F, read on E#/(N_{E#}(F) + bE#).
BernsteinPair bernstein(const QuotientModule &q);

/// Roots of a split polynomial on the grid {-(alpha+m)}; throws NoRoot when
/// the polynomial does not split there.
std::vector<RootMultiplicity> grid_roots(const RationalPolynomial &p, const XiSpace &space, int degree);

} // namespace fresco

#endif

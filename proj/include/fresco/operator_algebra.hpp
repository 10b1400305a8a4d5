#ifndef FRESCO_OPERATOR_ALGEBRA_HPP
#define FRESCO_OPERATOR_ALGEBRA_HPP

#include <fresco/polynomial.hpp>
#include <fresco/rational.hpp>
#include <fresco/xi_space.hpp>

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fresco
{

/// Truncated power series sum_{q <= Q} c_q b^q. The truncation order is
/// explicit: trailing zeros are kept.
class BSeries
{
public:
    explicit BSeries(int trunc_order = 0);
    BSeries(std::vector<Rational> coeffs, int trunc_order);

    static BSeries constant(const Rational &c, int trunc_order);
    static BSeries monomial(int power, const Rational &c, int trunc_order);

    int trunc_order() const
    {
        return static_cast<int>(coeffs_.size()) - 1;
    }
    const std::vector<Rational> &coeffs() const
    {
        return coeffs_;
    }
    const Rational &operator[](int i) const
    {
        return coeffs_[static_cast<std::size_t>(i)];
    }
    Rational &operator[](int i)
    {
        return coeffs_[static_cast<std::size_t>(i)];
    }
    bool is_zero() const;
    bool is_unit() const
    {
        return coeffs_[0] != 0;
    }
    int order() const; // smallest q with c_q != 0, or -1 for zero

    BSeries operator+(const BSeries &o) const;
    BSeries operator-(const BSeries &o) const;
    BSeries operator*(const BSeries &o) const;
    BSeries operator*(const Rational &c) const;
    bool operator==(const BSeries &o) const = default;

    /// b^2 S'(b), the commutator [a, S].
    BSeries commutator_with_a() const;
    /// Truncated reciprocal; throws NonUnitSeries when c_0 = 0.
    BSeries inverse() const;

private:
    std::vector<Rational> coeffs_;
};

/// Element of B[a] in the normal form sum_q S_q(b) a^q (series left of
/// a-powers). All series share one truncation order; products are exact modulo
/// b^{Q+1} because rewriting a S = S a + b^2 S' never lowers b-order.
class ABOperator
{
public:
    explicit ABOperator(int trunc_order = 0);

    static ABOperator identity(int trunc_order);
    static ABOperator a(int trunc_order);
    static ABOperator b(int trunc_order);
    static ABOperator series(const BSeries &s);
    /// a - lambda b
    static ABOperator linear(const Rational &lambda, int trunc_order);

    int trunc_order() const
    {
        return trunc_;
    }
    /// Valid b-order of every row (equal to trunc_order in this normal form).
    int validity_order() const
    {
        return trunc_;
    }
    int a_degree() const; // -1 for the zero operator
    const std::map<int, BSeries> &rows() const
    {
        return rows_;
    }
    BSeries row(int q) const;
    void set_row(int q, const BSeries &s);
    bool is_zero() const
    {
        return rows_.empty();
    }
    /// max over terms c b^n a^q of (n + q), -1 for zero
    int total_degree() const;

    ABOperator operator+(const ABOperator &o) const;
    ABOperator operator-(const ABOperator &o) const;
    ABOperator operator*(const Rational &c) const;
    bool operator==(const ABOperator &o) const = default;

    /// Display with the series written on the right: sum_q a^q T_q(b).
    std::string to_string() const;
    /// Coefficients T_q of the right normal form sum_q a^q T_q(b).
    std::map<int, BSeries> right_normal_form() const;

private:
    int trunc_;
    std::map<int, BSeries> rows_;
};

ABOperator compose(const ABOperator &p, const ABOperator &q);
ABOperator power(const ABOperator &p, int n);

/// Evaluates P x right to left through xi_space::act. Requires
/// x.cert_degree() >= total_degree(P).
XiElement apply(const ABOperator &p, const XiElement &x);

/// Same action on frame coordinates, dropping degrees above the frame.
SparseVec apply(const ABOperator &p, const Frame &frame, const SparseVec &v);

struct LinearDivision {
    ABOperator quotient;
    BSeries remainder;
};

/// P = Q (a - lambda b) + R with R in B.
LinearDivision divide_linear(const ABOperator &p, const Rational &lambda);

/// B_P for P homogeneous of degree p in (a, b) and monic in a, defined by
/// (-b)^p B_P(-b^{-1} a) = P.
RationalPolynomial bernstein_homogeneous(const ABOperator &p);

struct LinearFactor {
    Rational lambda;
};
struct UnitFactor {
    BSeries series;
    bool inverted = false;
};

/// (a - λ1 b) S1^{-1} (a - λ2 b) ... as an ordered product.
struct StructureWord {
    std::vector<std::variant<LinearFactor, UnitFactor>> factors;
};

ABOperator expand_word(const StructureWord &w, int trunc_order);

} // namespace fresco

#endif

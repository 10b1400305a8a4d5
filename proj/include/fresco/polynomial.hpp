#ifndef FRESCO_POLYNOMIAL_HPP
#define FRESCO_POLYNOMIAL_HPP

#include <fresco/rational.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fresco
{

struct RootMultiplicity {
    Rational root;
    int mult = 0;

    bool operator==(const RootMultiplicity &) const = default;
};

/// Univariate polynomial over Q in x, coefficients stored low degree first
/// with no trailing zeros. Bernstein polynomials are always monic; the class
/// itself admits any leading coefficient so intermediate arithmetic is closed.
class RationalPolynomial
{
public:
    RationalPolynomial() = default; // the zero polynomial
    explicit RationalPolynomial(std::vector<Rational> coeffs);

    static RationalPolynomial constant(const Rational &c);
    static RationalPolynomial x();
    /// prod (x - r)^mult
    static RationalPolynomial from_roots(const std::vector<RootMultiplicity> &roots);

    int degree() const
    {
        return static_cast<int>(coeffs_.size()) - 1;
    }
    bool is_zero() const
    {
        return coeffs_.empty();
    }
    bool is_monic() const
    {
        return !coeffs_.empty() && coeffs_.back() == 1;
    }
    const std::vector<Rational> &coeffs() const
    {
        return coeffs_;
    }
    Rational coeff(int i) const;
    Rational leading() const;
    Rational operator()(const Rational &at) const;

    RationalPolynomial operator+(const RationalPolynomial &o) const;
    RationalPolynomial operator-(const RationalPolynomial &o) const;
    RationalPolynomial operator*(const RationalPolynomial &o) const;
    RationalPolynomial operator*(const Rational &c) const;
    bool operator==(const RationalPolynomial &o) const = default;

    /// (quotient, remainder) with deg remainder < deg divisor.
    std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial &d) const;
    bool divides(const RationalPolynomial &other) const;
    RationalPolynomial monic() const;
    /// p(x + r)
    RationalPolynomial shifted(const Rational &r) const;

    /// Rational roots with multiplicities; complete only when the polynomial
    /// splits over Q. Uses the rational root theorem on the integer-scaled
    /// polynomial.
    std::vector<RootMultiplicity> rational_roots() const;
    /// Some factorization over rational roots that re-multiplies exactly to
    /// this polynomial (after making it monic), or nullopt.
    std::optional<std::vector<RootMultiplicity>> factored() const;

    int multiplicity(const Rational &root) const;
    bool is_square_free_split() const;

    /// "(x+3/2)^2*(x+1/2)" when split, else coefficient form.
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

} // namespace fresco

#endif

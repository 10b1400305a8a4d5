#ifndef FRESCO_MATRIX_HPP
#define FRESCO_MATRIX_HPP

#include <fresco/polynomial.hpp>
#include <fresco/rational.hpp>

#include <cstddef>
#include <vector>

namespace fresco
{

// Small dense square-or-rectangular matrix over Q, row major.
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const
    {
        return rows_;
    }
    std::size_t cols() const
    {
        return cols_;
    }
    Rational &operator()(std::size_t i, std::size_t j)
    {
        return data_[i * cols_ + j];
    }
    const Rational &operator()(std::size_t i, std::size_t j) const
    {
        return data_[i * cols_ + j];
    }

    Matrix operator*(const Matrix &o) const;
    Matrix operator-(const Matrix &o) const;
    Matrix operator*(const Rational &c) const;
    bool operator==(const Matrix &o) const = default;

    std::size_t rank() const;

    // Characteristic polynomial det(x I - M) via Hessenberg reduction.
    RationalPolynomial charpoly() const;

    // Minimal polynomial by Krylov dependence on the standard basis vectors
    // (lcm of the local minimal polynomials).
    RationalPolynomial minpoly() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

RationalPolynomial poly_lcm(const RationalPolynomial &a, const RationalPolynomial &b);
RationalPolynomial poly_gcd(RationalPolynomial a, RationalPolynomial b);

} // namespace fresco

#endif

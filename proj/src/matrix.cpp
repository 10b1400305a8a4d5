#include <fresco/matrix.hpp>

#include <stdexcept>
#include <utility>

namespace fresco
{

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

Matrix Matrix::operator*(const Matrix &o) const
{
    if (cols_ != o.rows_) {
        throw std::invalid_argument("matrix shape mismatch");
    }
    Matrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational &a = (*this)(i, k);
            if (a == 0) {
                continue;
            }
            for (std::size_t j = 0; j < o.cols_; ++j) {
                out(i, j) += a * o(k, j);
            }
        }
    }
    return out;
}

Matrix Matrix::operator-(const Matrix &o) const
{
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] -= o.data_[i];
    }
    return out;
}

Matrix Matrix::operator*(const Rational &c) const
{
    Matrix out = *this;
    for (auto &v : out.data_) {
        v *= c;
    }
    return out;
}

std::size_t Matrix::rank() const
{
    Matrix m = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && m(piv, c) == 0) {
            ++piv;
        }
        if (piv == rows_) {
            continue;
        }
        for (std::size_t j = 0; j < cols_; ++j) {
            std::swap(m(r, j), m(piv, j));
        }
        for (std::size_t i = r + 1; i < rows_; ++i) {
            if (m(i, c) == 0) {
                continue;
            }
            const Rational f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < cols_; ++j) {
                m(i, j) -= f * m(r, j);
            }
        }
        ++r;
    }
    return r;
}

RationalPolynomial Matrix::charpoly() const
{
    if (rows_ != cols_) {
        throw std::invalid_argument("charpoly of a non-square matrix");
    }
    const std::size_t n = rows_;
    Matrix h = *this;
    // similarity reduction to upper Hessenberg form
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t i = m;
        while (i < n && h(i, m - 1) == 0) {
            ++i;
        }
        if (i == n) {
            continue;
        }
        if (i != m) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(h(i, j), h(m, j));
            }
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(h(j, i), h(j, m));
            }
        }
        for (std::size_t r = m + 1; r < n; ++r) {
            if (h(r, m - 1) == 0) {
                continue;
            }
            const Rational u = h(r, m - 1) / h(m, m - 1);
            for (std::size_t j = 0; j < n; ++j) {
                h(r, j) -= u * h(m, j);
            }
            for (std::size_t j = 0; j < n; ++j) {
                h(j, m) += u * h(j, r);
            }
        }
    }
    // p_k = (x - h_kk) p_{k-1} - sum_i h_{k-i,k} prod_{j} h_{j,j-1} p_{k-i-1}
    std::vector<RationalPolynomial> p(n + 1);
    p[0] = RationalPolynomial::constant(1);
    for (std::size_t k = 1; k <= n; ++k) {
        p[k] = RationalPolynomial(std::vector<Rational>{-h(k - 1, k - 1), 1}) * p[k - 1];
        Rational t = 1;
        for (std::size_t i = 1; i < k; ++i) {
            t *= h(k - i, k - i - 1);
            if (t == 0) {
                break;
            }
            p[k] = p[k] - p[k - i - 1] * (t * h(k - i - 1, k - 1));
        }
    }
    return p[n];
}

RationalPolynomial poly_gcd(RationalPolynomial a, RationalPolynomial b)
{
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

RationalPolynomial poly_lcm(const RationalPolynomial &a, const RationalPolynomial &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    return (a * b).divmod(poly_gcd(a, b)).first.monic();
}

namespace
{

// Smallest monic polynomial q with q(M) v = 0.
RationalPolynomial local_minpoly(const Matrix &m, std::vector<Rational> v)
{
    const std::size_t n = m.rows();
    // reduced Krylov rows with their combination coefficients
    std::vector<std::vector<Rational>> basis;
    std::vector<std::vector<Rational>> combos;
    std::vector<std::size_t> pivots;
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<Rational> w = v;
        std::vector<Rational> combo(k + 1);
        combo[k] = 1;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const Rational f = w[pivots[b]];
            if (f == 0) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                w[j] -= f * basis[b][j];
            }
            for (std::size_t j = 0; j < combos[b].size(); ++j) {
                combo[j] -= f * combos[b][j];
            }
        }
        std::size_t piv = 0;
        while (piv < n && w[piv] == 0) {
            ++piv;
        }
        if (piv == n) {
            return RationalPolynomial(combo).monic();
        }
        const Rational inv = 1 / w[piv];
        for (auto &x : w) {
            x *= inv;
        }
        for (auto &x : combo) {
            x *= inv;
        }
        basis.push_back(std::move(w));
        combos.push_back(std::move(combo));
        pivots.push_back(piv);
        std::vector<Rational> next(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                next[i] += m(i, j) * v[j];
            }
        }
        v = std::move(next);
    }
    throw std::logic_error("Krylov sequence did not terminate");
}

} // namespace

RationalPolynomial Matrix::minpoly() const
{
    if (rows_ != cols_) {
        throw std::invalid_argument("minpoly of a non-square matrix");
    }
    RationalPolynomial acc = RationalPolynomial::constant(1);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::vector<Rational> e(rows_);
        e[i] = 1;
        acc = poly_lcm(acc, local_minpoly(*this, e));
    }
    return acc;
}

} // namespace fresco

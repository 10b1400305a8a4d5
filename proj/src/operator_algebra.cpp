#include <fresco/errors.hpp>
#include <fresco/operator_algebra.hpp>

#include <algorithm>
#include <sstream>

namespace fresco
{

namespace
{

Rational binomial(int n, int k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

void require_same_order(int a, int b)
{
    if (a != b) {
        throw Error(ErrorKind::InvalidInput, "operators with different truncation orders");
    }
}

} // namespace

BSeries::BSeries(int trunc_order) : coeffs_(static_cast<std::size_t>(std::max(0, trunc_order) + 1)) {}

BSeries::BSeries(std::vector<Rational> coeffs, int trunc_order) : coeffs_(std::move(coeffs))
{
    coeffs_.resize(static_cast<std::size_t>(std::max(0, trunc_order) + 1));
}

BSeries BSeries::constant(const Rational &c, int trunc_order)
{
    BSeries s(trunc_order);
    s[0] = c;
    return s;
}

BSeries BSeries::monomial(int power, const Rational &c, int trunc_order)
{
    BSeries s(trunc_order);
    if (power <= trunc_order) {
        s[power] = c;
    }
    return s;
}

bool BSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational &c) { return c == 0; });
}

int BSeries::order() const
{
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

BSeries BSeries::operator+(const BSeries &o) const
{
    require_same_order(trunc_order(), o.trunc_order());
    BSeries out = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out.coeffs_[i] += o.coeffs_[i];
    }
    return out;
}

BSeries BSeries::operator-(const BSeries &o) const
{
    return *this + o * Rational(-1);
}

BSeries BSeries::operator*(const BSeries &o) const
{
    require_same_order(trunc_order(), o.trunc_order());
    BSeries out(trunc_order());
    const std::size_t n = coeffs_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < n; ++j) {
            out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return out;
}

BSeries BSeries::operator*(const Rational &c) const
{
    BSeries out = *this;
    for (auto &v : out.coeffs_) {
        v *= c;
    }
    return out;
}

BSeries BSeries::commutator_with_a() const
{
    // b^2 S'(b) = sum n c_n b^{n+1}
    BSeries out(trunc_order());
    for (int n = 1; n + 1 <= trunc_order(); ++n) {
        out[n + 1] = (*this)[n] * n;
    }
    return out;
}

BSeries BSeries::inverse() const
{
    if (!is_unit()) {
        throw Error(ErrorKind::NonUnitSeries, "series with zero constant term is not invertible");
    }
    BSeries inv(trunc_order());
    inv[0] = 1 / coeffs_[0];
    for (int n = 1; n <= trunc_order(); ++n) {
        Rational acc = 0;
        for (int k = 1; k <= n; ++k) {
            acc += (*this)[k] * inv[n - k];
        }
        inv[n] = -acc * inv[0];
    }
    return inv;
}

ABOperator::ABOperator(int trunc_order) : trunc_(trunc_order) {}

ABOperator ABOperator::identity(int trunc_order)
{
    return series(BSeries::constant(1, trunc_order));
}

ABOperator ABOperator::a(int trunc_order)
{
    ABOperator p(trunc_order);
    p.set_row(1, BSeries::constant(1, trunc_order));
    return p;
}

ABOperator ABOperator::b(int trunc_order)
{
    return series(BSeries::monomial(1, 1, trunc_order));
}

ABOperator ABOperator::series(const BSeries &s)
{
    ABOperator p(s.trunc_order());
    p.set_row(0, s);
    return p;
}

ABOperator ABOperator::linear(const Rational &lambda, int trunc_order)
{
    Rational l = lambda;
    l.canonicalize();
    return a(trunc_order) - b(trunc_order) * l;
}

int ABOperator::a_degree() const
{
    return rows_.empty() ? -1 : rows_.rbegin()->first;
}

BSeries ABOperator::row(int q) const
{
    const auto it = rows_.find(q);
    return it == rows_.end() ? BSeries(trunc_) : it->second;
}

void ABOperator::set_row(int q, const BSeries &s)
{
    require_same_order(trunc_, s.trunc_order());
    if (s.is_zero()) {
        rows_.erase(q);
    } else {
        rows_[q] = s;
    }
}

int ABOperator::total_degree() const
{
    int d = -1;
    for (const auto &[q, s] : rows_) {
        for (int n = s.trunc_order(); n >= 0; --n) {
            if (s[n] != 0) {
                d = std::max(d, q + n);
                break;
            }
        }
    }
    return d;
}

ABOperator ABOperator::operator+(const ABOperator &o) const
{
    require_same_order(trunc_, o.trunc_);
    ABOperator out = *this;
    for (const auto &[q, s] : o.rows_) {
        out.set_row(q, out.row(q) + s);
    }
    return out;
}

ABOperator ABOperator::operator-(const ABOperator &o) const
{
    return *this + o * Rational(-1);
}

ABOperator ABOperator::operator*(const Rational &c) const
{
    ABOperator out(trunc_);
    for (const auto &[q, s] : rows_) {
        out.set_row(q, s * c);
    }
    return out;
}

std::map<int, BSeries> ABOperator::right_normal_form() const
{
    // S a^q = sum_i (-1)^i C(q,i) a^{q-i} D^i(S),  D(S) = b^2 S'
    std::map<int, BSeries> out;
    for (const auto &[q, s] : rows_) {
        BSeries d = s;
        for (int i = 0; i <= q; ++i) {
            Rational c = binomial(q, i);
            if (i % 2 == 1) {
                c = -c;
            }
            auto [it, fresh] = out.try_emplace(q - i, BSeries(trunc_));
            it->second = it->second + d * c;
            d = d.commutator_with_a();
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    }
    return out;
}

std::string ABOperator::to_string() const
{
    if (rows_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[q, s] : right_normal_form()) {
        for (int n = 0; n <= s.trunc_order(); ++n) {
            if (s[n] == 0) {
                continue;
            }
            os << (first ? "" : " + ") << "(" << format_rational(s[n]) << ")";
            if (q > 0) {
                os << "*a" << (q > 1 ? "^" + std::to_string(q) : "");
            }
            if (n > 0) {
                os << "*b" << (n > 1 ? "^" + std::to_string(n) : "");
            }
            first = false;
        }
    }
    return os.str();
}

ABOperator compose(const ABOperator &p, const ABOperator &q)
{
    require_same_order(p.trunc_order(), q.trunc_order());
    ABOperator out(p.trunc_order());
    for (const auto &[qa, s] : p.rows()) {
        for (const auto &[ra, t] : q.rows()) {
            // S a^qa T a^ra = S sum_i C(qa,i) D^i(T) a^{qa-i+ra}
            BSeries d = t;
            for (int i = 0; i <= qa; ++i) {
                if (d.is_zero()) {
                    break;
                }
                const int deg = qa - i + ra;
                out.set_row(deg, out.row(deg) + (s * d) * binomial(qa, i));
                d = d.commutator_with_a();
            }
        }
    }
    return out;
}

ABOperator power(const ABOperator &p, int n)
{
    ABOperator out = ABOperator::identity(p.trunc_order());
    for (int i = 0; i < n; ++i) {
        out = compose(out, p);
    }
    return out;
}

XiElement apply(const ABOperator &p, const XiElement &x)
{
    const int deg = std::max(0, p.total_degree());
    if (x.cert_degree() < deg) {
        throw Error(ErrorKind::GuardExhausted, "element guard smaller than the operator degree");
    }
    const int cert = x.cert_degree() - deg;
    XiElement out(x.space(), cert);
    XiElement apow = x;
    int q_done = 0;
    for (const auto &[q, s] : p.rows()) {
        while (q_done < q) {
            apow = act(Generator::A, apow);
            ++q_done;
        }
        XiElement bpow = apow;
        int last = s.trunc_order();
        while (last >= 0 && s[last] == 0) {
            --last;
        }
        for (int n = 0; n <= last; ++n) {
            if (n > 0) {
                bpow = act(Generator::B, bpow);
            }
            if (s[n] != 0) {
                out = out + (bpow * s[n]).truncated(cert);
            }
        }
    }
    return out.truncated(cert);
}

SparseVec apply(const ABOperator &p, const Frame &frame, const SparseVec &v)
{
    SparseVec out;
    SparseVec apow = v;
    int q_done = 0;
    for (const auto &[q, s] : p.rows()) {
        while (q_done < q) {
            apow = frame.apply(Generator::A, apow);
            ++q_done;
        }
        SparseVec bpow = apow;
        for (int n = 0; n <= s.trunc_order() && !bpow.empty(); ++n) {
            if (n > 0) {
                bpow = frame.apply(Generator::B, bpow);
            }
            axpy(out, s[n], bpow);
        }
    }
    return out;
}

LinearDivision divide_linear(const ABOperator &p, const Rational &lambda)
{
    const int order = p.trunc_order();
    ABOperator rest = p;
    ABOperator quotient(order);
    const ABOperator lin = ABOperator::linear(lambda, order);
    for (int deg = rest.a_degree(); deg >= 1; deg = rest.a_degree()) {
        ABOperator term(order);
        term.set_row(deg - 1, rest.row(deg));
        quotient = quotient + term;
        rest = rest - compose(term, lin);
    }
    return {quotient, rest.row(0)};
}

RationalPolynomial bernstein_homogeneous(const ABOperator &p)
{
    const int deg = p.total_degree();
    if (deg < 0) {
        throw Error(ErrorKind::NotHomogeneous, "zero operator");
    }
    std::vector<Rational> c(static_cast<std::size_t>(deg + 1));
    for (const auto &[q, s] : p.rows()) {
        for (int n = 0; n <= s.trunc_order(); ++n) {
            if (s[n] == 0) {
                continue;
            }
            if (q + n != deg) {
                throw Error(ErrorKind::NotHomogeneous, "term b^" + std::to_string(n) + " a^" + std::to_string(q)
                                                           + " has degree != " + std::to_string(deg));
            }
            c[static_cast<std::size_t>(q)] = s[n];
        }
    }
    if (c[static_cast<std::size_t>(deg)] != 1) {
        throw Error(ErrorKind::NotMonic, "coefficient of a^" + std::to_string(deg) + " is not 1");
    }
    // B_P(x) = (-1)^p sum_q c_q prod_{i<q} (i - x)
    RationalPolynomial acc;
    RationalPolynomial falling = RationalPolynomial::constant(1);
    for (int q = 0; q <= deg; ++q) {
        acc = acc + falling * c[static_cast<std::size_t>(q)];
        falling = falling * RationalPolynomial(std::vector<Rational>{q, -1});
    }
    return deg % 2 == 0 ? acc : acc * Rational(-1);
}

ABOperator expand_word(const StructureWord &w, int trunc_order)
{
    ABOperator out = ABOperator::identity(trunc_order);
    for (const auto &f : w.factors) {
        if (const auto *lin = std::get_if<LinearFactor>(&f)) {
            if (lin->lambda <= 0) {
                throw Error(ErrorKind::InvalidInput, "linear factor with non-positive lambda");
            }
            out = compose(out, ABOperator::linear(lin->lambda, trunc_order));
        } else {
            const auto &u = std::get<UnitFactor>(f);
            if (!u.series.is_unit()) {
                throw Error(ErrorKind::NonUnitSeries, "unit factor with zero constant term");
            }
            BSeries s(u.series.coeffs(), trunc_order);
            out = compose(out, ABOperator::series(u.inverted ? s.inverse() : s));
        }
    }
    return out;
}

} // namespace fresco

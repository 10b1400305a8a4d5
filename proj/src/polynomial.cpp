#include <fresco/polynomial.hpp>

#include <algorithm>
#include <sstream>

namespace fresco
{

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

void RationalPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

RationalPolynomial RationalPolynomial::constant(const Rational &c)
{
    return RationalPolynomial(std::vector<Rational>{c});
}

RationalPolynomial RationalPolynomial::x()
{
    return RationalPolynomial(std::vector<Rational>{0, 1});
}

RationalPolynomial RationalPolynomial::from_roots(const std::vector<RootMultiplicity> &roots)
{
    RationalPolynomial p = constant(1);
    for (const auto &rm : roots) {
        const RationalPolynomial lin(std::vector<Rational>{-rm.root, 1});
        for (int i = 0; i < rm.mult; ++i) {
            p = p * lin;
        }
    }
    return p;
}

Rational RationalPolynomial::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational RationalPolynomial::leading() const
{
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational RationalPolynomial::operator()(const Rational &at) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * at + *it;
    }
    return acc;
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial &o) const
{
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    }
    return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial &o) const
{
    return *this + o * Rational(-1);
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial &o) const
{
    if (is_zero() || o.is_zero()) {
        return {};
    }
    std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            c[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::operator*(const Rational &k) const
{
    std::vector<Rational> c = coeffs_;
    for (auto &v : c) {
        v *= k;
    }
    return RationalPolynomial(std::move(c));
}

std::pair<RationalPolynomial, RationalPolynomial> RationalPolynomial::divmod(const RationalPolynomial &d) const
{
    if (d.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    std::vector<Rational> rem = coeffs_;
    const int dd = d.degree();
    std::vector<Rational> quo(static_cast<std::size_t>(std::max(0, degree() - dd + 1)));
    for (int i = degree(); i >= dd; --i) {
        const Rational c = rem[static_cast<std::size_t>(i)] / d.leading();
        if (c == 0) {
            continue;
        }
        quo[static_cast<std::size_t>(i - dd)] = c;
        for (int k = 0; k <= dd; ++k) {
            rem[static_cast<std::size_t>(i - dd + k)] -= c * d.coeffs_[static_cast<std::size_t>(k)];
        }
    }
    return {RationalPolynomial(std::move(quo)), RationalPolynomial(std::move(rem))};
}

bool RationalPolynomial::divides(const RationalPolynomial &other) const
{
    return other.divmod(*this).second.is_zero();
}

RationalPolynomial RationalPolynomial::monic() const
{
    if (is_zero()) {
        return {};
    }
    return *this * (Rational(1) / leading());
}

RationalPolynomial RationalPolynomial::shifted(const Rational &r) const
{
    // Horner in the substituted variable (x + r).
    const RationalPolynomial lin(std::vector<Rational>{r, 1});
    RationalPolynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * lin + constant(*it);
    }
    return acc;
}

int RationalPolynomial::multiplicity(const Rational &root) const
{
    if (is_zero()) {
        return 0;
    }
    const RationalPolynomial lin(std::vector<Rational>{-root, 1});
    RationalPolynomial p = *this;
    int m = 0;
    while (p.degree() >= 1) {
        auto [q, r] = p.divmod(lin);
        if (!r.is_zero()) {
            break;
        }
        p = q;
        ++m;
    }
    return m;
}

namespace
{

std::vector<Integer> positive_divisors(Integer n)
{
    if (n < 0) {
        n = -n;
    }
    std::vector<Integer> small;
    std::vector<Integer> large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

std::vector<RootMultiplicity> RationalPolynomial::rational_roots() const
{
    std::vector<RootMultiplicity> out;
    if (degree() < 1) {
        return out;
    }
    RationalPolynomial p = *this;
    int zero_mult = 0;
    while (p.degree() >= 1 && p.coeff(0) == 0) {
        p = RationalPolynomial(std::vector<Rational>(p.coeffs_.begin() + 1, p.coeffs_.end()));
        ++zero_mult;
    }
    if (zero_mult > 0) {
        out.push_back({0, zero_mult});
    }
    if (p.degree() < 1) {
        return out;
    }
    Integer lcm = 1;
    for (const auto &c : p.coeffs_) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    const Integer a0 = Rational(p.coeff(0) * lcm).get_num();
    const Integer an = Rational(p.leading() * lcm).get_num();
    for (const auto &num : positive_divisors(a0)) {
        for (const auto &den : positive_divisors(an)) {
            for (int sign : {1, -1}) {
                Rational cand(num * sign, den);
                cand.canonicalize();
                if (cand.get_den() != den) {
                    continue; // visited through the reduced form
                }
                if (std::any_of(out.begin(), out.end(), [&](const auto &r) { return r.root == cand; })) {
                    continue;
                }
                const int m = p.multiplicity(cand);
                if (m > 0) {
                    out.push_back({cand, m});
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto &l, const auto &r) { return l.root > r.root; });
    return out;
}

std::optional<std::vector<RootMultiplicity>> RationalPolynomial::factored() const
{
    if (is_zero()) {
        return std::nullopt;
    }
    auto roots = rational_roots();
    if (from_roots(roots) != monic()) {
        return std::nullopt;
    }
    return roots;
}

bool RationalPolynomial::is_square_free_split() const
{
    const auto f = factored();
    return f && std::all_of(f->begin(), f->end(), [](const auto &r) { return r.mult == 1; });
}

std::string RationalPolynomial::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    const auto f = factored();
    if (f && leading() == 1) {
        if (f->empty()) {
            return "1";
        }
        bool first = true;
        for (const auto &[root, mult] : *f) {
            if (!first) {
                os << "*";
            }
            first = false;
            if (root == 0) {
                os << "x";
            } else if (root < 0) {
                os << "(x+" << format_rational(-root) << ")";
            } else {
                os << "(x-" << format_rational(root) << ")";
            }
            if (mult > 1) {
                os << "^" << mult;
            }
        }
        return os.str();
    }
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational c = coeff(i);
        if (c == 0) {
            continue;
        }
        os << (first ? "" : " + ") << "(" << format_rational(c) << ")";
        if (i >= 1) {
            os << "*x";
        }
        if (i >= 2) {
            os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

} // namespace fresco

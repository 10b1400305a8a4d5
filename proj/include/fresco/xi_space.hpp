#ifndef FRESCO_XI_SPACE_HPP
#define FRESCO_XI_SPACE_HPP

#include <fresco/rational.hpp>
#include <fresco/sparse.hpp>

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace fresco
{

/// Exponent class alpha in (0, 1] ∩ Q.
class ExponentClass
{
public:
    explicit ExponentClass(const Rational &alpha);

    const Rational &alpha() const
    {
        return alpha_;
    }
    bool is_one() const
    {
        return alpha_ == 1;
    }

    auto operator<=>(const ExponentClass &o) const
    {
        return cmp(alpha_, o.alpha_) <=> 0;
    }
    bool operator==(const ExponentClass &o) const
    {
        return alpha_ == o.alpha_;
    }

private:
    Rational alpha_;
};

/// s^{alpha+m-1} (Log s)^j / j! ⊗ v_k
struct LogMonomial {
    ExponentClass cls;
    int m = 0;
    int j = 0;
    int k = 0;

    Rational exponent() const
    {
        return cls.alpha() + m;
    }

    // (m, class, j, k): s-valuation first.
    auto operator<=>(const LogMonomial &o) const
    {
        if (auto c = m <=> o.m; c != 0) {
            return c;
        }
        if (auto c = cls <=> o.cls; c != 0) {
            return c;
        }
        if (auto c = j <=> o.j; c != 0) {
            return c;
        }
        return k <=> o.k;
    }
    bool operator==(const LogMonomial &) const = default;
};

/// The space SΞ_A^{(N)} ⊗ V: exponent classes A, log bound N, dim V.
struct XiSpace {
    std::vector<ExponentClass> alpha_set; // sorted, distinct
    int log_bound = 0;
    int value_dim = 1;

    XiSpace() = default;
    XiSpace(std::vector<ExponentClass> classes, int n, int dim);

    int min_log(const ExponentClass &c) const
    {
        return c.is_one() ? 1 : 0;
    }
    int max_log(const ExponentClass &c) const
    {
        return c.is_one() ? log_bound + 1 : log_bound;
    }
    bool admits(const LogMonomial &mono) const;
    int class_index(const ExponentClass &c) const; // -1 if absent
    bool operator==(const XiSpace &o) const = default;
};

enum class Generator { A, B, B_INV_A };

const char *generator_name(Generator g);

/// Truncated element of SΞ_A^{(N)} ⊗ V: exact modulo terms with m > cert_degree.
class XiElement
{
public:
    XiElement() = default;
    XiElement(XiSpace space, int cert_degree);

    static XiElement monomial(const XiSpace &space, int cert_degree, const LogMonomial &mono,
                              const Rational &coeff = 1);

    const XiSpace &space() const
    {
        return space_;
    }
    int cert_degree() const
    {
        return cert_;
    }
    const std::map<LogMonomial, Rational> &terms() const
    {
        return terms_;
    }
    bool is_zero() const
    {
        return terms_.empty();
    }
    Rational coeff(const LogMonomial &mono) const;

    // Adds c * mono; drops it when m exceeds cert or for the quotiented
    // (alpha = 1, j = 0) monomials.
    void add(const LogMonomial &mono, const Rational &c);

    XiElement operator+(const XiElement &o) const;
    XiElement operator-(const XiElement &o) const;
    XiElement operator*(const Rational &c) const;
    // Equality of the canonical forms after truncating both to the smaller cert.
    bool operator==(const XiElement &o) const;

    XiElement truncated(int cert) const;
    int valuation() const; // smallest m in support, or cert+1 when zero

    std::string to_string() const;

private:
    XiSpace space_;
    int cert_ = 0;
    std::map<LogMonomial, Rational> terms_;
};

/// Image of a single basis monomial under a generator (no truncation).
std::vector<std::pair<LogMonomial, Rational>> act_on_monomial(Generator g, const LogMonomial &mono);

/// Exact action; A and B consume one degree of guard.
XiElement act(Generator g, const XiElement &x);

XiElement project_class(const XiElement &x, const ExponentClass &cls);

/// Nilpotent order of one monomial: j+1 for alpha != 1, j for alpha = 1.
int monomial_order(const LogMonomial &mono);
int nilpotent_order_elem(const XiElement &x);

/// Coordinates of SΞ_A^{(N)} ⊗ V truncated at degree D, ordered by
/// (m, class, j, k). Used by the linear algebra of module_lab.
class Frame
{
public:
    Frame() = default;
    Frame(XiSpace space, int degree);

    const XiSpace &space() const
    {
        return space_;
    }
    int degree() const
    {
        return degree_;
    }
    int dim() const
    {
        return block_ * (degree_ + 1);
    }
    int block() const
    {
        return block_;
    }
    int index(const LogMonomial &mono) const;
    LogMonomial monomial(int index) const;
    int degree_of(int index) const
    {
        return index / block_;
    }

    SparseVec encode(const XiElement &x) const;
    XiElement decode(const SparseVec &v) const;

    // Generator action on coordinates, dropping everything above degree().
    SparseVec apply(Generator g, const SparseVec &v) const;
    // Keeps coordinates with degree <= d.
    static SparseVec truncate(const SparseVec &v, int first_excluded_index);
    SparseVec truncate_to(const SparseVec &v, int d) const
    {
        return truncate(v, block_ * (d + 1));
    }

    bool operator==(const Frame &o) const = default;

private:
    XiSpace space_;
    int degree_ = 0;
    int logs_ = 0;  // log slots per class
    int block_ = 0; // coordinates per degree
};

} // namespace fresco

#endif

#include <fresco/errors.hpp>
#include <fresco/xi_space.hpp>

#include <algorithm>
#include <sstream>

namespace fresco
{

ExponentClass::ExponentClass(const Rational &alpha) : alpha_(alpha)
{
    alpha_.canonicalize();
    if (alpha_ <= 0 || alpha_ > 1) {
        throw Error(ErrorKind::InvalidInput, "exponent class " + format_rational(alpha_) + " not in (0, 1]");
    }
}

XiSpace::XiSpace(std::vector<ExponentClass> classes, int n, int dim)
    : alpha_set(std::move(classes)), log_bound(n), value_dim(dim)
{
    std::sort(alpha_set.begin(), alpha_set.end());
    alpha_set.erase(std::unique(alpha_set.begin(), alpha_set.end()), alpha_set.end());
    if (n < 0 || dim < 1) {
        throw Error(ErrorKind::InvalidInput, "log bound must be >= 0 and value dim >= 1");
    }
}

bool XiSpace::admits(const LogMonomial &mono) const
{
    return class_index(mono.cls) >= 0 && mono.m >= 0 && mono.j >= min_log(mono.cls) && mono.j <= max_log(mono.cls)
           && mono.k >= 0 && mono.k < value_dim;
}

int XiSpace::class_index(const ExponentClass &c) const
{
    const auto it = std::lower_bound(alpha_set.begin(), alpha_set.end(), c);
    if (it == alpha_set.end() || !(*it == c)) {
        return -1;
    }
    return static_cast<int>(it - alpha_set.begin());
}

const char *generator_name(Generator g)
{
    switch (g) {
        case Generator::A:
            return "A";
        case Generator::B:
            return "B";
        case Generator::B_INV_A:
            return "B_INV_A";
    }
    return "?";
}

XiElement::XiElement(XiSpace space, int cert_degree) : space_(std::move(space)), cert_(cert_degree)
{
    if (cert_degree < 0) {
        throw Error(ErrorKind::GuardExhausted, "negative certification degree");
    }
}

XiElement XiElement::monomial(const XiSpace &space, int cert_degree, const LogMonomial &mono, const Rational &coeff)
{
    XiElement x(space, cert_degree);
    if (!space.admits(mono) && !(mono.cls.is_one() && mono.j == 0)) {
        throw Error(ErrorKind::InvalidInput, "monomial outside the ambient space");
    }
    x.add(mono, coeff);
    return x;
}

Rational XiElement::coeff(const LogMonomial &mono) const
{
    const auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

void XiElement::add(const LogMonomial &mono, const Rational &c)
{
    if (c == 0 || mono.m > cert_ || (mono.cls.is_one() && mono.j == 0)) {
        return;
    }
    auto [it, fresh] = terms_.try_emplace(mono, 0);
    it->second += c;
    if (it->second == 0) {
        terms_.erase(it);
    }
}

XiElement XiElement::operator+(const XiElement &o) const
{
    XiElement out = truncated(std::min(cert_, o.cert_));
    for (const auto &[mono, c] : o.terms_) {
        out.add(mono, c);
    }
    return out;
}

XiElement XiElement::operator-(const XiElement &o) const
{
    return *this + o * Rational(-1);
}

XiElement XiElement::operator*(const Rational &c) const
{
    XiElement out(space_, cert_);
    for (const auto &[mono, v] : terms_) {
        out.add(mono, v * c);
    }
    return out;
}

bool XiElement::operator==(const XiElement &o) const
{
    const int c = std::min(cert_, o.cert_);
    return truncated(c).terms_ == o.truncated(c).terms_;
}

XiElement XiElement::truncated(int cert) const
{
    XiElement out(space_, std::min(cert, cert_));
    for (const auto &[mono, v] : terms_) {
        out.add(mono, v);
    }
    return out;
}

int XiElement::valuation() const
{
    return terms_.empty() ? cert_ + 1 : terms_.begin()->first.m;
}

std::string XiElement::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[mono, c] : terms_) {
        os << (first ? "" : " + ") << format_rational(c) << "*e(" << format_rational(mono.cls.alpha()) << ","
           << mono.m << "," << mono.j << "," << mono.k << ")";
        first = false;
    }
    os << " [cert " << cert_ << "]";
    return os.str();
}

std::vector<std::pair<LogMonomial, Rational>> act_on_monomial(Generator g, const LogMonomial &mono)
{
    std::vector<std::pair<LogMonomial, Rational>> out;
    const Rational beta = mono.exponent();
    switch (g) {
        case Generator::A:
            out.emplace_back(LogMonomial{mono.cls, mono.m + 1, mono.j, mono.k}, 1);
            break;
        case Generator::B: {
            // sum_i (-1)^i beta^{-(i+1)} e(alpha, m+1, j-i)
            Rational c = 1 / beta;
            for (int i = 0; i <= mono.j; ++i) {
                out.emplace_back(LogMonomial{mono.cls, mono.m + 1, mono.j - i, mono.k}, c);
                c = -c / beta;
            }
            break;
        }
        case Generator::B_INV_A:
            out.emplace_back(mono, beta);
            if (mono.j > 0) {
                out.emplace_back(LogMonomial{mono.cls, mono.m, mono.j - 1, mono.k}, 1);
            }
            break;
    }
    return out;
}

XiElement act(Generator g, const XiElement &x)
{
    const int cert = g == Generator::B_INV_A ? x.cert_degree() : x.cert_degree() - 1;
    if (cert < 0) {
        throw Error(ErrorKind::GuardExhausted, std::string("no guard left to apply ") + generator_name(g));
    }
    XiElement out(x.space(), cert);
    for (const auto &[mono, c] : x.terms()) {
        for (const auto &[image, k] : act_on_monomial(g, mono)) {
            out.add(image, c * k);
        }
    }
    return out;
}

XiElement project_class(const XiElement &x, const ExponentClass &cls)
{
    XiElement out(x.space(), x.cert_degree());
    for (const auto &[mono, c] : x.terms()) {
        if (mono.cls == cls) {
            out.add(mono, c);
        }
    }
    return out;
}

int monomial_order(const LogMonomial &mono)
{
    return mono.cls.is_one() ? mono.j : mono.j + 1;
}

int nilpotent_order_elem(const XiElement &x)
{
    int d = 0;
    for (const auto &[mono, c] : x.terms()) {
        d = std::max(d, monomial_order(mono));
    }
    return d;
}

Frame::Frame(XiSpace space, int degree) : space_(std::move(space)), degree_(degree)
{
    if (degree < 0) {
        throw Error(ErrorKind::GuardExhausted, "negative truncation degree");
    }
    logs_ = space_.log_bound + 1;
    block_ = static_cast<int>(space_.alpha_set.size()) * logs_ * space_.value_dim;
}

int Frame::index(const LogMonomial &mono) const
{
    const int c = space_.class_index(mono.cls);
    const int slot = mono.j - space_.min_log(mono.cls);
    return mono.m * block_ + (c * logs_ + slot) * space_.value_dim + mono.k;
}

LogMonomial Frame::monomial(int index) const
{
    const int m = index / block_;
    int rest = index % block_;
    const int k = rest % space_.value_dim;
    rest /= space_.value_dim;
    const int slot = rest % logs_;
    const int c = rest / logs_;
    const ExponentClass &cls = space_.alpha_set[static_cast<std::size_t>(c)];
    return LogMonomial{cls, m, slot + space_.min_log(cls), k};
}

SparseVec Frame::encode(const XiElement &x) const
{
    if (!(x.space() == space_)) {
        throw Error(ErrorKind::InvalidInput, "element lives in a different ambient space");
    }
    SparseVec v;
    for (const auto &[mono, c] : x.terms()) {
        if (mono.m <= degree_) {
            v.emplace_back(index(mono), c);
        }
    }
    std::sort(v.begin(), v.end(), [](const auto &l, const auto &r) { return l.first < r.first; });
    return v;
}

XiElement Frame::decode(const SparseVec &v) const
{
    XiElement x(space_, degree_);
    for (const auto &[i, c] : v) {
        x.add(monomial(i), c);
    }
    return x;
}

SparseVec Frame::apply(Generator g, const SparseVec &v) const
{
    std::map<int, Rational> acc;
    for (const auto &[i, c] : v) {
        for (const auto &[image, k] : act_on_monomial(g, monomial(i))) {
            if (image.m > degree_ || !space_.admits(image)) {
                continue;
            }
            acc[index(image)] += c * k;
        }
    }
    return from_map(acc);
}

SparseVec Frame::truncate(const SparseVec &v, int first_excluded_index)
{
    SparseVec out;
    for (const auto &e : v) {
        if (e.first >= first_excluded_index) {
            break;
        }
        out.push_back(e);
    }
    return out;
}

} // namespace fresco

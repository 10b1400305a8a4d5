#include <fresco/errors.hpp>
#include <fresco/module_lab.hpp>

#include <algorithm>
#include <deque>

namespace fresco
{

namespace
{

std::vector<Generator> normalized_closure(std::vector<Generator> closure)
{
    std::sort(closure.begin(), closure.end());
    closure.erase(std::unique(closure.begin(), closure.end()), closure.end());
    return closure;
}

Echelon truncated_echelon(const Echelon &e, const Frame &frame, int t)
{
    Echelon out;
    for (const auto &[p, row] : e.rows()) {
        if (frame.degree_of(p) > t) {
            break;
        }
        out.insert(frame.truncate_to(row, t));
    }
    return out;
}

std::vector<SparseVec> map_rows(const std::vector<SparseVec> &rows, const std::function<SparseVec(const SparseVec &)> &f)
{
    std::vector<SparseVec> out;
    out.reserve(rows.size());
    for (const auto &r : rows) {
        out.push_back(f(r));
    }
    return out;
}

void check_same_frame(const SubModule &a, const SubModule &b)
{
    if (!(a.frame() == b.frame())) {
        throw Error(ErrorKind::InvalidInput, "modules live in different truncated ambients");
    }
}

SparseVec shift_logs(const Frame &frame, const SparseVec &v)
{
    std::map<int, Rational> acc;
    for (const auto &[i, c] : v) {
        LogMonomial mono = frame.monomial(i);
        mono.j -= 1;
        if (frame.space().admits(mono)) {
            acc[frame.index(mono)] += c;
        }
    }
    return from_map(acc);
}

// Runs f at the threshold and two degrees lower; the two readings must agree.
template <typename F>
auto stable_reading(const SubModule &m, F f, const char *what)
{
    const int t = m.threshold();
    if (t < 2) {
        throw Error(ErrorKind::GuardExhausted, "truncation degree leaves no room below the guard");
    }
    auto hi = f(t);
    auto lo = f(t - 2);
    if (!(hi == lo)) {
        throw Error(ErrorKind::RankUnstable, std::string(what) + " differs between degree " + std::to_string(t)
                                                 + " and " + std::to_string(t - 2) + "; raise the truncation");
    }
    return hi;
}

} // namespace

SubModule::SubModule(Frame frame, int guard, std::vector<Generator> closure, Echelon span)
    : frame_(std::move(frame)), guard_(guard), closure_(normalized_closure(std::move(closure))), span_(std::move(span))
{
    if (guard < 0) {
        throw Error(ErrorKind::InvalidInput, "negative guard");
    }
}

bool SubModule::closed_under(Generator g) const
{
    return std::find(closure_.begin(), closure_.end(), g) != closure_.end();
}

std::size_t SubModule::dim_at(int t) const
{
    std::size_t n = 0;
    for (const auto &[p, row] : span_.rows()) {
        if (frame_.degree_of(p) > t) {
            break;
        }
        ++n;
    }
    return n;
}

std::vector<SparseVec> SubModule::rows_at(int t) const
{
    std::vector<SparseVec> out;
    for (const auto &[p, row] : span_.rows()) {
        if (frame_.degree_of(p) > t) {
            break;
        }
        out.push_back(frame_.truncate_to(row, t));
    }
    return out;
}

std::vector<SparseVec> SubModule::rows() const
{
    std::vector<SparseVec> out;
    out.reserve(span_.dim());
    for (const auto &[p, row] : span_.rows()) {
        out.push_back(row);
    }
    return out;
}

std::vector<XiElement> SubModule::basis_elements() const
{
    const Frame ft(space(), threshold());
    std::vector<XiElement> out;
    for (const auto &r : rows_at(threshold())) {
        out.push_back(ft.decode(r));
    }
    return out;
}

bool SubModule::contains(const XiElement &x) const
{
    if (x.cert_degree() < threshold()) {
        throw Error(ErrorKind::GuardExhausted, "element known to fewer degrees than the module threshold");
    }
    const Echelon e = truncated_echelon(span_, frame_, threshold());
    return e.contains(frame_.truncate_to(frame_.encode(x.truncated(threshold())), threshold()));
}

bool SubModule::contains(const SubModule &o) const
{
    check_same_frame(*this, o);
    const int t = std::min(threshold(), o.threshold());
    const Echelon e = truncated_echelon(span_, frame_, t);
    for (const auto &r : o.rows_at(t)) {
        if (!e.contains(r)) {
            return false;
        }
    }
    return true;
}

SubModule close_span(const Frame &frame, int guard, const std::vector<SparseVec> &rows, std::vector<Generator> closure)
{
    closure = normalized_closure(std::move(closure));
    Echelon e;
    std::deque<SparseVec> todo;
    for (const auto &r : rows) {
        SparseVec fresh = e.insert(frame.truncate_to(r, frame.degree()));
        if (!fresh.empty()) {
            todo.push_back(std::move(fresh));
        }
    }
    while (!todo.empty()) {
        const SparseVec v = std::move(todo.front());
        todo.pop_front();
        for (Generator g : closure) {
            SparseVec fresh = e.insert(frame.apply(g, v));
            if (!fresh.empty()) {
                todo.push_back(std::move(fresh));
            }
        }
    }
    return SubModule(frame, guard, std::move(closure), std::move(e));
}

SubModule generate(const XiSpace &space, int degree, const std::vector<XiElement> &gens, std::vector<Generator> closure,
                   int guard)
{
    if (std::find(closure.begin(), closure.end(), Generator::B) == closure.end()) {
        throw Error(ErrorKind::InvalidInput, "closure set must contain B");
    }
    const Frame frame(space, degree);
    std::vector<SparseVec> rows;
    for (const auto &g : gens) {
        if (!(g.space() == space)) {
            throw Error(ErrorKind::InvalidInput, "generators live in different ambient spaces");
        }
        if (g.cert_degree() < degree) {
            throw Error(ErrorKind::GuardExhausted, "generator known to fewer degrees than the truncation");
        }
        rows.push_back(frame.encode(g));
    }
    if (degree - guard < 2) {
        throw Error(ErrorKind::GuardExhausted, "truncation degree " + std::to_string(degree) + " too small for guard "
                                                   + std::to_string(guard));
    }
    return close_span(frame, guard, rows, std::move(closure));
}

SubModule generate(const std::vector<XiElement> &gens, std::vector<Generator> closure, int guard,
                   std::optional<int> degree)
{
    if (gens.empty()) {
        throw Error(ErrorKind::InvalidInput, "no generators: use the overload with an explicit ambient");
    }
    int d = degree.value_or(gens.front().cert_degree());
    if (!degree) {
        for (const auto &g : gens) {
            d = std::min(d, g.cert_degree());
        }
    }
    return generate(gens.front().space(), d, gens, std::move(closure), guard);
}

SubModule b_times(const SubModule &m)
{
    const auto images = map_rows(m.rows(), [&](const SparseVec &v) { return m.frame().apply(Generator::B, v); });
    return SubModule(m.frame(), m.guard(), m.closure(), echelon_of(images));
}

SubModule b_inverse_power(const SubModule &m, int n)
{
    const Frame &frame = m.frame();
    const auto b_inv = [&](const SparseVec &v) {
        SparseVec lowered;
        lowered.reserve(v.size());
        for (const auto &[i, c] : v) {
            LogMonomial mono = frame.monomial(i);
            if (mono.m == 0) {
                throw Error(ErrorKind::InvalidInput, "element not divisible by b in the ambient space");
            }
            mono.m -= 1;
            lowered.emplace_back(frame.index(mono), c);
        }
        return frame.apply(Generator::B_INV_A, lowered);
    };
    std::vector<SparseVec> rows = m.rows();
    for (int i = 0; i < n; ++i) {
        rows = map_rows(rows, b_inv);
    }
    // The top n degrees are unknown after the division; drop them.
    rows = map_rows(rows, [&](const SparseVec &v) { return frame.truncate_to(v, frame.degree() - n); });
    return SubModule(frame, m.guard(), m.closure(), echelon_of(rows));
}

int b_rank(const SubModule &m)
{
    const SubModule bm = b_times(m);
    return stable_reading(
        m, [&](int t) { return static_cast<int>(m.dim_at(t) - bm.dim_at(t)); }, "b-rank");
}

SubModule saturate(const SubModule &m)
{
    auto closure = m.closure();
    closure.push_back(Generator::A);
    closure.push_back(Generator::B);
    closure.push_back(Generator::B_INV_A);
    return close_span(m.frame(), m.guard(), m.rows(), closure);
}

bool is_simple_pole(const SubModule &m)
{
    const int t = m.threshold();
    const Echelon bm = truncated_echelon(b_times(m).span(), m.frame(), t);
    const Frame ft(m.space(), t);
    for (const auto &r : m.rows_at(t)) {
        if (!bm.contains(ft.apply(Generator::A, r))) {
            return false;
        }
    }
    return true;
}

SubModule normalize_in(const SubModule &f, const SubModule &e)
{
    check_same_frame(f, e);
    const Frame &frame = e.frame();
    const auto e_rows = e.rows();
    const auto apply_b = [&](const SparseVec &v) { return frame.apply(Generator::B, v); };
    Echelon cur = f.span();
    std::size_t seen = f.dim_at(f.threshold());
    // Each pass also admits the kernel of b on V_D, one degree lower per pass;
    // the guard bounds how many passes stay invisible at the threshold.
    for (int pass = 0; pass <= e.guard(); ++pass) {
        Echelon next = echelon_of(preimage(e_rows, apply_b, cur));
        for (const auto &[p, row] : cur.rows()) {
            next.insert(row);
        }
        SubModule candidate(frame, e.guard(), e.closure(), next);
        const std::size_t now = candidate.dim_at(e.threshold());
        if (now == seen) {
            return candidate;
        }
        seen = now;
        cur = std::move(next);
    }
    throw Error(ErrorKind::GuardExhausted, "normalization did not stabilize within the guard");
}

bool is_normal_in(const SubModule &f, const SubModule &e)
{
    check_same_frame(f, e);
    const SubModule be = b_times(e);
    const SubModule bf = b_times(f);
    const Echelon both = echelon_of(intersect(f.rows(), be.rows()));
    const int t = e.threshold();
    return truncated_echelon(both, e.frame(), t).dim() == bf.dim_at(t);
}

SubModule filtration_level(const SubModule &m, int j)
{
    const Frame &frame = m.frame();
    const int lift = frame.dim();
    // Coordinates outside L_j come first in the elimination order, so rows
    // whose pivot is lifted lie entirely in L_j.
    const auto remap = [&](const SparseVec &v) {
        SparseVec out;
        out.reserve(v.size());
        for (const auto &[i, c] : v) {
            const bool low = monomial_order(frame.monomial(i)) <= j;
            out.emplace_back(low ? i + lift : i, c);
        }
        std::sort(out.begin(), out.end(), [](const auto &l, const auto &r) { return l.first < r.first; });
        return out;
    };
    Echelon mixed;
    for (const auto &r : m.rows()) {
        mixed.insert(remap(r));
    }
    Echelon level;
    for (const auto &[p, row] : mixed.rows()) {
        if (p < lift) {
            continue;
        }
        SparseVec back;
        back.reserve(row.size());
        for (const auto &[i, c] : row) {
            back.emplace_back(i - lift, c);
        }
        level.insert(back);
    }
    return SubModule(frame, m.guard(), m.closure(), std::move(level));
}

int nilpotent_order(const SubModule &m)
{
    int d = 0;
    for (const auto &r : m.rows_at(m.threshold())) {
        for (const auto &[i, c] : r) {
            d = std::max(d, monomial_order(m.frame().monomial(i)));
        }
    }
    return d;
}

std::vector<SubModule> semisimple_filtration(const SubModule &m)
{
    std::vector<SubModule> chain;
    const int d = nilpotent_order(m);
    for (int j = 0; j <= d; ++j) {
        chain.push_back(filtration_level(m, j));
    }
    return chain;
}

SubModule log_shift(const SubModule &m, int times)
{
    std::vector<SparseVec> rows = m.rows();
    for (int i = 0; i < times; ++i) {
        rows = map_rows(rows, [&](const SparseVec &v) { return shift_logs(m.frame(), v); });
    }
    return SubModule(m.frame(), m.guard(), m.closure(), echelon_of(rows));
}

Matrix bernstein_matrix(const SubModule &x, const std::vector<SparseVec> &y, int t)
{
    const Frame ft(x.space(), t);
    const auto x_rows = x.rows_at(t);
    Echelon w;
    for (const auto &r : y) {
        w.insert(ft.truncate_to(r, t));
    }
    for (const auto &r : x_rows) {
        w.insert(ft.apply(Generator::B, r));
    }
    Echelon trans;
    for (const auto &r : x_rows) {
        trans.insert(w.reduce(r));
    }
    const auto basis = trans.rref();
    std::vector<int> pivots;
    for (const auto &r : basis) {
        pivots.push_back(r.front().first);
    }
    const std::size_t n = basis.size();
    Matrix mat(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        const SparseVec image = w.reduce(scaled(ft.apply(Generator::B_INV_A, basis[col]), -1));
        for (const auto &[i, c] : image) {
            const auto it = std::lower_bound(pivots.begin(), pivots.end(), i);
            if (it == pivots.end() || *it != i) {
                continue;
            }
            mat(static_cast<std::size_t>(it - pivots.begin()), col) = c;
        }
    }
    return mat;
}

namespace
{

BernsteinPair bernstein_of(const SubModule &x, const std::function<std::vector<SparseVec>(int)> &y)
{
    const auto polys = stable_reading(
        x,
        [&](int t) {
            const Matrix m = bernstein_matrix(x, y(t), t);
            return std::vector<RationalPolynomial>{m.minpoly(), m.charpoly()};
        },
        "Bernstein polynomial");
    return {polys[0], polys[1]};
}

} // namespace

BernsteinPair bernstein(const SubModule &m)
{
    return bernstein_of(saturate(m), [](int) { return std::vector<SparseVec>{}; });
}

RationalPolynomial higher_bernstein(const SubModule &m, int j)
{
    const int d = nilpotent_order(m);
    if (j < 1 || j > d) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "level " + std::to_string(j) + " outside [1, " + std::to_string(d) + "]");
    }
    const SubModule sat = saturate(m);
    const SubModule top = filtration_level(sat, j);
    const SubModule below = filtration_level(sat, j - 1);
    return bernstein_of(top, [&](int t) { return below.rows_at(t); }).minimal;
}

SubModule primitive_quotient(const SubModule &m, const ExponentClass &cls)
{
    const Frame &frame = m.frame();
    const auto project = [&](const SparseVec &v) {
        SparseVec out;
        for (const auto &e : v) {
            if (frame.monomial(e.first).cls == cls) {
                out.push_back(e);
            }
        }
        return out;
    };
    return SubModule(frame, m.guard(), m.closure(), echelon_of(map_rows(m.rows(), project)));
}

QuotientModule::QuotientModule(SubModule total, SubModule sub) : total_(std::move(total)), sub_(std::move(sub))
{
    check_same_frame(total_, sub_);
    const int t = total_.threshold();
    const Frame ft(total_.space(), t);
    sub_echelon_ = echelon_of(sub_.rows_at(t));
    Echelon trans;
    for (const auto &r : total_.rows_at(t)) {
        trans.insert(sub_echelon_.reduce(r));
    }
    transversal_ = trans.rref();
    for (const auto &r : transversal_) {
        pivots_.push_back(r.front().first);
    }
    const std::size_t n = transversal_.size();
    for (auto [g, mat] : {std::pair{Generator::A, &a_}, std::pair{Generator::B, &b_},
                          std::pair{Generator::B_INV_A, &binv_a_}}) {
        *mat = Matrix(n, n);
        for (std::size_t col = 0; col < n; ++col) {
            const auto c = coordinates(ft.apply(g, transversal_[col]));
            for (std::size_t row = 0; row < n; ++row) {
                (*mat)(row, col) = c[row];
            }
        }
    }
}

const Matrix &QuotientModule::action(Generator g) const
{
    switch (g) {
        case Generator::A:
            return a_;
        case Generator::B:
            return b_;
        case Generator::B_INV_A:
            break;
    }
    return binv_a_;
}

std::vector<Rational> QuotientModule::coordinates(const SparseVec &v) const
{
    std::vector<Rational> out(transversal_.size());
    for (const auto &[i, c] : sub_echelon_.reduce(v)) {
        const auto it = std::lower_bound(pivots_.begin(), pivots_.end(), i);
        if (it != pivots_.end() && *it == i) {
            out[static_cast<std::size_t>(it - pivots_.begin())] = c;
        }
    }
    return out;
}

QuotientModule quotient(const SubModule &e, const SubModule &f)
{
    if (!e.contains(f)) {
        throw Error(ErrorKind::InvalidInput, "quotient by a module not contained in the total");
    }
    if (!is_normal_in(f, e)) {
        throw Error(ErrorKind::NotNormal, "F ∩ bE differs from bF");
    }
    return QuotientModule(e, f);
}

int b_rank(const QuotientModule &q)
{
    const SubModule &e = q.total();
    const SubModule be = b_times(e);
    return stable_reading(
        e,
        [&](int t) {
            Echelon w = echelon_of(q.sub().rows_at(t));
            for (const auto &r : be.rows_at(t)) {
                w.insert(r);
            }
            return static_cast<int>(e.dim_at(t) - w.dim());
        },
        "quotient b-rank");
}

BernsteinPair bernstein(const QuotientModule &q)
{
    const SubModule sat = saturate(q.total());
    const SubModule kernel = normalize_in(q.sub(), sat);
    return bernstein_of(sat, [&](int t) { return kernel.rows_at(t); });
}

std::vector<RootMultiplicity> grid_roots(const RationalPolynomial &p, const XiSpace &space, int degree)
{
    std::vector<RootMultiplicity> out;
    int found = 0;
    for (int m = 0; m <= degree && found < p.degree(); ++m) {
        for (const auto &cls : space.alpha_set) {
            const Rational root = -(cls.alpha() + m);
            const int mult = p.multiplicity(root);
            if (mult > 0) {
                out.push_back({root, mult});
                found += mult;
            }
        }
    }
    if (found != p.degree()) {
        throw Error(ErrorKind::NoRoot, "polynomial " + p.to_string() + " does not split on the exponent grid");
    }
    std::sort(out.begin(), out.end(), [](const auto &l, const auto &r) { return l.root > r.root; });
    return out;
}

} // namespace fresco

#include <fresco/errors.hpp>
#include <fresco/fresco_lab.hpp>

#include <algorithm>
#include <random>

namespace fresco
{

namespace
{

SubModule zero_like(const SubModule &m)
{
    return SubModule(m.frame(), m.guard(), m.closure(), Echelon{});
}

Echelon echelon_at(const SubModule &m, int t)
{
    return echelon_of(m.rows_at(t));
}

bool in_minus_beta_minus_n(const Rational &root, const Rational &beta)
{
    const Rational n = -beta - root;
    return n >= 0 && n.get_den() == 1;
}

} // namespace

bool is_fresco(const SubModule &m)
{
    const Frame &frame = m.frame();
    Echelon ab;
    for (const auto &r : m.rows()) {
        ab.insert(frame.apply(Generator::A, r));
        ab.insert(frame.apply(Generator::B, r));
    }
    const SubModule abm(frame, m.guard(), m.closure(), std::move(ab));
    const int t = m.threshold();
    const auto reading = [&](int at) { return m.dim_at(at) - abm.dim_at(at); };
    const auto hi = reading(t);
    if (hi != reading(t - 2)) {
        throw Error(ErrorKind::RankUnstable, "dim M/(aM+bM) unstable; raise the truncation");
    }
    return hi == 1;
}

JordanHolderData jordan_holder(const SubModule &f)
{
    const int r = b_rank(f);
    const Frame &frame = f.frame();
    const int t = f.threshold();
    const auto roots = bernstein(f).characteristic.rational_roots();
    const SubModule bf = b_times(f);
    const auto f_rows = f.rows();

    JordanHolderData out;
    SubModule prev = zero_like(f);
    for (int k = 1; k <= r; ++k) {
        std::vector<Rational> candidates;
        for (const auto &rm : roots) {
            const Rational gamma = -rm.root + (r - k);
            if (gamma > 0 && std::find(candidates.begin(), candidates.end(), gamma) == candidates.end()) {
                candidates.push_back(gamma);
            }
        }
        Echelon forbidden = echelon_at(prev, t);
        for (const auto &row : bf.rows_at(t)) {
            forbidden.insert(row);
        }
        bool found = false;
        for (const Rational &gamma : candidates) {
            const auto eigen = [&](const SparseVec &v) {
                SparseVec w = frame.apply(Generator::A, v);
                axpy(w, -gamma, frame.apply(Generator::B, v));
                return w;
            };
            for (const auto &y : preimage(f_rows, eigen, prev.span())) {
                if (forbidden.contains(frame.truncate_to(y, t))) {
                    continue;
                }
                std::vector<SparseVec> rows = prev.rows();
                rows.push_back(y);
                SubModule next = close_span(frame, f.guard(), rows, {Generator::A, Generator::B});
                if (b_rank(next) != k || !is_normal_in(next, f)) {
                    continue;
                }
                out.chain.push_back(next);
                out.quotient_exponents.push_back(gamma);
                out.co_ranks.push_back(r - k);
                prev = std::move(next);
                found = true;
                break;
            }
            if (found) {
                break;
            }
        }
        if (!found) {
            throw Error(ErrorKind::SearchFailed,
                        "no rank-one normal submodule at step " + std::to_string(k) + "; raise the truncation");
        }
    }
    return out;
}

RationalPolynomial jordan_holder_product(const JordanHolderData &jh)
{
    RationalPolynomial p = RationalPolynomial::constant(1);
    for (std::size_t k = 0; k < jh.quotient_exponents.size(); ++k) {
        p = p * RationalPolynomial(std::vector<Rational>{jh.quotient_exponents[k] - jh.co_ranks[k], 1});
    }
    return p;
}

int filtration_co_rank(const SubModule &f, int j)
{
    return b_rank(f) - b_rank(filtration_level(f, j));
}

RationalPolynomial higher_bernstein_shifted(const SubModule &f, int j)
{
    const int d = nilpotent_order(f);
    if (j < 1 || j > d) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "level " + std::to_string(j) + " outside [1, " + std::to_string(d) + "]");
    }
    // S_j(F)/S_{j-1}(F) is the image of S_j(F) under j-1 log shifts.
    const SubModule layer = log_shift(filtration_level(f, j), j - 1);
    return bernstein(layer).characteristic.shifted(-filtration_co_rank(f, j));
}

std::vector<XiElement> kernel_realize(const ABOperator &p, const XiSpace &space, int degree)
{
    const int order = p.a_degree();
    if (order < 1 || !p.row(order).is_unit()) {
        throw Error(ErrorKind::NotMonic, "leading a-coefficient must be a unit series");
    }
    if (degree <= order) {
        throw Error(ErrorKind::GuardExhausted, "truncation degree not above the operator order");
    }
    const Frame frame(space, degree);
    std::vector<SparseVec> unknowns;
    unknowns.reserve(static_cast<std::size_t>(frame.dim()));
    for (int i = 0; i < frame.dim(); ++i) {
        unknowns.push_back(SparseVec{{i, Rational(1)}});
    }
    const auto raw = preimage(unknowns, [&](const SparseVec &v) { return apply(p, frame, v); }, Echelon{});
    // Everything of degree > D - order is killed by truncation alone.
    const int kept = degree - order;
    Echelon solutions;
    for (const auto &v : raw) {
        solutions.insert(frame.truncate_to(v, kept));
    }
    if (solutions.dim() == 0) {
        throw Error(ErrorKind::EmptyKernel, "operator has no solution in the ambient; enlarge N or value_dim");
    }
    const Frame out_frame(space, kept);
    std::vector<XiElement> out;
    for (const auto &v : solutions.rref()) {
        out.push_back(out_frame.decode(v));
    }
    std::stable_sort(out.begin(), out.end(), [](const XiElement &l, const XiElement &r) {
        return nilpotent_order_elem(l) > nilpotent_order_elem(r);
    });
    return out;
}

JordanChain find_jordan_chain(const SubModule &f, const ExponentClass &cls, int p)
{
    if (p < 1) {
        throw Error(ErrorKind::InvalidInput, "chain length must be positive");
    }
    const SubModule prim = primitive_quotient(f, cls);
    if (p > nilpotent_order(prim)) {
        throw Error(ErrorKind::NoRoot, "level exceeds the nilpotent order of the primitive part");
    }
    const auto roots = higher_bernstein(prim, p).rational_roots();
    const bool has_root = std::any_of(roots.begin(), roots.end(), [&](const auto &rm) {
        return in_minus_beta_minus_n(rm.root, cls.alpha());
    });
    if (!has_root) {
        throw Error(ErrorKind::NoRoot, "B^p of the primitive part has no root in -alpha - N");
    }

    const XiSpace &space = f.space();
    const int t = f.threshold();
    const Frame ft(space, t);
    const Echelon span = echelon_at(f, t);
    const int shift = cls.is_one() ? 1 : 0;
    const int dim_v = space.value_dim;
    if (p - 1 + shift > space.max_log(cls)) {
        throw Error(ErrorKind::NoRoot, "chain longer than the log bound allows");
    }
    // At beta = alpha + m every solution of the chain relations is
    // w_j = sum_{i <= j} e(alpha, m, j - i + shift) ⊗ v_i; require w_j in F
    // and v_1 != 0.
    const auto unknown = [&](int i, int k) { return (i - 1) * dim_v + k; };
    for (int m = 0; m <= t; ++m) {
        std::vector<SparseVec> images(static_cast<std::size_t>(p * dim_v));
        for (int i = 1; i <= p; ++i) {
            for (int k = 0; k < dim_v; ++k) {
                SparseVec &img = images[static_cast<std::size_t>(unknown(i, k))];
                for (int j = i; j <= p; ++j) {
                    const SparseVec v{{ft.index(LogMonomial{cls, m, j - i + shift, k}), Rational(1)}};
                    for (const auto &[idx, c] : span.reduce(v)) {
                        img.emplace_back(idx + (j - 1) * ft.dim(), c);
                    }
                }
            }
        }
        std::vector<SparseVec> units;
        for (int u = 0; u < p * dim_v; ++u) {
            units.push_back(SparseVec{{u, Rational(1)}});
        }
        const auto kernel = preimage(
            units, [&](const SparseVec &u) { return images[static_cast<std::size_t>(u.front().first)]; }, Echelon{});
        const auto lead = std::find_if(kernel.begin(), kernel.end(),
                                       [&](const SparseVec &v) { return !v.empty() && v.front().first < dim_v; });
        if (lead == kernel.end()) {
            continue;
        }
        const SparseVec coef = scaled(*lead, 1 / lead->front().second);
        std::vector<SparseVec> chain(static_cast<std::size_t>(p));
        for (const auto &[u, c] : coef) {
            const int i = u / dim_v + 1;
            const int k = u % dim_v;
            for (int j = i; j <= p; ++j) {
                axpy(chain[static_cast<std::size_t>(j - 1)], c,
                     SparseVec{{ft.index(LogMonomial{cls, m, j - i + shift, k}), Rational(1)}});
            }
        }
        const Rational beta = cls.alpha() + m;
        for (int j = 0; j < p; ++j) {
            SparseVec lhs = ft.apply(Generator::A, chain[static_cast<std::size_t>(j)]);
            axpy(lhs, -beta, ft.apply(Generator::B, chain[static_cast<std::size_t>(j)]));
            if (j > 0) {
                axpy(lhs, -1, ft.apply(Generator::B, chain[static_cast<std::size_t>(j - 1)]));
            }
            if (!lhs.empty()) {
                throw Error(ErrorKind::SearchExhausted, "candidate chain violates the Jordan relation");
            }
        }
        JordanChain out;
        out.m = m;
        for (const auto &v : chain) {
            out.chain.push_back(ft.decode(v));
        }
        return out;
    }
    throw Error(ErrorKind::SearchExhausted, "no Jordan chain below the threshold; raise the truncation");
}

XiElement find_witness_fresco(const SubModule &e, int j, const Rational &beta, std::uint64_t seed, int budget)
{
    if (higher_bernstein(e, j)(-beta) != 0) {
        throw Error(ErrorKind::NoRoot, "-beta is not a root of B^j");
    }
    const int t = e.threshold();
    const Frame &frame = e.frame();
    const SubModule level = filtration_level(e, j);
    const Echelon below = echelon_at(filtration_level(e, j - 1), t);
    std::vector<SparseVec> pool;
    // Generators close to the threshold leave their frescos no room to certify.
    const int top = t - 2 * e.guard();
    for (const auto &row : level.rows()) {
        if (frame.degree_of(row.front().first) > top) {
            break;
        }
        if (!below.contains(frame.truncate_to(row, t))) {
            pool.push_back(row);
        }
    }
    if (pool.empty()) {
        throw Error(ErrorKind::WitnessNotFound, "S_j equals S_{j-1} at the threshold");
    }

    // 1 when some B^h (h >= j) has the root -beta itself, 0 for a root in
    // -beta - N \ {-beta}, -1 otherwise.
    const auto score = [&](const SparseVec &z) {
        const SubModule fz = close_span(frame, e.guard(), {z}, {Generator::A, Generator::B});
        int best = -1;
        try {
            for (int h = j; h <= nilpotent_order(fz); ++h) {
                for (const auto &rm : higher_bernstein(fz, h).rational_roots()) {
                    if (rm.root == -beta) {
                        return 1;
                    }
                    if (in_minus_beta_minus_n(rm.root, beta)) {
                        best = 0;
                    }
                }
            }
        } catch (const Error &err) {
            if (err.kind() != ErrorKind::RankUnstable) {
                throw;
            }
            return -1;
        }
        return best;
    };

    std::optional<SparseVec> fallback;
    int spent = 0;
    for (const auto &z : pool) {
        if (spent++ >= budget) {
            break;
        }
        const int s = score(z);
        if (s == 1) {
            return Frame(e.space(), t).decode(frame.truncate_to(z, t));
        }
        if (s == 0 && !fallback) {
            fallback = z;
        }
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1), coeff(1, 3), sign(0, 1);
    while (!fallback && spent++ < budget) {
        SparseVec z;
        for (int n = 0; n < 3; ++n) {
            axpy(z, Rational(sign(rng) ? coeff(rng) : -coeff(rng)), pool[static_cast<std::size_t>(pick(rng))]);
        }
        if (z.empty() || below.contains(frame.truncate_to(z, t))) {
            continue;
        }
        const int s = score(z);
        if (s >= 0) {
            fallback = z;
        }
    }
    if (!fallback) {
        throw Error(ErrorKind::WitnessNotFound, "search budget exhausted (no conclusion about existence)");
    }
    return Frame(e.space(), t).decode(frame.truncate_to(*fallback, t));
}

} // namespace fresco

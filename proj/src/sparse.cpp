#include <fresco/sparse.hpp>

#include <algorithm>
#include <limits>

namespace fresco
{

void axpy(SparseVec &y, const Rational &c, const SparseVec &x)
{
    if (c == 0 || x.empty()) {
        return;
    }
    SparseVec out;
    out.reserve(y.size() + x.size());
    auto iy = y.begin();
    auto ix = x.begin();
    while (iy != y.end() || ix != x.end()) {
        if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
            out.push_back(std::move(*iy));
            ++iy;
        } else if (iy == y.end() || ix->first < iy->first) {
            out.emplace_back(ix->first, c * ix->second);
            ++ix;
        } else {
            Rational s = iy->second + c * ix->second;
            if (s != 0) {
                out.emplace_back(iy->first, std::move(s));
            }
            ++iy;
            ++ix;
        }
    }
    y = std::move(out);
}

SparseVec scaled(const SparseVec &x, const Rational &c)
{
    SparseVec out;
    if (c == 0) {
        return out;
    }
    out.reserve(x.size());
    for (const auto &[i, v] : x) {
        out.emplace_back(i, v * c);
    }
    return out;
}

SparseVec from_map(const std::map<int, Rational> &m)
{
    SparseVec out;
    out.reserve(m.size());
    for (const auto &[i, v] : m) {
        if (v != 0) {
            out.emplace_back(i, v);
        }
    }
    return out;
}

int leading_index(const SparseVec &v)
{
    return v.empty() ? std::numeric_limits<int>::max() : v.front().first;
}

SparseVec Echelon::reduce(const SparseVec &v) const
{
    if (rows_.empty()) {
        return v;
    }
    std::map<int, Rational> w;
    for (const auto &[i, c] : v) {
        w.emplace_hint(w.end(), i, c);
    }
    auto it = w.begin();
    while (it != w.end()) {
        const auto row = rows_.find(it->first);
        if (row == rows_.end()) {
            ++it;
            continue;
        }
        const int key = it->first;
        const Rational c = it->second;
        for (const auto &[j, r] : row->second) {
            auto [pos, fresh] = w.try_emplace(j, 0);
            pos->second -= c * r;
            if (pos->second == 0) {
                w.erase(pos);
            }
        }
        it = w.upper_bound(key);
    }
    return from_map(w);
}

SparseVec Echelon::insert(const SparseVec &v)
{
    SparseVec r = reduce(v);
    if (r.empty()) {
        return r;
    }
    const Rational inv = 1 / r.front().second;
    r = scaled(r, inv);
    rows_.emplace(r.front().first, r);
    return r;
}

std::vector<SparseVec> Echelon::rref() const
{
    std::vector<SparseVec> out;
    out.reserve(rows_.size());
    // Back-substitute from the last pivot upward; rows above only need the
    // later pivots eliminated.
    Echelon reduced;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        SparseVec row = it->second;
        // eliminate later pivots (already fully reduced rows)
        SparseVec acc;
        acc.push_back(row.front());
        SparseVec tail(row.begin() + 1, row.end());
        tail = reduced.reduce(tail);
        axpy(acc, 1, tail);
        reduced.rows_.emplace(acc.front().first, acc);
    }
    for (const auto &[p, row] : reduced.rows_) {
        out.push_back(row);
    }
    return out;
}

Echelon echelon_of(const std::vector<SparseVec> &vs)
{
    Echelon e;
    for (const auto &v : vs) {
        e.insert(v);
    }
    return e;
}

std::vector<SparseVec> preimage(const std::vector<SparseVec> &domain,
                                const std::function<SparseVec(const SparseVec &)> &map,
                                const Echelon &target)
{
    std::vector<SparseVec> images;
    images.reserve(domain.size());
    int top = 0;
    for (const auto &d : domain) {
        images.push_back(target.reduce(map(d)));
        if (!images.back().empty()) {
            top = std::max(top, images.back().back().first + 1);
        }
    }
    int low = 0;
    for (const auto &d : domain) {
        if (!d.empty()) {
            low = std::min(low, d.front().first);
        }
    }
    const int offset = top - low;
    Echelon aug;
    for (std::size_t i = 0; i < domain.size(); ++i) {
        SparseVec row = images[i];
        for (const auto &[j, c] : domain[i]) {
            row.emplace_back(j + offset, c);
        }
        aug.insert(row);
    }
    Echelon kernel;
    for (const auto &[p, row] : aug.rows()) {
        if (p < top) {
            continue;
        }
        SparseVec back;
        back.reserve(row.size());
        for (const auto &[j, c] : row) {
            back.emplace_back(j - offset, c);
        }
        kernel.insert(back);
    }
    return kernel.rref();
}

std::vector<SparseVec> intersect(const std::vector<SparseVec> &a, const std::vector<SparseVec> &b)
{
    const Echelon eb = echelon_of(b);
    return preimage(a, [](const SparseVec &v) { return v; }, eb);
}

} // namespace fresco

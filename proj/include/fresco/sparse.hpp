#ifndef FRESCO_SPARSE_HPP
#define FRESCO_SPARSE_HPP

#include <fresco/rational.hpp>

#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace fresco
{

// Sparse rational vector: entries sorted by index, no stored zeros.
using SparseVec = std::vector<std::pair<int, Rational>>;

// y += c * x
void axpy(SparseVec &y, const Rational &c, const SparseVec &x);
SparseVec scaled(const SparseVec &x, const Rational &c);
SparseVec from_map(const std::map<int, Rational> &m);
int leading_index(const SparseVec &v);

// Row echelon basis of a subspace of Q^n, pivots normalized to 1. Rows are
// kept in echelon form (leading entry at the pivot); rref() back-substitutes.
class Echelon
{
public:
    Echelon() = default;

    // Reduces v against every pivot (ascending). The remainder has zero
    // entries at all pivot columns.
    SparseVec reduce(const SparseVec &v) const;

    // Inserts v; returns the normalized new row or an empty vector when v was
    // already in the span.
    SparseVec insert(const SparseVec &v);

    bool contains(const SparseVec &v) const
    {
        return reduce(v).empty();
    }

    std::size_t dim() const
    {
        return rows_.size();
    }

    bool has_pivot(int col) const
    {
        return rows_.count(col) != 0;
    }

    const std::map<int, SparseVec> &rows() const
    {
        return rows_;
    }

    // Fully reduced rows (zero above and below every pivot), ordered by pivot.
    std::vector<SparseVec> rref() const;

private:
    std::map<int, SparseVec> rows_;
};

Echelon echelon_of(const std::vector<SparseVec> &vs);

// Basis (rref) of { x in span(domain) : map(x) in span(target) }, where map is
// linear and given on the domain rows. Uses an augmented elimination: the
// image part is placed before the preimage part in the column order.
std::vector<SparseVec> preimage(const std::vector<SparseVec> &domain,
                                const std::function<SparseVec(const SparseVec &)> &map,
                                const Echelon &target);

// Basis (rref) of span(a) ∩ span(b).
std::vector<SparseVec> intersect(const std::vector<SparseVec> &a, const std::vector<SparseVec> &b);

} // namespace fresco

#endif

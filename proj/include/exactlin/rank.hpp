#pragma once

#include "exactlin/ratfun.hpp"
#include "exactlin/tensor.hpp"

#include <vector>

namespace exactlin {

using QMatrix = std::vector<std::vector<mpq_class>>;

// Exact rank via fraction-free (Bareiss) elimination after clearing denominators.
int rank_of(const QMatrix& m);

// Rank of a matrix with rational-function entries: the generic rank, taken as
// the maximum over several rational sample points avoiding every pole.
// `agree` reports whether all samples gave the same rank.
int rank_of(const std::vector<std::vector<RatFun>>& m, bool* agree = nullptr, int samples = 3);

// Flatten a tensor into a matrix with the given row and column legs.
template <class S>
std::vector<std::vector<S>> flatten(const LabeledTensor<S>& t, const std::vector<LegRef>& rows,
                                    const std::vector<LegRef>& cols)
{
    std::vector<LegRef> order = rows;
    order.insert(order.end(), cols.begin(), cols.end());
    auto p = permute_legs(t, order);
    size_t nr = 1;
    for (size_t i = 0; i < rows.size(); ++i) nr *= p.legs()[i].dim;
    size_t nc = p.size() / nr;
    std::vector<std::vector<S>> m(nr, std::vector<S>(nc));
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < nc; ++j) m[i][j] = p[i * nc + j];
    return m;
}

template <class S>
int matrix_rank(const LabeledTensor<S>& t, const std::vector<LegRef>& rows, const std::vector<LegRef>& cols)
{
    return rank_of(flatten(t, rows, cols));
}

// Operator rank: out-legs as rows, in-legs as columns.
template <class S>
int op_rank(const LabeledTensor<S>& t)
{
    std::vector<LegRef> r, c;
    for (auto& s : op_sites(t)) {
        r.push_back(out(s));
        c.push_back(in(s));
    }
    return matrix_rank(t, r, c);
}

}  // namespace exactlin

#pragma once

#include "exactlin/ratfun.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace exactlin {

enum class Dir { In, Out };

struct Leg {
    std::string site;
    Dir dir;
    int dim;
    bool operator==(const Leg& o) const { return site == o.site && dir == o.dir && dim == o.dim; }
};

struct LegRef {
    std::string site;
    Dir dir;
};

inline LegRef out(const std::string& s) { return {s, Dir::Out}; }
inline LegRef in(const std::string& s) { return {s, Dir::In}; }

// Dense multi-leg array.  The first leg is the most significant index.
// A leg is identified by (site, dir); an operator on sites s1..sk carries the
// legs Out s1..sk followed by In s1..sk, the out-legs indexing rows.
template <class S>
class LabeledTensor {
public:
    LabeledTensor() : data_(1, S(0)) {}
    explicit LabeledTensor(std::vector<Leg> legs) : legs_(std::move(legs))
    {
        size_t n = 1;
        for (auto& l : legs_) {
            if (l.dim <= 0) throw std::invalid_argument("leg of nonpositive dimension");
            n *= static_cast<size_t>(l.dim);
        }
        data_.assign(n, S(0));
        check_unique();
    }

    static LabeledTensor scalar(const S& v)
    {
        LabeledTensor t;
        t.data_[0] = v;
        return t;
    }

    const std::vector<Leg>& legs() const { return legs_; }
    size_t rank() const { return legs_.size(); }
    size_t size() const { return data_.size(); }
    std::vector<S>& data() { return data_; }
    const std::vector<S>& data() const { return data_; }
    S& operator[](size_t i) { return data_[i]; }
    const S& operator[](size_t i) const { return data_[i]; }

    int find(const std::string& site, Dir d) const
    {
        for (size_t i = 0; i < legs_.size(); ++i)
            if (legs_[i].site == site && legs_[i].dir == d) return static_cast<int>(i);
        return -1;
    }
    int find(const LegRef& r) const { return find(r.site, r.dir); }
    int at_leg(const LegRef& r) const
    {
        int i = find(r);
        if (i < 0) throw std::invalid_argument("no leg " + r.site + (r.dir == Dir::In ? ":in" : ":out"));
        return i;
    }

    size_t flat(const std::vector<int>& idx) const
    {
        size_t f = 0;
        for (size_t i = 0; i < legs_.size(); ++i) f = f * legs_[i].dim + idx[i];
        return f;
    }
    S& at(const std::vector<int>& idx) { return data_[flat(idx)]; }
    const S& at(const std::vector<int>& idx) const { return data_[flat(idx)]; }

    S scalar_value() const
    {
        if (!legs_.empty()) throw std::logic_error("tensor is not a scalar");
        return data_[0];
    }

    bool operator==(const LabeledTensor& o) const { return legs_ == o.legs_ && data_ == o.data_; }
    bool operator!=(const LabeledTensor& o) const { return !(*this == o); }

    LabeledTensor& operator*=(const S& c)
    {
        for (auto& x : data_) x *= c;
        return *this;
    }
    LabeledTensor& operator+=(const LabeledTensor& o)
    {
        if (o.legs_ != legs_) throw std::invalid_argument("adding tensors with different legs");
        for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    LabeledTensor& operator-=(const LabeledTensor& o)
    {
        if (o.legs_ != legs_) throw std::invalid_argument("subtracting tensors with different legs");
        for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    friend LabeledTensor operator+(LabeledTensor a, const LabeledTensor& b) { return a += b; }
    friend LabeledTensor operator-(LabeledTensor a, const LabeledTensor& b) { return a -= b; }
    friend LabeledTensor operator*(LabeledTensor a, const S& c) { return a *= c; }

    bool is_zero() const
    {
        for (auto& x : data_)
            if (!exactlin::is_zero(x)) return false;
        return true;
    }

    void rename_site(const std::string& from, const std::string& to)
    {
        for (auto& l : legs_)
            if (l.site == from) l.site = to;
        check_unique();
    }

private:
    void check_unique() const
    {
        for (size_t i = 0; i < legs_.size(); ++i)
            for (size_t j = i + 1; j < legs_.size(); ++j)
                if (legs_[i].site == legs_[j].site && legs_[i].dir == legs_[j].dir)
                    throw std::invalid_argument("duplicate leg " + legs_[i].site);
    }

    std::vector<Leg> legs_;
    std::vector<S> data_;
};

namespace detail {

inline std::vector<size_t> strides(const std::vector<Leg>& legs)
{
    std::vector<size_t> s(legs.size(), 1);
    for (size_t i = legs.size(); i-- > 1;) s[i - 1] = s[i] * legs[i].dim;
    return s;
}

// For every flat index of a tensor with legs `legs`, the composite index over
// the subset `sel` (in the order given).
inline std::vector<size_t> sub_index(const std::vector<Leg>& legs, const std::vector<int>& sel)
{
    size_t total = 1;
    for (auto& l : legs) total *= l.dim;
    std::vector<size_t> w(legs.size(), 0);
    size_t m = 1;
    for (size_t k = sel.size(); k-- > 0;) {
        w[sel[k]] = m;
        m *= legs[sel[k]].dim;
    }
    std::vector<size_t> out(total);
    std::vector<int> idx(legs.size(), 0);
    size_t cur = 0;
    for (size_t f = 0; f < total; ++f) {
        out[f] = cur;
        for (size_t i = legs.size(); i-- > 0;) {
            if (++idx[i] < legs[i].dim) {
                cur += w[i];
                break;
            }
            cur -= w[i] * (legs[i].dim - 1);
            idx[i] = 0;
        }
    }
    return out;
}

}  // namespace detail

// Contract the legs of A with the legs of B pairwise.  Each pair must join an
// out-leg with an in-leg of equal dimension.  Free legs of A come first.
template <class S>
LabeledTensor<S> contract(const LabeledTensor<S>& A, const LabeledTensor<S>& B,
                          const std::vector<std::pair<LegRef, LegRef>>& pairs)
{
    std::vector<int> sa, sb;
    for (auto& p : pairs) {
        int a = A.at_leg(p.first), b = B.at_leg(p.second);
        if (A.legs()[a].dim != B.legs()[b].dim) throw std::invalid_argument("contracting legs of different dimension");
        if (A.legs()[a].dir == B.legs()[b].dir) throw std::invalid_argument("contracting legs of equal orientation");
        sa.push_back(a);
        sb.push_back(b);
    }
    std::vector<int> fa, fb;
    std::vector<Leg> legs;
    for (int i = 0; i < static_cast<int>(A.rank()); ++i)
        if (std::find(sa.begin(), sa.end(), i) == sa.end()) {
            fa.push_back(i);
            legs.push_back(A.legs()[i]);
        }
    for (int i = 0; i < static_cast<int>(B.rank()); ++i)
        if (std::find(sb.begin(), sb.end(), i) == sb.end()) {
            fb.push_back(i);
            legs.push_back(B.legs()[i]);
        }
    LabeledTensor<S> R(legs);
    size_t nFB = 1, nS = 1;
    for (int i : fb) nFB *= B.legs()[i].dim;
    for (int i : sb) nS *= B.legs()[i].dim;

    auto aF = detail::sub_index(A.legs(), fa), aS = detail::sub_index(A.legs(), sa);
    auto bF = detail::sub_index(B.legs(), fb), bS = detail::sub_index(B.legs(), sb);
    std::vector<std::vector<std::pair<size_t, const S*>>> rowsB(nS);
    for (size_t f = 0; f < B.size(); ++f)
        if (!is_zero(B[f])) rowsB[bS[f]].push_back({bF[f], &B[f]});
    for (size_t f = 0; f < A.size(); ++f) {
        if (is_zero(A[f])) continue;
        size_t base = aF[f] * nFB;
        for (auto& [col, v] : rowsB[aS[f]]) R[base + col] += A[f] * *v;
    }
    return R;
}

// Self-contraction of pairs of legs within one tensor.
template <class S>
LabeledTensor<S> trace_legs(const LabeledTensor<S>& A, const std::vector<std::pair<LegRef, LegRef>>& pairs)
{
    std::vector<int> p1, p2;
    for (auto& p : pairs) {
        int a = A.at_leg(p.first), b = A.at_leg(p.second);
        if (A.legs()[a].dim != A.legs()[b].dim) throw std::invalid_argument("tracing legs of different dimension");
        if (A.legs()[a].dir == A.legs()[b].dir) throw std::invalid_argument("tracing legs of equal orientation");
        p1.push_back(a);
        p2.push_back(b);
    }
    std::vector<int> fr;
    std::vector<Leg> legs;
    for (int i = 0; i < static_cast<int>(A.rank()); ++i)
        if (std::find(p1.begin(), p1.end(), i) == p1.end() && std::find(p2.begin(), p2.end(), i) == p2.end()) {
            fr.push_back(i);
            legs.push_back(A.legs()[i]);
        }
    LabeledTensor<S> R(legs);
    auto rF = detail::sub_index(A.legs(), fr), i1 = detail::sub_index(A.legs(), p1), i2 = detail::sub_index(A.legs(), p2);
    for (size_t f = 0; f < A.size(); ++f)
        if (i1[f] == i2[f] && !is_zero(A[f])) R[rF[f]] += A[f];
    return R;
}

// Reorder legs; `order` lists the new position's source leg.
template <class S>
LabeledTensor<S> permute_legs(const LabeledTensor<S>& A, const std::vector<int>& order)
{
    std::vector<Leg> legs;
    for (int i : order) legs.push_back(A.legs()[i]);
    LabeledTensor<S> R(legs);
    std::vector<int> inv(order.size());
    for (size_t k = 0; k < order.size(); ++k) inv[order[k]] = static_cast<int>(k);
    // composite index of A's flat position in the new ordering
    auto idx = detail::sub_index(A.legs(), order);
    for (size_t f = 0; f < A.size(); ++f) R[idx[f]] = A[f];
    return R;
}

template <class S>
LabeledTensor<S> permute_legs(const LabeledTensor<S>& A, const std::vector<LegRef>& order)
{
    std::vector<int> o;
    for (auto& r : order) o.push_back(A.at_leg(r));
    if (o.size() != A.rank()) throw std::invalid_argument("leg permutation must list every leg");
    return permute_legs(A, o);
}

// A network of tensors whose leg names are unique across the whole list;
// `pairings` joins legs by name.  Pairings are visited in the given order; on
// visiting one, every still-pending pairing between the same two clusters is
// contracted with it (or traced, inside one cluster).  Unpaired legs remain.
template <class S>
LabeledTensor<S> contract_network(const std::vector<LabeledTensor<S>>& ts,
                                  const std::vector<std::pair<LegRef, LegRef>>& pairings)
{
    std::vector<LabeledTensor<S>> cl(ts.begin(), ts.end());
    std::vector<bool> alive(cl.size(), true), done(pairings.size(), false);
    auto owner = [&](const LegRef& r) {
        int hit = -1;
        for (size_t i = 0; i < cl.size(); ++i)
            if (alive[i] && cl[i].find(r) >= 0) {
                if (hit >= 0) throw std::invalid_argument("leg name not unique in network: " + r.site);
                hit = static_cast<int>(i);
            }
        if (hit < 0) throw std::invalid_argument("dangling pairing reference: " + r.site);
        return hit;
    };
    for (size_t k = 0; k < pairings.size(); ++k) {
        if (done[k]) continue;
        int a = owner(pairings[k].first), b = owner(pairings[k].second);
        std::vector<std::pair<LegRef, LegRef>> batch;
        for (size_t q = k; q < pairings.size(); ++q) {
            if (done[q]) continue;
            int x = owner(pairings[q].first), y = owner(pairings[q].second);
            if (x == a && y == b) {
                batch.push_back(pairings[q]);
                done[q] = true;
            } else if (a != b && x == b && y == a) {
                batch.push_back({pairings[q].second, pairings[q].first});
                done[q] = true;
            }
        }
        if (a == b) {
            cl[a] = trace_legs(cl[a], batch);
        } else {
            cl[a] = contract(cl[a], cl[b], batch);
            alive[b] = false;
        }
    }
    LabeledTensor<S> acc = LabeledTensor<S>::scalar(S(1));
    for (size_t i = 0; i < cl.size(); ++i)
        if (alive[i]) acc = contract(acc, cl[i], {});
    return acc;
}

// ---- operators on labelled sites ----

template <class S>
std::vector<std::string> op_sites(const LabeledTensor<S>& A)
{
    std::vector<std::string> s;
    for (auto& l : A.legs())
        if (l.dir == Dir::Out) s.push_back(l.site);
    return s;
}

template <class S>
int op_dim(const LabeledTensor<S>& A, const std::string& site)
{
    return A.legs()[A.at_leg(out(site))].dim;
}

template <class S>
LabeledTensor<S> op_canonical(const LabeledTensor<S>& A, const std::vector<std::string>& sites)
{
    std::vector<LegRef> order;
    for (auto& s : sites) order.push_back(out(s));
    for (auto& s : sites) order.push_back(in(s));
    return permute_legs(A, order);
}

template <class S>
LabeledTensor<S> op_zero(const std::vector<std::string>& sites, const std::vector<int>& dims)
{
    std::vector<Leg> legs;
    for (size_t i = 0; i < sites.size(); ++i) legs.push_back({sites[i], Dir::Out, dims[i]});
    for (size_t i = 0; i < sites.size(); ++i) legs.push_back({sites[i], Dir::In, dims[i]});
    return LabeledTensor<S>(legs);
}

template <class S>
LabeledTensor<S> op_identity(const std::vector<std::string>& sites, const std::vector<int>& dims)
{
    auto T = op_zero<S>(sites, dims);
    size_t n = 1;
    for (int d : dims) n *= d;
    for (size_t i = 0; i < n; ++i) T[i * n + i] = S(1);
    return T;
}

// Row-major square matrix of size prod(dims) acting on the given sites.
template <class S>
LabeledTensor<S> op_from_matrix(const std::vector<std::string>& sites, const std::vector<int>& dims,
                                const std::vector<S>& m)
{
    auto T = op_zero<S>(sites, dims);
    if (m.size() != T.size()) throw std::invalid_argument("matrix size does not match sites");
    T.data() = m;
    return T;
}

// Composition A*B: B acts first.  Sites present in only one factor pass
// through unchanged.  Result sites: those of A, then the extra ones of B.
template <class S>
LabeledTensor<S> op_mul(const LabeledTensor<S>& A, const LabeledTensor<S>& B)
{
    auto sa = op_sites(A), sb = op_sites(B);
    std::vector<std::pair<LegRef, LegRef>> pairs;
    std::vector<std::string> sites = sa;
    for (auto& s : sb) {
        if (std::find(sa.begin(), sa.end(), s) != sa.end())
            pairs.push_back({in(s), out(s)});
        else
            sites.push_back(s);
    }
    return op_canonical(contract(A, B, pairs), sites);
}

template <class S>
LabeledTensor<S> op_ptrace(const LabeledTensor<S>& A, const std::string& site)
{
    auto sites = op_sites(A);
    sites.erase(std::find(sites.begin(), sites.end(), site));
    return op_canonical(trace_legs(A, {{out(site), in(site)}}), sites);
}

template <class S>
S op_trace(const LabeledTensor<S>& A)
{
    std::vector<std::pair<LegRef, LegRef>> pairs;
    for (auto& s : op_sites(A)) pairs.push_back({out(s), in(s)});
    return trace_legs(A, pairs).scalar_value();
}

// Transpose in one site only.
template <class S>
LabeledTensor<S> op_transpose_site(const LabeledTensor<S>& A, const std::string& site)
{
    LabeledTensor<S> B = A;
    std::vector<Leg> legs = A.legs();
    for (auto& l : legs)
        if (l.site == site) l.dir = (l.dir == Dir::In ? Dir::Out : Dir::In);
    LabeledTensor<S> C(legs);
    C.data() = A.data();
    return op_canonical(C, op_sites(A));
}

template <class S>
LabeledTensor<S> op_relabel(LabeledTensor<S> A, const std::string& from, const std::string& to)
{
    A.rename_site(from, to);
    return A;
}

}  // namespace exactlin

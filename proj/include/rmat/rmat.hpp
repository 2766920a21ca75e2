#pragma once

#include "exactlin/ratfun.hpp"
#include "exactlin/tensor.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rmat {

using exactlin::LabeledTensor;
using exactlin::RatFun;

enum class RKind { ff, f_fbar, fbar_f, fbar_fbar };
enum class SpaceKind { f, fbar };

RKind kind_of(SpaceKind a, SpaceKind b);
const char* kind_name(RKind k);

inline mpq_class half_width(int n) { return exactlin::frac(n + 1, 2); }  // h = (n+1)/2

// P on V(x)V with sites (a, b); basis e_0..e_n.
template <class S>
LabeledTensor<S> permutation(int n, const std::string& a, const std::string& b)
{
    const int d = n + 1;
    auto T = exactlin::op_zero<S>({a, b}, {d, d});
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) T.at({j, i, i, j}) = S(1);
    return T;
}

// C~ (x) C~ = (n+1) P^- : rank-one projection onto s = sum_i e_i (x) e_{n-i}, unnormalised.
template <class S>
LabeledTensor<S> singlet_outer(int n, const std::string& a, const std::string& b)
{
    const int d = n + 1;
    auto T = exactlin::op_zero<S>({a, b}, {d, d});
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) T.at({i, n - i, j, n - j}) = S(1);
    return T;
}

// r(x) = x + P
template <class S>
LabeledTensor<S> r_num(int n, const S& x, const std::string& a, const std::string& b)
{
    const int d = n + 1;
    return exactlin::op_identity<S>({a, b}, {d, d}) * x + permutation<S>(n, a, b);
}

// rbar(x) = (x + (n+1)/2) - C~ (x) C~ ; symmetric in its two sites
template <class S>
LabeledTensor<S> rbar_num(int n, const S& x, const std::string& a, const std::string& b)
{
    const int d = n + 1;
    return exactlin::op_identity<S>({a, b}, {d, d}) * (x + S(half_width(n))) - singlet_outer<S>(n, a, b);
}

template <class S>
LabeledTensor<S> charge_conj(int n, const std::string& a)
{
    const int d = n + 1;
    auto T = exactlin::op_zero<S>({a}, {d});
    for (int i = 0; i < d; ++i) T.at({n - i, i}) = S(1);
    return T;
}

// (C (x) C) r(x) (C (x) C)
template <class S>
LabeledTensor<S> r_dual_dual(int n, const S& x, const std::string& a, const std::string& b)
{
    auto CC = exactlin::op_mul(charge_conj<S>(n, a), charge_conj<S>(n, b));
    return exactlin::op_canonical(exactlin::op_mul(exactlin::op_mul(CC, r_num<S>(n, x, a, b)), CC),
                                  std::vector<std::string>{a, b});
}

// The numerical R-matrix for a pair of spaces of the given kinds.
template <class S>
LabeledTensor<S> r_of_kind(RKind k, int n, const S& x, const std::string& a, const std::string& b)
{
    switch (k) {
    case RKind::ff: return r_num<S>(n, x, a, b);
    case RKind::fbar_fbar: return r_dual_dual<S>(n, x, a, b);
    default: return rbar_num<S>(n, x, a, b);
    }
}

// Singlet as a vector (two out-legs a, b) and its dual (two in-legs).
template <class S>
LabeledTensor<S> singlet_vector(int n, const std::string& a, const std::string& b)
{
    const int d = n + 1;
    LabeledTensor<S> t({{a, exactlin::Dir::Out, d}, {b, exactlin::Dir::Out, d}});
    for (int i = 0; i < d; ++i) t.at({i, n - i}) = S(1);
    return t;
}

template <class S>
LabeledTensor<S> singlet_dual(int n, const std::string& a, const std::string& b)
{
    const int d = n + 1;
    LabeledTensor<S> t({{a, exactlin::Dir::In, d}, {b, exactlin::Dir::In, d}});
    for (int i = 0; i < d; ++i) t.at({i, n - i}) = S(1);
    return t;
}

template <class S>
LabeledTensor<S> singlet_projector(int n, const std::string& a, const std::string& b)
{
    return singlet_outer<S>(n, a, b) * S(exactlin::frac(1, n + 1));
}

// Chevalley generators on V (i = 1..n): E_i = e_{i-1} e_i^T, F_i = E_i^T, H_i = E_{i-1,i-1} - E_{i,i}.
enum class Chevalley { E, F, H };
std::vector<mpq_class> chevalley_matrix(int n, Chevalley g, int i, SpaceKind kind);

template <class S>
LabeledTensor<S> chevalley_on(int n, Chevalley g, int i, SpaceKind kind, const std::string& site)
{
    auto m = chevalley_matrix(n, g, i, kind);
    std::vector<S> ms(m.begin(), m.end());
    return exactlin::op_from_matrix<S>({site}, {n + 1}, ms);
}

// Diagonal (coproduct) action on several sites, as an operator on all of them.
template <class S>
LabeledTensor<S> diagonal_action(int n, Chevalley g, int i, const std::vector<std::string>& sites,
                                 const std::vector<SpaceKind>& kinds)
{
    std::vector<int> dims(sites.size(), n + 1);
    auto acc = exactlin::op_zero<S>(sites, dims);
    for (size_t s = 0; s < sites.size(); ++s) {
        auto one = chevalley_on<S>(n, g, i, kinds[s], sites[s]);
        for (size_t t = 0; t < sites.size(); ++t)
            if (t != s) one = exactlin::op_mul(one, exactlin::op_identity<S>({sites[t]}, {n + 1}));
        acc += exactlin::op_canonical(one, sites);
    }
    return acc;
}

// Antisymmetric fusion: F_de : V_a (x) V_b -> Lambda^2 V (site w) and F_fu = -F_de^T.
struct FusionMaps {
    LabeledTensor<mpq_class> down;  // out w; in a, b
    LabeledTensor<mpq_class> up;    // out a, b; in w
    int wedge_dim;
};
FusionMaps antisym_fusion(int n, const std::string& a, const std::string& b, const std::string& w);

// ---- symbolic prefactors ----

// prod rho(lambda + s)^e times a rational function of lambda.
class PrefactorExpr {
public:
    explicit PrefactorExpr(int n) : n_(n), rat_(1) {}

    // rho(sign*lambda + s)^e, sign = +1 or -1
    PrefactorExpr& rho(int sign, const mpq_class& s, int e = 1);
    PrefactorExpr& times(const RatFun& f);
    PrefactorExpr& operator*=(const PrefactorExpr& o);

    int n() const { return n_; }
    const std::map<mpq_class, int>& factors() const { return rho_; }  // shift -> exponent, canonical lambda + s
    const RatFun& rational() const { return rat_; }
    std::string str() const;

private:
    int n_;
    std::map<mpq_class, int> rho_;
    RatFun rat_;
};

struct PrefactorResult {
    std::optional<RatFun> value;               // set iff every rho cancelled
    std::vector<std::pair<mpq_class, int>> surviving;
    RatFun partial;                            // rational part accumulated so far
};

enum class ScanOrder { forward, reverse };
PrefactorResult prefactor_reduce(const PrefactorExpr& e, ScanOrder order = ScanOrder::forward);

// rho(y)/rho(y - j(n+1)) as a rational function of lambda, with y = lambda + s
RatFun rho_ratio(int n, const mpq_class& s, int j);

// Scalar of R(x) = rho(x)/(x+1) r(x) and Rbar(x) = rhobar(x)/(x+(n-1)/2) rbar(x),
// rhobar(x) = 1/rho(x + (n+1)/2), for x = sign*lambda + s.
PrefactorExpr r_prefactor(int n, int sign, const mpq_class& s);
PrefactorExpr rbar_prefactor(int n, int sign, const mpq_class& s);

}  // namespace rmat

#pragma once

#include "exactlin/rank.hpp"
#include "exactlin/report.hpp"
#include "lattice/lattice.hpp"
#include "qchar/qchar.hpp"

#include <string>
#include <vector>

namespace snail {

using exactlin::RatFun;
using exactlin::VerificationReport;
using lattice::Op;

struct PoleProfile {
    RatFun f;
    int order_at_0;
};

// prod_{j=1..k} 1/[(x - j(n+1) - l)(x - (j-1)(n+1) - l)(x - (j-1)(n+1) - l + 1)(x - (j-1)(n+1) - l - 1)]
PoleProfile pole_profile(int n, int k, int l);

// order at 0 against the claim: a simple pole for l in {0, 1}, none for l = 2..n
VerificationReport check_pole_profile(int n, int k, int l);

// Residue at lam1 = lam2 of A^{(2)}(lam1 - (2k-1)h) A^{(1)}(lam1 - (2k-2)h) ... A^{(2)}(lam1 - h),
// h = (n+1)/2, applied to the identity on (1b, 2..m).
struct SnailSpec {
    int n = 2;
    int k = 1;
    int m = 2;
    std::vector<mpq_class> mu;  // mu_2..mu_m (mu_1 is the residue variable)

    int loops() const { return 2 * k - 1; }
    rmat::SpaceKind loop_kind(int i) const { return i % 2 == 1 ? rmat::SpaceKind::fbar : rmat::SpaceKind::f; }
    mpq_class loop_shift(int i) const { return mu.at(0) - exactlin::frac(i * (n + 1), 2); }  // delta_i
    void validate() const;
};

struct SnailResult {
    Op op;             // on sites 1..m
    RatFun scalar;     // reduced prefactor of the whole chain, variable lam1
    mpq_class residue; // its residue at lam1 = lam2
    int pole_order;
};

// Scalar residue times the numerical chain evaluated at the pole.
SnailResult snail_operator(const SnailSpec& spec);

enum class NetworkOrder { forward, reverse };

// The same chain as one closed tensor network with a fresh label on every
// wire segment, contracted in the given pairing order.  With identity_insertion
// every kept output space is produced as tr_a(X_a P_{a,s}) instead of directly.
Op snail_network(const SnailSpec& spec, NetworkOrder order, bool identity_insertion);

// k = 1 only: the single A^{(2)} with rational-function entries in lam1, residue taken entrywise.
Op snail_single_a2_symbolic(const SnailSpec& spec);

// Ordered product over loop pairs i < j (lexicographic) of the numerical
// R-matrix of the pair's kinds at delta_i - delta_j = (j-i)(n+1)/2.
// Loop i is antifundamental for odd i; sites "l1".."l<count>".
Op fusion_operator(int n, int loop_count);
Op fusion_operator(int n, const std::vector<rmat::SpaceKind>& kinds, const std::vector<mpq_class>& shifts);

VerificationReport check_fusion_exchange(int n, int loop_count, int i);
VerificationReport snake_rank_check(int n, int k);
VerificationReport snail_wellformed(const SnailSpec& spec);

// Exploratory finite-lattice experiments (n = 2).
VerificationReport l1_fusion_check(const lattice::LatticeSpec& spec, int m, const mpq_class& lam);
VerificationReport singlet_reduction_check(const lattice::LatticeSpec& spec, int m, const mpq_class& lam);

}  // namespace snail

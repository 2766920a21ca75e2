#pragma once

#include "exactlin/report.hpp"
#include "qchar/qchar.hpp"

namespace qchar {

using exactlin::VerificationReport;

// Closed formula against the A-string Y_{node,s} prod A^{-1}, weight reduction
// and monomial count.
VerificationReport check_fundamental(int n, int node, int shift = 0);

// special, anti-special, thin and Q^- containment of S^{(l)}
VerificationReport check_snake_structure(int n, Parity parity, int l, int shift = 0);

// Three identities of the alternating family, all exact in the Laurent ring:
//   left  S^{(1)}_{p}(s) S^{(l)}_{p+1}(s+n+1) = S^{(l+1)}_p(s) + S^{(l-1)}_p(s+2(n+1))
//   right S^{(l)}_p(s) F_{N(p+l)}(s+l(n+1)) = S^{(l+1)}_p(s) + S^{(l-1)}_p(s)
//   pair  S^{(l)}_p(s+n+1) S^{(l)}_{p+1}(s) = S^{(l+1)}_{p+1}(s) S^{(l-1)}_p(s+n+1) + 1
VerificationReport check_extended_tsystem(int n, Parity parity, int l, int shift = 0);

VerificationReport check_census(int n, int l, Parity parity = Parity::even, int shift = 0);
VerificationReport check_composition(int n, int l, Parity parity = Parity::even, int shift = 0);

// n = 2: T-system residual at level k and dimension against the Weyl formula
VerificationReport check_kr(int node, int k);

// dimension of the sl_3 irreducible with highest weight a w_1 + b w_2
long weyl_dim_sl3(int a, int b);

}  // namespace qchar

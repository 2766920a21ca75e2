#pragma once

#include "exactlin/report.hpp"
#include "rmat/rmat.hpp"

namespace rmat {

using exactlin::VerificationReport;

// YBE r_ab(x_a-x_b) r_ac(x_a-x_c) r_bc(x_b-x_c) = r_bc r_ac r_ab for all eight
// kind triples, on a grid of (degree+1)^2 rational points in the two differences.
VerificationReport check_ybe(int n);

// r(x) r(-x) = (1-x^2), rbar(x) rbar(-x) = (h^2-x^2), rdd(x) rdd(-x) = (1-x^2),
// with polynomial entries.
VerificationReport check_unitarity(int n);

// (1 (x) C) r(-x-h)^{t_2} (1 (x) C) = c rbar(x) with one constant c.
VerificationReport check_crossing(int n);

// rbar(-h) = -(n+1) P^- has rank 1; r(-1)/(-2) is an idempotent of rank n(n+1)/2.
VerificationReport check_special_points(int n);

// all kinds commute with the diagonal Chevalley action at three seeded points
VerificationReport check_invariance(int n, unsigned long seed);

// dual pairing n+1, (P^-)^2 = P^-, tr P^- = 1, invariance of the singlet
VerificationReport check_singlet(int n);

// F_fu F_de = r(-1), F_de F_fu = -2 on the wedge square
VerificationReport check_fusion_maps(int n);

// the two functional relations, an irreducible single factor, and agreement of
// forward and reverse reduction on A-operator and chain prefactors
VerificationReport check_prefactor(int n);

}  // namespace rmat

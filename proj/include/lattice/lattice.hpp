#pragma once

#include "exactlin/rank.hpp"
#include "exactlin/report.hpp"
#include "exactlin/tensor.hpp"
#include "rmat/rmat.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace lattice {

using exactlin::LabeledTensor;
using exactlin::RatFun;
using exactlin::VerificationReport;
using Op = LabeledTensor<mpq_class>;
using rmat::SpaceKind;

// Torus with L vertical lines (sites 1..L) and N pairs of horizontal lines.
// Horizontal pair j carries a fundamental line at beta_j and an antifundamental
// one at betabar_j (by default (n+1)/2 - beta_j).
struct LatticeSpec {
    int n = 2;
    int L = 1;
    int N = 1;
    std::vector<mpq_class> mu;       // mu_1..mu_L
    std::vector<mpq_class> beta;     // beta_1..beta_N
    std::vector<mpq_class> betabar;  // betabar_1..betabar_N

    static LatticeSpec make(int n, int L, int N, std::vector<mpq_class> mu, std::vector<mpq_class> beta);
    void validate() const;
    LatticeSpec with_window(const std::vector<mpq_class>& window) const;  // overwrite mu_1..mu_m
    LatticeSpec translated(const mpq_class& u) const;

    // Seeded parameters such that no two of mu, beta, betabar differ by a
    // multiple of 1/2, which keeps every configured check away from its poles.
    static LatticeSpec generic(int n, int L, int N, unsigned long seed);
};

struct VanishingPartition : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Site names: "1".."L"; in the variant-1 window site 1 is the antifundamental "1b".
std::string site_name(int p, int variant = 0);

enum class Direction { T, Tbar };

// Monodromy on fundamental sites with auxiliary site "a":
//   T    = r_{aL}(lam - mu_L) ... r_{a1}(lam - mu_1)
//   Tbar = r_{a1}(mu_1 - lam) ... r_{aL}(mu_L - lam)
// with rbar in place of r for an antifundamental auxiliary line.
Op monodromy(const LatticeSpec& spec, const mpq_class& lam, Direction dir, SpaceKind aux);
Op transfer(const LatticeSpec& spec, const mpq_class& lam, Direction dir, SpaceKind aux = SpaceKind::f);

// One horizontal line traced over its auxiliary space, in the Tbar orientation
// used for the torus.  Site p has kind kinds[p-1].
Op row_transfer(const LatticeSpec& spec, const std::vector<SpaceKind>& kinds, const mpq_class& lam, SpaceKind aux);

// The full torus operator prod_j (fbar row_j)(f row_j) on sites 1..L.
Op torus(const LatticeSpec& spec, int variant);

struct DensityWindow {
    int m;
    int variant;
    Op tensor;  // operator on the window sites, unit trace
};

// Reduced density matrix on the window sites (1-based, increasing), all other
// sites traced; normalised to unit trace.  Variant 1 makes site 1 antifundamental.
DensityWindow density_window(const LatticeSpec& spec, const std::vector<int>& sites, int variant);
DensityWindow density_matrix(const LatticeSpec& spec, int m, int variant);
DensityWindow density_matrix(const LatticeSpec& spec, int m, const std::vector<mpq_class>& mu_window, int variant);

// ---- rqKZ operators ----

// Scalar prefactor of A^{(which)}(lam1 + offset | lam_2..lam_m) as a rational
// function of lam1, obtained by reducing the symbolic rho factors; throws if
// any rho survives.
RatFun a_scalar(int which, int n, const std::vector<mpq_class>& lam_rest, const mpq_class& offset = 0);

// A^{(1)}: operator on (1, 2..m) -> operator on (1b, 2..m)
//   tr_1( R_{1m}(x-l_m)..R_{12}(x-l_2) D (n+1)P^-_{1,1b} R_{21}(l_2-x)..R_{m1}(l_m-x) )
// A^{(2)}: operator on (1b, 2..m) -> operator on (1, 2..m), rbar throughout, tracing 1b.
// The numerical part only; multiply by the scalar separately.
template <class S>
LabeledTensor<S> a_operator_numeric(int which, int n, const S& x, const std::vector<S>& lam_rest,
                                    const LabeledTensor<S>& D)
{
    using exactlin::op_mul;
    const int m = static_cast<int>(lam_rest.size()) + 1;
    const std::string loop = which == 1 ? "1" : "1b";
    const std::string keep = which == 1 ? "1b" : "1";
    auto R = [&](const S& arg, const std::string& a, const std::string& b) {
        return which == 1 ? rmat::r_num<S>(n, arg, a, b) : rmat::rbar_num<S>(n, arg, a, b);
    };
    std::vector<std::string> rest;
    for (int j = 2; j <= m; ++j) rest.push_back(site_name(j));
    LabeledTensor<S> M = D;
    for (int j = 2; j <= m; ++j) M = op_mul(R(x - lam_rest[j - 2], loop, rest[j - 2]), M);
    M = op_mul(M, rmat::singlet_outer<S>(n, loop, keep));
    for (int j = 2; j <= m; ++j) M = op_mul(M, R(lam_rest[j - 2] - x, rest[j - 2], loop));
    M = exactlin::op_ptrace(M, loop);
    std::vector<std::string> order{keep};
    order.insert(order.end(), rest.begin(), rest.end());
    return exactlin::op_canonical(M, order);
}

Op a_operator(int which, int n, const mpq_class& lam1, const std::vector<mpq_class>& lam_rest, const Op& D);

// ---- checks ----

mpq_class max_abs_entry(const Op& t);
std::string first_nonzero(const Op& t);  // "(indices) value" or empty

VerificationReport verify_finite_rqkz(const LatticeSpec& spec, int m, int j);

VerificationReport check_unit_trace(const LatticeSpec& spec, int m, int variant);
VerificationReport check_left_right_reduction(const LatticeSpec& spec, int m);
VerificationReport check_invariance(const LatticeSpec& spec, int m, int variant);
VerificationReport check_exchange(const LatticeSpec& spec, int m);
VerificationReport check_colour_conservation(const LatticeSpec& spec, int m, int variant);
VerificationReport check_translation(const LatticeSpec& spec, int m, const mpq_class& u, int variant);

// seeded small-denominator rationals avoiding a finite forbidden set
bool half_integer_separated(const std::vector<mpq_class>& xs);

class RationalSampler {
public:
    explicit RationalSampler(unsigned long seed);
    mpq_class next();

private:
    std::mt19937_64 gen_;
};

}  // namespace lattice

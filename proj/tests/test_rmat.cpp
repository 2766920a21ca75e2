#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exactlin/rank.hpp"
#include "rmat/checks.hpp"

using namespace rmat;
using exactlin::op_canonical;
using exactlin::op_mul;
using Q = mpq_class;
using T = LabeledTensor<Q>;
using Mat = std::vector<std::vector<Q>>;

namespace {

// plain dense matrices, independent of the tensor code
Mat mul(const Mat& a, const Mat& b)
{
    size_t n = a.size();
    Mat c(n, std::vector<Q>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            if (sgn(a[i][k]) != 0)
                for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

// r(x) = x + P acting on factors (p, q) of (C^d)^{(x)3}
Mat r3(int d, const Q& x, int p, int q)
{
    int D = d * d * d;
    Mat m(D, std::vector<Q>(D));
    for (int idx = 0; idx < D; ++idx) {
        int v[3] = {idx / (d * d), idx / d % d, idx % d};
        m[idx][idx] += x;
        std::swap(v[p], v[q]);
        m[v[0] * d * d + v[1] * d + v[2]][idx] += 1;
    }
    return m;
}

Q det(Mat a)
{
    size_t n = a.size();
    Q d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && sgn(a[p][c]) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            Q f = a[r][c] / a[c][c];
            for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return d;
}

}  // namespace

TEST_CASE("r at zero is the permutation")
{
    CHECK(r_num<Q>(2, 0, "a", "b") == permutation<Q>(2, "a", "b"));
    CHECK(r_dual_dual<Q>(2, 0, "a", "b") == permutation<Q>(2, "a", "b"));
}

TEST_CASE("Yang-Baxter at (2, 5) against dense matrices")
{
    const int d = 3;
    Q l = 2, m = 5;
    Mat lhs = mul(mul(r3(d, l - m, 0, 1), r3(d, l, 0, 2)), r3(d, m, 1, 2));
    Mat rhs = mul(mul(r3(d, m, 1, 2), r3(d, l, 0, 2)), r3(d, l - m, 0, 1));
    CHECK(lhs == rhs);
    // the tensor implementation gives the same left side
    auto t = op_canonical(op_mul(op_mul(r_num<Q>(2, l - m, "a", "b"), r_num<Q>(2, l, "a", "c")),
                                 r_num<Q>(2, m, "b", "c")),
                          {"a", "b", "c"});
    for (int i = 0; i < 27; ++i)
        for (int j = 0; j < 27; ++j) CHECK(t[i * 27 + j] == lhs[i][j]);
}

TEST_CASE("unitarity r(x) r(-x) = 1 - x^2")
{
    for (Q x : {Q(3), Q(-1, 2), Q(7, 3)}) {
        auto p = op_canonical(op_mul(r_num<Q>(2, x, "a", "b"), r_num<Q>(2, -x, "a", "b")), {"a", "b"});
        CHECK(p == exactlin::op_identity<Q>({"a", "b"}, {3, 3}) * Q(1 - x * x));
    }
}

TEST_CASE("charge conjugation")
{
    auto C = charge_conj<Q>(2, "a");
    CHECK(op_mul(C, C) == exactlin::op_identity<Q>({"a"}, {3}));
    CHECK(C.at({0, 2}) == 1);
    CHECK(C.at({1, 1}) == 1);
    CHECK(C.at({0, 0}) == 0);
    CHECK(det(exactlin::flatten(C, {exactlin::out("a")}, {exactlin::in("a")})) == -1);
}

TEST_CASE("singlet normalisation")
{
    for (int n : {1, 2, 3}) {
        auto s = singlet_vector<Q>(n, "a", "b");
        auto sd = singlet_dual<Q>(n, "a", "b");
        using exactlin::in;
        using exactlin::out;
        CHECK(exactlin::contract(sd, s, {{in("a"), out("a")}, {in("b"), out("b")}}).scalar_value() == n + 1);
        auto outer = singlet_outer<Q>(n, "a", "b");
        CHECK(op_canonical(op_mul(outer, outer), {"a", "b"}) == outer * Q(n + 1));
        auto P = singlet_projector<Q>(n, "a", "b");
        CHECK(op_canonical(op_mul(P, P), {"a", "b"}) == P);
        CHECK(exactlin::op_trace(P) == 1);
        CHECK(exactlin::op_rank(P) == 1);
    }
}

TEST_CASE("rbar at -h")
{
    for (int n : {2, 3}) {
        auto rb = rbar_num<Q>(n, -half_width(n), "a", "b");
        CHECK(rb == singlet_projector<Q>(n, "a", "b") * Q(-(n + 1)));
    }
}

TEST_CASE("crossing at five points")
{
    const int n = 2;
    const Q h = half_width(n);
    auto C = charge_conj<Q>(n, "b");
    for (Q x : {Q(0), Q(1, 3), Q(-2), Q(5, 7), Q(9, 2)}) {
        auto t = exactlin::op_transpose_site(r_num<Q>(n, -x - h, "a", "b"), "b");
        auto lhs = op_canonical(op_mul(op_mul(C, t), C), {"a", "b"});
        CHECK(lhs == rbar_num<Q>(n, x, "a", "b") * Q(-1));
    }
}

TEST_CASE("antisymmetric fusion")
{
    auto F = antisym_fusion(2, "a", "b", "w");
    CHECK(F.wedge_dim == 3);
    CHECK(exactlin::op_rank(r_num<Q>(2, -1, "a", "b")) == 3);
    using exactlin::in;
    using exactlin::out;
    auto fu_de = exactlin::permute_legs(exactlin::contract(F.up, F.down, {{in("w"), out("w")}}),
                                        std::vector<exactlin::LegRef>{out("a"), out("b"), in("a"), in("b")});
    CHECK(fu_de == r_num<Q>(2, -1, "a", "b"));
}

TEST_CASE("wedge square is the antifundamental for n = 2")
{
    // F_de intertwines the diagonal action on V (x) V with the antifundamental action on w
    auto F = antisym_fusion(2, "a", "b", "w");
    for (auto g : {Chevalley::E, Chevalley::F, Chevalley::H})
        for (int i = 1; i <= 2; ++i) {
            auto D = diagonal_action<Q>(2, g, i, {"a", "b"}, {SpaceKind::f, SpaceKind::f});
            auto W = chevalley_on<Q>(2, g, i, SpaceKind::fbar, "w");
            using exactlin::in;
            using exactlin::out;
            auto left = exactlin::contract(F.down, D, {{in("a"), out("a")}, {in("b"), out("b")}});
            auto right = exactlin::contract(W, F.down, {{in("w"), out("w")}});
            std::vector<exactlin::LegRef> ord{out("w"), in("a"), in("b")};
            CHECK(exactlin::permute_legs(left, ord) == exactlin::permute_legs(right, ord));
        }
}

TEST_CASE("prefactor reduction")
{
    const auto x = RatFun::var();
    PrefactorExpr a(2);
    a.rho(1, 0).rho(-1, 0);
    CHECK(*prefactor_reduce(a).value == RatFun(1));
    PrefactorExpr b(2);
    b.rho(1, 0).rho(-1, 3);
    CHECK(*prefactor_reduce(b).value == x * (x - RatFun(3)) / ((x - RatFun(1)) * (x - RatFun(2))));
    PrefactorExpr c(2);
    c.rho(1, 0);
    auto rc = prefactor_reduce(c);
    CHECK_FALSE(rc.value.has_value());
    CHECK(rc.surviving.size() == 1);
    // rho(y)/rho(y - (n+1)) = g~(y)
    const Q s(1, 5);
    const RatFun y = x + RatFun(s);
    CHECK(rho_ratio(2, s, 1) == y * (y - RatFun(3)) / ((y - RatFun(1)) * (y - RatFun(2))));
    CHECK(rho_ratio(2, s, 2) == rho_ratio(2, s, 1) * rho_ratio(2, s - 3, 1));
    CHECK(rho_ratio(2, s, -1) * rho_ratio(2, s + 3, 1) == RatFun(1));
}

TEST_CASE("rmat check reports")
{
    for (int n : {2, 3}) {
        CHECK_FALSE(check_ybe(n).failed());
        CHECK_FALSE(check_unitarity(n).failed());
        CHECK_FALSE(check_crossing(n).failed());
        CHECK_FALSE(check_special_points(n).failed());
        CHECK_FALSE(check_invariance(n, 17).failed());
        CHECK_FALSE(check_singlet(n).failed());
        CHECK_FALSE(check_fusion_maps(n).failed());
        CHECK_FALSE(check_prefactor(n).failed());
    }
}

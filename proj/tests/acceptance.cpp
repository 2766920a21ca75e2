// Acceptance run: one line per criterion, nonzero exit if a gating criterion fails.
#include "lattice/lattice.hpp"
#include "qchar/checks.hpp"
#include "rmat/checks.hpp"
#include "snail/snail.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using loopring::LaurentCombination;
using loopring::LoopMonomial;
using qchar::Parity;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;

    void expect(bool cond, const std::string& what)
    {
        if (!cond && ok) note = what;
        ok = ok && cond;
    }
    void expect(const exactlin::VerificationReport& r)
    {
        expect(r.status == exactlin::Status::pass, r.check + " " + r.lhs + " | " + r.rhs + " | " + r.witness);
    }
};

int hard_failures = 0;

void criterion(int id, double budget_s, bool gating, const std::function<Outcome()>& body)
{
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.ok = false;
        o.note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs <= budget_s;
    const char* word = !gating ? "EXPLORATORY" : (o.ok && in_time) ? "PASS" : "FAIL";
    std::printf("criterion %d: %s (%.2f s, budget %.0f s)", id, word, secs, budget_s);
    if (gating && o.ok && !in_time) std::printf(" over budget");
    if (!o.note.empty()) std::printf(" -- %s", o.note.c_str());
    std::printf("\n");
    std::fflush(stdout);
    if (gating && !(o.ok && in_time)) ++hard_failures;
}

LaurentCombination mono(const std::vector<std::array<int, 3>>& ys)
{
    LoopMonomial m;
    for (auto& y : ys) m *= LoopMonomial::Y(y[0], y[1], y[2]);
    return LaurentCombination(m);
}

// Y_{1,s} + sum_{j=1..n} Y_{j,s+j+1}^{-1} Y_{j+1,s+j}, with Y_{n+1} = 1; node n by the diagram flip
LaurentCombination fundamental_formula(int n, int node, int s)
{
    auto idx = [&](int j) { return node == 1 ? j : n + 1 - j; };
    LaurentCombination out = mono({{idx(1), s, 1}});
    for (int j = 1; j <= n; ++j) {
        std::vector<std::array<int, 3>> ys{{idx(j), s + j + 1, -1}};
        if (j < n) ys.push_back({idx(j + 1), s + j, 1});
        out += mono(ys);
    }
    return out;
}

bool all_nonneg(const LoopMonomial& m)
{
    for (auto& [key, e] : m.support())
        if (e < 0) return false;
    return true;
}

bool all_nonpos(const LoopMonomial& m)
{
    for (auto& [key, e] : m.support())
        if (e > 0) return false;
    return true;
}

int node_of(int n, int t) { return t % 2 == 0 ? 1 : n; }

LoopMonomial snake_top(int n, int p, int l, int s)
{
    LoopMonomial m;
    for (int t = 0; t < l; ++t) m *= LoopMonomial::Y(node_of(n, p + t), s + t * (n + 1));
    return m;
}

// d_l = (n+1) d_{l-1} - d_{l-2}
long snake_dim(int n, int l)
{
    long a = 1, b = n + 1;
    if (l == 0) return 1;
    for (int i = 2; i <= l; ++i) {
        long c = (n + 1) * b - a;
        a = b;
        b = c;
    }
    return b;
}

LaurentCombination S(int n, int p, int l, int s)
{
    if (l < 0) return LaurentCombination();
    if (l == 0) return LaurentCombination::constant(1);
    return qchar::snake_qchar(n, p % 2 == 0 ? Parity::even : Parity::odd, l, s).chr;
}

LaurentCombination F(int n, int node, int s) { return qchar::fundamental_qchar(n, node, s).chr; }

long fib(int l)  // T(1) = 1, T(2) = 2
{
    long a = 1, b = 2;
    if (l == 1) return 1;
    for (int i = 3; i <= l; ++i) {
        long c = a + b;
        a = b;
        b = c;
    }
    return b;
}

long count_dominant(const LaurentCombination& c)
{
    long total = 0;
    for (auto& [m, coef] : c.terms())
        if (all_nonneg(m)) total += coef.get_si();
    return total;
}

long long ipow(long long b, int e)
{
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

int main()
{
    criterion(1, 1, true, [] {
        Outcome o;
        for (int n = 2; n <= 5; ++n)
            for (int node : {1, n})
                for (int s : {0, 3}) {
                    auto got = qchar::fundamental_qchar(n, node, s).chr;
                    o.expect(got == fundamental_formula(n, node, s),
                             "n=" + std::to_string(n) + " node=" + std::to_string(node) + ": " + got.to_text());
                }
        return o;
    });

    criterion(2, 10, true, [] {
        Outcome o;
        for (int n : {2, 3})
            for (int p : {0, 1})
                for (int l = 1; l <= 6; ++l) {
                    auto c = S(n, p, l, 0);
                    std::string tag = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " l=" + std::to_string(l);
                    long dom = 0, anti = 0;
                    bool thin = true, top_seen = false;
                    for (auto& [m, coef] : c.terms()) {
                        thin = thin && coef == 1;
                        if (all_nonneg(m)) {
                            ++dom;
                            top_seen = m == snake_top(n, p, l, 0);
                        }
                        if (all_nonpos(m)) ++anti;
                    }
                    o.expect(dom == 1 && top_seen, tag + " special");
                    o.expect(anti == 1, tag + " anti-special");
                    o.expect(thin, tag + " thin");
                    o.expect(c.coefficient_sum() == snake_dim(n, l), tag + " dimension");
                }
        return o;
    });

    criterion(3, 30, true, [] {
        Outcome o;
        for (int n : {2, 3}) {
            const int w = n + 1;
            for (int p : {0, 1})
                for (int l = 1; l <= 4; ++l) {
                    std::string tag = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " l=" + std::to_string(l);
                    o.expect(S(n, p, 1, 0) * S(n, p + 1, l, w) == S(n, p, l + 1, 0) + S(n, p, l - 1, 2 * w),
                             tag + " left identity");
                    o.expect(S(n, p, l, 0) * F(n, node_of(n, p + l), l * w) == S(n, p, l + 1, 0) + S(n, p, l - 1, 0),
                             tag + " right identity");
                    o.expect(S(n, p, l, w) * S(n, p + 1, l, 0) ==
                                 S(n, p + 1, l + 1, 0) * S(n, p, l - 1, w) + LaurentCombination::constant(1),
                             tag + " pair identity");
                }
        }
        return o;
    });

    criterion(4, 30, true, [] {
        Outcome o;
        std::string sums;
        for (int n : {2, 3})
            for (int l = 1; l <= 5; ++l) {
                auto prod = qchar::alternating_product(n, Parity::even, 0, l).chr;
                long got = count_dominant(prod);
                o.expect(got == fib(l + 1), "n=" + std::to_string(n) + " l=" + std::to_string(l) + " count " +
                                                std::to_string(got));
                if (n == 2) sums += (sums.empty() ? "" : ",") + std::to_string(qchar::binomial_sum(l));
            }
        if (o.ok) o.note = "binomial sums l=1..5 (recorded): " + sums;
        return o;
    });

    criterion(5, 30, true, [] {
        Outcome o;
        for (int n : {2, 3})
            for (int l = 1; l <= 4; ++l) {
                auto prod = qchar::alternating_product(n, Parity::even, 0, l).chr;
                auto fs = qchar::composition_factors(n, Parity::even, 0, l);
                LaurentCombination sum;
                mpz_class dims = 0;
                for (auto& f : fs) {
                    sum += f.chr.chr;
                    dims += f.chr.chr.coefficient_sum();
                }
                std::string tag = "n=" + std::to_string(n) + " l=" + std::to_string(l);
                o.expect((prod - sum).is_zero(), tag + " nonzero remainder");
                o.expect(dims == static_cast<long>(ipow(n + 1, l + 1)), tag + " dimension sum " + dims.get_str());
                o.expect(static_cast<long>(fs.size()) == fib(l + 1), tag + " factor count");
            }
        return o;
    });

    criterion(6, 5, true, [] {
        Outcome o;
        for (int k = 1; k <= 3; ++k) {
            long weyl = (k + 1) * (k + 2) / 2;  // highest weight k w_1 of sl_3
            o.expect(qchar::module_dim(qchar::kr_qchar(2, 1, k, 0)) == weyl, "dim W_1^(" + std::to_string(k) + ")");
            o.expect(qchar::check_kr(1, k));
            o.expect(qchar::check_kr(2, k));
        }
        o.expect(qchar::module_dim(qchar::kr_qchar(2, 1, 2, 0)) == 6, "dim W_1^(2) != 6");
        o.expect(qchar::module_dim(qchar::kr_qchar(2, 1, 3, 0)) == 10, "dim W_1^(3) != 10");
        return o;
    });

    criterion(7, 10, true, [] {
        Outcome o;
        for (int n : {2, 3}) {
            o.expect(rmat::check_ybe(n));
            o.expect(rmat::check_unitarity(n));
            o.expect(rmat::check_crossing(n));
            o.expect(rmat::check_special_points(n));
            o.expect(rmat::check_invariance(n, 1));
        }
        return o;
    });

    criterion(8, 1, true, [] {
        Outcome o;
        for (int n : {2, 3, 4})
            for (int k : {1, 2})
                for (int l = 0; l <= n; ++l) {
                    // count the factors x - c of the profile with c = 0
                    int zeros = 0;
                    for (int j = 1; j <= k; ++j)
                        for (int c : {j * (n + 1) + l, (j - 1) * (n + 1) + l, (j - 1) * (n + 1) + l - 1,
                                      (j - 1) * (n + 1) + l + 1})
                            zeros += c == 0;
                    int expect = l <= 1 ? 1 : 0;
                    auto prof = snail::pole_profile(n, k, l);
                    std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " l=" + std::to_string(l);
                    o.expect(zeros == expect, tag + " oracle order " + std::to_string(zeros));
                    o.expect(prof.order_at_0 == expect, tag + " order " + std::to_string(prof.order_at_0));
                }
        return o;
    });

    criterion(9, 60, true, [] {
        Outcome o;
        lattice::RationalSampler gen(7);
        const mpq_class u = gen.next() + mpq_class(1, 101);
        for (int L = 1; L <= 3; ++L) {
            auto spec = lattice::LatticeSpec::generic(2, L, 1, 1000 + L);
            for (int m = 1; m <= L; ++m) {
                for (int v : {0, 1}) {
                    o.expect(lattice::check_unit_trace(spec, m, v));
                    o.expect(lattice::check_invariance(spec, m, v));
                    o.expect(lattice::check_colour_conservation(spec, m, v));
                    o.expect(lattice::check_translation(spec, m, u, v));
                }
                if (m >= 2) {
                    o.expect(lattice::check_left_right_reduction(spec, m));
                    o.expect(lattice::check_exchange(spec, m));
                }
            }
        }
        return o;
    });

    criterion(10, 60, true, [] {
        Outcome o;
        for (int L = 2; L <= 3; ++L) {
            auto spec = lattice::LatticeSpec::generic(2, L, 1, 2000 + L);
            for (int m = 1; m <= L; ++m) o.expect(lattice::verify_finite_rqkz(spec, m, 1));
        }
        return o;
    });

    criterion(11, 120, true, [] {
        Outcome o;
        for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 3}}) {
            auto r = snail::snake_rank_check(n, k);
            o.expect(r);
            // rank claimed against an independent dimension count
            o.expect(r.residual_rank.value_or(-1) == snake_dim(n, 2 * k - 1),
                     "rank at (" + std::to_string(n) + "," + std::to_string(k) + "): " + r.lhs);
        }
        return o;
    });

    criterion(12, 60, true, [] {
        Outcome o;
        snail::SnailSpec sp;
        sp.n = 2;
        sp.k = 1;
        sp.m = 2;
        auto lat = lattice::LatticeSpec::generic(2, 2, 1, 3000);
        sp.mu = {lat.mu[1]};  // mu_2; mu_1 is the residue variable
        o.expect(snail::snail_wellformed(sp));
        return o;
    });

    criterion(13, 120, false, [] {
        Outcome o;
        std::ostringstream notes;
        for (int L = 2; L <= 3; ++L) {
            auto spec = lattice::LatticeSpec::generic(2, L, 1, 4000 + L);
            for (int m = 2; m <= L; ++m) {
                mpq_class lam = spec.mu[0] + mpq_class(1, 7);
                auto a = snail::l1_fusion_check(spec, m, lam);
                auto b = snail::singlet_reduction_check(spec, m, lam);
                notes << "L=" << L << " m=" << m << " l1 fusion: " << a.witness << "; singlet reduction: " << b.witness << ". ";
            }
        }
        o.note = notes.str();
        return o;
    });

    std::printf("%d gating criteria failed\n", hard_failures);
    return hard_failures == 0 ? 0 : 1;
}

#include "qchar/qchar.hpp"

#include <map>
#include <string>
#include <tuple>

namespace qchar {

using loopring::exact_divide;

const char* provenance_name(Provenance p)
{
    switch (p) {
    case Provenance::fundamental: return "fundamental";
    case Provenance::kirillov_reshetikhin: return "kirillov-reshetikhin";
    case Provenance::snake: return "snake";
    case Provenance::product: return "product";
    case Provenance::virtual_: return "virtual";
    }
    return "?";
}

int alternating_node(int n, int t) { return (t % 2 == 0) ? 1 : n; }

Parity parity_from_string(const std::string& s)
{
    if (s == "even" || s == "0") return Parity::even;
    if (s == "odd" || s == "1") return Parity::odd;
    throw std::invalid_argument("parity must be even or odd");
}

ModuleChar fundamental_qchar(int n, int node, int shift)
{
    if (n < 1) throw std::invalid_argument("rank must be positive");
    if (node != 1 && node != n) throw Unsupported("fundamental character only for the extremal nodes");
    using M = LoopMonomial;
    LaurentCombination c;
    if (node == 1) {
        c.add_term(M::Y(1, shift), 1);
        c.add_term(M::Y(n, shift + n + 1, -1), 1);
        for (int k = 1; k <= n - 1; ++k) c.add_term(M::Y(k + 1, shift + k) * M::Y(k, shift + k + 1, -1), 1);
    } else {
        c.add_term(M::Y(1, shift + n + 1, -1), 1);
        c.add_term(M::Y(n, shift), 1);
        for (int k = 1; k <= n - 1; ++k)
            c.add_term(M::Y(k + 1, shift + n + 1 - k, -1) * M::Y(k, shift + n - k), 1);
    }
    return {c, Provenance::fundamental};
}

namespace {

void require_thin(const LaurentCombination& c, int l)
{
    for (auto& [m, k] : c.terms())
        if (k != 1)
            throw InconsistencyError("snake recursion produced coefficient " + k.get_str() + " at " + m.str() +
                                     " (length " + std::to_string(l) + ")");
}

class SnakeTable {
public:
    explicit SnakeTable(int n) : n_(n) {}

    // unshifted S^{(l)} whose first factor is node N(p)
    const LaurentCombination& get(int p, int l)
    {
        auto key = std::make_pair(p & 1, l);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        LaurentCombination v;
        if (l == 0)
            v = LaurentCombination::constant(1);
        else if (l == 1)
            v = fundamental_qchar(n_, alternating_node(n_, p), 0).chr;
        else {
            // S^{(l)}_p(s) = F_{N(p)}(s) S^{(l-1)}_{p+1}(s+n+1) - S^{(l-2)}_{p+2}(s+2(n+1))
            LaurentCombination f = fundamental_qchar(n_, alternating_node(n_, p), 0).chr;
            v = f * get(p + 1, l - 1).shifted(n_ + 1) - get(p, l - 2).shifted(2 * (n_ + 1));
            require_thin(v, l);
        }
        return memo_.emplace(key, std::move(v)).first->second;
    }

private:
    int n_;
    std::map<std::pair<int, int>, LaurentCombination> memo_;
};

}  // namespace

ModuleChar snake_qchar(int n, Parity parity, int l, int shift)
{
    if (l < 0) throw std::invalid_argument("snake length must be nonnegative");
    SnakeTable t(n);
    return {t.get(static_cast<int>(parity), l).shifted(shift), Provenance::snake};
}

LoopMonomial snake_highest(int n, Parity parity, int l, int shift)
{
    LoopMonomial m;
    for (int t = 0; t < l; ++t)
        m *= LoopMonomial::Y(alternating_node(n, static_cast<int>(parity) + t), shift + t * (n + 1));
    return m;
}

ModuleChar kr_qchar(int n, int node, int k, int shift)
{
    if (n != 2) throw Unsupported("Kirillov-Reshetikhin characters are implemented for n = 2 only");
    if (node != 1 && node != 2) throw std::out_of_range("node out of range");
    if (k < 0) throw std::invalid_argument("level must be nonnegative");
    // W[i][k] unshifted; T-system solved upward in k:
    // W_i^{(k+1)}(s) = (W_i^{(k)}(s) W_i^{(k)}(s+2) - W_j^{(k)}(s+1)) / W_i^{(k-1)}(s+2)
    std::vector<std::vector<LaurentCombination>> W(3);
    for (int i = 1; i <= 2; ++i) {
        W[i].push_back(LaurentCombination::constant(1));
        W[i].push_back(fundamental_qchar(2, i, 0).chr);
    }
    for (int kk = 1; kk < k; ++kk)
        for (int i = 1; i <= 2; ++i) {
            int j = 3 - i;
            LaurentCombination num = W[i][kk] * W[i][kk].shifted(2) - W[j][kk].shifted(1);
            W[i].push_back(exact_divide(num, W[i][kk - 1].shifted(2)));
        }
    return {W[node][k].shifted(shift), Provenance::kirillov_reshetikhin};
}

ModuleChar alternating_product(int n, Parity parity, int base_shift, int l)
{
    if (l < 0) throw std::invalid_argument("l must be nonnegative");
    LaurentCombination c = LaurentCombination::constant(1);
    for (int t = 0; t <= l; ++t)
        c *= fundamental_qchar(n, alternating_node(n, static_cast<int>(parity) + t), base_shift + t * (n + 1)).chr;
    return {c, Provenance::product};
}

mpz_class module_dim(const ModuleChar& c)
{
    if (c.provenance == Provenance::virtual_) throw std::invalid_argument("dimension of a virtual character");
    return c.chr.coefficient_sum();
}

long tiling_count(int cells)
{
    if (cells <= 0) return 1;
    long a = 1, b = 1;  // T(0) = 1, T(1) = 1
    for (int j = 2; j <= cells; ++j) {
        long c = a + b;
        a = b;
        b = c;
    }
    return b;
}

long binomial_sum(int l)
{
    long s = 0;
    for (int k = 0; 2 * k <= l; ++k) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), l - k, k);
        s += b.get_si();
    }
    return s;
}

CensusCount count_dominant_census(int n, int l, Parity parity, int base_shift)
{
    auto prod = alternating_product(n, parity, base_shift, l);
    long cnt = 0;
    for (auto& [m, c] : loopring::dominant_monomials(prod.chr)) cnt += c.get_si();
    return {cnt, tiling_count(l + 1), binomial_sum(l)};
}

namespace {

// all sets of disjoint adjacent pairs (t, t+1) on factors 0..l, lexicographic
void enumerate_pairings(int l, int from, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    out.push_back(cur);
    for (int t = from; t + 1 <= l; ++t) {
        cur.push_back(t);
        enumerate_pairings(l, t + 2, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<CompositionFactor> composition_factors(int n, Parity parity, int base_shift, int l)
{
    if (l < 0) throw std::invalid_argument("l must be nonnegative");
    std::vector<std::vector<int>> pairings;
    std::vector<int> cur;
    enumerate_pairings(l, 0, cur, pairings);

    const int p0 = static_cast<int>(parity);
    SnakeTable table(n);
    std::vector<CompositionFactor> out;
    LaurentCombination rest = alternating_product(n, parity, base_shift, l).chr;
    for (auto& pr : pairings) {
        std::vector<bool> used(l + 1, false);
        for (int t : pr) used[t] = used[t + 1] = true;
        LaurentCombination chr = LaurentCombination::constant(1);
        LoopMonomial dom;
        for (int t = 0; t <= l;) {
            if (used[t]) {
                ++t;
                continue;
            }
            int start = t;
            while (t <= l && !used[t]) ++t;
            int len = t - start;
            int s = base_shift + start * (n + 1);
            chr *= table.get(p0 + start, len).shifted(s);
            dom *= snake_highest(n, static_cast<Parity>((p0 + start) & 1), len, s);
        }
        rest -= chr;
        out.push_back({pr, dom, {chr, pr.empty() ? Provenance::snake : Provenance::product}});
    }
    if (!rest.is_zero())
        throw InconsistencyError("composition factors leave a nonzero remainder of " +
                                 std::to_string(rest.size()) + " monomials");
    return out;
}

bool SnakeSpec::in_lattice() const
{
    for (auto& [i, k] : points)
        if (i < 1 || i > n || (((i - k) % 2) + 2) % 2 != 1) return false;
    return true;
}

bool SnakeSpec::is_snake() const
{
    for (size_t t = 0; t + 1 < points.size(); ++t) {
        auto [i, k] = points[t];
        auto [i2, k2] = points[t + 1];
        if (k2 - k < std::abs(i2 - i) + 2) return false;
    }
    return true;
}

bool SnakeSpec::is_prime() const
{
    for (size_t t = 0; t + 1 < points.size(); ++t) {
        auto [i, k] = points[t];
        auto [i2, k2] = points[t + 1];
        if (std::min(i + i2, 2 * n + 2 - i - i2) < k2 - k) return false;
    }
    return true;
}

bool SnakeSpec::is_minimal() const
{
    for (size_t t = 0; t + 1 < points.size(); ++t) {
        auto [i, k] = points[t];
        auto [i2, k2] = points[t + 1];
        if (k2 - k != std::abs(i2 - i) + 2) return false;
    }
    return true;
}

std::pair<SnakeSpec, SnakeSpec> neighbouring_snakes(const SnakeSpec& s)
{
    if (s.points.size() < 2) throw std::invalid_argument("neighbouring snakes need at least two points");
    if (!s.in_lattice() || !s.is_snake() || !s.is_prime())
        throw std::invalid_argument("neighbouring snakes need a prime snake");
    const int n = s.n;
    SnakeSpec X{n, {}}, Y{n, {}};
    for (size_t t = 0; t + 1 < s.points.size(); ++t) {
        auto [i, k] = s.points[t];
        auto [i2, k2] = s.points[t + 1];
        if (k + i > k2 - i2) X.points.push_back({(i + k + i2 - k2) / 2, (i + k - i2 + k2) / 2});
        if (k + n + 1 - i > k2 - n - 1 + i2) Y.points.push_back({(i2 + k2 + i - k) / 2, (i2 + k2 - i + k) / 2});
    }
    return {X, Y};
}

}  // namespace qchar

#include "loopring/loopring.hpp"

#include <regex>
#include <sstream>
#include <stdexcept>

namespace loopring {

CartanData::CartanData(int rank) : n(rank)
{
    if (rank < 1) throw std::invalid_argument("rank must be positive");
}

int CartanData::a(int i, int j) const
{
    if (!node_ok(i) || !node_ok(j)) throw std::out_of_range("node out of range");
    if (i == j) return 2;
    return std::abs(i - j) == 1 ? -1 : 0;
}

ClassicalWeight simple_root(const CartanData& c, int i)
{
    ClassicalWeight w(c.n, 0);
    for (int j = 1; j <= c.n; ++j) w[j - 1] = c.a(j, i);
    return w;
}

LoopMonomial LoopMonomial::Y(int i, int k, int e)
{
    LoopMonomial m;
    m.set({i, k}, e);
    return m;
}

void LoopMonomial::set(const Key& key, int e)
{
    if (e == 0)
        e_.erase(key);
    else
        e_[key] = e;
}

int LoopMonomial::exp(int i, int k) const
{
    auto it = e_.find({i, k});
    return it == e_.end() ? 0 : it->second;
}

LoopMonomial& LoopMonomial::operator*=(const LoopMonomial& o)
{
    for (auto& [key, e] : o.e_) {
        auto it = e_.find(key);
        set(key, (it == e_.end() ? 0 : it->second) + e);
    }
    return *this;
}

LoopMonomial LoopMonomial::inverse() const { return pow(-1); }

LoopMonomial LoopMonomial::pow(int p) const
{
    LoopMonomial r;
    for (auto& [key, e] : e_) r.set(key, e * p);
    return r;
}

int LoopMonomial::min_k() const
{
    if (e_.empty()) throw std::logic_error("empty monomial");
    int k = e_.begin()->first.second;
    for (auto& [key, e] : e_) k = std::min(k, key.second);
    return k;
}

int LoopMonomial::max_k() const
{
    if (e_.empty()) throw std::logic_error("empty monomial");
    int k = e_.begin()->first.second;
    for (auto& [key, e] : e_) k = std::max(k, key.second);
    return k;
}

std::string LoopMonomial::str() const
{
    std::ostringstream os;
    bool first = true;
    for (auto& [key, e] : e_) {
        if (!first) os << ' ';
        os << "Y[" << key.first << ',' << key.second << "]^" << e;
        first = false;
    }
    return os.str();
}

int group_order_cmp(const LoopMonomial& a, const LoopMonomial& b)
{
    auto ia = a.support().begin(), ea = a.support().end();
    auto ib = b.support().begin(), eb = b.support().end();
    while (ia != ea || ib != eb) {
        int xa, xb;
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            xa = ia->second;
            xb = 0;
            ++ia;
        } else if (ia == ea || ib->first < ia->first) {
            xa = 0;
            xb = ib->second;
            ++ib;
        } else {
            xa = ia->second;
            xb = ib->second;
            ++ia;
            ++ib;
        }
        if (xa != xb) return xa < xb ? -1 : 1;
    }
    return 0;
}

LoopMonomial shifted(const LoopMonomial& m, int s)
{
    LoopMonomial r;
    for (auto& [key, e] : m.support()) r *= LoopMonomial::Y(key.first, key.second + s, e);
    return r;
}

LaurentCombination::LaurentCombination(const LoopMonomial& m, const mpz_class& c) { add_term(m, c); }

mpz_class LaurentCombination::coeff(const LoopMonomial& m) const
{
    auto it = t_.find(m);
    return it == t_.end() ? mpz_class(0) : it->second;
}

void LaurentCombination::add_term(const LoopMonomial& m, const mpz_class& c)
{
    if (sgn(c) == 0) return;
    auto [it, fresh] = t_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (sgn(it->second) == 0) t_.erase(it);
    }
}

LaurentCombination& LaurentCombination::operator+=(const LaurentCombination& o)
{
    for (auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

LaurentCombination& LaurentCombination::operator-=(const LaurentCombination& o)
{
    for (auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

LaurentCombination operator*(const LaurentCombination& a, const LaurentCombination& b)
{
    LaurentCombination r;
    for (auto& [ma, ca] : a.t_)
        for (auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
    return r;
}

LaurentCombination& LaurentCombination::operator*=(const LaurentCombination& o) { return *this = *this * o; }

LaurentCombination LaurentCombination::operator-() const
{
    LaurentCombination r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

mpz_class LaurentCombination::coefficient_sum() const
{
    mpz_class s = 0;
    for (auto& [m, c] : t_) s += c;
    return s;
}

LaurentCombination LaurentCombination::shifted(int s) const
{
    LaurentCombination r;
    for (auto& [m, c] : t_) r.add_term(loopring::shifted(m, s), c);
    return r;
}

std::string LaurentCombination::to_text() const
{
    std::ostringstream os;
    for (auto& [m, c] : t_) {
        os << c.get_str();
        if (!m.is_one()) os << ' ' << m.str();
        os << '\n';
    }
    return os.str();
}

LaurentCombination LaurentCombination::from_text(const std::string& text)
{
    static const std::regex var(R"(^Y\[(-?\d+),(-?\d+)\]\^(-?\d+)$)");
    LaurentCombination r;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream ws(line);
        std::string tok;
        if (!(ws >> tok)) continue;
        mpz_class c;
        if (c.set_str(tok, 10) != 0) throw std::invalid_argument("bad coefficient: " + tok);
        LoopMonomial m;
        while (ws >> tok) {
            std::smatch g;
            if (!std::regex_match(tok, g, var)) throw std::invalid_argument("bad variable: " + tok);
            m *= LoopMonomial::Y(std::stoi(g[1]), std::stoi(g[2]), std::stoi(g[3]));
        }
        r.add_term(m, c);
    }
    return r;
}

LoopMonomial a_var(const CartanData& c, int i, int k)
{
    if (!c.node_ok(i)) throw std::out_of_range("node out of range");
    LoopMonomial m = LoopMonomial::Y(i, k + 1) * LoopMonomial::Y(i, k - 1);
    if (i > 1) m *= LoopMonomial::Y(i - 1, k, -1);
    if (i < c.n) m *= LoopMonomial::Y(i + 1, k, -1);
    return m;
}

ClassicalWeight wt_of(const CartanData& c, const LoopMonomial& m)
{
    ClassicalWeight w(c.n, 0);
    for (auto& [key, e] : m.support()) {
        if (!c.node_ok(key.first)) throw std::out_of_range("node out of range");
        w[key.first - 1] += e;
    }
    return w;
}

bool is_dominant(const LoopMonomial& m)
{
    for (auto& [key, e] : m.support())
        if (e < 0) return false;
    return true;
}

bool is_antidominant(const LoopMonomial& m)
{
    for (auto& [key, e] : m.support())
        if (e > 0) return false;
    return true;
}

LaurentCombination multiply(const LaurentCombination& p, const LaurentCombination& q) { return p * q; }

std::vector<std::pair<LoopMonomial, mpz_class>> dominant_monomials(const LaurentCombination& p)
{
    std::vector<std::pair<LoopMonomial, mpz_class>> r;
    for (auto& [m, c] : p.terms())
        if (is_dominant(m)) r.emplace_back(m, c);
    return r;
}

std::vector<std::pair<LoopMonomial, mpz_class>> antidominant_monomials(const LaurentCombination& p)
{
    std::vector<std::pair<LoopMonomial, mpz_class>> r;
    for (auto& [m, c] : p.terms())
        if (is_antidominant(m)) r.emplace_back(m, c);
    return r;
}

namespace {

// Classical multiplicities c_i with wt = -sum c_i alpha_i, if integral and nonnegative.
std::optional<std::vector<mpq_class>> negative_root_coords(const CartanData& c, const ClassicalWeight& w)
{
    const int n = c.n;
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = c.a(i + 1, j + 1);
        a[i][n] = -w[i];
    }
    for (int col = 0; col < n; ++col) {
        int p = col;
        while (sgn(a[p][col]) == 0) ++p;  // Cartan matrix is nonsingular
        std::swap(a[p], a[col]);
        for (int i = 0; i < n; ++i) {
            if (i == col || sgn(a[i][col]) == 0) continue;
            mpq_class f = a[i][col] / a[col][col];
            for (int j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    std::vector<mpq_class> x(n);
    for (int i = 0; i < n; ++i) {
        x[i] = a[i][n] / a[i][i];
        if (x[i].get_den() != 1 || sgn(x[i]) < 0) return std::nullopt;
    }
    return x;
}

}  // namespace

std::optional<std::map<std::pair<int, int>, int>> a_decompose(const CartanData& c, const LoopMonomial& m)
{
    auto cls = negative_root_coords(c, wt_of(c, m));
    if (!cls) return std::nullopt;
    long budget = 0;
    for (auto& x : *cls) budget += x.get_num().get_si();

    std::map<std::pair<int, int>, int> out;
    LoopMonomial cur = m;
    // Peel from the lowest spectral index: A_{i,k}^{-1} is the only source of
    // Y_{i,k-1}^{-1} at the bottom of the window.
    while (!cur.is_one()) {
        int k0 = cur.min_k();
        bool progressed = false;
        for (auto& [key, e] : std::map<LoopMonomial::Key, int>(cur.support())) {
            if (key.second != k0) continue;
            if (e > 0) return std::nullopt;
            int cnt = -e;
            out[{key.first, k0 + 1}] += cnt;
            cur *= a_var(c, key.first, k0 + 1).pow(cnt);
            budget -= cnt;
            progressed = true;
        }
        if (!progressed || budget < 0) return std::nullopt;
    }
    return out;
}

LaurentCombination exact_divide(const LaurentCombination& p, const LaurentCombination& d, size_t max_terms)
{
    if (d.is_zero()) throw std::domain_error("division by the zero combination");
    auto lead = [](const LaurentCombination& x) {
        auto best = x.terms().begin();
        for (auto it = x.terms().begin(); it != x.terms().end(); ++it)
            if (group_order_cmp(it->first, best->first) > 0) best = it;
        return *best;
    };
    const auto [dm, dc] = lead(d);
    const LoopMonomial dinv = dm.inverse();
    LaurentCombination rem = p, q;
    size_t steps = 0;
    while (!rem.is_zero()) {
        if (++steps > max_terms) throw std::domain_error("exact division did not terminate");
        auto [rm, rc] = lead(rem);
        if (!mpz_divisible_p(rc.get_mpz_t(), dc.get_mpz_t())) throw std::domain_error("inexact Laurent division");
        LaurentCombination term(rm * dinv, rc / dc);
        q += term;
        rem -= term * d;
    }
    return q;
}

}  // namespace loopring

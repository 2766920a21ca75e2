#include "lattice/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace lattice {

using exactlin::op_canonical;
using exactlin::op_mul;
using exactlin::op_ptrace;
using exactlin::op_trace;
using exactlin::Status;

LatticeSpec LatticeSpec::make(int n, int L, int N, std::vector<mpq_class> mu, std::vector<mpq_class> beta)
{
    LatticeSpec s;
    s.n = n;
    s.L = L;
    s.N = N;
    s.mu = std::move(mu);
    s.beta = std::move(beta);
    for (auto& b : s.beta) s.betabar.push_back(rmat::half_width(n) - b);
    s.validate();
    return s;
}

void LatticeSpec::validate() const
{
    if (n < 1 || L < 1 || N < 1) throw std::invalid_argument("lattice needs n, L, N >= 1");
    if (static_cast<int>(mu.size()) != L) throw std::invalid_argument("need exactly L vertical parameters");
    if (static_cast<int>(beta.size()) != N || static_cast<int>(betabar.size()) != N)
        throw std::invalid_argument("need exactly N horizontal parameters of each kind");
}

LatticeSpec LatticeSpec::with_window(const std::vector<mpq_class>& window) const
{
    if (static_cast<int>(window.size()) > L) throw std::invalid_argument("window longer than the chain");
    LatticeSpec s = *this;
    std::copy(window.begin(), window.end(), s.mu.begin());
    return s;
}

LatticeSpec LatticeSpec::translated(const mpq_class& u) const
{
    LatticeSpec s = *this;
    for (auto& x : s.mu) x += u;
    for (auto& x : s.beta) x += u;
    for (auto& x : s.betabar) x += u;
    return s;
}

std::string site_name(int p, int variant) { return (p == 1 && variant == 1) ? "1b" : std::to_string(p); }

namespace {

const std::string kAux = "a";

// Vertex between a quantum site of kind `site` with parameter mu and an auxiliary
// line of kind `aux` with parameter lam.  Antifundamental quantum sites carry
// the crossed vertices.
Op vertex(int n, SpaceKind site, SpaceKind aux, const mpq_class& mu, const mpq_class& lam, const std::string& q)
{
    const mpq_class two_h = n + 1;
    mpq_class x = mu - lam;
    if (site == SpaceKind::f)
        return aux == SpaceKind::f ? rmat::r_num<mpq_class>(n, x, q, kAux) : rmat::rbar_num<mpq_class>(n, x, q, kAux);
    mpq_class y = -x - two_h;
    return aux == SpaceKind::f ? rmat::rbar_num<mpq_class>(n, y, q, kAux) : rmat::r_num<mpq_class>(n, y, q, kAux);
}

std::vector<std::string> all_sites(int L, int variant)
{
    std::vector<std::string> s;
    for (int p = 1; p <= L; ++p) s.push_back(site_name(p, variant));
    return s;
}

}  // namespace

Op monodromy(const LatticeSpec& spec, const mpq_class& lam, Direction dir, SpaceKind aux)
{
    spec.validate();
    const int n = spec.n;
    auto R = [&](const mpq_class& x, const std::string& q) {
        return aux == SpaceKind::f ? rmat::r_num<mpq_class>(n, x, kAux, q) : rmat::rbar_num<mpq_class>(n, x, kAux, q);
    };
    Op M = exactlin::op_identity<mpq_class>({kAux}, {n + 1});
    if (dir == Direction::T)
        for (int p = spec.L; p >= 1; --p) M = op_mul(M, R(lam - spec.mu[p - 1], site_name(p)));
    else
        for (int p = 1; p <= spec.L; ++p) M = op_mul(M, R(spec.mu[p - 1] - lam, site_name(p)));
    std::vector<std::string> order{kAux};
    for (auto& s : all_sites(spec.L, 0)) order.push_back(s);
    return op_canonical(M, order);
}

Op transfer(const LatticeSpec& spec, const mpq_class& lam, Direction dir, SpaceKind aux)
{
    return op_canonical(op_ptrace(monodromy(spec, lam, dir, aux), kAux), all_sites(spec.L, 0));
}

Op row_transfer(const LatticeSpec& spec, const std::vector<SpaceKind>& kinds, const mpq_class& lam, SpaceKind aux)
{
    const int n = spec.n;
    const int variant = kinds[0] == SpaceKind::fbar ? 1 : 0;
    Op M = exactlin::op_identity<mpq_class>({kAux}, {n + 1});
    for (int p = 1; p <= spec.L; ++p)
        M = op_mul(M, vertex(n, kinds[p - 1], aux, spec.mu[p - 1], lam, site_name(p, variant)));
    return op_canonical(op_ptrace(M, kAux), all_sites(spec.L, variant));
}

Op torus(const LatticeSpec& spec, int variant)
{
    spec.validate();
    if (variant != 0 && variant != 1) throw std::invalid_argument("variant must be 0 or 1");
    std::vector<SpaceKind> kinds(spec.L, SpaceKind::f);
    if (variant == 1) kinds[0] = SpaceKind::fbar;
    std::vector<int> dims(spec.L, spec.n + 1);
    Op T = exactlin::op_identity<mpq_class>(all_sites(spec.L, variant), dims);
    for (int j = 0; j < spec.N; ++j) {
        Op f = row_transfer(spec, kinds, spec.beta[j], SpaceKind::f);
        Op fb = row_transfer(spec, kinds, spec.betabar[j], SpaceKind::fbar);
        T = op_mul(T, op_mul(fb, f));
    }
    return op_canonical(T, all_sites(spec.L, variant));
}

DensityWindow density_window(const LatticeSpec& spec, const std::vector<int>& sites, int variant)
{
    Op T = torus(spec, variant);
    mpq_class Z = op_trace(T);
    if (sgn(Z) == 0) {
        std::ostringstream os;
        os << "vanishing partition function at mu =";
        for (auto& x : spec.mu) os << ' ' << x.get_str();
        os << ", beta =";
        for (auto& x : spec.beta) os << ' ' << x.get_str();
        throw VanishingPartition(os.str());
    }
    std::vector<std::string> keep;
    for (int p = 1; p <= spec.L; ++p) {
        if (std::find(sites.begin(), sites.end(), p) == sites.end())
            T = op_ptrace(T, site_name(p, variant));
        else
            keep.push_back(site_name(p, variant));
    }
    T = op_canonical(T, keep);
    T *= mpq_class(1) / Z;
    return {static_cast<int>(sites.size()), variant, T};
}

DensityWindow density_matrix(const LatticeSpec& spec, int m, int variant)
{
    if (m < 1 || m > spec.L) throw std::invalid_argument("window size must satisfy 1 <= m <= L");
    std::vector<int> s(m);
    for (int i = 0; i < m; ++i) s[i] = i + 1;
    return density_window(spec, s, variant);
}

DensityWindow density_matrix(const LatticeSpec& spec, int m, const std::vector<mpq_class>& mu_window, int variant)
{
    if (static_cast<int>(mu_window.size()) != m) throw std::invalid_argument("window parameter count differs from m");
    return density_matrix(spec.with_window(mu_window), m, variant);
}

mpq_class max_abs_entry(const Op& t)
{
    mpq_class best = 0;
    for (auto& x : t.data())
        if (abs(x) > best) best = abs(x);
    return best;
}

std::string first_nonzero(const Op& t)
{
    std::vector<int> idx(t.rank(), 0);
    for (size_t f = 0; f < t.size(); ++f) {
        if (sgn(t[f]) != 0) {
            size_t r = f;
            for (size_t i = t.rank(); i-- > 0;) {
                idx[i] = static_cast<int>(r % t.legs()[i].dim);
                r /= t.legs()[i].dim;
            }
            std::ostringstream os;
            os << "(";
            for (size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
            os << ") " << t[f].get_str();
            return os.str();
        }
    }
    return "";
}

namespace {

VerificationReport base_report(const std::string& check, const std::string& anchor, const LatticeSpec& spec, int m)
{
    VerificationReport r;
    r.check = check;
    r.anchor = anchor;
    r.n = spec.n;
    r.m = m;
    r.params["L"] = std::to_string(spec.L);
    r.params["N"] = std::to_string(spec.N);
    std::string mus, bs;
    for (auto& x : spec.mu) mus += (mus.empty() ? "" : ",") + x.get_str();
    for (auto& x : spec.beta) bs += (bs.empty() ? "" : ",") + x.get_str();
    r.params["mu"] = mus;
    r.params["beta"] = bs;
    return r;
}

void fill_difference(VerificationReport& r, const Op& lhs, const Op& rhs)
{
    Op d = lhs - rhs;
    r.status = exactlin::pass_if(d.is_zero());
    r.lhs = "max entry " + max_abs_entry(lhs).get_str();
    r.rhs = "max entry " + max_abs_entry(rhs).get_str();
    r.witness = d.is_zero() ? "residual 0" : "first nonzero residual " + first_nonzero(d);
}

std::vector<std::string> window_sites(int m, int variant)
{
    std::vector<std::string> s;
    for (int p = 1; p <= m; ++p) s.push_back(site_name(p, variant));
    return s;
}

}  // namespace

VerificationReport check_unit_trace(const LatticeSpec& spec, int m, int variant)
{
    auto r = base_report("density.unit_trace", "normalisation by the partition function", spec, m);
    r.params["variant"] = std::to_string(variant);
    mpq_class t = op_trace(density_matrix(spec, m, variant).tensor);
    r.status = exactlin::pass_if(t == 1);
    r.lhs = t.get_str();
    r.rhs = "1";
    return r;
}

VerificationReport check_left_right_reduction(const LatticeSpec& spec, int m)
{
    auto r = base_report("density.left_right_reduction", "tr_1 D_{1..m} = D_{2..m} and tr_m D_{1..m} = D_{1..m-1}",
                         spec, m);
    if (m < 2) throw std::invalid_argument("reduction needs m >= 2");
    Op D = density_matrix(spec, m, 0).tensor;
    std::vector<int> right, left;
    for (int p = 2; p <= m; ++p) right.push_back(p);
    for (int p = 1; p < m; ++p) left.push_back(p);
    Op a = op_ptrace(D, site_name(1)), b = density_window(spec, right, 0).tensor;
    Op c = op_ptrace(D, site_name(m)), d = density_window(spec, left, 0).tensor;
    Op da = a - b, dc = c - d;
    r.status = exactlin::pass_if(da.is_zero() && dc.is_zero());
    r.lhs = "left residual " + max_abs_entry(da).get_str();
    r.rhs = "right residual " + max_abs_entry(dc).get_str();
    return r;
}

VerificationReport check_invariance(const LatticeSpec& spec, int m, int variant)
{
    auto r = base_report("density.global_invariance", "invariance under the diagonal sl_{n+1} action", spec, m);
    r.params["variant"] = std::to_string(variant);
    Op D = density_matrix(spec, m, variant).tensor;
    auto sites = window_sites(m, variant);
    std::vector<SpaceKind> kinds(m, SpaceKind::f);
    if (variant == 1) kinds[0] = SpaceKind::fbar;
    int bad = 0, total = 0;
    for (auto g : {rmat::Chevalley::E, rmat::Chevalley::F, rmat::Chevalley::H})
        for (int i = 1; i <= spec.n; ++i) {
            Op X = rmat::diagonal_action<mpq_class>(spec.n, g, i, sites, kinds);
            Op c = op_canonical(op_mul(D, X), sites) - op_canonical(op_mul(X, D), sites);
            ++total;
            if (!c.is_zero()) {
                if (bad == 0) r.witness = "generator " + std::to_string(static_cast<int>(g)) + "," +
                                          std::to_string(i) + " commutator entry " + first_nonzero(c);
                ++bad;
            }
        }
    r.status = exactlin::pass_if(bad == 0);
    r.lhs = std::to_string(total - bad) + " commutators vanish";
    r.rhs = std::to_string(total);
    return r;
}

VerificationReport check_exchange(const LatticeSpec& spec, int m)
{
    auto r = base_report("density.exchange", "R_{i+1,i} D R_{i,i+1} exchange of adjacent window parameters", spec, m);
    if (m < 2) throw std::invalid_argument("exchange needs m >= 2");
    Op D = density_matrix(spec, m, 0).tensor;
    auto sites = window_sites(m, 0);
    bool ok = true;
    std::string detail;
    for (int i = 1; i < m; ++i) {
        mpq_class x = spec.mu[i - 1] - spec.mu[i];
        if (x == 1 || x == -1) throw std::invalid_argument("exchange check at a unitarity zero");
        LatticeSpec sw = spec;
        std::swap(sw.mu[i - 1], sw.mu[i]);
        Op lhs = density_matrix(sw, m, 0).tensor;
        std::string a = site_name(i), b = site_name(i + 1);
        Op c = op_mul(op_mul(rmat::r_num<mpq_class>(spec.n, x, a, b), D), rmat::r_num<mpq_class>(spec.n, -x, a, b));
        c *= mpq_class(1) / (1 - x * x);
        c.rename_site(a, "#");
        c.rename_site(b, a);
        c.rename_site("#", b);
        Op d = lhs - op_canonical(c, sites);
        if (!d.is_zero()) {
            ok = false;
            if (detail.empty()) detail = "pair " + std::to_string(i) + ": " + first_nonzero(d);
        }
    }
    r.status = exactlin::pass_if(ok);
    r.witness = ok ? "all adjacent pairs" : detail;
    return r;
}

VerificationReport check_colour_conservation(const LatticeSpec& spec, int m, int variant)
{
    auto r = base_report("density.colour_conservation", "colour conservation rule", spec, m);
    r.params["variant"] = std::to_string(variant);
    Op D = density_matrix(spec, m, variant).tensor;
    const int n = spec.n;
    std::vector<int> idx(2 * m, 0);
    long violations = 0;
    for (size_t f = 0; f < D.size(); ++f) {
        size_t rem = f;
        for (int i = 2 * m; i-- > 0;) {
            idx[i] = static_cast<int>(rem % (n + 1));
            rem /= (n + 1);
        }
        if (sgn(D[f]) == 0) continue;
        std::vector<int> w(n + 1, 0);
        for (int s = 0; s < m; ++s) {
            bool bar = variant == 1 && s == 0;
            int o = idx[s], in = idx[m + s];
            if (bar) {
                w[n - o] -= 1;
                w[n - in] += 1;
            } else {
                w[o] += 1;
                w[in] -= 1;
            }
        }
        if (std::any_of(w.begin(), w.end(), [](int x) { return x != 0; })) ++violations;
    }
    r.status = exactlin::pass_if(violations == 0);
    r.lhs = std::to_string(violations) + " colour-violating nonzero entries";
    r.rhs = "0";
    return r;
}

VerificationReport check_translation(const LatticeSpec& spec, int m, const mpq_class& u, int variant)
{
    auto r = base_report("density.translation", "translation invariance", spec, m);
    r.params["u"] = u.get_str();
    r.params["variant"] = std::to_string(variant);
    fill_difference(r, density_matrix(spec.translated(u), m, variant).tensor, density_matrix(spec, m, variant).tensor);
    return r;
}

RationalSampler::RationalSampler(unsigned long seed) : gen_(seed) {}

bool half_integer_separated(const std::vector<mpq_class>& xs)
{
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j) {
            mpq_class d = 2 * (xs[i] - xs[j]);
            if (d.get_den() == 1) return false;
        }
    return true;
}

LatticeSpec LatticeSpec::generic(int n, int L, int N, unsigned long seed)
{
    if (n < 1 || L < 1 || N < 1) throw std::invalid_argument("lattice needs n, L, N >= 1");
    RationalSampler g(seed);
    for (;;) {
        std::vector<mpq_class> mu, beta, all;
        for (int p = 0; p < L; ++p) mu.push_back(g.next());
        for (int j = 0; j < N; ++j) beta.push_back(g.next());
        all = mu;
        for (auto& b : beta) {
            all.push_back(b);
            all.push_back(rmat::half_width(n) - b);
        }
        if (half_integer_separated(all)) return make(n, L, N, mu, beta);
    }
}

mpq_class RationalSampler::next()
{
    long num = static_cast<long>(gen_() % 37) - 18;
    long den = 2 + static_cast<long>(gen_() % 9);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace lattice

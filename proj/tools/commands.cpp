#include "commands.hpp"

#include "lattice/lattice.hpp"
#include "qchar/checks.hpp"
#include "rmat/checks.hpp"
#include "snail/snail.hpp"

#include <algorithm>
#include <numeric>

namespace cli {

using exactlin::Status;
using exactlin::VerificationReport;
using qchar::Parity;

namespace {

std::vector<int> range(int a, int b)
{
    std::vector<int> v;
    for (int i = a; i <= b; ++i) v.push_back(i);
    return v;
}

std::vector<int> ranks(const Options& o, std::vector<int> dflt)
{
    if (o.n) {
        if (*o.n < 1) throw UsageError("--n must be positive");
        return {*o.n};
    }
    return dflt;
}

std::vector<Parity> parities(const Options& o)
{
    if (!o.parity) return {Parity::even, Parity::odd};
    try {
        return {qchar::parity_from_string(*o.parity)};
    } catch (const std::invalid_argument&) {
        throw UsageError("--parity must be even or odd");
    }
}

int positive(const std::optional<int>& v, int dflt, const char* flag)
{
    int x = v.value_or(dflt);
    if (x < 1) throw UsageError(std::string(flag) + " must be positive");
    return x;
}

void append(Reports& a, Reports b) { a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end())); }

Reports cmd_qchar(const Options& o, std::ostream& out)
{
    Reports rs;
    const int shift = o.shift_or0();
    if (o.snake_l) {
        if (*o.snake_l < 0) throw UsageError("--snake-l must be nonnegative");
        Parity p = o.parity ? parities(o).front() : Parity::even;
        for (int n : ranks(o, {2})) {
            out << qchar::snake_qchar(n, p, *o.snake_l, shift).chr.to_text();
            rs.push_back(qchar::check_snake_structure(n, p, *o.snake_l, shift));
            if (*o.snake_l >= 1) rs.push_back(qchar::check_extended_tsystem(n, p, *o.snake_l, shift));
        }
        return rs;
    }
    for (int n : ranks(o, {2, 3, 4, 5})) {
        for (int node : {1, n}) {
            if (o.n) out << qchar::fundamental_qchar(n, node, shift).chr.to_text();
            rs.push_back(qchar::check_fundamental(n, node, shift));
            if (n == 1) break;
        }
    }
    const int max_l = o.max_l.value_or(6);
    for (int n : ranks(o, {2, 3}))
        for (int l : range(0, max_l))
            for (Parity p : parities(o)) rs.push_back(qchar::check_snake_structure(n, p, l, shift));
    return rs;
}

Reports cmd_census(const Options& o, std::ostream&)
{
    Reports rs;
    std::vector<int> ls = o.l ? std::vector<int>{*o.l} : range(1, o.max_l.value_or(5));
    for (int l : ls)
        if (l < 0) throw UsageError("--l must be nonnegative");
    for (int n : ranks(o, {2, 3}))
        for (int l : ls)
            for (Parity p : parities(o)) {
                rs.push_back(qchar::check_census(n, l, p, o.shift_or0()));
                rs.push_back(qchar::check_composition(n, l, p, o.shift_or0()));
            }
    return rs;
}

Reports cmd_tsystem(const Options& o, std::ostream&)
{
    Reports rs;
    std::vector<int> ls = o.l ? std::vector<int>{*o.l} : range(1, std::min(o.max_l.value_or(4), 4));
    for (int l : ls)
        if (l < 1) throw UsageError("--l must be at least 1 for the T-system");
    auto ns = ranks(o, {2, 3});
    for (int n : ns)
        for (int l : ls)
            for (Parity p : parities(o)) rs.push_back(qchar::check_extended_tsystem(n, p, l, o.shift_or0()));
    if (std::find(ns.begin(), ns.end(), 2) != ns.end()) {
        std::vector<int> ks = o.k ? std::vector<int>{*o.k} : range(1, o.max_k.value_or(3));
        for (int k : ks) {
            if (k < 1) throw UsageError("--k must be positive");
            for (int node : {1, 2}) rs.push_back(qchar::check_kr(node, k));
        }
    }
    return rs;
}

Reports cmd_rmatrix(const Options& o, std::ostream&)
{
    Reports rs;
    for (int n : ranks(o, {2, 3})) {
        rs.push_back(rmat::check_ybe(n));
        rs.push_back(rmat::check_unitarity(n));
        rs.push_back(rmat::check_crossing(n));
        rs.push_back(rmat::check_special_points(n));
        rs.push_back(rmat::check_invariance(n, o.seed_or_default()));
        rs.push_back(rmat::check_singlet(n));
        rs.push_back(rmat::check_fusion_maps(n));
        rs.push_back(rmat::check_prefactor(n));
    }
    return rs;
}

Reports cmd_pole(const Options& o, std::ostream& out)
{
    Reports rs;
    std::vector<int> ks = o.k ? std::vector<int>{*o.k} : range(1, o.max_k.value_or(2));
    for (int n : ranks(o, {2, 3, 4}))
        for (int k : ks) {
            if (k < 1) throw UsageError("--k must be positive");
            std::vector<int> ls = o.l ? std::vector<int>{*o.l} : range(0, n);
            for (int l : ls) {
                if (l < 0 || l > n) throw UsageError("--l must lie in 0..n");
                auto r = snail::check_pole_profile(n, k, l);
                if (o.l) out << "order " << snail::pole_profile(n, k, l).order_at_0 << "\n";
                rs.push_back(std::move(r));
            }
        }
    return rs;
}

lattice::LatticeSpec lattice_spec(const Options& o, int n, int L, int N)
{
    if (o.mu || o.beta) {
        if (!o.mu || !o.beta) throw UsageError("scenario needs both mu and beta");
        if (static_cast<int>(o.mu->size()) != L || static_cast<int>(o.beta->size()) != N)
            throw UsageError("scenario mu needs L values and beta needs N values");
        return lattice::LatticeSpec::make(n, L, N, *o.mu, *o.beta);
    }
    return lattice::LatticeSpec::generic(n, L, N, o.seed_or_default());
}

void record_seed(Reports& rs, const Options& o)
{
    for (auto& r : rs) r.params["seed"] = std::to_string(o.seed_or_default());
}

std::vector<int> windows(const Options& o, int lo, int L)
{
    if (o.m) {
        if (*o.m < lo || *o.m > L) throw UsageError("--m must satisfy " + std::to_string(lo) + " <= m <= L");
        return {*o.m};
    }
    return range(lo, L);
}

Reports cmd_lattice(const Options& o, std::ostream&)
{
    Reports rs;
    const int n = positive(o.n, 2, "--n"), N = positive(o.N, 1, "--N");
    std::vector<int> Ls = o.L ? std::vector<int>{positive(o.L, 1, "--L")} : range(1, 3);
    lattice::RationalSampler shift_gen(o.seed_or_default() + 1);
    const mpq_class u = shift_gen.next() + mpq_class(1, 101);
    for (int L : Ls) {
        auto spec = lattice_spec(o, n, L, N);
        for (int m : windows(o, 1, L)) {
            for (int v : {0, 1}) rs.push_back(lattice::check_unit_trace(spec, m, v));
            if (m >= 2) {
                rs.push_back(lattice::check_left_right_reduction(spec, m));
                rs.push_back(lattice::check_exchange(spec, m));
            }
            for (int v : {0, 1}) {
                rs.push_back(lattice::check_invariance(spec, m, v));
                rs.push_back(lattice::check_colour_conservation(spec, m, v));
                rs.push_back(lattice::check_translation(spec, m, u, v));
            }
        }
    }
    record_seed(rs, o);
    return rs;
}

Reports cmd_rqkz(const Options& o, std::ostream&)
{
    Reports rs;
    const int n = positive(o.n, 2, "--n"), N = positive(o.N, 1, "--N");
    std::vector<int> Ls = o.L ? std::vector<int>{positive(o.L, 1, "--L")} : range(2, 3);
    for (int L : Ls) {
        auto spec = lattice_spec(o, n, L, N);
        for (int m : windows(o, 1, L))
            for (int j = 1; j <= N; ++j) rs.push_back(lattice::verify_finite_rqkz(spec, m, j));
    }
    record_seed(rs, o);
    return rs;
}

Reports cmd_snail(const Options& o, std::ostream&)
{
    Reports rs;
    std::vector<std::pair<int, int>> nk;
    if (o.n && o.k)
        nk = {{*o.n, *o.k}};
    else if (o.n)
        for (int k : range(1, o.max_k.value_or(2))) nk.push_back({*o.n, k});
    else if (o.k)
        nk = {{1, *o.k}, {2, *o.k}};
    else
        for (auto p : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}})
            if (p.second <= o.max_k.value_or(2)) nk.push_back(p);
    for (auto [n, k] : nk) {
        if (n < 1 || k < 1) throw UsageError("--n and --k must be positive");
        rs.push_back(snail::snake_rank_check(n, k));
    }

    const int n = positive(o.n, 2, "--n");
    for (int i : {1, 2}) rs.push_back(snail::check_fusion_exchange(n, 3, i));

    snail::SnailSpec s;
    s.n = n;
    s.k = positive(o.k, 1, "--k");
    s.m = o.m.value_or(2);
    if (s.m < 2) throw UsageError("the snail operator needs --m >= 2");
    lattice::RationalSampler g(o.seed_or_default());
    while (static_cast<int>(s.mu.size()) < s.m - 1) {
        mpq_class x = g.next();
        auto all = s.mu;
        all.push_back(x);
        if (lattice::half_integer_separated(all)) s.mu.push_back(x);
    }
    rs.push_back(snail::snail_wellformed(s));

    if (n == 2) {
        const int N = positive(o.N, 1, "--N");
        std::vector<int> Ls = o.L ? std::vector<int>{positive(o.L, 1, "--L")} : range(2, 3);
        for (int L : Ls) {
            if (L < 2) continue;
            auto spec = lattice_spec(o, 2, L, N);
            std::vector<mpq_class> all = spec.mu;
            all.insert(all.end(), spec.beta.begin(), spec.beta.end());
            all.insert(all.end(), spec.betabar.begin(), spec.betabar.end());
            mpq_class lam;
            do {
                lam = g.next();
                all.push_back(lam);
                if (lattice::half_integer_separated(all)) break;
                all.pop_back();
            } while (true);
            for (int m : windows(o, 2, L)) {
                rs.push_back(snail::l1_fusion_check(spec, m, lam));
                rs.push_back(snail::singlet_reduction_check(spec, m, lam));
            }
        }
    }
    record_seed(rs, o);
    return rs;
}

}  // namespace

const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names{"qchar", "census", "tsystem", "rmatrix", "lattice",
                                                "rqkz",  "pole",   "snail",   "all"};
    return names;
}

Reports run_command(const std::string& cmd, const Options& o, std::ostream& out)
{
    if (cmd == "qchar") return cmd_qchar(o, out);
    if (cmd == "census") return cmd_census(o, out);
    if (cmd == "tsystem") return cmd_tsystem(o, out);
    if (cmd == "rmatrix") return cmd_rmatrix(o, out);
    if (cmd == "lattice") return cmd_lattice(o, out);
    if (cmd == "rqkz") return cmd_rqkz(o, out);
    if (cmd == "pole") return cmd_pole(o, out);
    if (cmd == "snail") return cmd_snail(o, out);
    if (cmd == "all") {
        // listings are suppressed; the aggregate is the report stream
        Options q = o;
        q.snake_l.reset();
        std::ostream null(nullptr);
        Reports rs;
        for (const char* c : {"qchar", "census", "tsystem", "rmatrix", "pole", "lattice", "rqkz", "snail"})
            append(rs, run_command(c, q, null));
        return rs;
    }
    throw UsageError("unknown command " + cmd);
}

void canonicalize(Reports& rs)
{
    std::stable_sort(rs.begin(), rs.end(), [](auto& a, auto& b) { return a.check < b.check; });
}

nlohmann::json to_json(const VerificationReport& r)
{
    using nlohmann::json;
    auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
    json j;
    j["check"] = r.check;
    j["anchor"] = r.anchor;
    j["n"] = opt(r.n);
    j["k"] = opt(r.k);
    j["l"] = opt(r.l);
    j["m"] = opt(r.m);
    j["status"] = exactlin::status_name(r.status);
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["residual_rank"] = opt(r.residual_rank);
    j["witness"] = r.witness;
    j["params"] = json(r.params);
    return j;
}

nlohmann::json to_json(const Reports& rs)
{
    nlohmann::json a = nlohmann::json::array();
    for (auto& r : rs) a.push_back(to_json(r));
    return a;
}

void print_summary(const Reports& rs, std::ostream& out)
{
    int pass = 0, fail = 0, expl = 0;
    for (auto& r : rs) {
        std::string where;
        auto add = [&](const char* k, const std::optional<int>& v) {
            if (v) where += std::string(where.empty() ? "" : " ") + k + "=" + std::to_string(*v);
        };
        add("n", r.n);
        add("k", r.k);
        add("l", r.l);
        add("m", r.m);
        out << "[" << exactlin::status_name(r.status) << "] " << r.check;
        if (!where.empty()) out << " (" << where << ")";
        out << ": " << r.lhs << " | " << r.rhs << "\n";
        if (r.status == Status::pass) ++pass;
        else if (r.status == Status::fail) ++fail;
        else ++expl;
    }
    out << rs.size() << " checks: " << pass << " pass, " << fail << " fail, " << expl << " exploratory\n";
}

int exit_code(const Reports& rs)
{
    return std::any_of(rs.begin(), rs.end(), [](auto& r) { return r.failed(); }) ? 1 : 0;
}

}  // namespace cli

#include "rmat/rmat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rmat {

PrefactorExpr& PrefactorExpr::rho(int sign, const mpq_class& s, int e)
{
    if (sign != 1 && sign != -1) throw std::invalid_argument("rho argument must be +-lambda + shift");
    // rho(-y) = 1/rho(y): store every factor with argument lambda + shift
    mpq_class key = sign == 1 ? s : mpq_class(-s);
    int ex = sign == 1 ? e : -e;
    int& slot = rho_[key];
    slot += ex;
    if (slot == 0) rho_.erase(key);
    return *this;
}

PrefactorExpr& PrefactorExpr::times(const RatFun& f)
{
    rat_ *= f;
    return *this;
}

PrefactorExpr& PrefactorExpr::operator*=(const PrefactorExpr& o)
{
    if (o.n_ != n_) throw std::invalid_argument("prefactors of different rank");
    for (auto& [s, e] : o.rho_) rho(1, s, e);
    rat_ *= o.rat_;
    return *this;
}

std::string PrefactorExpr::str() const
{
    std::ostringstream os;
    os << "(" << rat_.str("l") << ")";
    for (auto& [s, e] : rho_) os << " * rho(l + " << s.get_str() << ")^" << e;
    return os.str();
}

namespace {

RatFun g_of(int n, const mpq_class& s)  // y(y-(n+1))/((y-1)(y-n)), y = lambda + s
{
    RatFun y = RatFun::linear(1, s);
    return y * (y - RatFun(n + 1)) / ((y - RatFun(1)) * (y - RatFun(n)));
}

}  // namespace

RatFun rho_ratio(int n, const mpq_class& s, int j)
{
    if (j < 0) return RatFun(1) / rho_ratio(n, s - mpq_class(j * (n + 1)), -j);
    RatFun acc(1);
    for (int i = 0; i < j; ++i) acc *= g_of(n, s - mpq_class(i * (n + 1)));
    return acc;
}

PrefactorResult prefactor_reduce(const PrefactorExpr& e, ScanOrder order)
{
    const int n = e.n();
    std::map<mpq_class, int> f = e.factors();
    RatFun acc = e.rational();
    auto same_class = [&](const mpq_class& a, const mpq_class& b, int& j) {
        mpq_class q = (a - b) / (n + 1);
        if (q.get_den() != 1) return false;
        j = static_cast<int>(q.get_num().get_si());
        return true;
    };
    for (;;) {
        std::vector<mpq_class> keys;
        for (auto& [s, x] : f) keys.push_back(s);
        if (order == ScanOrder::reverse) std::reverse(keys.begin(), keys.end());
        bool done = false;
        for (size_t a = 0; a < keys.size() && !done; ++a) {
            if (f[keys[a]] <= 0) continue;
            for (size_t b = 0; b < keys.size() && !done; ++b) {
                int j;
                if (f[keys[b]] >= 0 || !same_class(keys[a], keys[b], j)) continue;
                // rho(lambda + s_a) / rho(lambda + s_b), s_a - s_b = j(n+1)
                acc *= rho_ratio(n, keys[a], j);
                if (--f[keys[a]] == 0) f.erase(keys[a]);
                if (++f[keys[b]] == 0) f.erase(keys[b]);
                done = true;
            }
        }
        if (!done) break;
    }
    PrefactorResult r{std::nullopt, {}, acc};
    for (auto& [s, x] : f) r.surviving.emplace_back(s, x);
    if (r.surviving.empty()) r.value = acc;
    return r;
}

PrefactorExpr r_prefactor(int n, int sign, const mpq_class& s)
{
    PrefactorExpr e(n);
    e.rho(sign, s, 1);
    e.times(RatFun(1) / RatFun::linear(sign, s + 1));
    return e;
}

PrefactorExpr rbar_prefactor(int n, int sign, const mpq_class& s)
{
    PrefactorExpr e(n);
    e.rho(sign, s + half_width(n), -1);
    e.times(RatFun(1) / RatFun::linear(sign, s + exactlin::frac(n - 1, 2)));
    return e;
}

}  // namespace rmat

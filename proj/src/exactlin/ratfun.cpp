#include "exactlin/ratfun.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace exactlin {

QPoly poly_trim(QPoly p)
{
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
    return p;
}

int poly_degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly poly_add(const QPoly& a, const QPoly& b)
{
    QPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return poly_trim(std::move(r));
}

QPoly poly_sub(const QPoly& a, const QPoly& b)
{
    QPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return poly_trim(std::move(r));
}

QPoly poly_mul(const QPoly& a, const QPoly& b)
{
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return poly_trim(std::move(r));
}

void poly_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r)
{
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
    const mpq_class& lead = b.back();
    while (!r.empty() && r.size() >= b.size()) {
        size_t shift = r.size() - b.size();
        mpq_class c = r.back() / lead;
        q[shift] = c;
        for (size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
        r = poly_trim(std::move(r));
    }
    q = poly_trim(std::move(q));
}

QPoly poly_gcd(QPoly a, QPoly b)
{
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        QPoly q, r;
        poly_divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    mpq_class lead = a.back();
    for (auto& c : a) c /= lead;
    return a;
}

mpq_class poly_eval(const QPoly& p, const mpq_class& x)
{
    mpq_class acc = 0;
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

RatFun::RatFun() : den_{mpz_class(1)} {}

RatFun::RatFun(const mpq_class& c)
{
    *this = from_polys(QPoly{c}, QPoly{mpq_class(1)});
}

RatFun RatFun::var() { return from_polys(QPoly{0, 1}, QPoly{1}); }

RatFun RatFun::linear(const mpq_class& a, const mpq_class& b)
{
    return from_polys(QPoly{b, a}, QPoly{1});
}

RatFun RatFun::from_polys(const QPoly& num_in, const QPoly& den_in)
{
    QPoly num = poly_trim(num_in), den = poly_trim(den_in);
    if (den.empty()) throw std::domain_error("rational function with zero denominator");
    RatFun out;
    if (num.empty()) return out;
    QPoly g = poly_gcd(num, den);
    QPoly q, r;
    poly_divmod(num, g, q, r);
    num = q;
    poly_divmod(den, g, q, r);
    den = q;
    mpq_class lead = den.back();
    for (auto& c : num) c /= lead;
    for (auto& c : den) c /= lead;
    mpz_class l = 1;
    for (auto* p : {&num, &den})
        for (auto& c : *p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    mpz_class content = 0;
    std::vector<mpz_class> zn, zd;
    for (auto& c : num) {
        mpq_class s = c * l;
        zn.push_back(s.get_num());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), zn.back().get_mpz_t());
    }
    for (auto& c : den) {
        mpq_class s = c * l;
        zd.push_back(s.get_num());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), zd.back().get_mpz_t());
    }
    for (auto& c : zn) c /= content;
    for (auto& c : zd) c /= content;
    out.num_ = std::move(zn);
    out.den_ = std::move(zd);
    return out;
}

QPoly RatFun::num_q() const
{
    QPoly p;
    for (auto& c : num_) p.emplace_back(c);
    return p;
}

QPoly RatFun::den_q() const
{
    QPoly p;
    for (auto& c : den_) p.emplace_back(c);
    return p;
}

mpq_class RatFun::constant_value() const
{
    if (!is_constant()) throw std::domain_error("rational function is not constant");
    if (num_.empty()) return 0;
    return mpq_class(num_[0], den_[0]);
}

mpq_class RatFun::eval(const mpq_class& x) const
{
    mpq_class d = poly_eval(den_q(), x);
    if (sgn(d) == 0) throw std::domain_error("rational function evaluated at a pole");
    return poly_eval(num_q(), x) / d;
}

RatFun RatFun::operator-() const
{
    RatFun r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

RatFun& RatFun::operator+=(const RatFun& o)
{
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    QPoly a = num_q(), b = den_q(), c = o.num_q(), d = o.den_q();
    if (b == d) return *this = from_polys(poly_add(a, c), b);
    return *this = from_polys(poly_add(poly_mul(a, d), poly_mul(c, b)), poly_mul(b, d));
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o)
{
    if (is_zero() || o.is_zero()) return *this = RatFun();
    return *this = from_polys(poly_mul(num_q(), o.num_q()), poly_mul(den_q(), o.den_q()));
}

RatFun& RatFun::operator/=(const RatFun& o)
{
    if (o.is_zero()) throw std::domain_error("division by the zero rational function");
    if (is_zero()) return *this;
    return *this = from_polys(poly_mul(num_q(), o.den_q()), poly_mul(den_q(), o.num_q()));
}

std::string poly_str(const QPoly& p, const std::string& var)
{
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = p.size(); i-- > 0;) {
        if (sgn(p[i]) == 0) continue;
        mpq_class c = p[i];
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        mpq_class a = abs(c);
        if (i == 0 || a != 1) {
            os << a.get_str();
            if (i > 0) os << "*";
        }
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

std::string RatFun::str(const std::string& var) const
{
    std::string n = poly_str(num_q(), var);
    if (den_.size() == 1 && den_[0] == 1) return n;
    return "(" + n + ")/(" + poly_str(den_q(), var) + ")";
}

namespace {

// multiplicity of the root a in p (p nonzero)
int root_multiplicity(QPoly p, const mpq_class& a)
{
    int k = 0;
    const QPoly lin{-a, 1};
    for (;;) {
        if (p.empty() || sgn(poly_eval(p, a)) != 0) return k;
        QPoly q, r;
        poly_divmod(p, lin, q, r);
        p = std::move(q);
        ++k;
    }
}

}  // namespace

int pole_order_at(const RatFun& f, const mpq_class& a)
{
    if (f.is_zero()) throw std::domain_error("pole order of the zero function");
    return root_multiplicity(f.den_q(), a) - root_multiplicity(f.num_q(), a);
}

mpq_class residue_at(const RatFun& f, const mpq_class& a)
{
    if (f.is_zero()) return 0;
    int ord = pole_order_at(f, a);
    if (ord <= 0) return 0;
    if (ord >= 2) throw std::domain_error("residue requested at a pole of order " + std::to_string(ord));
    QPoly q, r;
    poly_divmod(f.den_q(), QPoly{-a, 1}, q, r);
    return poly_eval(f.num_q(), a) / poly_eval(q, a);
}

}  // namespace exactlin

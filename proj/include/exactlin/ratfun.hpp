#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace exactlin {

// Coefficients lowest degree first, no trailing zeros; the zero polynomial is empty.
using QPoly = std::vector<mpq_class>;

QPoly poly_trim(QPoly p);
QPoly poly_add(const QPoly& a, const QPoly& b);
QPoly poly_sub(const QPoly& a, const QPoly& b);
QPoly poly_mul(const QPoly& a, const QPoly& b);
void poly_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
QPoly poly_gcd(QPoly a, QPoly b);  // monic, or empty when both are zero
mpq_class poly_eval(const QPoly& p, const mpq_class& x);
int poly_degree(const QPoly& p);  // -1 for zero

// Univariate rational function over Q.  Stored as integer numerator and
// denominator, coprime, denominator with positive leading coefficient and the
// joint content of both equal to 1, so equal values have equal representations.
class RatFun {
public:
    RatFun();
    RatFun(const mpq_class& c);
    RatFun(long c) : RatFun(mpq_class(c)) {}

    static RatFun var();
    static RatFun linear(const mpq_class& a, const mpq_class& b);  // a*x + b
    static RatFun from_polys(const QPoly& num, const QPoly& den);

    const std::vector<mpz_class>& num() const { return num_; }
    const std::vector<mpz_class>& den() const { return den_; }
    QPoly num_q() const;
    QPoly den_q() const;

    bool is_zero() const { return num_.empty(); }
    bool is_constant() const { return den_.size() == 1 && num_.size() <= 1; }
    mpq_class constant_value() const;

    // throws std::domain_error at a pole
    mpq_class eval(const mpq_class& x) const;

    RatFun operator-() const;
    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);
    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    std::string str(const std::string& var = "x") const;

private:
    std::vector<mpz_class> num_, den_;
};

// a/b in canonical form (the two-argument mpq_class constructor does not reduce)
inline mpq_class frac(long a, long b)
{
    mpq_class q(a, b);
    q.canonicalize();
    return q;
}

inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline bool is_zero(const RatFun& x) { return x.is_zero(); }

// positive for a pole, 0 for a regular nonzero value, negative for a zero
int pole_order_at(const RatFun& f, const mpq_class& a);

// coefficient of 1/(x-a); throws for poles of order >= 2
mpq_class residue_at(const RatFun& f, const mpq_class& a);

std::string poly_str(const QPoly& p, const std::string& var);

}  // namespace exactlin

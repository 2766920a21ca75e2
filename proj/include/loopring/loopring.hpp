#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace loopring {

// Type A_n only.
struct CartanData {
    int n;
    explicit CartanData(int rank);
    int a(int i, int j) const;  // 1-based nodes
    bool node_ok(int i) const { return i >= 1 && i <= n; }
};

// Coefficients over omega_1..omega_n (index 0 holds omega_1).
using ClassicalWeight = std::vector<long>;

ClassicalWeight simple_root(const CartanData& c, int i);

class LoopMonomial {
public:
    using Key = std::pair<int, int>;  // (i, k)

    LoopMonomial() = default;
    static LoopMonomial Y(int i, int k, int e = 1);

    int exp(int i, int k) const;
    const std::map<Key, int>& support() const { return e_; }
    bool is_one() const { return e_.empty(); }

    LoopMonomial& operator*=(const LoopMonomial& o);
    friend LoopMonomial operator*(LoopMonomial a, const LoopMonomial& b) { return a *= b; }
    LoopMonomial inverse() const;
    LoopMonomial pow(int p) const;

    bool operator==(const LoopMonomial& o) const { return e_ == o.e_; }
    bool operator!=(const LoopMonomial& o) const { return e_ != o.e_; }
    // canonical order: lexicographic on the sorted (i, k, exponent) triples
    bool operator<(const LoopMonomial& o) const { return e_ < o.e_; }

    int min_k() const;
    int max_k() const;
    std::string str() const;

private:
    void set(const Key& key, int e);
    std::map<Key, int> e_;
};

// Total order compatible with multiplication (lexicographic on the exponent
// vector indexed by (i, k)); used only by exact division.
int group_order_cmp(const LoopMonomial& a, const LoopMonomial& b);

class LaurentCombination {
public:
    using Terms = std::map<LoopMonomial, mpz_class>;

    LaurentCombination() = default;
    LaurentCombination(const LoopMonomial& m, const mpz_class& c = 1);
    static LaurentCombination constant(const mpz_class& c) { return LaurentCombination(LoopMonomial(), c); }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    mpz_class coeff(const LoopMonomial& m) const;
    void add_term(const LoopMonomial& m, const mpz_class& c);

    LaurentCombination& operator+=(const LaurentCombination& o);
    LaurentCombination& operator-=(const LaurentCombination& o);
    LaurentCombination& operator*=(const LaurentCombination& o);
    LaurentCombination operator-() const;
    friend LaurentCombination operator+(LaurentCombination a, const LaurentCombination& b) { return a += b; }
    friend LaurentCombination operator-(LaurentCombination a, const LaurentCombination& b) { return a -= b; }
    friend LaurentCombination operator*(const LaurentCombination& a, const LaurentCombination& b);
    bool operator==(const LaurentCombination& o) const { return t_ == o.t_; }
    bool operator!=(const LaurentCombination& o) const { return t_ != o.t_; }

    // sum of coefficients (the dimension when all coefficients are multiplicities)
    mpz_class coefficient_sum() const;
    // every monomial shifted k -> k + s
    LaurentCombination shifted(int s) const;

    std::string to_text() const;
    static LaurentCombination from_text(const std::string& text);

private:
    Terms t_;
};

LoopMonomial a_var(const CartanData& c, int i, int k);
ClassicalWeight wt_of(const CartanData& c, const LoopMonomial& m);
bool is_dominant(const LoopMonomial& m);
bool is_antidominant(const LoopMonomial& m);
LaurentCombination multiply(const LaurentCombination& p, const LaurentCombination& q);
std::vector<std::pair<LoopMonomial, mpz_class>> dominant_monomials(const LaurentCombination& p);
std::vector<std::pair<LoopMonomial, mpz_class>> antidominant_monomials(const LaurentCombination& p);
LoopMonomial shifted(const LoopMonomial& m, int s);

// c with m = prod A_{i,k}^{-c_{i,k}}, every c_{i,k} > 0; nullopt if no such decomposition.
std::optional<std::map<std::pair<int, int>, int>> a_decompose(const CartanData& c, const LoopMonomial& m);

// Exact quotient p / d in the Laurent ring; throws std::domain_error if d does not divide p.
LaurentCombination exact_divide(const LaurentCombination& p, const LaurentCombination& d, size_t max_terms = 100000);

}  // namespace loopring

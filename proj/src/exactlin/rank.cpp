#include "exactlin/rank.hpp"

#include <algorithm>

namespace exactlin {

int rank_of(const QMatrix& q)
{
    if (q.empty()) return 0;
    const size_t nr = q.size(), nc = q[0].size();
    std::vector<std::vector<mpz_class>> a(nr, std::vector<mpz_class>(nc));
    for (size_t i = 0; i < nr; ++i) {
        mpz_class l = 1;
        for (auto& x : q[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        for (size_t j = 0; j < nc; ++j) {
            mpq_class s = q[i][j] * l;
            a[i][j] = s.get_num();
        }
    }
    // Bareiss: after step k every entry below row k is divisible by the previous pivot.
    mpz_class prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < nc && r < nr; ++c) {
        size_t piv = r;
        while (piv < nr && sgn(a[piv][c]) == 0) ++piv;
        if (piv == nr) continue;
        std::swap(a[piv], a[r]);
        for (size_t i = r + 1; i < nr; ++i) {
            for (size_t j = c + 1; j < nc; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

int rank_of(const std::vector<std::vector<RatFun>>& m, bool* agree, int samples)
{
    // fixed, deterministic sample sequence of small-height rationals
    static const long nums[] = {7, -11, 13, 17, -19, 23, 29, -31, 37, 41, -43, 47};
    int best = -1, first = -1;
    bool same = true;
    int taken = 0;
    for (int t = 0; taken < samples && t < 200; ++t) {
        mpq_class x(nums[t % 12] + 53 * (t / 12), 3 + 2 * (t % 5));
        x.canonicalize();
        QMatrix q(m.size());
        bool ok = true;
        for (size_t i = 0; i < m.size() && ok; ++i) {
            q[i].resize(m[i].size());
            for (size_t j = 0; j < m[i].size(); ++j) {
                try {
                    q[i][j] = m[i][j].eval(x);
                } catch (const std::domain_error&) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        int r = rank_of(q);
        if (first < 0) first = r;
        if (r != first) same = false;
        best = std::max(best, r);
        ++taken;
    }
    if (agree) *agree = same;
    return best;
}

}  // namespace exactlin

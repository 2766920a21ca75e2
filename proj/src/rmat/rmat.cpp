#include "rmat/rmat.hpp"

#include <stdexcept>

namespace rmat {

RKind kind_of(SpaceKind a, SpaceKind b)
{
    if (a == SpaceKind::f) return b == SpaceKind::f ? RKind::ff : RKind::f_fbar;
    return b == SpaceKind::f ? RKind::fbar_f : RKind::fbar_fbar;
}

const char* kind_name(RKind k)
{
    switch (k) {
    case RKind::ff: return "ff";
    case RKind::f_fbar: return "f-fbar";
    case RKind::fbar_f: return "fbar-f";
    case RKind::fbar_fbar: return "fbar-fbar";
    }
    return "?";
}

std::vector<mpq_class> chevalley_matrix(int n, Chevalley g, int i, SpaceKind kind)
{
    if (i < 1 || i > n) throw std::out_of_range("Chevalley index out of range");
    const int d = n + 1;
    std::vector<mpq_class> m(d * d);
    switch (g) {
    case Chevalley::E: m[(i - 1) * d + i] = 1; break;
    case Chevalley::F: m[i * d + (i - 1)] = 1; break;
    case Chevalley::H:
        m[(i - 1) * d + (i - 1)] = 1;
        m[i * d + i] = -1;
        break;
    }
    if (kind == SpaceKind::f) return m;
    // -C x^T C : entry (a, b) <- -x(n-b, n-a)
    std::vector<mpq_class> b(d * d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) b[r * d + c] = -m[(n - c) * d + (n - r)];
    return b;
}

FusionMaps antisym_fusion(int n, const std::string& a, const std::string& b, const std::string& w)
{
    using exactlin::Dir;
    const int d = n + 1, wd = n * (n + 1) / 2;
    LabeledTensor<mpq_class> down({{w, Dir::Out, wd}, {a, Dir::In, d}, {b, Dir::In, d}});
    int idx = 0;
    for (int p = 0; p < d; ++p)
        for (int q = p + 1; q < d; ++q, ++idx) {
            // for n = 2 the sign is the Levi-Civita symbol of (p, q, missing index),
            // which makes the wedge basis the antifundamental basis
            int sign = 1;
            if (n == 2 && p == 0 && q == 2) sign = -1;
            down.at({idx, p, q}) = sign;
            down.at({idx, q, p}) = -sign;
        }
    LabeledTensor<mpq_class> up({{a, Dir::Out, d}, {b, Dir::Out, d}, {w, Dir::In, wd}});
    for (int i = 0; i < wd; ++i)
        for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q) up.at({p, q, i}) = -down.at({i, p, q});
    return {down, up, wd};
}

}  // namespace rmat

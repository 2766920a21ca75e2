#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qchar/checks.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

using namespace qchar;
using M = LoopMonomial;
using LC = LaurentCombination;

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream f(path);
    REQUIRE(f.good());
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

// dimension oracle for the snake family: d_{l+1} = (n+1) d_l - d_{l-1}
long snake_dim(int n, int l)
{
    long a = 1, b = n + 1;
    if (l == 0) return 1;
    for (int j = 1; j < l; ++j) {
        long c = (n + 1) * b - a;
        a = b;
        b = c;
    }
    return b;
}

std::vector<int> dims_of(const std::vector<CompositionFactor>& fs)
{
    std::vector<int> d;
    for (auto& f : fs) d.push_back(static_cast<int>(module_dim(f.chr).get_si()));
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

TEST_CASE("fundamental characters, n = 2")
{
    LC want;
    want.add_term(M::Y(1, 0), 1);
    want.add_term(M::Y(2, 1) * M::Y(1, 2, -1), 1);
    want.add_term(M::Y(2, 3, -1), 1);
    CHECK(fundamental_qchar(2, 1, 0).chr == want);
    LC want2;
    want2.add_term(M::Y(2, 0), 1);
    want2.add_term(M::Y(1, 1) * M::Y(2, 2, -1), 1);
    want2.add_term(M::Y(1, 3, -1), 1);
    CHECK(fundamental_qchar(2, 2, 0).chr == want2);
    for (int n = 2; n <= 5; ++n) {
        CHECK(fundamental_qchar(n, 1, 0).chr.size() == static_cast<size_t>(n + 1));
        CHECK(module_dim(fundamental_qchar(n, n, 7)) == n + 1);
    }
    CHECK_THROWS_AS(fundamental_qchar(3, 2, 0), Unsupported);
}

TEST_CASE("golden fundamental character, n = 3")
{
    CHECK(fundamental_qchar(3, 1, 0).chr.to_text() == read_file(GOLDEN_DIR "/fundamental_n3_node1.txt"));
}

TEST_CASE("golden snake character, n = 2, l = 3")
{
    LC s = snake_qchar(2, Parity::even, 3, 0).chr;
    LC g = LC::from_text(read_file(GOLDEN_DIR "/snake_n2_l3_even.txt"));
    CHECK(s == g);
    CHECK(s.size() == 21);
}

TEST_CASE("snake characters")
{
    CHECK(snake_qchar(2, Parity::odd, 1, 4).chr == fundamental_qchar(2, 2, 4).chr);
    CHECK(snake_qchar(2, Parity::even, 0, 0).chr == LC::constant(1));
    LC s2 = snake_qchar(2, Parity::even, 2, 0).chr;
    CHECK(s2.size() == 8);
    auto dom = loopring::dominant_monomials(s2);
    REQUIRE(dom.size() == 1);
    CHECK(dom[0].first == M::Y(1, 0) * M::Y(2, 3));
    // S^(2) = F_1(0) F_2(3) - 1
    CHECK(s2 == fundamental_qchar(2, 1, 0).chr * fundamental_qchar(2, 2, 3).chr - LC::constant(1));
    for (int n : {2, 3})
        for (int l = 0; l <= 6; ++l)
            for (auto p : {Parity::even, Parity::odd}) {
                auto c = snake_qchar(n, p, l, 2);
                CHECK(module_dim(c) == snake_dim(n, l));
                for (auto& [m, k] : c.chr.terms()) CHECK(k == 1);
            }
    CHECK(module_dim(snake_qchar(3, Parity::even, 2, 0)) == 15);
    CHECK(snake_highest(2, Parity::odd, 3, 1) == M::Y(2, 1) * M::Y(1, 4) * M::Y(2, 7));
}

TEST_CASE("Kirillov-Reshetikhin characters, n = 2")
{
    CHECK(kr_qchar(2, 1, 1, 0).chr == fundamental_qchar(2, 1, 0).chr);
    CHECK(module_dim(kr_qchar(2, 1, 2, 0)) == weyl_dim_sl3(2, 0));
    CHECK(module_dim(kr_qchar(2, 1, 2, 0)) == 6);
    CHECK(module_dim(kr_qchar(2, 1, 3, 0)) == 10);
    CHECK(module_dim(kr_qchar(2, 2, 3, 0)) == 10);
    CHECK(loopring::dominant_monomials(kr_qchar(2, 1, 2, 0).chr)[0].first == M::Y(1, 0) * M::Y(1, 2));
    CHECK_THROWS_AS(kr_qchar(3, 1, 2, 0), Unsupported);
}

TEST_CASE("alternating products")
{
    CHECK(alternating_product(2, Parity::even, 0, 1).chr.size() == 9);
    CHECK(module_dim(alternating_product(2, Parity::even, 0, 2)) == 27);
    auto dom = loopring::dominant_monomials(alternating_product(2, Parity::even, 0, 2).chr);
    std::vector<M> got;
    for (auto& [m, c] : dom) got.push_back(m);
    std::vector<M> want{M::Y(1, 0) * M::Y(2, 3) * M::Y(1, 6), M::Y(1, 0), M::Y(1, 6)};
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
}

TEST_CASE("census")
{
    CHECK(tiling_count(1) == 1);
    CHECK(tiling_count(2) == 2);
    CHECK(tiling_count(5) == 8);
    auto c1 = count_dominant_census(2, 1);
    CHECK(c1.count == 2);
    CHECK(c1.expected == 2);
    auto c2 = count_dominant_census(2, 2);
    CHECK(c2.count == 3);
    CHECK(c2.expected == 3);
    auto c4 = count_dominant_census(2, 4);
    CHECK(c4.count == 8);
    CHECK(c4.expected == 8);
    // the appendix sum lags one step behind
    CHECK(binomial_sum(4) == 5);
    for (int l = 0; l <= 6; ++l) {
        CHECK(binomial_sum(l) == tiling_count(l));
        for (int n : {2, 3}) {
            auto c = count_dominant_census(n, l, Parity::odd, 1);
            CHECK(c.count == c.expected);
        }
    }
}

TEST_CASE("composition factors")
{
    auto f1 = composition_factors(2, Parity::even, 0, 1);
    CHECK(dims_of(f1) == std::vector<int>{1, 8});
    auto f2 = composition_factors(2, Parity::even, 0, 2);
    CHECK(dims_of(f2) == std::vector<int>{3, 3, 21});
    auto f3 = composition_factors(2, Parity::even, 0, 3);
    CHECK(f3.size() == 5);
    LC sum;
    for (auto& f : f3) sum += f.chr.chr;
    CHECK(sum == alternating_product(2, Parity::even, 0, 3).chr);
}

TEST_CASE("snake predicates and neighbouring snakes")
{
    SnakeSpec s{2, {{1, 0}, {2, 3}}};
    CHECK(s.in_lattice());
    CHECK(s.is_snake());
    CHECK(s.is_prime());
    CHECK(s.is_minimal());
    auto [x, y] = neighbouring_snakes(s);
    CHECK(x.points.empty());
    CHECK(y.points.empty());

    auto [x2, y2] = neighbouring_snakes(SnakeSpec{3, {{2, 1}, {1, 4}}});
    CHECK(x2.points.empty());
    CHECK(y2.points == std::vector<std::pair<int, int>>{{3, 2}});

    auto [x3, y3] = neighbouring_snakes(SnakeSpec{2, {{1, 0}, {1, 2}}});
    CHECK(x3.points.empty());
    CHECK(y3.points == std::vector<std::pair<int, int>>{{2, 1}});

    CHECK_FALSE(SnakeSpec{2, {{1, 1}}}.in_lattice());
    CHECK_FALSE(SnakeSpec{2, {{1, 0}, {2, 1}}}.is_snake());
    CHECK_FALSE(SnakeSpec{2, {{1, 0}, {1, 6}}}.is_prime());
    CHECK_THROWS(neighbouring_snakes(SnakeSpec{2, {{1, 0}, {1, 8}}}));
}

TEST_CASE("check reports")
{
    CHECK_FALSE(check_fundamental(4, 4, 1).failed());
    CHECK_FALSE(check_snake_structure(3, Parity::odd, 5).failed());
    CHECK_FALSE(check_extended_tsystem(2, Parity::even, 3).failed());
    auto c = check_census(3, 4);
    CHECK_FALSE(c.failed());
    CHECK(c.params.at("binomial_sum") == "5");
    CHECK_FALSE(check_composition(3, 3).failed());
    CHECK_FALSE(check_kr(2, 3).failed());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <sys/wait.h>

using namespace cli;

namespace {

int run_binary(const std::string& args)
{
    std::string cmd = std::string(QLOOP_BIN) + " " + args + " > /dev/null 2>&1";
    int st = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(st));
    return WEXITSTATUS(st);
}

}  // namespace

TEST_CASE("scenario parsing")
{
    auto o = parse_scenario("# lattice run\nn = 2\nL=3\nN=1\nmu = 1/3, -2/5 ,7\nbeta=1/4\nseed=12\nmax_l=4\n");
    CHECK(*o.n == 2);
    CHECK(*o.L == 3);
    CHECK(*o.N == 1);
    CHECK(*o.seed == 12);
    CHECK(*o.max_l == 4);
    REQUIRE(o.mu->size() == 3);
    CHECK((*o.mu)[1] == mpq_class(-2, 5));
    CHECK((*o.mu)[2] == 7);
    CHECK_FALSE(o.k.has_value());
    CHECK_THROWS_AS(parse_scenario("colour=red\n"), UsageError);
    CHECK_THROWS_AS(parse_scenario("n=two\n"), UsageError);
    CHECK_THROWS_AS(parse_scenario("just words\n"), UsageError);
    CHECK_THROWS_AS(parse_rationals("1/0"), UsageError);
    CHECK(parse_rationals("6/4")[0] == mpq_class(3, 2));
}

TEST_CASE("flags override the scenario")
{
    Options flags;
    flags.n = 3;
    auto o = flags.merged_over(parse_scenario("n=2\nk=2\n"));
    CHECK(*o.n == 3);
    CHECK(*o.k == 2);
}

TEST_CASE("snake listing has 21 lines")
{
    Options o;
    o.n = 2;
    o.snake_l = 3;
    std::ostringstream out;
    auto rs = run_command("qchar", o, out);
    std::string s = out.str();
    CHECK(std::count(s.begin(), s.end(), '\n') == 21);
    CHECK(exit_code(rs) == 0);
}

TEST_CASE("pole command")
{
    Options o;
    o.n = 2;
    o.k = 1;
    o.l = 2;
    std::ostringstream out;
    auto rs = run_command("pole", o, out);
    REQUIRE(rs.size() == 1);
    CHECK(out.str() == "order 0\n");
    CHECK(rs[0].lhs == "order 0");
    o.l = 5;
    CHECK_THROWS_AS(run_command("pole", o, out), UsageError);
}

TEST_CASE("exploratory reports do not affect the exit code")
{
    Reports rs(2);
    rs[0].status = exactlin::Status::pass;
    rs[1].status = exactlin::Status::exploratory;
    CHECK(exit_code(rs) == 0);
    rs[1].status = exactlin::Status::fail;
    CHECK(exit_code(rs) == 1);
}

TEST_CASE("json report fields")
{
    Options o;
    o.n = 2;
    std::ostringstream out;
    auto rs = run_command("rmatrix", o, out);
    auto j = to_json(rs);
    REQUIRE(j.is_array());
    for (auto& r : j) {
        for (const char* key : {"check", "n", "k", "l", "m", "status", "lhs", "rhs", "residual_rank", "witness", "anchor"})
            CHECK(r.contains(key));
        CHECK_FALSE(r["anchor"].get<std::string>().empty());
    }
}

TEST_CASE("reports are deterministic for a fixed seed")
{
    Options o;
    o.n = 2;
    o.L = 2;
    o.seed = 5;
    std::ostringstream a, b;
    auto r1 = run_command("snail", o, a), r2 = run_command("snail", o, b);
    CHECK(to_json(r1).dump() == to_json(r2).dump());
    o.seed = 6;
    auto r3 = run_command("lattice", o, a);
    for (auto& r : r3) CHECK(r.params.at("seed") == "6");
}

TEST_CASE("exit status of the binary")
{
    CHECK(run_binary("pole --n 2 --k 1 --l 2") == 0);
    CHECK(run_binary("pole --n 2 --l 7") == 2);
    CHECK(run_binary("census --n 2 --parity sideways") == 2);
    CHECK(run_binary("--n 2") == 2);
    CHECK(run_binary("qchar --n 2 --bogus 1") == 2);
    CHECK(run_binary("lattice --scenario /nonexistent/file") == 2);
}

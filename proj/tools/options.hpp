#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cli {

// Bad flags, scenario keys or values: exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::optional<int> n, l, k, m, L, N;
    std::optional<int> snake_l, max_l, max_k;
    std::optional<std::string> parity;
    std::optional<int> shift;
    std::optional<unsigned long> seed;
    std::optional<std::vector<mpq_class>> mu, beta;

    // fields set here win; unset ones are taken from `low`
    Options merged_over(const Options& low) const;

    int shift_or0() const { return shift.value_or(0); }
    unsigned long seed_or_default() const { return seed.value_or(1); }
};

// line-oriented key=value; '#' starts a comment
Options read_scenario(const std::string& path);
Options parse_scenario(const std::string& text, const std::string& origin = "scenario");

std::vector<mpq_class> parse_rationals(const std::string& s);

}  // namespace cli

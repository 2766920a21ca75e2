#include "options.hpp"

#include <fstream>
#include <sstream>

namespace cli {

namespace {

template <class T>
void take(std::optional<T>& dst, const std::optional<T>& hi, const std::optional<T>& lo)
{
    dst = hi ? hi : lo;
}

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int to_int(const std::string& v, const std::string& where)
{
    size_t used = 0;
    int x = 0;
    try {
        x = std::stoi(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != v.size()) throw UsageError(where + ": not an integer: '" + v + "'");
    return x;
}

}  // namespace

Options Options::merged_over(const Options& low) const
{
    Options o;
    take(o.n, n, low.n);
    take(o.l, l, low.l);
    take(o.k, k, low.k);
    take(o.m, m, low.m);
    take(o.L, L, low.L);
    take(o.N, N, low.N);
    take(o.snake_l, snake_l, low.snake_l);
    take(o.max_l, max_l, low.max_l);
    take(o.max_k, max_k, low.max_k);
    take(o.parity, parity, low.parity);
    take(o.shift, shift, low.shift);
    take(o.seed, seed, low.seed);
    take(o.mu, mu, low.mu);
    take(o.beta, beta, low.beta);
    return o;
}

std::vector<mpq_class> parse_rationals(const std::string& s)
{
    std::vector<mpq_class> out;
    std::string tok;
    std::stringstream ss(s);
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (tok.empty()) continue;
        if (tok[0] == '+') tok.erase(0, 1);
        mpq_class q;
        if (q.set_str(tok, 10) != 0 || q.get_den() == 0) throw UsageError("not a rational number: '" + tok + "'");
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

Options parse_scenario(const std::string& text, const std::string& origin)
{
    Options o;
    std::stringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        const std::string where = origin + ":" + std::to_string(lineno);
        if (eq == std::string::npos) throw UsageError(where + ": expected key=value");
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        for (auto& c : key)
            if (c == '_') c = '-';
        if (key == "n") o.n = to_int(val, where);
        else if (key == "l") o.l = to_int(val, where);
        else if (key == "k") o.k = to_int(val, where);
        else if (key == "m") o.m = to_int(val, where);
        else if (key == "L") o.L = to_int(val, where);
        else if (key == "N") o.N = to_int(val, where);
        else if (key == "snake-l") o.snake_l = to_int(val, where);
        else if (key == "max-l") o.max_l = to_int(val, where);
        else if (key == "max-k") o.max_k = to_int(val, where);
        else if (key == "shift") o.shift = to_int(val, where);
        else if (key == "parity") o.parity = val;
        else if (key == "seed") {
            int s = to_int(val, where);
            if (s < 0) throw UsageError(where + ": seed must be nonnegative");
            o.seed = static_cast<unsigned long>(s);
        } else if (key == "mu") o.mu = parse_rationals(val);
        else if (key == "beta") o.beta = parse_rationals(val);
        else throw UsageError(where + ": unknown key '" + key + "'");
    }
    return o;
}

Options read_scenario(const std::string& path)
{
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read scenario file " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_scenario(buf.str(), path);
}

}  // namespace cli

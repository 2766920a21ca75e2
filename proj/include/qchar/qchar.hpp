#pragma once

#include "loopring/loopring.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace qchar {

using loopring::LaurentCombination;
using loopring::LoopMonomial;

enum class Provenance { fundamental, kirillov_reshetikhin, snake, product, virtual_ };
const char* provenance_name(Provenance p);

struct ModuleChar {
    LaurentCombination chr;
    Provenance provenance;
};

// Parity of the first factor of an alternating chain; node N(t) is 1 for even t
// and n for odd t.
enum class Parity { even = 0, odd = 1 };
int alternating_node(int n, int t);
Parity parity_from_string(const std::string& s);

struct Unsupported : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thinness or a census subtraction failed: the computed objects contradict
// the structural claims, so the computation is aborted rather than repaired.
struct InconsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ModuleChar fundamental_qchar(int n, int node, int shift);
ModuleChar snake_qchar(int n, Parity parity, int l, int shift);
ModuleChar kr_qchar(int n, int node, int k, int shift);
ModuleChar alternating_product(int n, Parity parity, int base_shift, int l);
mpz_class module_dim(const ModuleChar& c);

// Highest monomial of the snake / KR module (the unique dominant one).
LoopMonomial snake_highest(int n, Parity parity, int l, int shift);

struct CensusCount {
    long count;         // dominant monomials of the alternating product, with multiplicity
    long expected;      // T(l+1), T(1)=1, T(2)=2
    long binomial_sum;  // sum_{k<=l/2} C(l-k, k), recorded only
};

long tiling_count(int cells);
long binomial_sum(int l);
CensusCount count_dominant_census(int n, int l, Parity parity = Parity::even, int base_shift = 0);

struct CompositionFactor {
    std::vector<int> paired;  // left ends t of the cancelled adjacent pairs (t, t+1)
    LoopMonomial dominant;
    ModuleChar chr;
};

// Throws InconsistencyError if the factor characters do not add up to the product.
std::vector<CompositionFactor> composition_factors(int n, Parity parity, int base_shift, int l);

struct SnakeSpec {
    int n;
    std::vector<std::pair<int, int>> points;  // (i, k)

    bool in_lattice() const;
    bool is_snake() const;
    bool is_prime() const;
    bool is_minimal() const;
};

std::pair<SnakeSpec, SnakeSpec> neighbouring_snakes(const SnakeSpec& s);

}  // namespace qchar

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "skolem/core.hpp"
#include "skolem/families.hpp"

namespace skolem {

enum class Strategy {
    Duplicate,
    SmallTable,
    SporadicTable,
    AdjoinRecursive,
    ShellRecipe,
    IntervalSequence,
    FallbackSearch,
};

const char* strategy_name(Strategy s);

// Intersection sizes not excluded for pairs of order-n arrangements:
// {0..n-3} plus n, with the order-5 sporadic gap at 2 removed. NoSuchOrder
// when no order-n arrangement exists at all.
std::set<int> necessary_spectrum(int n);

struct Realization {
    int n = 0;
    int p = 0;
    SlotSequence first, second;
    Strategy strategy = Strategy::FallbackSearch;
    std::vector<std::string> trace;  // every strategy consulted, in order
};

// Produces two order-n arrangements sharing exactly p pairs. Every result is
// re-validated and re-counted before being returned. NotInSpectrum when p is
// excluded, Unresolved (naming each strategy tried) when the engine fails.
Realization realize(int n, int p, uint64_t seed = 1);

// Exact intersection spectrum by full enumeration (small orders only;
// TooLarge beyond the slot cap).
std::set<int> exhaustive_spectrum(const SequenceSpec& spec, int cap_slots = 26);

// Langford-type pairs with a prescribed number of shared pairs; used by the
// recursive strategies and exposed for the CLI. nullopt when the search
// budget runs out.
std::optional<std::pair<SlotSequence, SlotSequence>> langford_pair_with_common(
    int d, int n, int c, bool hooked, uint64_t seed, std::vector<std::string>* trace = nullptr);

}  // namespace skolem

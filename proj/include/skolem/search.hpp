#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "skolem/core.hpp"
#include "skolem/families.hpp"

namespace skolem {

struct EnumerateOptions {
    int cap_slots = 26;           // refuse longer instances (TooLarge)
    size_t limit = SIZE_MAX;      // stop early after this many results
};

// Complete, duplicate-free enumeration in lexicographic slot order.
// The recursion fills the smallest open position with each feasible value in
// ascending order, so outputs arrive already sorted.
std::vector<SlotSequence> enumerate_all(const SequenceSpec& spec,
                                        const EnumerateOptions& opt = {});

// Depth-first search for a single instance: repeatedly takes the largest
// unplaced difference and tries start positions in ascending order. Complete,
// so nullopt (with an exhausted budget of 0 remaining meaning "gave up") is
// only returned when the instance space was fully refuted or the node budget
// ran out.
struct BacktrackResult {
    std::optional<SlotSequence> seq;
    bool exhausted = false;  // true when the whole tree was searched
};
BacktrackResult backtrack_first(const SequenceSpec& spec,
                                uint64_t node_budget = UINT64_MAX);

struct ClimbConstraints {
    // Pairs that must sit exactly at these positions (never moved).
    PairSet fixed;
    // Exact placements a value must avoid.
    std::map<int, std::set<std::pair<int, int>>> forbidden;
};

struct ClimbBudget {
    int restarts = 10000;
    int sideways_cap = 100;
    uint64_t max_steps_per_restart = 20000;
    uint64_t seed = 1;
};

// Stochastic repair search: place values greedily, then repeatedly re-place a
// random unplaced value, evicting at most one conflicting pair per step.
// Objective is the number of placed values; a streak of non-improving steps
// longer than sideways_cap triggers a restart. Deterministic for a fixed
// seed. Returns a valid sequence or nullopt when the budget is exhausted.
std::optional<SlotSequence> hillclimb(const SequenceSpec& spec,
                                      const ClimbConstraints& cons = {},
                                      const ClimbBudget& budget = {});

}  // namespace skolem

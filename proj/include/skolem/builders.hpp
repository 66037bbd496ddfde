#pragma once

#include <optional>
#include <string>
#include <utility>

#include "skolem/core.hpp"
#include "skolem/families.hpp"

namespace skolem {

// Closed-form constructions for Langford-type sequences L_d^n (n differences
// d..d+n-1 in 2n slots).

// Interval pattern for the boundary case n = 2d-1 and its one-step variant.
// Both throw RecipeOutOfRange when n != 2d-1.
SlotSequence interval_langford(int d);           // plain pattern
SlotSequence interval_langford_variant(int d);   // largest value wrapped to the front

// Difference-table constructions. Each family covers one congruence class of
// n and a range of d; RecipeOutOfRange when (d, n) is outside it. The tables
// are stored as affine coefficient rows evaluated by one generic driver; any
// internal collision is a transcription bug and raises ConstructionBug.
SlotSequence table_langford_even_d(int d, int n);  // d even >= 2, n = 3 mod 4, n >= 2d-1
SlotSequence table_langford_odd_d(int d, int n);   // d odd >= 3, n = 1 mod 4, n >= 2d-1
SlotSequence table_langford_dense(int d, int n);   // n = 0 mod 4, 0 <= n/2 - d, 2d >= 3n/4 + 1

enum class LangfordSource {
    Interval,
    IntervalVariant,
    TableEvenD,
    TableOddD,
    TableDense,
    Backtracking,
    HillClimb,
};

const char* langford_source_name(LangfordSource s);

struct LangfordRecipe {
    LangfordSource source = LangfordSource::Interval;
    int d = 1;
    int n = 1;
    uint64_t seed = 1;  // search sources only
};

// Runs exactly the requested construction (RecipeOutOfRange if the recipe
// does not apply, Unresolved if a search source gives up).
SlotSequence build_langford(const LangfordRecipe& recipe);

// Tries sources in a fixed priority order: interval pattern, difference
// tables, then search. Unresolved when nothing applies or search fails;
// BadArgument when (d, n) is arithmetically infeasible.
std::pair<SlotSequence, LangfordSource> build_langford_any(int d, int n, uint64_t seed = 1);
SlotSequence build_hooked_langford_any(int d, int n, uint64_t seed = 1);

enum class Side { Front, Back };

// Glues the adjacent pair "1,1" onto the chosen end, two slots longer.
// DifferenceCollision if the arrangement already uses difference 1.
SlotSequence append_ones(const SlotSequence& s, Side side);

// Fills the hook of a hooked arrangement with a 2 and appends the partner
// 2 two slots later, producing a hole-free arrangement one slot longer.
// HookMissing if the input's only hole is not at the next-to-last slot,
// TwoAlreadyPresent if difference 2 is already used.
SlotSequence attach_202(const SlotSequence& hooked);

// Number of pairs an arrangement shares with its own reverse, computed
// directly (never from a formula).
int reverse_common_report(const SlotSequence& s);

}  // namespace skolem

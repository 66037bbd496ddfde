#pragma once

#include <string>
#include <vector>

#include "skolem/core.hpp"

namespace skolem {

// The eight sequence families the library handles. Parameter meanings:
//   Skolem            order n, length 2n
//   HookedSkolem      order n, length 2n+1, hole at 2n
//   NearSkolem        order n, defect m (value m missing), length 2n-2
//   ExtendedSkolem    order n, hole position k, length 2n+1
//   Rosa              order n, hole positions p < q, length 2n+2
//   Langford          order n, differences d..n, length 2n
//   HookedLangford    order n, differences d..n, length 2n+1, hole at 2n
//   ExtendedLangford  order n, differences d..n, hole position k, length 2n+1
enum class Family {
    Skolem,
    HookedSkolem,
    NearSkolem,
    ExtendedSkolem,
    Rosa,
    Langford,
    HookedLangford,
    ExtendedLangford,
};

const char* family_name(Family f);

struct SequenceSpec {
    Family family = Family::Skolem;
    int n = 0;  // order
    int d = 1;  // smallest difference (Langford variants; 1 otherwise)
    int m = 0;  // near-Skolem defect
    int k = 0;  // extended hole position
    int p = 0, q = 0;  // Rosa hole positions

    static SequenceSpec skolem(int n);
    static SequenceSpec hooked_skolem(int n);
    static SequenceSpec near_skolem(int n, int m);
    static SequenceSpec extended_skolem(int n, int k);
    static SequenceSpec rosa(int n, int p, int q);
    static SequenceSpec langford(int d, int n);
    static SequenceSpec hooked_langford(int d, int n);
    static SequenceSpec extended_langford(int d, int n, int k);

    int length() const;
    std::vector<int> hole_positions() const;   // fixed holes, ascending
    std::vector<int> values() const;           // differences to place, ascending
    bool operator==(const SequenceSpec& o) const;

    // Round-trippable text form, e.g. "skolem:9", "near-skolem:5:3",
    // "langford:2:4", "rosa:4:2:9", "ext-langford:3:10:7".
    std::string str() const;
    static SequenceSpec parse(const std::string& text);
};

// Full structural check of a candidate against a spec. Reports every
// violation (wrong length, misplaced holes, missing/duplicated values, bad
// gaps) rather than stopping at the first.
ValidationReport validate(const SlotSequence& s, const SequenceSpec& spec);

// Classification by the published existence conditions, evaluated literally.
// For the Langford families the printed congruence classification is known to
// disagree with arithmetic feasibility when d is even (see feasible_langford);
// this function still answers exactly what the classification says.
bool exists(const SequenceSpec& spec);

// Arithmetic feasibility for Langford-type placements: n(n+1-2d) = 0 mod 4
// (plain) or = 2 mod 4 (hooked), with n >= 2d-1. This is what construction
// planning uses internally.
bool feasible_langford(int d, int n);
bool feasible_hooked_langford(int d, int n);

}  // namespace skolem

#pragma once

#include <set>
#include <string>
#include <vector>

#include "skolem/core.hpp"

namespace skolem {

// One token of the compressed pair notation. Values 1-9 are written as the
// digit, 10-35 as a-z, 36-61 as A-Z; value 0 is the explicit hole marker. A
// leading underscore flags the token (used in transcribed material to mark
// pairs shared with a companion arrangement).
struct Token {
    int value = 0;
    bool marked = false;
    bool operator==(const Token& o) const { return value == o.value && marked == o.marked; }
};

struct TokenStream {
    std::vector<Token> tokens;

    static TokenStream parse(const std::string& text);  // BadToken on bad input
    std::string str() const;

    std::vector<int> marked_values() const;
    bool has_hole_token() const;
    size_t size() const { return tokens.size(); }
};

char value_to_symbol(int v);   // ValueTooLarge beyond 61
int symbol_to_value(char c);   // BadToken for anything outside the alphabet

// Greedy expansion of a token stream into a sequence of target_len slots.
// Each value token claims the smallest unclaimed position p together with
// p+value; a hole token claims just the smallest unclaimed position. Any
// position left unclaimed at the end must be listed in allowed_holes,
// otherwise Underflow. Conflicting or out-of-range claims raise
// PlacementConflict.
SlotSequence decode(const TokenStream& tokens, int target_len,
                    const std::set<int>& allowed_holes = {});

// Expansion of a companion arrangement: `common` pairs are pinned at the
// positions they occupy in `first` before the remaining tokens are expanded
// greedily. If the token stream carries no hole token, the holes of `first`
// carry over as well (transcribed companions only spell holes out when they
// move).
SlotSequence decode_companion(const SlotSequence& first, const std::vector<PlacedPair>& common,
                              const TokenStream& tokens);

// Exact inverse of decode for hole-free and fixed-hole sequences: walks the
// slots left to right and emits a token the first time each pair (or hole) is
// seen. Values in `mark` get the underscore flag.
TokenStream encode(const SlotSequence& s, const std::set<int>& mark = {});

}  // namespace skolem

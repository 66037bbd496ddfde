#pragma once

#include <string>
#include <vector>

#include "skolem/core.hpp"
#include "skolem/families.hpp"

namespace skolem {

// Skeleton arrangement covering the top t differences of an order-n layout:
// descending values of n's parity, then of the other parity, a span of open
// slots, then the mirrored second copies. The order t must be odd and at
// least 3, so both parity runs are present; the layout collides for even t
// and degenerates to a palindrome for t = 1. InfeasibleShell outside that
// domain or when the open span would be negative, i.e. n < t + floor(t/2).
SlotSequence shell(int n, int t);
bool shell_feasible(int n, int t);
int shell_hole_count(int n, int t);  // slots left open

// A composition plan is a list of segments laid out left to right plus
// absolute placements:
//   lit v1,v2,...     literal slots (0 keeps a slot open)
//   holes k           k open slots
//   shell n t         the shell arrangement, its open span staying open
//   put v @ a,b       value v pinned at absolute slots a and b
// Linear segments claim their whole range; put claims two absolute slots and
// may extend the buffer. Any double-claim is an OverlapError.
struct Segment {
    enum class Kind { Lit, Holes, Shell, Put } kind = Kind::Lit;
    std::vector<int> lit;      // Kind::Lit
    int count = 0;             // Kind::Holes
    int n = 0, t = 0;          // Kind::Shell
    int value = 0, a = 0, b = 0;  // Kind::Put

    std::string str() const;
    static Segment parse(const std::string& line);
};

struct CompositionPlan {
    std::vector<Segment> segments;

    std::string str() const;  // one segment per line
    static CompositionPlan parse(const std::string& text);
};

// Materializes the plan and validates the result against the spec; an
// invalid result is always an error (ValidationFailed), never returned.
SlotSequence assemble(const CompositionPlan& plan, const SequenceSpec& spec);

// Concatenation of two hole-free arrangements with disjoint difference sets
// (OverlapError otherwise). Pairs keep their gaps, so the result is again an
// arrangement; shared differences would silently corrupt it, hence the check.
SlotSequence adjoin(const SlotSequence& front, const SlotSequence& back);

// Concatenation that fills a trailing hook: front must have its only hole at
// its next-to-last slot, back must have its only hole at slot 2. The two ends
// interlock (back's first slot lands in front's hook, back's hole swallows
// front's last slot), so the result is two slots shorter than the plain
// concatenation and hole-free.
SlotSequence adjoin_hooked(const SlotSequence& front, const SlotSequence& back);

// Unchecked-holes concatenation used by recipe code: difference sets must
// still be disjoint, holes pass through as-is.
SlotSequence concat(const SlotSequence& front, const SlotSequence& back);

}  // namespace skolem

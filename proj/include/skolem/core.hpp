#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skolem {

// Error taxonomy shared by the whole library. Every throwing contract names
// one of these kinds so the CLI can translate failures into exit codes and
// tests can assert on the precise failure mode.
enum class Errc {
    LengthMismatch,
    MalformedSequence,
    PlacementConflict,
    Underflow,
    ValueTooLarge,
    BadToken,
    BadRecord,
    RecipeOutOfRange,
    ConstructionBug,
    DifferenceCollision,
    HookMissing,
    TwoAlreadyPresent,
    InfeasibleShell,
    OverlapError,
    ValidationFailed,
    NoSuchOrder,
    NotInSpectrum,
    TooLarge,
    Unresolved,
    InvalidSequence,
    OutOfRange,
    OutsideRegion,
    RequiresExceptionalIntersection,
    BadArgument,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
public:
    Error(Errc kind, const std::string& what)
        : std::runtime_error(std::string(errc_name(kind)) + ": " + what), kind_(kind) {}
    Errc kind() const { return kind_; }

private:
    Errc kind_;
};

[[noreturn]] void fail(Errc kind, const std::string& what);

// A sequence of slots. Slot values are positive integers; 0 marks a hole.
// Externally positions are 1-based (slot(1) is the first), matching the way
// these objects are written on paper and in the CLI.
class SlotSequence {
public:
    SlotSequence() = default;
    explicit SlotSequence(std::vector<int> slots) : slots_(std::move(slots)) {}

    int length() const { return static_cast<int>(slots_.size()); }
    int slot(int pos) const { return slots_.at(static_cast<size_t>(pos - 1)); }
    void set(int pos, int value) { slots_.at(static_cast<size_t>(pos - 1)) = value; }
    const std::vector<int>& raw() const { return slots_; }

    bool operator==(const SlotSequence& o) const { return slots_ == o.slots_; }
    bool operator<(const SlotSequence& o) const { return slots_ < o.slots_; }

    std::vector<int> hole_positions() const;

    // Canonical comma-separated text, holes rendered as 0.
    std::string str() const;
    static SlotSequence parse(const std::string& text);

private:
    std::vector<int> slots_;
};

SlotSequence reverse(const SlotSequence& s);

// value -> (first position, second position), second - first == value.
struct PlacedPair {
    int value = 0;
    int first = 0;
    int second = 0;
    bool operator==(const PlacedPair& o) const {
        return value == o.value && first == o.first && second == o.second;
    }
};

using PairSet = std::map<int, std::pair<int, int>>;

// Extracts the pair map of a sequence. Requires every nonzero value to occur
// exactly twice with gap equal to the value; throws MalformedSequence
// otherwise. Holes are ignored.
PairSet pairs(const SlotSequence& s);

struct CommonPairs {
    int count = 0;
    std::vector<PlacedPair> shared;  // sorted by value
};

// Pairs occupying identical positions in both sequences. The sequences must
// have equal length (LengthMismatch otherwise: comparing different lengths is
// a caller bug, not an empty intersection).
CommonPairs common_pairs(const SlotSequence& a, const SlotSequence& b);

struct ValidationReport {
    bool valid = true;
    std::vector<std::string> violations;

    void note(const std::string& v) {
        valid = false;
        violations.push_back(v);
    }
};

}  // namespace skolem

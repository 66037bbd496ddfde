#include "skolem/core.hpp"

#include <algorithm>
#include <sstream>

namespace skolem {

const char* errc_name(Errc e) {
    switch (e) {
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::MalformedSequence: return "MalformedSequence";
        case Errc::PlacementConflict: return "PlacementConflict";
        case Errc::Underflow: return "Underflow";
        case Errc::ValueTooLarge: return "ValueTooLarge";
        case Errc::BadToken: return "BadToken";
        case Errc::BadRecord: return "BadRecord";
        case Errc::RecipeOutOfRange: return "RecipeOutOfRange";
        case Errc::ConstructionBug: return "ConstructionBug";
        case Errc::DifferenceCollision: return "DifferenceCollision";
        case Errc::HookMissing: return "HookMissing";
        case Errc::TwoAlreadyPresent: return "TwoAlreadyPresent";
        case Errc::InfeasibleShell: return "InfeasibleShell";
        case Errc::OverlapError: return "OverlapError";
        case Errc::ValidationFailed: return "ValidationFailed";
        case Errc::NoSuchOrder: return "NoSuchOrder";
        case Errc::NotInSpectrum: return "NotInSpectrum";
        case Errc::TooLarge: return "TooLarge";
        case Errc::Unresolved: return "Unresolved";
        case Errc::InvalidSequence: return "InvalidSequence";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::OutsideRegion: return "OutsideRegion";
        case Errc::RequiresExceptionalIntersection: return "RequiresExceptionalIntersection";
        case Errc::BadArgument: return "BadArgument";
    }
    return "UnknownError";
}

void fail(Errc kind, const std::string& what) { throw Error(kind, what); }

std::vector<int> SlotSequence::hole_positions() const {
    std::vector<int> out;
    for (int i = 0; i < length(); ++i)
        if (slots_[static_cast<size_t>(i)] == 0)
            out.push_back(i + 1);
    return out;
}

std::string SlotSequence::str() const {
    std::ostringstream os;
    for (int i = 0; i < length(); ++i) {
        if (i) os << ',';
        os << slots_[static_cast<size_t>(i)];
    }
    return os.str();
}

SlotSequence SlotSequence::parse(const std::string& text) {
    std::vector<int> slots;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        size_t a = item.find_first_not_of(" \t");
        if (a == std::string::npos)
            fail(Errc::MalformedSequence, "empty slot in '" + text + "'");
        size_t b = item.find_last_not_of(" \t");
        item = item.substr(a, b - a + 1);
        try {
            size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size() || v < 0)
                throw std::invalid_argument(item);
            slots.push_back(v);
        } catch (const std::exception&) {
            fail(Errc::MalformedSequence, "bad slot value '" + item + "'");
        }
    }
    if (slots.empty())
        fail(Errc::MalformedSequence, "no slots in '" + text + "'");
    return SlotSequence(std::move(slots));
}

SlotSequence reverse(const SlotSequence& s) {
    std::vector<int> v = s.raw();
    std::reverse(v.begin(), v.end());
    return SlotSequence(std::move(v));
}

PairSet pairs(const SlotSequence& s) {
    std::map<int, std::vector<int>> where;
    for (int pos = 1; pos <= s.length(); ++pos) {
        int v = s.slot(pos);
        if (v < 0)
            fail(Errc::MalformedSequence, "negative slot at position " + std::to_string(pos));
        if (v > 0)
            where[v].push_back(pos);
    }
    PairSet out;
    for (const auto& [v, at] : where) {
        if (at.size() != 2)
            fail(Errc::MalformedSequence, "value " + std::to_string(v) + " occurs " +
                                              std::to_string(at.size()) + " times");
        if (at[1] - at[0] != v)
            fail(Errc::MalformedSequence, "value " + std::to_string(v) + " at positions " +
                                              std::to_string(at[0]) + "," + std::to_string(at[1]) +
                                              " has gap " + std::to_string(at[1] - at[0]));
        out[v] = {at[0], at[1]};
    }
    return out;
}

CommonPairs common_pairs(const SlotSequence& a, const SlotSequence& b) {
    if (a.length() != b.length())
        fail(Errc::LengthMismatch, "comparing lengths " + std::to_string(a.length()) + " and " +
                                       std::to_string(b.length()));
    PairSet pa = pairs(a), pb = pairs(b);
    CommonPairs out;
    for (const auto& [v, ab] : pa) {
        auto it = pb.find(v);
        if (it != pb.end() && it->second == ab)
            out.shared.push_back({v, ab.first, ab.second});
    }
    out.count = static_cast<int>(out.shared.size());
    return out;
}

}  // namespace skolem

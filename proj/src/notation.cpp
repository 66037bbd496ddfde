#include "skolem/notation.hpp"

#include <algorithm>
#include <sstream>

namespace skolem {

char value_to_symbol(int v) {
    if (v == 0) return '0';
    if (v >= 1 && v <= 9) return static_cast<char>('0' + v);
    if (v >= 10 && v <= 35) return static_cast<char>('a' + (v - 10));
    if (v >= 36 && v <= 61) return static_cast<char>('A' + (v - 36));
    fail(Errc::ValueTooLarge, "value " + std::to_string(v) + " has no symbol");
}

int symbol_to_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    if (c >= 'A' && c <= 'Z') return c - 'A' + 36;
    fail(Errc::BadToken, std::string("symbol '") + c + "' is not in the alphabet");
}

TokenStream TokenStream::parse(const std::string& text) {
    TokenStream ts;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        size_t a = item.find_first_not_of(" \t");
        if (a == std::string::npos)
            fail(Errc::BadToken, "empty token in '" + text + "'");
        size_t b = item.find_last_not_of(" \t");
        item = item.substr(a, b - a + 1);
        Token t;
        if (item[0] == '_') {
            t.marked = true;
            item = item.substr(1);
        }
        if (item.size() != 1)
            fail(Errc::BadToken, "token '" + item + "' is not a single symbol");
        t.value = symbol_to_value(item[0]);
        if (t.marked && t.value == 0)
            fail(Errc::BadToken, "hole token cannot be marked");
        ts.tokens.push_back(t);
    }
    if (ts.tokens.empty())
        fail(Errc::BadToken, "no tokens in '" + text + "'");
    return ts;
}

std::string TokenStream::str() const {
    std::string out;
    for (size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += ',';
        if (tokens[i].marked) out += '_';
        out += value_to_symbol(tokens[i].value);
    }
    return out;
}

std::vector<int> TokenStream::marked_values() const {
    std::vector<int> out;
    for (const Token& t : tokens)
        if (t.marked) out.push_back(t.value);
    return out;
}

bool TokenStream::has_hole_token() const {
    return std::any_of(tokens.begin(), tokens.end(),
                       [](const Token& t) { return t.value == 0; });
}

namespace {

// Shared expansion machinery. claimed[i] tracks 1-based positions.
struct Canvas {
    std::vector<int> slot;      // value, 0 for hole
    std::vector<char> claimed;  // 1-based
    int len;

    explicit Canvas(int target_len) : len(target_len) {
        if (target_len <= 0) fail(Errc::BadArgument, "target length must be positive");
        slot.assign(static_cast<size_t>(len) + 1, 0);
        claimed.assign(static_cast<size_t>(len) + 1, 0);
    }

    int first_free() const {
        for (int p = 1; p <= len; ++p)
            if (!claimed[static_cast<size_t>(p)]) return p;
        return 0;
    }

    void claim_pair(int v, int a) {
        if (a + v > len)
            fail(Errc::PlacementConflict, "value " + std::to_string(v) + " at position " +
                                              std::to_string(a) + " reaches past slot " +
                                              std::to_string(len));
        if (claimed[static_cast<size_t>(a)] || claimed[static_cast<size_t>(a + v)])
            fail(Errc::PlacementConflict, "value " + std::to_string(v) + " collides at " +
                                              std::to_string(a) + "," + std::to_string(a + v));
        claimed[static_cast<size_t>(a)] = claimed[static_cast<size_t>(a + v)] = 1;
        slot[static_cast<size_t>(a)] = slot[static_cast<size_t>(a + v)] = v;
    }

    void claim_hole(int p) {
        claimed[static_cast<size_t>(p)] = 1;
        slot[static_cast<size_t>(p)] = 0;
    }

    void expand(const TokenStream& tokens) {
        for (const Token& t : tokens.tokens) {
            int p = first_free();
            if (p == 0)
                fail(Errc::PlacementConflict, "token stream continues past a full sequence");
            if (t.value == 0)
                claim_hole(p);
            else
                claim_pair(t.value, p);
        }
    }

    SlotSequence finish(const std::set<int>& allowed_holes) {
        for (int p = 1; p <= len; ++p) {
            if (claimed[static_cast<size_t>(p)]) continue;
            if (!allowed_holes.count(p))
                fail(Errc::Underflow,
                     "position " + std::to_string(p) + " is unclaimed after all tokens");
            claim_hole(p);
        }
        return SlotSequence(std::vector<int>(slot.begin() + 1, slot.end()));
    }
};

}  // namespace

SlotSequence decode(const TokenStream& tokens, int target_len,
                    const std::set<int>& allowed_holes) {
    Canvas c(target_len);
    c.expand(tokens);
    return c.finish(allowed_holes);
}

SlotSequence decode_companion(const SlotSequence& first, const std::vector<PlacedPair>& common,
                              const TokenStream& tokens) {
    Canvas c(first.length());
    for (const PlacedPair& pp : common) {
        if (pp.second - pp.first != pp.value)
            fail(Errc::BadArgument, "pinned pair has wrong gap");
        c.claim_pair(pp.value, pp.first);
    }
    std::set<int> inherited;
    if (!tokens.has_hole_token()) {
        for (int h : first.hole_positions()) {
            if (!c.claimed[static_cast<size_t>(h)]) c.claim_hole(h);
            inherited.insert(h);
        }
    }
    c.expand(tokens);
    return c.finish(inherited);
}

TokenStream encode(const SlotSequence& s, const std::set<int>& mark) {
    TokenStream ts;
    std::vector<char> seen(static_cast<size_t>(s.length()) + 1, 0);
    for (int p = 1; p <= s.length(); ++p) {
        if (seen[static_cast<size_t>(p)]) continue;
        int v = s.slot(p);
        Token t;
        if (v == 0) {
            t.value = 0;
            seen[static_cast<size_t>(p)] = 1;
        } else {
            if (v > 61) fail(Errc::ValueTooLarge, "value " + std::to_string(v) + " has no symbol");
            t.value = v;
            t.marked = mark.count(v) > 0;
            seen[static_cast<size_t>(p)] = 1;
            if (p + v <= s.length()) seen[static_cast<size_t>(p + v)] = 1;
        }
        ts.tokens.push_back(t);
    }
    return ts;
}

}  // namespace skolem

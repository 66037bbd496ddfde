#include "skolem/search.hpp"

#include <algorithm>

#include "skolem/prng.hpp"

namespace skolem {

namespace {

constexpr int kHole = -1;

struct Board {
    std::vector<int> slot;  // 0 = open, kHole = blocked, else value
    int len = 0;

    explicit Board(const SequenceSpec& spec) : len(spec.length()) {
        slot.assign(static_cast<size_t>(len) + 1, 0);  // 1-based
        for (int h : spec.hole_positions()) slot[static_cast<size_t>(h)] = kHole;
    }
    bool open(int p) const { return p >= 1 && p <= len && slot[static_cast<size_t>(p)] == 0; }
    void place(int v, int a) {
        slot[static_cast<size_t>(a)] = v;
        slot[static_cast<size_t>(a + v)] = v;
    }
    void remove(int v, int a) {
        slot[static_cast<size_t>(a)] = 0;
        slot[static_cast<size_t>(a + v)] = 0;
    }
    SlotSequence to_sequence() const {
        std::vector<int> out(static_cast<size_t>(len));
        for (int i = 1; i <= len; ++i) {
            int v = slot[static_cast<size_t>(i)];
            out[static_cast<size_t>(i - 1)] = v == kHole ? 0 : v;
        }
        return SlotSequence(std::move(out));
    }
};

struct Enumerator {
    Board board;
    std::vector<int> values;         // ascending
    std::vector<char> used;          // parallel to values
    size_t placed = 0;
    size_t limit;
    std::vector<SlotSequence>* out;

    Enumerator(const SequenceSpec& spec, size_t lim, std::vector<SlotSequence>* sink)
        : board(spec), values(spec.values()), used(values.size(), 0), limit(lim), out(sink) {}

    bool run(int from) {
        if (placed == values.size()) {
            out->push_back(board.to_sequence());
            return out->size() < limit;
        }
        int p = from;
        while (p <= board.len && !board.open(p)) ++p;
        if (p > board.len) return true;  // open values remain but no space: dead end
        for (size_t i = 0; i < values.size(); ++i) {
            if (used[i]) continue;
            int v = values[i];
            if (p + v > board.len || !board.open(p + v)) continue;
            used[i] = 1;
            board.place(v, p);
            ++placed;
            bool keep_going = run(p + 1);
            --placed;
            board.remove(v, p);
            used[i] = 0;
            if (!keep_going) return false;
        }
        return true;
    }
};

}  // namespace

std::vector<SlotSequence> enumerate_all(const SequenceSpec& spec, const EnumerateOptions& opt) {
    if (spec.length() > opt.cap_slots)
        fail(Errc::TooLarge, "instance has " + std::to_string(spec.length()) +
                                 " slots, cap is " + std::to_string(opt.cap_slots));
    std::vector<SlotSequence> out;
    if (opt.limit == 0) return out;
    Enumerator e(spec, opt.limit, &out);
    e.run(1);
    return out;
}

namespace {

struct FirstSolver {
    Board board;
    std::vector<int> values;  // ascending; we walk from the top
    uint64_t nodes_left;
    bool exhausted = true;

    FirstSolver(const SequenceSpec& spec, uint64_t budget)
        : board(spec), values(spec.values()), nodes_left(budget) {}

    bool run(size_t next) {  // next: index from the top, 0 = largest value
        if (next == values.size()) return true;
        int v = values[values.size() - 1 - next];
        for (int a = 1; a + v <= board.len; ++a) {
            if (!board.open(a) || !board.open(a + v)) continue;
            if (nodes_left == 0) {
                exhausted = false;
                return false;
            }
            --nodes_left;
            board.place(v, a);
            if (run(next + 1)) return true;
            board.remove(v, a);
        }
        return false;
    }
};

}  // namespace

BacktrackResult backtrack_first(const SequenceSpec& spec, uint64_t node_budget) {
    FirstSolver s(spec, node_budget);
    BacktrackResult res;
    if (s.run(0)) {
        res.seq = s.board.to_sequence();
        res.exhausted = false;
    } else {
        res.exhausted = s.exhausted;
    }
    return res;
}

namespace {

struct Climber {
    const SequenceSpec& spec;
    const ClimbConstraints& cons;
    Board board;
    // placement bookkeeping: value -> first position (0 = unplaced)
    std::map<int, int> at;
    std::vector<int> movable;  // values we are allowed to move
    Prng rng;

    Climber(const SequenceSpec& s, const ClimbConstraints& c, uint64_t seed)
        : spec(s), cons(c), board(s), rng(seed) {
        for (int v : spec.values())
            if (!cons.fixed.count(v)) movable.push_back(v);
    }

    bool banned(int v, int a) const {
        auto it = cons.forbidden.find(v);
        return it != cons.forbidden.end() && it->second.count({a, a + v});
    }

    size_t placed_count() const {
        size_t c = 0;
        for (const auto& [v, a] : at)
            if (a) ++c;
        return c;
    }

    void reset() {
        board = Board(spec);
        at.clear();
        for (const auto& [v, pos] : cons.fixed) {
            if (pos.second - pos.first != v || !board.open(pos.first) || !board.open(pos.second))
                fail(Errc::PlacementConflict, "fixed pair for value " + std::to_string(v) +
                                                  " does not fit");
            board.place(v, pos.first);
            at[v] = pos.first;
        }
        // Greedy seeding in random order.
        std::vector<int> order = movable;
        rng.shuffle(order);
        for (int v : order) {
            at[v] = 0;
            std::vector<int> starts;
            for (int a = 1; a + v <= board.len; ++a)
                if (board.open(a) && board.open(a + v) && !banned(v, a)) starts.push_back(a);
            if (!starts.empty()) {
                int a = starts[static_cast<size_t>(rng.below(starts.size()))];
                board.place(v, a);
                at[v] = a;
            }
        }
    }

    std::optional<SlotSequence> climb(const ClimbBudget& budget) {
        for (int r = 0; r < budget.restarts; ++r) {
            reset();
            size_t best = placed_count();
            if (best == spec.values().size()) return board.to_sequence();
            int sideways = 0;
            for (uint64_t step = 0; step < budget.max_steps_per_restart; ++step) {
                if (sideways > budget.sideways_cap) break;
                // pick a random unplaced movable value
                std::vector<int> open_values;
                for (int v : movable)
                    if (at[v] == 0) open_values.push_back(v);
                if (open_values.empty()) return board.to_sequence();
                int v = open_values[static_cast<size_t>(rng.below(open_values.size()))];

                // candidate starts where at most one pair is in the way and
                // no fixed slot or hole is touched
                std::vector<int> starts;
                for (int a = 1; a + v <= board.len; ++a) {
                    if (banned(v, a)) continue;
                    int occupants = 0;
                    bool blocked = false;
                    for (int p : {a, a + v}) {
                        int cur = board.slot[static_cast<size_t>(p)];
                        if (cur == kHole || (cur > 0 && cons.fixed.count(cur))) {
                            blocked = true;
                            break;
                        }
                        if (cur > 0) ++occupants;
                    }
                    if (blocked) continue;
                    // two distinct occupants would make this a losing move
                    int va = board.slot[static_cast<size_t>(a)];
                    int vb = board.slot[static_cast<size_t>(a + v)];
                    if (occupants == 2 && va != vb) continue;
                    starts.push_back(a);
                }
                if (starts.empty()) {
                    ++sideways;
                    continue;
                }
                int a = starts[static_cast<size_t>(rng.below(starts.size()))];
                bool evicted = false;
                for (int p : {a, a + v}) {
                    int cur = board.slot[static_cast<size_t>(p)];
                    if (cur > 0) {
                        board.remove(cur, at[cur]);
                        at[cur] = 0;
                        evicted = true;
                    }
                }
                board.place(v, a);
                at[v] = a;
                size_t now = placed_count();
                if (now == spec.values().size()) return board.to_sequence();
                if (now > best) {
                    best = now;
                    sideways = 0;
                } else {
                    ++sideways;
                }
                (void)evicted;
            }
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<SlotSequence> hillclimb(const SequenceSpec& spec, const ClimbConstraints& cons,
                                      const ClimbBudget& budget) {
    // Trivial rejection: fixed pairs must be inside the board.
    for (const auto& [v, pos] : cons.fixed)
        if (pos.first < 1 || pos.second > spec.length())
            fail(Errc::PlacementConflict, "fixed pair outside the sequence");
    Climber c(spec, cons, budget.seed);
    return c.climb(budget);
}

}  // namespace skolem

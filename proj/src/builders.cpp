#include "skolem/builders.hpp"

#include <algorithm>

#include "skolem/search.hpp"

namespace skolem {

namespace {

// One difference-table row: start position, end position and the j range are
// affine in the table parameters (x, y) and the running index j. Evaluating
// every row of a table for j = 0..jmax yields the full pair list.
struct Row {
    int a0, ax, ay, aj;
    int b0, bx, by, bj;
    int j0, jx, jy;  // jmax = j0 + jx*x + jy*y; negative means the row is empty
};

// n = 3 mod 4, d even. Parameters x = (n-3)/4, y = d/2.
constexpr Row kEvenD[] = {
    {1, 2, 0, -1,   2, 2, 2, 1,    0, 1, -1},
    {-1, 1, 1, -1,  3, 3, 1, 1,    0, 1, -1},
    {-2, 0, 2, -1,  4, 4, 0, 1,   -2, 0, 1},
    {1, 2, 1, 0,    3, 4, 1, 0,    0, 0, 0},
    {-1, 0, 1, -1,  4, 4, 1, 1,   -2, 0, 1},
    {0, 1, 1, 0,    4, 5, 1, 0,    0, 0, 0},
    {1, 2, 2, -1,   6, 6, 0, 1,   -1, 0, 1},
    {0, 2, 1, -1,   6, 6, 1, 1,   -2, 0, 1},
    {5, 6, 0, -1,   5, 6, 2, 1,    0, 1, -1},
    {3, 5, 1, -1,   6, 7, 1, 1,    0, 1, -1},
};

// n = 1 mod 4, d odd. Parameters x = (n-1)/4, y = (d+1)/2.
constexpr Row kOddD[] = {
    {0, 2, 0, -1,   0, 2, 2, 1,    0, 1, -1},
    {-2, 1, 1, -1,  1, 3, 1, 1,    0, 1, -1},
    {-3, 0, 2, -1,  2, 4, 0, 1,   -2, 0, 1},
    {0, 2, 1, 0,    1, 4, 1, 0,    0, 0, 0},
    {-2, 0, 1, -1,  2, 4, 1, 1,   -3, 0, 1},
    {-1, 1, 1, 0,   1, 5, 1, 0,    0, 0, 0},
    {-1, 2, 2, -1,  3, 6, 0, 1,   -2, 0, 1},
    {-1, 2, 1, -1,  2, 6, 1, 1,   -2, 0, 1},
    {2, 6, 0, -1,   1, 6, 2, 1,    0, 1, -1},
    {0, 5, 1, -1,   2, 7, 1, 1,    0, 1, -1},
};

// n = 0 mod 4, d near n/2. Parameters x = n/4, y = n/2 - d.
constexpr Row kDense[] = {
    {1, 2, 1, 1,    0, 8, 0, -1,  -1, 1, -1},
    {2, 3, 2, 1,    0, 7, 1, -1,  -1, 1, 0},
    {0, 2, 0, -1,   0, 6, 1, -2,   0, 0, 1},
    {0, 2, 1, -1,  -1, 6, 1, -2,  -1, 0, 1},
    {1, 0, 0, 1,   -1, 6, -1, -1, -2, 1, -1},
    {1, 1, 1, 1,    0, 5, 0, -1,  -2, 1, -2},
    {0, 1, -1, 1,   1, 3, 2, -1,   0, 0, 2},
};

template <size_t N>
SlotSequence eval_table(const Row (&rows)[N], int x, int y, int len) {
    std::vector<int> slot(static_cast<size_t>(len) + 1, 0);
    auto place = [&](int v, int a, int b) {
        if (b - a != v || a < 1 || b > len)
            fail(Errc::ConstructionBug, "table row places value " + std::to_string(v) + " at " +
                                            std::to_string(a) + "," + std::to_string(b));
        if (slot[static_cast<size_t>(a)] || slot[static_cast<size_t>(b)])
            fail(Errc::ConstructionBug, "table rows collide at position " +
                                            std::to_string(slot[static_cast<size_t>(a)] ? a : b));
        slot[static_cast<size_t>(a)] = slot[static_cast<size_t>(b)] = v;
    };
    for (const Row& r : rows) {
        int jmax = r.j0 + r.jx * x + r.jy * y;
        for (int j = 0; j <= jmax; ++j) {
            int a = r.a0 + r.ax * x + r.ay * y + r.aj * j;
            int b = r.b0 + r.bx * x + r.by * y + r.bj * j;
            place(b - a, a, b);
        }
    }
    for (int p = 1; p <= len; ++p)
        if (!slot[static_cast<size_t>(p)])
            fail(Errc::ConstructionBug, "table leaves position " + std::to_string(p) + " empty");
    return SlotSequence(std::vector<int>(slot.begin() + 1, slot.end()));
}

}  // namespace

SlotSequence interval_langford(int d) {
    if (d < 2) fail(Errc::RecipeOutOfRange, "interval pattern needs d >= 2");
    int n = 2 * d - 1;
    std::vector<int> slot(static_cast<size_t>(2 * n), 0);
    auto put = [&](int pos, int v) { slot[static_cast<size_t>(pos - 1)] = v; };
    for (int i = 1; i <= d - 1; ++i) put(i, 2 * d - 1 + i);
    for (int i = d; i <= 2 * d - 1; ++i) put(i, i);
    put(2 * d, d);
    for (int k = 0; k <= d - 2; ++k) put(2 * d + 1 + 2 * k, 2 * d + k);
    for (int k = 1; k <= d - 1; ++k) put(2 * d + 2 * k, d + k);
    return SlotSequence(std::move(slot));
}

SlotSequence interval_langford_variant(int d) {
    // Same arrangement rotated one slot to the right; the value n = 2d-1,
    // which ends on the last slot of the plain pattern, wraps to the front
    // with its gap intact.
    SlotSequence plain = interval_langford(d);
    std::vector<int> v = plain.raw();
    std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
    return SlotSequence(std::move(v));
}

SlotSequence table_langford_even_d(int d, int n) {
    if (d < 2 || d % 2 != 0 || n % 4 != 3 || n < 2 * d - 1)
        fail(Errc::RecipeOutOfRange, "even-d table does not cover d=" + std::to_string(d) +
                                         " n=" + std::to_string(n));
    return eval_table(kEvenD, (n - 3) / 4, d / 2, 2 * n);
}

SlotSequence table_langford_odd_d(int d, int n) {
    if (d < 3 || d % 2 != 1 || n % 4 != 1 || n < 2 * d - 1)
        fail(Errc::RecipeOutOfRange, "odd-d table does not cover d=" + std::to_string(d) +
                                         " n=" + std::to_string(n));
    return eval_table(kOddD, (n - 1) / 4, (d + 1) / 2, 2 * n);
}

SlotSequence table_langford_dense(int d, int n) {
    if (n % 4 != 0 || n / 2 - d < 0 || 2 * d < 3 * (n / 4) + 1)
        fail(Errc::RecipeOutOfRange, "dense table does not cover d=" + std::to_string(d) +
                                         " n=" + std::to_string(n));
    return eval_table(kDense, n / 4, n / 2 - d, 2 * n);
}

const char* langford_source_name(LangfordSource s) {
    switch (s) {
        case LangfordSource::Interval: return "interval";
        case LangfordSource::IntervalVariant: return "interval-variant";
        case LangfordSource::TableEvenD: return "table-even-d";
        case LangfordSource::TableOddD: return "table-odd-d";
        case LangfordSource::TableDense: return "table-dense";
        case LangfordSource::Backtracking: return "backtracking";
        case LangfordSource::HillClimb: return "hill-climb";
    }
    return "?";
}

SlotSequence build_langford(const LangfordRecipe& r) {
    switch (r.source) {
        case LangfordSource::Interval:
            if (r.n != 2 * r.d - 1)
                fail(Errc::RecipeOutOfRange, "interval pattern needs n = 2d-1");
            return interval_langford(r.d);
        case LangfordSource::IntervalVariant:
            if (r.n != 2 * r.d - 1)
                fail(Errc::RecipeOutOfRange, "interval pattern needs n = 2d-1");
            return interval_langford_variant(r.d);
        case LangfordSource::TableEvenD: return table_langford_even_d(r.d, r.n);
        case LangfordSource::TableOddD: return table_langford_odd_d(r.d, r.n);
        case LangfordSource::TableDense: return table_langford_dense(r.d, r.n);
        case LangfordSource::Backtracking: {
            BacktrackResult res = backtrack_first(SequenceSpec::langford(r.d, r.n));
            if (!res.seq) fail(Errc::Unresolved, "backtracking found no arrangement");
            return *res.seq;
        }
        case LangfordSource::HillClimb: {
            ClimbBudget budget;
            budget.seed = r.seed;
            auto res = hillclimb(SequenceSpec::langford(r.d, r.n), {}, budget);
            if (!res) fail(Errc::Unresolved, "hill climb found no arrangement");
            return *res;
        }
    }
    fail(Errc::BadArgument, "unknown source");
}

std::pair<SlotSequence, LangfordSource> build_langford_any(int d, int n, uint64_t seed) {
    if (!feasible_langford(d, n))
        fail(Errc::BadArgument, "L with d=" + std::to_string(d) + " n=" + std::to_string(n) +
                                    " is arithmetically infeasible");
    auto done = [&](SlotSequence s, LangfordSource src) {
        ValidationReport rep = validate(s, SequenceSpec::langford(d, n));
        if (!rep.valid)
            fail(Errc::ConstructionBug, "construction " + std::string(langford_source_name(src)) +
                                            " produced an invalid arrangement: " +
                                            rep.violations.front());
        return std::make_pair(std::move(s), src);
    };
    if (d >= 2 && n == 2 * d - 1) return done(interval_langford(d), LangfordSource::Interval);
    if (d >= 2 && d % 2 == 0 && n % 4 == 3 && n >= 2 * d - 1)
        return done(table_langford_even_d(d, n), LangfordSource::TableEvenD);
    if (d >= 3 && d % 2 == 1 && n % 4 == 1 && n >= 2 * d - 1)
        return done(table_langford_odd_d(d, n), LangfordSource::TableOddD);
    if (n % 4 == 0 && n / 2 - d >= 0 && 2 * d >= 3 * (n / 4) + 1)
        return done(table_langford_dense(d, n), LangfordSource::TableDense);
    if (2 * n <= 26) {
        BacktrackResult res = backtrack_first(SequenceSpec::langford(d, n));
        if (res.seq) return done(*res.seq, LangfordSource::Backtracking);
        fail(Errc::Unresolved, "no arrangement exists for d=" + std::to_string(d) +
                                   " n=" + std::to_string(n));
    }
    ClimbBudget budget;
    budget.seed = seed;
    auto res = hillclimb(SequenceSpec::langford(d, n), {}, budget);
    if (!res)
        fail(Errc::Unresolved, "search exhausted its budget for d=" + std::to_string(d) +
                                   " n=" + std::to_string(n));
    return done(*res, LangfordSource::HillClimb);
}

SlotSequence build_hooked_langford_any(int d, int n, uint64_t seed) {
    if (!feasible_hooked_langford(d, n))
        fail(Errc::BadArgument, "hooked L with d=" + std::to_string(d) + " n=" +
                                    std::to_string(n) + " is arithmetically infeasible");
    SequenceSpec spec = SequenceSpec::hooked_langford(d, n);
    if (spec.length() <= 27) {
        BacktrackResult res = backtrack_first(spec);
        if (res.seq) return *res.seq;
        fail(Errc::Unresolved, "no hooked arrangement exists for d=" + std::to_string(d) +
                                   " n=" + std::to_string(n));
    }
    ClimbBudget budget;
    budget.seed = seed;
    auto res = hillclimb(spec, {}, budget);
    if (!res)
        fail(Errc::Unresolved, "search exhausted its budget for hooked d=" + std::to_string(d) +
                                   " n=" + std::to_string(n));
    ValidationReport rep = validate(*res, spec);
    if (!rep.valid) fail(Errc::ConstructionBug, "search produced an invalid hooked arrangement");
    return *res;
}

SlotSequence append_ones(const SlotSequence& s, Side side) {
    for (int p = 1; p <= s.length(); ++p)
        if (s.slot(p) == 1)
            fail(Errc::DifferenceCollision, "difference 1 is already used");
    std::vector<int> v = s.raw();
    if (side == Side::Back) {
        v.push_back(1);
        v.push_back(1);
    } else {
        v.insert(v.begin(), {1, 1});
    }
    return SlotSequence(std::move(v));
}

SlotSequence attach_202(const SlotSequence& hooked) {
    int len = hooked.length();
    std::vector<int> holes = hooked.hole_positions();
    if (holes.size() != 1 || holes[0] != len - 1)
        fail(Errc::HookMissing, "expected exactly one hole at the next-to-last slot");
    for (int p = 1; p <= len; ++p)
        if (hooked.slot(p) == 2)
            fail(Errc::TwoAlreadyPresent, "difference 2 is already used");
    std::vector<int> v = hooked.raw();
    v[static_cast<size_t>(len - 2)] = 2;  // the hook
    v.push_back(2);                       // two slots later
    return SlotSequence(std::move(v));
}

int reverse_common_report(const SlotSequence& s) {
    return common_pairs(s, reverse(s)).count;
}

}  // namespace skolem

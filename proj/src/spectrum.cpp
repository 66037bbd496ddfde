#include "skolem/spectrum.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "skolem/builders.hpp"
#include "skolem/compose.hpp"
#include "skolem/prng.hpp"
#include "skolem/records.hpp"
#include "skolem/search.hpp"

namespace skolem {

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Duplicate: return "duplicate";
        case Strategy::SmallTable: return "small-table";
        case Strategy::SporadicTable: return "sporadic-table";
        case Strategy::AdjoinRecursive: return "adjoin-recursive";
        case Strategy::ShellRecipe: return "shell-recipe";
        case Strategy::IntervalSequence: return "interval-sequence";
        case Strategy::FallbackSearch: return "fallback-search";
    }
    return "?";
}

std::set<int> necessary_spectrum(int n) {
    if (n < 1 || n % 4 == 2 || n % 4 == 3)
        fail(Errc::NoSuchOrder, "no order-" + std::to_string(n) + " arrangement exists");
    std::set<int> out;
    for (int i = 0; i <= n - 3; ++i) out.insert(i);
    out.insert(n);
    if (n == 5) out.erase(2);  // sporadic gap, settled by full enumeration
    return out;
}

namespace {

uint64_t fnv(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (char c : s) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
    return h;
}

const RecordIndex& records() {
    static RecordIndex idx = load_standard_records();
    return idx;
}

const std::vector<SlotSequence>& enumeration(const SequenceSpec& spec) {
    static std::map<std::string, std::vector<SlotSequence>> cache;
    auto it = cache.find(spec.str());
    if (it == cache.end()) it = cache.emplace(spec.str(), enumerate_all(spec)).first;
    return it->second;
}

// First-copy positions indexed by value, for fast intersection counting.
std::vector<int> first_positions(const SlotSequence& s, int max_value) {
    std::vector<int> at(static_cast<size_t>(max_value) + 1, 0);
    for (int pos = s.length(); pos >= 1; --pos) {
        int v = s.slot(pos);
        if (v > 0 && v <= max_value) at[static_cast<size_t>(v)] = pos;
    }
    return at;
}

SlotSequence canonical_arrangement(const SequenceSpec& spec) {
    static std::map<std::string, SlotSequence> cache;
    auto it = cache.find(spec.str());
    if (it != cache.end()) return it->second;
    std::optional<SlotSequence> found;
    if (spec.length() <= 26) {
        BacktrackResult res = backtrack_first(spec);
        if (res.seq) found = *res.seq;
    } else {
        ClimbBudget budget;
        budget.seed = fnv(spec.str());
        found = hillclimb(spec, {}, budget);
    }
    if (!found) fail(Errc::Unresolved, "no arrangement found for " + spec.str());
    cache.emplace(spec.str(), *found);
    return *found;
}

// Second arrangement sharing exactly the pairs of `keep` with `base`: those
// pairs are pinned and every other value is banned from its position in
// `base`, so any full placement shares exactly |keep| pairs.
std::optional<SlotSequence> constrained_mate(const SequenceSpec& spec, const SlotSequence& base,
                                             const std::vector<int>& keep, uint64_t seed,
                                             int restarts) {
    PairSet bp = pairs(base);
    ClimbConstraints cons;
    for (int v : keep) {
        auto it = bp.find(v);
        if (it == bp.end()) return std::nullopt;
        cons.fixed[v] = it->second;
    }
    for (const auto& [v, at] : bp)
        if (!cons.fixed.count(v)) cons.forbidden[v].insert(at);
    ClimbBudget budget;
    budget.seed = seed;
    budget.restarts = restarts;
    return hillclimb(spec, cons, budget);
}

// Random c-subset mate search wrapped around constrained_mate.
std::optional<std::pair<SlotSequence, SlotSequence>> mate_with_common(
    const SequenceSpec& spec, const SlotSequence& base, int c, uint64_t seed, int attempts,
    int restarts_each) {
    std::vector<int> values = spec.values();
    if (c > static_cast<int>(values.size())) return std::nullopt;
    Prng rng(seed);
    for (int t = 0; t < attempts; ++t) {
        std::vector<int> pool = values;
        rng.shuffle(pool);
        pool.resize(static_cast<size_t>(c));
        auto mate = constrained_mate(spec, base, pool, rng.next(), restarts_each);
        if (mate) return std::make_pair(base, *mate);
    }
    return std::nullopt;
}

void note(std::vector<std::string>* trace, const std::string& line) {
    if (trace) trace->push_back(line);
}

}  // namespace

std::optional<std::pair<SlotSequence, SlotSequence>> langford_pair_with_common(
    int d, int n, int c, bool hooked, uint64_t seed, std::vector<std::string>* trace) {
    if (hooked ? !feasible_hooked_langford(d, n) : !feasible_langford(d, n)) return std::nullopt;
    SequenceSpec spec =
        hooked ? SequenceSpec::hooked_langford(d, n) : SequenceSpec::langford(d, n);
    Family fam = hooked ? Family::HookedLangford : Family::Langford;

    if (const RecordCheck* rec = records().find(fam, d, n, c)) {
        note(trace, "  langford pair d=" + std::to_string(d) + " n=" + std::to_string(n) +
                        " c=" + std::to_string(c) + ": transcribed record " + rec->rec.id());
        if (rec->reversed)
            return std::make_pair(reverse(rec->first), reverse(rec->second));
        return std::make_pair(rec->first, rec->second);
    }

    SlotSequence base = hooked ? build_hooked_langford_any(d, n, mix_seed(seed, 11))
                               : build_langford_any(d, n, mix_seed(seed, 12)).first;
    if (c == n) {
        note(trace, "  langford pair d=" + std::to_string(d) + " n=" + std::to_string(n) +
                        ": duplicate, c=" + std::to_string(c));
        return std::make_pair(base, base);
    }
    if (!hooked && n == 2 * d - 1 && c == 0) {
        note(trace, "  langford pair d=" + std::to_string(d) + " n=" + std::to_string(n) +
                        ": interval pattern and its rotation, c=0");
        return std::make_pair(interval_langford(d), interval_langford_variant(d));
    }
    if (!hooked && common_pairs(base, reverse(base)).count == c) {
        note(trace, "  langford pair d=" + std::to_string(d) + " n=" + std::to_string(n) +
                        ": arrangement with its reverse, c=" + std::to_string(c));
        return std::make_pair(base, reverse(base));
    }
    auto found = mate_with_common(spec, base, c, mix_seed(seed, 13), 24, 40);
    if (found)
        note(trace, "  langford pair d=" + std::to_string(d) + " n=" + std::to_string(n) +
                        " c=" + std::to_string(c) + ": constrained search");
    return found;
}

namespace {

// Hooked front pieces for the interlocked composition.
std::optional<std::pair<SlotSequence, SlotSequence>> hooked_pair_with_common(
    int d, int q, uint64_t seed, std::vector<std::string>* trace) {
    if (d % 4 != 2 && d % 4 != 3) return std::nullopt;
    SequenceSpec spec = SequenceSpec::hooked_skolem(d);
    if (2 * d + 1 <= 19) {
        const std::vector<SlotSequence>& all = enumeration(spec);
        std::vector<std::vector<int>> firsts;
        firsts.reserve(all.size());
        for (const SlotSequence& s : all) firsts.push_back(first_positions(s, d));
        for (size_t i = 0; i < all.size(); ++i) {
            for (size_t j = i; j < all.size(); ++j) {
                if ((i == j) != (q == d)) continue;
                int cnt = 0;
                for (int v = 1; v <= d; ++v)
                    if (firsts[i][static_cast<size_t>(v)] == firsts[j][static_cast<size_t>(v)])
                        ++cnt;
                if (cnt == q) {
                    note(trace, "  hooked front d=" + std::to_string(d) + " q=" +
                                    std::to_string(q) + ": enumeration pair");
                    return std::make_pair(all[i], all[j]);
                }
            }
        }
        return std::nullopt;
    }
    SlotSequence base = canonical_arrangement(spec);
    if (q == d) return std::make_pair(base, base);
    auto found = mate_with_common(spec, base, q, mix_seed(seed, 17), 16, 40);
    if (found)
        note(trace, "  hooked front d=" + std::to_string(d) + " q=" + std::to_string(q) +
                        ": constrained search");
    return found;
}

struct Engine {
    uint64_t seed;
    std::vector<std::string> trace;
    int depth = 0;

    using Pair = std::pair<SlotSequence, SlotSequence>;

    bool verified(int n, int p, const Pair& pr) {
        SequenceSpec spec = SequenceSpec::skolem(n);
        if (!validate(pr.first, spec).valid || !validate(pr.second, spec).valid) return false;
        return common_pairs(pr.first, pr.second).count == p;
    }

    std::string indent() const { return std::string(static_cast<size_t>(depth) * 2, ' '); }

    std::optional<Pair> duplicate(int n, int p) {
        if (p != n) return std::nullopt;
        SlotSequence s = canonical_arrangement(SequenceSpec::skolem(n));
        trace.push_back(indent() + "duplicate: one arrangement twice shares all " +
                        std::to_string(n) + " pairs");
        return std::make_pair(s, s);
    }

    std::optional<Pair> small_table(int n, int p) {
        if (n > 9) return std::nullopt;
        const std::vector<SlotSequence>& all = enumeration(SequenceSpec::skolem(n));
        std::vector<std::vector<int>> firsts;
        firsts.reserve(all.size());
        for (const SlotSequence& s : all) firsts.push_back(first_positions(s, n));
        for (size_t i = 0; i < all.size(); ++i) {
            for (size_t j = i; j < all.size(); ++j) {
                if ((i == j) != (p == n)) continue;
                int cnt = 0;
                for (int v = 1; v <= n; ++v)
                    if (firsts[i][static_cast<size_t>(v)] == firsts[j][static_cast<size_t>(v)])
                        ++cnt;
                if (cnt == p) {
                    trace.push_back(indent() + "small-table: enumeration pair #" +
                                    std::to_string(i) + ",#" + std::to_string(j));
                    return std::make_pair(all[i], all[j]);
                }
            }
        }
        trace.push_back(indent() + "small-table: no pair in the full enumeration");
        return std::nullopt;
    }

    std::optional<Pair> sporadic(int n, int p) {
        const RecordCheck* rec = records().find(Family::Skolem, 1, n, p);
        if (!rec) return std::nullopt;
        trace.push_back(indent() + "sporadic-table: record " + rec->rec.id());
        if (rec->reversed) return std::make_pair(reverse(rec->first), reverse(rec->second));
        return std::make_pair(rec->first, rec->second);
    }

    // [front | back] with front an order-d pair sharing q and back a
    // Langford-type pair over d+1..n sharing c, so the total shares q+c.
    std::optional<Pair> adjoin_recursive(int n, int p) {
        int dmax = (n - 1) / 3;
        for (int d = dmax; d >= 1; --d) {
            int bn = n - d;  // back piece order, differences d+1..n
            for (int c : {bn, 0, 1, 2, 3}) {
                int q = p - c;
                if (q < 0 || q > d) continue;
                bool plain = d % 4 == 0 || d % 4 == 1;
                if (plain) {
                    if (!necessary_spectrum(d).count(q)) continue;
                    if (!feasible_langford(d + 1, bn)) continue;
                    std::optional<Pair> front = sub_realize(d, q);
                    if (!front) continue;
                    auto back = langford_pair_with_common(d + 1, bn, c, false,
                                                          mix_seed(seed, 100 + d), &trace);
                    if (!back) continue;
                    trace.push_back(indent() + "adjoin-recursive: order-" + std::to_string(d) +
                                    " front q=" + std::to_string(q) + " | plain back c=" +
                                    std::to_string(c));
                    return std::make_pair(adjoin(front->first, back->first),
                                          adjoin(front->second, back->second));
                }
                // hooked front interlocks with a hooked back written in
                // mirrored form; lengths overlap by two slots
                if (q != d && q > d - 3) continue;
                if (!feasible_hooked_langford(d + 1, bn)) continue;
                auto front = hooked_pair_with_common(d, q, mix_seed(seed, 200 + d), &trace);
                if (!front) continue;
                auto back = langford_pair_with_common(d + 1, bn, c, true,
                                                      mix_seed(seed, 300 + d), &trace);
                if (!back) continue;
                trace.push_back(indent() + "adjoin-recursive: hooked order-" + std::to_string(d) +
                                " front q=" + std::to_string(q) + " | hooked back c=" +
                                std::to_string(c) + ", interlocked");
                return std::make_pair(adjoin_hooked(front->first, reverse(back->first)),
                                      adjoin_hooked(front->second, reverse(back->second)));
            }
        }
        trace.push_back(indent() + "adjoin-recursive: no split produced the target");
        return std::nullopt;
    }

    // Shell over the top t differences, an order-b block inside its open
    // span, a Langford tail. Reversing the shell (which never shares a pair
    // with itself reversed) or varying the tail tunes the count.
    std::optional<Pair> shell_recipe(int n, int p) {
        for (int t = 3; t <= n && shell_feasible(n, t); t += 2) {
            int h = shell_hole_count(n, t);
            if (h % 2) continue;
            int b = h / 2;
            if (b > 0 && (b % 4 == 2 || b % 4 == 3)) continue;
            int cn = n - t - b, cd = b + 1;
            if (cn < 2 * cd - 1 || !feasible_langford(cd, cn)) continue;

            // reversed-shell variant: p = q + cn, tail shared in full
            int q = p - cn;
            bool q_ok = b == 0 ? q == 0 : (q >= 0 && necessary_spectrum(b).count(q));
            if (q_ok) {
                std::optional<Pair> block =
                    b == 0 ? std::make_optional(Pair{SlotSequence{{}}, SlotSequence{{}}})
                           : sub_realize(b, q);
                if (block) {
                    auto tail = langford_pair_with_common(cd, cn, cn, false,
                                                          mix_seed(seed, 400 + t), &trace);
                    if (tail) {
                        SlotSequence a = shell(n, t);
                        SlotSequence s1 = compose_shell(a, block->first, tail->first);
                        SlotSequence s2 = compose_shell(reverse(a), block->second, tail->second);
                        trace.push_back(indent() + "shell-recipe: t=" + std::to_string(t) +
                                        " reversed-shell, block q=" + std::to_string(q) +
                                        ", tail shared (" + std::to_string(cn) + ")");
                        return std::make_pair(s1, s2);
                    }
                }
            }

            // same-shell variant: p = t + b + c with a searched tail
            int c = p - t - b;
            if (c == cn || (c >= 0 && c <= 3)) {
                std::optional<Pair> block =
                    b == 0 ? std::make_optional(Pair{SlotSequence{{}}, SlotSequence{{}}})
                           : sub_realize(b, b);
                if (block) {
                    auto tail = langford_pair_with_common(cd, cn, c, false,
                                                          mix_seed(seed, 500 + t), &trace);
                    if (tail) {
                        SlotSequence a = shell(n, t);
                        SlotSequence s1 = compose_shell(a, block->first, tail->first);
                        SlotSequence s2 = compose_shell(a, block->second, tail->second);
                        trace.push_back(indent() + "shell-recipe: t=" + std::to_string(t) +
                                        " same-shell, tail c=" + std::to_string(c));
                        return std::make_pair(s1, s2);
                    }
                }
            }
        }
        trace.push_back(indent() + "shell-recipe: no shell split fits");
        return std::nullopt;
    }

    static SlotSequence compose_shell(const SlotSequence& sh, const SlotSequence& block,
                                      const SlotSequence& tail) {
        std::vector<int> v = sh.raw();
        std::vector<int> holes = sh.hole_positions();
        if (static_cast<int>(holes.size()) != block.length())
            fail(Errc::ConstructionBug, "shell span and block length differ");
        for (int i = 0; i < block.length(); ++i)
            v[static_cast<size_t>(holes[static_cast<size_t>(i)] - 1)] = block.slot(i + 1);
        v.insert(v.end(), tail.raw().begin(), tail.raw().end());
        return SlotSequence(std::move(v));
    }

    std::optional<Pair> interval_sequence(int n, int p) {
        if ((n - 1) % 3 != 0) return std::nullopt;
        int d = (n - 1) / 3;
        if (d < 1 || (d % 4 != 0 && d % 4 != 1)) return std::nullopt;
        if (!necessary_spectrum(d).count(p)) return std::nullopt;
        std::optional<Pair> front = sub_realize(d, p);
        if (!front) return std::nullopt;
        SlotSequence b1 = interval_langford(d + 1);
        SlotSequence b2 = interval_langford_variant(d + 1);
        trace.push_back(indent() + "interval-sequence: order-" + std::to_string(d) +
                        " front q=" + std::to_string(p) +
                        " | interval tail against its rotation (c=0)");
        return std::make_pair(adjoin(front->first, b1), adjoin(front->second, b2));
    }

    std::optional<Pair> fallback(int n, int p) {
        SequenceSpec spec = SequenceSpec::skolem(n);
        uint64_t h = mix_seed(static_cast<uint64_t>(n), static_cast<uint64_t>(p));
        Prng rng(h);
        ClimbBudget base_budget;
        base_budget.seed = rng.next();
        std::optional<SlotSequence> s1 = hillclimb(spec, {}, base_budget);
        if (!s1) {
            trace.push_back(indent() + "fallback-search: no base arrangement");
            return std::nullopt;
        }
        // total restart budget 10^4 split over subset draws
        for (int attempt = 0; attempt < 200; ++attempt) {
            std::vector<int> pool;
            for (int v = 1; v <= n; ++v) pool.push_back(v);
            rng.shuffle(pool);
            pool.resize(static_cast<size_t>(p));
            auto mate = constrained_mate(spec, *s1, pool, rng.next(), 50);
            if (mate) {
                trace.push_back(indent() + "fallback-search: subset draw " +
                                std::to_string(attempt) + " succeeded (seed hash of n,p)");
                return std::make_pair(*s1, *mate);
            }
        }
        trace.push_back(indent() + "fallback-search: restart budget exhausted");
        return std::nullopt;
    }

    std::optional<Pair> sub_realize(int d, int q) {
        if (depth > 6) return std::nullopt;
        ++depth;
        std::optional<Pair> out;
        try {
            Realization r = run(d, q);
            out = std::make_pair(r.first, r.second);
        } catch (const Error&) {
            out = std::nullopt;
        }
        --depth;
        return out;
    }

    Realization run(int n, int p) {
        std::set<int> sp = necessary_spectrum(n);
        if (!sp.count(p)) {
            std::string why;
            if (p == n - 1 || p == n - 2)
                why = "fixing " + std::to_string(p) + " of " + std::to_string(n) +
                      " pairs forces the rest";
            else if (n == 5 && p == 2)
                why = "order 5 has no pair sharing exactly 2 (settled by enumeration)";
            else
                why = "outside 0.." + std::to_string(n - 3) + " and " + std::to_string(n);
            fail(Errc::NotInSpectrum, "p=" + std::to_string(p) + " for order " +
                                          std::to_string(n) + ": " + why);
        }

        struct Entry {
            Strategy strategy;
            std::optional<Pair> (Engine::*fn)(int, int);
        };
        static constexpr Entry pipeline[] = {
            {Strategy::Duplicate, &Engine::duplicate},
            {Strategy::SmallTable, &Engine::small_table},
            {Strategy::SporadicTable, &Engine::sporadic},
            {Strategy::AdjoinRecursive, &Engine::adjoin_recursive},
            {Strategy::ShellRecipe, &Engine::shell_recipe},
            {Strategy::IntervalSequence, &Engine::interval_sequence},
            {Strategy::FallbackSearch, &Engine::fallback},
        };

        std::string tried;
        for (const Entry& e : pipeline) {
            if (!tried.empty()) tried += ", ";
            tried += strategy_name(e.strategy);
            std::optional<Pair> pr;
            try {
                pr = (this->*e.fn)(n, p);
            } catch (const Error& err) {
                trace.push_back(indent() + std::string(strategy_name(e.strategy)) +
                                ": error: " + err.what());
                continue;
            }
            if (!pr) continue;
            if (!verified(n, p, *pr)) {
                trace.push_back(indent() + std::string(strategy_name(e.strategy)) +
                                ": produced a pair that failed re-verification, skipped");
                continue;
            }
            Realization r;
            r.n = n;
            r.p = p;
            r.first = pr->first;
            r.second = pr->second;
            r.strategy = e.strategy;
            r.trace = trace;
            return r;
        }
        fail(Errc::Unresolved, "realize(" + std::to_string(n) + "," + std::to_string(p) +
                                   "): strategies tried: " + tried);
    }
};

}  // namespace

Realization realize(int n, int p, uint64_t seed) {
    Engine engine;
    engine.seed = seed;
    return engine.run(n, p);
}

std::set<int> exhaustive_spectrum(const SequenceSpec& spec, int cap_slots) {
    EnumerateOptions opt;
    opt.cap_slots = cap_slots;
    std::vector<SlotSequence> all = enumerate_all(spec, opt);
    std::set<int> out;
    if (all.empty()) return out;
    int nv = static_cast<int>(spec.values().size());
    int maxv = spec.values().back();
    out.insert(nv);  // any arrangement against itself
    std::vector<std::vector<int>> firsts;
    firsts.reserve(all.size());
    for (const SlotSequence& s : all) firsts.push_back(first_positions(s, maxv));
    for (size_t i = 0; i < all.size(); ++i) {
        for (size_t j = i + 1; j < all.size(); ++j) {
            int cnt = 0;
            for (int v : spec.values())
                if (firsts[i][static_cast<size_t>(v)] == firsts[j][static_cast<size_t>(v)]) ++cnt;
            out.insert(cnt);
        }
    }
    return out;
}

}  // namespace skolem

#include "skolem/designs.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "skolem/prng.hpp"
#include "skolem/search.hpp"
#include "skolem/spectrum.hpp"

namespace skolem {

const char* triple_kind_name(TripleKind k) {
    switch (k) {
        case TripleKind::Cyclic: return "cyclic";
        case TripleKind::Directed: return "directed";
        case TripleKind::Mendelsohn: return "mendelsohn";
    }
    return "?";
}

namespace {

int mod(int x, int v) {
    int r = x % v;
    return r < 0 ? r + v : r;
}

SlotSequence arrangement(const SequenceSpec& spec) {
    static std::map<std::string, SlotSequence> cache;
    auto it = cache.find(spec.str());
    if (it != cache.end()) return it->second;
    std::optional<SlotSequence> found;
    if (spec.length() <= 30) {
        BacktrackResult res = backtrack_first(spec);
        if (res.seq) found = *res.seq;
    } else {
        ClimbBudget budget;
        budget.seed = mix_seed(0x5eedULL, static_cast<uint64_t>(spec.length()));
        found = hillclimb(spec, {}, budget);
    }
    if (!found) fail(Errc::Unresolved, "no arrangement found for " + spec.str());
    cache.emplace(spec.str(), *found);
    return *found;
}

Triple offset_block(const PlacedPair& p, int n, int v) {
    return {0, mod(p.first + n, v), mod(p.second + n, v)};
}

Triple mixed_block(const PlacedPair& p, int n, int v) {
    return {0, mod(p.value, v), mod(p.second + n, v)};
}

Triple block_for(const PlacedPair& p, int n, int v, Form f) {
    return f == Form::Offset ? offset_block(p, n, v) : mixed_block(p, n, v);
}

// blocks for every value, offset form exactly on `offset_values`
std::vector<Triple> form_split(const PairSet& ps, int n, int v,
                               const std::set<int>& offset_values) {
    std::vector<Triple> out;
    out.reserve(ps.size());
    for (const auto& [value, at] : ps) {
        PlacedPair p{value, at.first, at.second};
        out.push_back(block_for(p, n, v, offset_values.count(value) ? Form::Offset : Form::Mixed));
    }
    return out;
}

Triple sorted(Triple t) {
    std::sort(t.begin(), t.end());
    return t;
}

std::set<int> value_set(const std::vector<PlacedPair>& shared) {
    std::set<int> out;
    for (const PlacedPair& p : shared) out.insert(p.value);
    return out;
}

int count_shared(const BaseSystem& a, const BaseSystem& b) {
    std::set<Triple> ca;
    for (const Triple& t : a.blocks) ca.insert(canonical_triple(t, a.v, a.kind));
    int n = 0;
    for (const Triple& t : b.blocks)
        if (ca.count(canonical_triple(t, b.v, b.kind))) ++n;
    return n;
}

// the intersecting pair of arrangements behind the lambda >= 3 builders
struct SourcePair {
    SlotSequence s1, s2;
    std::vector<int> in_p, out_p;  // shared values and the rest, ascending
};

SourcePair source_pair(int n, int p) {
    Realization r = realize(n, p);
    SourcePair sp{r.first, r.second, {}, {}};
    std::set<int> shared = value_set(common_pairs(r.first, r.second).shared);
    for (int v = 1; v <= n; ++v)
        (shared.count(v) ? sp.in_p : sp.out_p).push_back(v);
    return sp;
}

}  // namespace

std::vector<Triple> heffter_blocks(const SlotSequence& s, int n, Form form) {
    int v = 6 * n + 1;
    std::vector<Triple> out;
    for (const auto& [value, at] : pairs(s)) {
        PlacedPair p{value, at.first, at.second};
        out.push_back(block_for(p, n, v, form));
    }
    return out;
}

Triple canonical_triple(const Triple& t, int v, TripleKind kind) {
    switch (kind) {
        case TripleKind::Cyclic: {
            Triple best{v, v, v};
            for (int i = 0; i < 3; ++i) {
                Triple c = sorted({0, mod(t[(i + 1) % 3] - t[i], v), mod(t[(i + 2) % 3] - t[i], v)});
                best = std::min(best, c);
            }
            return best;
        }
        case TripleKind::Directed:
            return {0, mod(t[1] - t[0], v), mod(t[2] - t[0], v)};
        case TripleKind::Mendelsohn: {
            Triple best{v, v, v};
            for (int i = 0; i < 3; ++i) {
                Triple c{0, mod(t[(i + 1) % 3] - t[i], v), mod(t[(i + 2) % 3] - t[i], v)};
                best = std::min(best, c);
            }
            return best;
        }
    }
    fail(Errc::BadArgument, "unknown triple kind");
}

std::vector<Triple> develop(const BaseSystem& sys) {
    std::vector<Triple> out;
    for (const Triple& b : sys.blocks) {
        std::set<Triple> orbit;
        for (int g = 0; g < sys.v; ++g) {
            Triple t{mod(b[0] + g, sys.v), mod(b[1] + g, sys.v), mod(b[2] + g, sys.v)};
            if (sys.kind == TripleKind::Cyclic) t = sorted(t);
            if (sys.kind == TripleKind::Mendelsohn) {
                // rotations of one cyclic block are the same block
                Triple r1{t[1], t[2], t[0]}, r2{t[2], t[0], t[1]};
                t = std::min({t, r1, r2});
            }
            orbit.insert(t);
        }
        out.insert(out.end(), orbit.begin(), orbit.end());
    }
    return out;
}

ValidationReport validate_coverage(const BaseSystem& sys) {
    ValidationReport rep;
    if (sys.v < 3) {
        rep.note("point set too small");
        return rep;
    }
    int v = sys.v;
    std::vector<int> cover(static_cast<size_t>(v) * static_cast<size_t>(v), 0);
    auto at = [&](int x, int y) -> int& { return cover[static_cast<size_t>(x) * v + y]; };
    for (const Triple& t : develop(sys)) {
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
            rep.note("degenerate block with a repeated point");
            return rep;
        }
        switch (sys.kind) {
            case TripleKind::Cyclic:
                for (int i = 0; i < 3; ++i)
                    for (int j = i + 1; j < 3; ++j)
                        ++at(std::min(t[i], t[j]), std::max(t[i], t[j]));
                break;
            case TripleKind::Directed:
                ++at(t[0], t[1]);
                ++at(t[0], t[2]);
                ++at(t[1], t[2]);
                break;
            case TripleKind::Mendelsohn:
                ++at(t[0], t[1]);
                ++at(t[1], t[2]);
                ++at(t[2], t[0]);
                break;
        }
    }
    int listed = 0;
    for (int x = 0; x < v; ++x) {
        int y0 = sys.kind == TripleKind::Cyclic ? x + 1 : 0;
        for (int y = y0; y < v; ++y) {
            if (y == x) continue;
            if (at(x, y) != sys.lambda && listed < 20) {
                rep.note("pair (" + std::to_string(x) + "," + std::to_string(y) + ") covered " +
                         std::to_string(at(x, y)) + " times, want " +
                         std::to_string(sys.lambda));
                ++listed;
            }
        }
    }
    return rep;
}

std::vector<int> fine_structure(const BaseSystem& sys) {
    std::map<Triple, int> mult;
    for (const Triple& t : sys.blocks) ++mult[canonical_triple(t, sys.v, sys.kind)];
    int top = 0;
    for (const auto& [t, m] : mult) top = std::max(top, m);
    std::vector<int> hist(static_cast<size_t>(std::max(top, sys.lambda)), 0);
    for (const auto& [t, m] : mult) ++hist[static_cast<size_t>(m - 1)];
    return hist;
}

SystemPair cts_pair(int n, int k) {
    if (n < 1) fail(Errc::BadArgument, "order must be positive");
    if (k < 0 || k > n)
        fail(Errc::BadArgument, "shared count " + std::to_string(k) + " outside 0.." +
                                    std::to_string(n));
    SequenceSpec spec = (n % 4 == 0 || n % 4 == 1) ? SequenceSpec::skolem(n)
                                                   : SequenceSpec::hooked_skolem(n);
    SlotSequence s = arrangement(spec);
    int v = 6 * n + 1;
    std::set<int> offset_values;
    for (int i = 1; i <= k; ++i) offset_values.insert(i);
    SystemPair out;
    out.a = BaseSystem{v, 1, TripleKind::Cyclic, form_split(pairs(s), n, v, offset_values)};
    out.b = BaseSystem{v, 1, TripleKind::Cyclic, heffter_blocks(s, n, Form::Offset)};
    out.shared = count_shared(out.a, out.b);
    return out;
}

SystemPair cts_pair_mod3(int n, int k) {
    if (n < 2) fail(Errc::BadArgument, "order must be at least 2");
    if (k < 1 || k > n + 1)
        fail(Errc::BadArgument, "shared count " + std::to_string(k) + " outside 1.." +
                                    std::to_string(n + 1) + " (the short block is always shared)");
    SequenceSpec spec = (n % 4 == 0 || n % 4 == 3)
                            ? SequenceSpec::extended_skolem(n, n + 1)
                            : SequenceSpec::rosa(n, n + 1, 2 * n + 1);
    SlotSequence s = arrangement(spec);
    int v = 6 * n + 3;
    Triple short_block{0, 2 * n + 1, 4 * n + 2};
    std::set<int> offset_values;
    for (int i = 1; i <= k - 1; ++i) offset_values.insert(i);
    SystemPair out;
    out.a = BaseSystem{v, 1, TripleKind::Cyclic, form_split(pairs(s), n, v, offset_values)};
    out.a.blocks.push_back(short_block);
    std::set<int> all;
    for (int i = 1; i <= n; ++i) all.insert(i);
    out.b = BaseSystem{v, 1, TripleKind::Cyclic, form_split(pairs(s), n, v, all)};
    out.b.blocks.push_back(short_block);
    out.shared = count_shared(out.a, out.b);
    return out;
}

BaseSystem fine_cts2(int n, int c2) {
    if (c2 < 0 || c2 > n)
        fail(Errc::OutsideRegion, "twofold fine structure needs 0 <= doubles <= n");
    SystemPair pr = cts_pair(n, c2);
    BaseSystem sys{pr.a.v, 2, TripleKind::Cyclic, pr.a.blocks};
    sys.blocks.insert(sys.blocks.end(), pr.b.blocks.begin(), pr.b.blocks.end());
    return sys;
}

BaseSystem fine_cts3(int n, int t, int s) {
    if (n % 4 == 2 || n % 4 == 3)
        fail(Errc::BadArgument, "threefold builder needs an order with hole-free arrangements");
    if (t < 0 || s < 0 || t + s > n)
        fail(Errc::OutsideRegion, "threefold fine structure needs t,s >= 0 and t+s <= n");
    std::set<int> sp = necessary_spectrum(n);
    int v = 6 * n + 1;
    for (int p = std::min(s + t, n); p >= s; --p) {
        if (!sp.count(p)) continue;
        int m = t - (p - s);
        if (m < 0 || m > n - p) continue;
        SourcePair src;
        try {
            src = source_pair(n, p);
        } catch (const Error&) {
            continue;
        }
        std::set<int> p_set(src.in_p.begin(), src.in_p.end());
        std::set<int> b_offsets(src.in_p.begin(), src.in_p.begin() + s);
        b_offsets.insert(src.out_p.begin(), src.out_p.begin() + m);
        std::set<int> all(src.in_p.begin(), src.in_p.end());
        all.insert(src.out_p.begin(), src.out_p.end());

        BaseSystem sys{v, 3, TripleKind::Cyclic, {}};
        auto append = [&](std::vector<Triple> blocks) {
            sys.blocks.insert(sys.blocks.end(), blocks.begin(), blocks.end());
        };
        append(form_split(pairs(src.s1), n, v, all));        // A: all offset
        append(form_split(pairs(src.s1), n, v, b_offsets));  // B
        append(form_split(pairs(src.s2), n, v, p_set));      // C: offset on shared values
        return sys;
    }
    fail(Errc::RequiresExceptionalIntersection,
         "doubles " + std::to_string(t) + ", triples " + std::to_string(s) + " at order " +
             std::to_string(n) + " needs an unavailable intersection count");
}

BaseSystem fine_cts4(int n, int t, int s, int u) {
    if (n % 4 == 2 || n % 4 == 3)
        fail(Errc::BadArgument, "fourfold builder needs an order with hole-free arrangements");
    if (t < 0 || s < 0 || u < 0 || u + s + (t + 1) / 2 > n)
        fail(Errc::OutsideRegion,
             "fourfold fine structure needs t,s,u >= 0 and u + s + ceil(t/2) <= n");
    std::set<int> sp = necessary_spectrum(n);
    int v = 6 * n + 1;
    for (int d = t / 2; d >= 0; --d) {
        int p = u + s + d;
        if (!sp.count(p)) continue;
        int g = t - 2 * d;  // doubles still needed, hosted outside the shared set
        if ((g + 1) / 2 > n - p) continue;
        SourcePair src;
        try {
            src = source_pair(n, p);
        } catch (const Error&) {
            continue;
        }
        auto& P = src.in_p;
        std::set<int> u_set(P.begin(), P.begin() + u);
        std::set<int> s_set(P.begin() + u, P.begin() + u + s);
        std::set<int> d_set(P.begin() + u + s, P.end());
        std::set<int> g2, g1;
        {
            size_t i = 0;
            for (; i < static_cast<size_t>(g / 2); ++i) g2.insert(src.out_p[i]);
            if (g % 2) g1.insert(src.out_p[i]);
        }

        // forms per value: the shared set splits u/s/d, outside values
        // host two, one or zero further doubles (g2, g1, the rest)
        std::set<int> a_off, b_off, c_off, d_off;
        for (int val = 1; val <= n; ++val) a_off.insert(val);
        b_off = a_off;
        c_off = u_set;
        c_off.insert(s_set.begin(), s_set.end());
        c_off.insert(g1.begin(), g1.end());
        for (int val : src.out_p)
            if (!g2.count(val) && !g1.count(val)) {
                b_off.erase(val);  // alternating value: B and D go mixed, A and C offset
                c_off.insert(val);
            }
        d_off = u_set;

        BaseSystem sys{v, 4, TripleKind::Cyclic, {}};
        auto append = [&](std::vector<Triple> blocks) {
            sys.blocks.insert(sys.blocks.end(), blocks.begin(), blocks.end());
        };
        append(form_split(pairs(src.s1), n, v, a_off));  // A
        append(form_split(pairs(src.s1), n, v, b_off));  // B
        append(form_split(pairs(src.s2), n, v, c_off));  // C
        append(form_split(pairs(src.s2), n, v, d_off));  // D
        return sys;
    }
    fail(Errc::RequiresExceptionalIntersection,
         "doubles " + std::to_string(t) + ", triples " + std::to_string(s) + ", quadruples " +
             std::to_string(u) + " at order " + std::to_string(n) +
             " needs an unavailable intersection count");
}

namespace {

BaseSystem expand(const BaseSystem& cts, TripleKind kind) {
    if (cts.kind != TripleKind::Cyclic)
        fail(Errc::BadArgument, "expansion starts from a cyclic system");
    BaseSystem out{cts.v, cts.lambda, kind, {}};
    out.blocks.reserve(cts.blocks.size() * 2);
    for (const Triple& t : cts.blocks) {
        out.blocks.push_back(t);
        if (kind == TripleKind::Directed)
            out.blocks.push_back({t[2], t[1], t[0]});
        else
            out.blocks.push_back({t[0], t[2], t[1]});
    }
    return out;
}

}  // namespace

BaseSystem expand_directed(const BaseSystem& cts) { return expand(cts, TripleKind::Directed); }

BaseSystem expand_mendelsohn(const BaseSystem& cts) {
    return expand(cts, TripleKind::Mendelsohn);
}

}  // namespace skolem

// Acceptance gate for the whole library. Each criterion prints exactly one
// PASS/FAIL line; detail lines follow indented. The exit code is the number
// of failed criteria, so CTest treats any red criterion as a failed test.
//
// Numeric expectations and time budgets are pinned here on purpose: the gate
// is the contract, not a mirror of whatever the code currently produces.

#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "skolem/builders.hpp"
#include "skolem/compose.hpp"
#include "skolem/core.hpp"
#include "skolem/designs.hpp"
#include "skolem/families.hpp"
#include "skolem/records.hpp"
#include "skolem/search.hpp"
#include "skolem/spectrum.hpp"

namespace {

using namespace skolem;
using Clock = std::chrono::steady_clock;

std::string fmt(const char* f, ...) {
    char buf[768];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

std::string set_str(const std::set<int>& s) {
    std::string out = "{";
    for (int v : s) {
        if (out.size() > 1) out += ",";
        out += std::to_string(v);
    }
    return out + "}";
}

struct Gate {
    std::string title;
    double limit_s = 0.0;  // 0 means no wall-clock budget
    std::vector<std::string> notes;
    std::vector<std::string> faults;

    void note(std::string line) { notes.push_back(std::move(line)); }
    void fault(std::string line) { faults.push_back(std::move(line)); }
    void require(bool cond, std::string line) {
        if (!cond) faults.push_back(std::move(line));
    }
};

// --- criterion 1: existence by exhaustive enumeration ----------------------

void run_existence(Gate& g) {
    const std::map<int, size_t> plain = {{1, 1}, {4, 6}, {5, 10}, {8, 504}, {9, 2656}};
    const std::map<int, size_t> hooked = {{2, 1}, {3, 2}, {6, 38}, {7, 124}};
    for (int n = 1; n <= 9; ++n) {
        for (bool hook : {false, true}) {
            SequenceSpec spec = hook ? SequenceSpec::hooked_skolem(n) : SequenceSpec::skolem(n);
            std::vector<SlotSequence> all = enumerate_all(spec);
            const auto& want = hook ? hooked : plain;
            auto it = want.find(n);
            size_t expect = it == want.end() ? 0 : it->second;
            g.require(all.size() == expect, fmt("%s: found %zu arrangements, expected %zu",
                                                spec.str().c_str(), all.size(), expect));
            for (const SlotSequence& s : all) {
                if (!validate(s, spec).valid) {
                    g.fault(fmt("%s: enumeration emitted invalid output %s", spec.str().c_str(),
                                s.str().c_str()));
                    break;
                }
            }
        }
    }
    g.note("orders with solutions: plain {1,4,5,8,9}, hooked {2,3,6,7}; "
           "counts 1/6/10/504/2656 and 1/2/38/124, every output re-validated");
}

// --- criterion 2: exact intersection spectra at small order ----------------

void run_small_spectra(Gate& g) {
    struct Case {
        SequenceSpec spec;
        std::set<int> want;
    };
    const std::vector<Case> cases = {
        {SequenceSpec::skolem(4), {0, 1, 4}},
        {SequenceSpec::skolem(5), {0, 1, 5}},
        {SequenceSpec::skolem(8), {0, 1, 2, 3, 4, 5, 8}},
        {SequenceSpec::skolem(9), {0, 1, 2, 3, 4, 5, 6, 9}},
        {SequenceSpec::hooked_skolem(2), {2}},
        {SequenceSpec::hooked_skolem(3), {0, 3}},
        {SequenceSpec::hooked_skolem(6), {0, 1, 2, 3, 6}},
        {SequenceSpec::hooked_skolem(7), {0, 1, 2, 3, 4, 7}},
    };
    for (const Case& c : cases) {
        std::set<int> got = exhaustive_spectrum(c.spec);
        g.require(got == c.want, fmt("%s: spectrum %s, expected %s", c.spec.str().c_str(),
                                     set_str(got).c_str(), set_str(c.want).c_str()));
    }
    g.note("all eight full pairwise spectra match the enumerated sets exactly");
}

// --- criterion 3: prescribed intersections for 4 <= n <= 52 ----------------

void run_realize(Gate& g) {
    int done = 0;
    auto expect_reject = [&](int n, int p) {
        try {
            realize(n, p);
            g.fault(fmt("realize(%d,%d) succeeded on an excluded count", n, p));
        } catch (const Error& e) {
            if (e.kind() != Errc::NotInSpectrum)
                g.fault(fmt("realize(%d,%d): expected NotInSpectrum, got %s", n, p,
                            errc_name(e.kind())));
        }
    };
    for (int n = 4; n <= 52; ++n) {
        if (n % 4 > 1) continue;
        for (int p : necessary_spectrum(n)) {
            try {
                Realization r = realize(n, p);
                SequenceSpec spec = SequenceSpec::skolem(n);
                if (!validate(r.first, spec).valid || !validate(r.second, spec).valid)
                    g.fault(fmt("realize(%d,%d): invalid arrangement returned", n, p));
                int c = common_pairs(r.first, r.second).count;
                g.require(c == p, fmt("realize(%d,%d): independent recount gives %d", n, p, c));
                ++done;
            } catch (const Error& e) {
                g.fault(fmt("realize(%d,%d) failed: %s", n, p, e.what()));
            }
        }
        expect_reject(n, n - 1);
        expect_reject(n, n - 2);
    }
    expect_reject(5, 2);
    g.note(fmt("%d (n,p) cases realized and independently re-verified; "
               "(n,n-1), (n,n-2), (5,2) rejected",
               done));
    g.require(done == 662, fmt("expected 662 realizable (n,p) cases, swept %d", done));
}

// --- criterion 4: record corpus fidelity ------------------------------------

void run_records(Gate& g) {
    RecordIndex idx = load_standard_records();
    size_t total = idx.verified.size() + idx.failed.size();
    for (const RecordCheck& chk : idx.verified) {
        SequenceSpec spec = chk.rec.spec();
        SlotSequence a = chk.reversed ? reverse(chk.first) : chk.first;
        SlotSequence b = chk.reversed ? reverse(chk.second) : chk.second;
        if (!validate(a, spec).valid || !validate(b, spec).valid)
            g.fault(fmt("%s: verified record fails independent validation", chk.rec.id().c_str()));
        int c = common_pairs(chk.first, chk.second).count;
        g.require(c == chk.rec.p, fmt("%s: independent recount gives %d, record states %d",
                                      chk.rec.id().c_str(), c, chk.rec.p));
    }
    for (const RecordCheck& chk : idx.failed) {
        g.require(!chk.reason.empty(),
                  fmt("%s: quarantined without a logged reason", chk.rec.id().c_str()));
        g.note(fmt("quarantined %s: %s", chk.rec.id().c_str(), chk.reason.c_str()));
    }
    double pct = total ? 100.0 * static_cast<double>(idx.failed.size()) / static_cast<double>(total)
                       : 0.0;
    g.note(fmt("%zu records transcribed: %zu verified, %zu quarantined (%.1f%%)", total,
               idx.verified.size(), idx.failed.size(), pct));
    g.require(pct < 5.0, fmt("quarantine rate %.1f%% exceeds the 5%% bound", pct));
}

// --- criterion 5: generators vs their sources -------------------------------

SlotSequence boundary_table(int d) {
    int n = 2 * d - 1;
    return d % 2 == 0 ? table_langford_even_d(d, n) : table_langford_odd_d(d, n);
}

void run_builders(Gate& g) {
    g.require(interval_langford(3).str() == "6,7,3,4,5,3,6,4,7,5",
              "interval pattern at d=3 is not the printed string");
    g.require(interval_langford_variant(3).str() == "5,6,7,3,4,5,3,6,4,7",
              "wrapped interval pattern at d=3 is not the printed string");

    int even_cnt = 0, odd_cnt = 0, dense_cnt = 0;
    for (int n = 3; n <= 200; n += 4)
        for (int d = 2; 2 * d - 1 <= n; d += 2) {
            if (!validate(table_langford_even_d(d, n), SequenceSpec::langford(d, n)).valid)
                g.fault(fmt("even-d table invalid at d=%d n=%d", d, n));
            ++even_cnt;
        }
    for (int n = 5; n <= 200; n += 4)
        for (int d = 3; 2 * d - 1 <= n; d += 2) {
            if (!validate(table_langford_odd_d(d, n), SequenceSpec::langford(d, n)).valid)
                g.fault(fmt("odd-d table invalid at d=%d n=%d", d, n));
            ++odd_cnt;
        }
    for (int n = 4; n <= 200; n += 4)
        for (int d = (3 * n / 4 + 2) / 2; 2 * d <= n; ++d) {
            if (2 * d < 3 * n / 4 + 1) continue;
            if (!validate(table_langford_dense(d, n), SequenceSpec::langford(d, n)).valid)
                g.fault(fmt("dense table invalid at d=%d n=%d", d, n));
            ++dense_cnt;
        }
    g.require(even_cnt == 1275 && odd_cnt == 1225 && dense_cnt == 650,
              fmt("table coverage counts %d/%d/%d, expected 1275/1225/650", even_cnt, odd_cnt,
                  dense_cnt));

    for (int n = 3; n <= 200; n += 4)
        for (int d = 2; d <= 12 && 2 * d - 1 <= n; d += 2) {
            int r = reverse_common_report(table_langford_even_d(d, n));
            g.require(r == 0, fmt("even-d table at d=%d n=%d shares %d pairs with its reverse", d,
                                  n, r));
        }
    for (int n = 5; n <= 200; n += 4)
        for (int d = 3; d <= 12 && 2 * d - 1 <= n; d += 2) {
            int r = reverse_common_report(table_langford_odd_d(d, n));
            int want = n == 2 * d - 1 ? 1 : 0;
            g.require(r == want, fmt("odd-d table at d=%d n=%d shares %d pairs with its reverse, "
                                     "expected %d",
                                     d, n, r, want));
        }

    // Interval pattern against the parity-matching table at the shared order
    // n = 2d-1: disjoint exactly when d = 1 mod 3. The source derivation
    // starts at d=4; the degenerate d=3 instance comes out disjoint anyway
    // and is pinned here as measured.
    std::string crosses;
    for (int d = 2; d <= 12; ++d) {
        int c = common_pairs(interval_langford(d), boundary_table(d)).count;
        crosses += (crosses.empty() ? "" : ",") + std::to_string(c);
        if (d == 3)
            g.require(c == 0, fmt("cross count at d=3 measured %d, pinned 0", c));
        else
            g.require((c == 0) == (d % 3 == 1),
                      fmt("cross count at d=%d is %d, zero expected iff d=1 mod 3", d, c));
    }
    g.note(fmt("boundary cross counts d=2..12: %s (d=3 sits below the derivation's range)",
               crosses.c_str()));
    g.note(fmt("table coverage to n=200: %d even-d, %d odd-d, %d dense instances", even_cnt,
               odd_cnt, dense_cnt));
}

// --- criterion 6: triple systems --------------------------------------------

int shared_base_blocks(const BaseSystem& a, const BaseSystem& b) {
    std::multiset<Triple> left, right;
    for (const Triple& t : a.blocks) left.insert(canonical_triple(t, a.v, a.kind));
    for (const Triple& t : b.blocks) right.insert(canonical_triple(t, b.v, b.kind));
    int count = 0;
    for (const Triple& t : left) {
        auto it = right.find(t);
        if (it != right.end()) {
            right.erase(it);
            ++count;
        }
    }
    return count;
}

void run_designs(Gate& g) {
    const SlotSequence s4 = SlotSequence::parse("1,1,4,2,3,2,4,3");
    const std::vector<Triple> offset_want = {{0, 5, 6}, {0, 8, 10}, {0, 9, 12}, {0, 7, 11}};
    const std::vector<Triple> mixed_want = {{0, 1, 6}, {0, 2, 10}, {0, 3, 12}, {0, 4, 11}};
    g.require(heffter_blocks(s4, 4, Form::Offset) == offset_want,
              "offset base blocks over Z_25 differ from the printed set");
    g.require(heffter_blocks(s4, 4, Form::Mixed) == mixed_want,
              "mixed base blocks over Z_25 differ from the printed set");
    for (Form f : {Form::Offset, Form::Mixed}) {
        BaseSystem sys{25, 1, TripleKind::Cyclic, heffter_blocks(s4, 4, f)};
        if (!validate_coverage(sys).valid) g.fault("order-25 system fails pair coverage");
        g.require(develop(sys).size() == 100, "order-25 system does not develop to 100 triples");
    }

    int pair_cases = 0;
    for (int n = 1; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) {
            try {
                SystemPair pr = cts_pair(n, k);
                if (!validate_coverage(pr.a).valid || !validate_coverage(pr.b).valid)
                    g.fault(fmt("cts_pair(%d,%d): a system fails coverage", n, k));
                int s = shared_base_blocks(pr.a, pr.b);
                g.require(pr.shared == k && s == k,
                          fmt("cts_pair(%d,%d): claimed %d shared, recounted %d", n, k, pr.shared,
                              s));
                ++pair_cases;
            } catch (const Error& e) {
                g.fault(fmt("cts_pair(%d,%d) failed: %s", n, k, e.what()));
            }
        }

    auto check_fs = [&](const BaseSystem& sys, const std::vector<int>& want,
                        const std::string& tag) {
        if (!validate_coverage(sys).valid) g.fault(tag + ": coverage check failed");
        std::vector<int> fs = fine_structure(sys);
        g.require(fs == want, tag + ": fine structure mismatch");
    };
    for (int n : {4, 5}) {
        for (int c2 = 0; c2 <= n; ++c2)
            check_fs(fine_cts2(n, c2), {2 * n - 2 * c2, c2},
                     fmt("fine_cts2(%d,%d)", n, c2));
    }

    const std::set<std::pair<int, int>> lam3_exceptions = {{0, 2}, {1, 2}, {0, 3}};
    for (int s = 0; s <= 4; ++s)
        for (int t = 0; t + s <= 4; ++t) {
            bool exceptional = lam3_exceptions.count({t, s}) > 0;
            try {
                BaseSystem sys = fine_cts3(4, t, s);
                g.require(!exceptional,
                          fmt("fine_cts3(4,%d,%d) succeeded on an exceptional vector", t, s));
                check_fs(sys, {12 - 2 * t - 3 * s, t, s}, fmt("fine_cts3(4,%d,%d)", t, s));
            } catch (const Error& e) {
                if (!exceptional || e.kind() != Errc::RequiresExceptionalIntersection)
                    g.fault(fmt("fine_cts3(4,%d,%d) failed: %s", t, s, e.what()));
            }
        }

    int family = 0;
    for (int j = 0; j <= 4; ++j)
        for (int i = j; i <= 4; ++i) {
            int t = 8 - 2 * i, s = i - j, u = j;
            try {
                check_fs(fine_cts4(4, t, s, u), {16 - 4 * u - 3 * s - 2 * t, t, s, u},
                         fmt("fine_cts4(4,%d,%d,%d)", t, s, u));
                ++family;
            } catch (const Error& e) {
                g.fault(fmt("fine_cts4(4,%d,%d,%d) failed: %s", t, s, u, e.what()));
            }
        }
    g.require(family == 15, fmt("four-fold family covered %d of 15 vectors", family));

    const std::vector<BaseSystem> sources = {
        {25, 1, TripleKind::Cyclic, heffter_blocks(s4, 4, Form::Offset)},
        fine_cts2(4, 2),
        fine_cts3(4, 1, 1),
        fine_cts4(4, 2, 1, 2),
    };
    for (const BaseSystem& sys : sources) {
        for (bool mendelsohn : {false, true}) {
            BaseSystem exp = mendelsohn ? expand_mendelsohn(sys) : expand_directed(sys);
            std::string tag = fmt("%s expansion of a lambda=%d system",
                                  triple_kind_name(exp.kind), sys.lambda);
            g.require(exp.lambda == sys.lambda && exp.blocks.size() == 2 * sys.blocks.size(),
                      tag + ": wrong shape");
            if (!validate_coverage(exp).valid) g.fault(tag + ": ordered coverage fails");
        }
    }
    g.note(fmt("base blocks exact in both forms; %d shared-block pairs recounted; fine "
               "structure round-trips at lambda=2,3,4; ordered expansions cover at the "
               "same lambda",
               pair_cases));
}

// --- criterion 7: property suites -------------------------------------------

struct Sample {
    SlotSequence seq;
    SequenceSpec spec;
};

std::vector<Sample> sample_pool() {
    std::vector<Sample> pool;
    for (int n : {1, 4, 5, 8, 9}) {
        SequenceSpec spec = SequenceSpec::skolem(n);
        for (SlotSequence& s : enumerate_all(spec)) pool.push_back({std::move(s), spec});
    }
    for (int n : {2, 3, 6, 7}) {
        SequenceSpec spec = SequenceSpec::hooked_skolem(n);
        for (SlotSequence& s : enumerate_all(spec)) pool.push_back({std::move(s), spec});
    }
    for (int n = 3; n <= 120; ++n) {
        if (n % 4 == 3)
            for (int d = 2; 2 * d - 1 <= n; d += 2)
                pool.push_back({table_langford_even_d(d, n), SequenceSpec::langford(d, n)});
        if (n % 4 == 1)
            for (int d = 3; 2 * d - 1 <= n; d += 2)
                pool.push_back({table_langford_odd_d(d, n), SequenceSpec::langford(d, n)});
    }
    return pool;
}

void run_properties(Gate& g) {
    std::vector<Sample> pool = sample_pool();

    size_t cases = 0;
    for (const Sample& smp : pool) {
        SlotSequence rebuilt(std::vector<int>(static_cast<size_t>(smp.seq.length()), 0));
        for (const auto& [v, pos] : pairs(smp.seq)) {
            rebuilt.set(pos.first, v);
            rebuilt.set(pos.second, v);
        }
        if (!(rebuilt == smp.seq) || !validate(smp.seq, smp.spec).valid) {
            g.fault(fmt("pair round trip failed on %s", smp.seq.str().c_str()));
            break;
        }
        ++cases;
    }
    g.require(cases >= 1000, fmt("pair round trip ran %zu cases, need 1000", cases));
    g.note(fmt("suite 1 (pairs round trip): %zu cases", cases));

    cases = 0;
    for (const Sample& smp : pool) {
        int expected = 0;
        for (const auto& [v, pos] : pairs(smp.seq))
            if (pos.first + pos.second == smp.seq.length() + 1) ++expected;
        if (reverse_common_report(smp.seq) != expected) {
            g.fault(fmt("reverse-share criterion failed on %s", smp.seq.str().c_str()));
            break;
        }
        ++cases;
    }
    g.require(cases >= 1000, fmt("reverse-share suite ran %zu cases, need 1000", cases));
    g.note(fmt("suite 2 (reverse shares = mirrored positions): %zu cases", cases));

    cases = 0;
    for (int n = 1; n <= 200; ++n)
        for (int t = 1; t <= n; ++t) {
            if (!shell_feasible(n, t)) continue;
            SlotSequence sh = shell(n, t);
            if (common_pairs(sh, reverse(sh)).count != 0) {
                g.fault(fmt("shell(%d,%d) shares pairs with its reverse", n, t));
                break;
            }
            ++cases;
        }
    g.require(cases >= 1000, fmt("shell suite ran %zu cases, need 1000", cases));
    g.note(fmt("suite 3 (shell disjoint from reverse, n <= 200): %zu cases", cases));

    std::vector<SlotSequence> fronts = enumerate_all(SequenceSpec::skolem(5));
    std::vector<SlotSequence> backs;
    for (int d : {6, 7, 8, 9}) {
        backs.push_back(interval_langford(d));
        backs.push_back(interval_langford_variant(d));
        backs.push_back(reverse(interval_langford(d)));
    }
    cases = 0;
    for (size_t grp = 0; grp + 2 < backs.size(); grp += 3)
        for (const SlotSequence& f1 : fronts)
            for (const SlotSequence& f2 : fronts)
                for (size_t i = grp; i < grp + 3; ++i)
                    for (size_t j = grp; j < grp + 3; ++j) {
                        int whole = common_pairs(adjoin(f1, backs[i]), adjoin(f2, backs[j])).count;
                        int parts = common_pairs(f1, f2).count +
                                    common_pairs(backs[i], backs[j]).count;
                        if (whole != parts) {
                            g.fault(fmt("adjoin additivity failed: %d vs %d", whole, parts));
                            break;
                        }
                        ++cases;
                    }
    g.require(cases >= 1000, fmt("adjoin suite ran %zu cases, need 1000", cases));
    g.note(fmt("suite 4 (adjoin intersection additivity): %zu cases", cases));

    size_t accepted = 0, rejected = 0;
    auto drive = [&](const SlotSequence& hooked) {
        PairSet before = pairs(hooked);
        try {
            SlotSequence grown = attach_202(hooked);
            PairSet after = pairs(grown);
            bool ok = grown.length() == hooked.length() + 1 && grown.hole_positions().empty() &&
                      after.size() == before.size() + 1 &&
                      after[2] == std::pair<int, int>(hooked.length() - 1, hooked.length() + 1);
            for (const auto& [v, pos] : before) ok = ok && after.count(v) && after[v] == pos;
            if (!ok) g.fault(fmt("attach_202 contract failed on %s", hooked.str().c_str()));
            ++accepted;
        } catch (const Error& e) {
            if (e.kind() != Errc::TwoAlreadyPresent || !before.count(2))
                g.fault(fmt("attach_202 wrong rejection on %s", hooked.str().c_str()));
            ++rejected;
        }
    };
    for (int n : {2, 3, 6, 7})
        for (const SlotSequence& s : enumerate_all(SequenceSpec::hooked_skolem(n))) drive(s);
    for (int d = 2; d <= 4; ++d)
        for (int n = 2; 2 * n + 1 <= 23; ++n) {
            if (!feasible_hooked_langford(d, n)) continue;
            for (const SlotSequence& s : enumerate_all(SequenceSpec::hooked_langford(d, n)))
                drive(s);
        }
    g.require(accepted + rejected >= 1000 && accepted >= 100 && rejected >= 100,
              fmt("attach suite ran %zu+%zu cases, need 1000 with 100 per side", accepted,
                  rejected));
    g.note(fmt("suite 5 (attach_202 contract): %zu grown, %zu rejected", accepted, rejected));
}

}  // namespace

int main() {
    struct Entry {
        const char* title;
        double limit_s;
        void (*run)(Gate&);
    };
    const std::vector<Entry> entries = {
        {"existence by exhaustive enumeration, n <= 9", 60, run_existence},
        {"small-order intersection spectra by full pairwise count", 600, run_small_spectra},
        {"prescribed intersections realized for 4 <= n <= 52", 300, run_realize},
        {"record corpus decodes, validates, and recounts", 0, run_records},
        {"sequence generators match their printed sources", 0, run_builders},
        {"triple systems: blocks, pairs, fine structure, expansions", 120, run_designs},
        {"property suites, 1000+ cases each", 0, run_properties},
    };

    int failed = 0;
    for (size_t i = 0; i < entries.size(); ++i) {
        Gate g;
        g.title = entries[i].title;
        g.limit_s = entries[i].limit_s;
        auto t0 = Clock::now();
        try {
            entries[i].run(g);
        } catch (const std::exception& e) {
            g.fault(fmt("unhandled error: %s", e.what()));
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (g.limit_s > 0 && secs > g.limit_s)
            g.fault(fmt("runtime %.1fs exceeds the %.0fs budget", secs, g.limit_s));

        std::printf("%s criterion %zu: %s [%.1fs%s]\n", g.faults.empty() ? "PASS" : "FAIL", i + 1,
                    g.title.c_str(), secs,
                    g.limit_s > 0 ? fmt(" / limit %.0fs", g.limit_s).c_str() : "");
        for (const std::string& line : g.notes) std::printf("       - %s\n", line.c_str());
        for (const std::string& line : g.faults) std::printf("       ! %s\n", line.c_str());
        std::fflush(stdout);
        if (!g.faults.empty()) ++failed;
    }
    std::printf("acceptance: %zu of %zu criteria passed\n", entries.size() - failed,
                entries.size());
    return failed;
}

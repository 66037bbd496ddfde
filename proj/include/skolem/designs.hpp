#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "skolem/core.hpp"
#include "skolem/families.hpp"

namespace skolem {

// Cyclic triple systems on Z_v built from the pair positions of an
// arrangement. Each value i sitting at positions (a, b) with b - a = i
// yields a base block in one of two forms:
//
//   offset form  {0, a+n, b+n}
//   mixed form   {0, i,   b+n}
//
// The two forms have the same difference multiset {i, a+n, b+n} (one is
// the reflection of the other) but never lie in the same translation
// orbit, which is what lets a pair of systems share a prescribed number
// of base blocks: agree on the form for shared values, differ elsewhere.

using Triple = std::array<int, 3>;

enum class Form { Offset, Mixed };

enum class TripleKind { Cyclic, Directed, Mendelsohn };

const char* triple_kind_name(TripleKind k);

// One base block per value of the arrangement, all in the given form,
// modulo v = 6n+1 (or 6n+3 when the positions come from a sequence with
// matching holes; the caller picks v).
std::vector<Triple> heffter_blocks(const SlotSequence& s, int n, Form form);

struct BaseSystem {
    int v = 0;
    int lambda = 1;
    TripleKind kind = TripleKind::Cyclic;
    std::vector<Triple> blocks;  // base blocks, developed mod v
};

// Orbit representatives. Cyclic blocks are unordered; directed blocks
// keep their order; Mendelsohn blocks are identified up to rotation.
Triple canonical_triple(const Triple& t, int v, TripleKind kind);

// All distinct translates of every base block (kept per block, so a
// stacked system contributes its multiplicities).
std::vector<Triple> develop(const BaseSystem& sys);

// Literal pair-coverage count over the developed system: every pair of
// distinct points (unordered for cyclic, ordered otherwise) must be
// covered exactly lambda times.
ValidationReport validate_coverage(const BaseSystem& sys);

// Multiplicity histogram of canonical base blocks: entry i counts the
// blocks that appear exactly i+1 times.
std::vector<int> fine_structure(const BaseSystem& sys);

struct SystemPair {
    BaseSystem a, b;
    int shared = 0;  // base blocks common to both
};

// Two cyclic Steiner triple systems on Z_{6n+1} sharing exactly k base
// blocks, 0 <= k <= n.
SystemPair cts_pair(int n, int k);

// Same on Z_{6n+3} (n >= 2). The short block {0, 2n+1, 4n+2} belongs to
// every such system, so 1 <= k <= n+1.
SystemPair cts_pair_mod3(int n, int k);

// Threefold and fourfold systems on Z_{6n+1} with a prescribed fine
// structure. Arguments are the numbers of repeated base blocks:
// doubles t, triples s, quadruples u. Orders with n = 2,3 mod 4 are not
// supported (the constructions start from an intersecting pair of
// order-n arrangements).
BaseSystem fine_cts2(int n, int c2);
BaseSystem fine_cts3(int n, int t, int s);
BaseSystem fine_cts4(int n, int t, int s, int u);

// A cyclic block {a,b,c} splits into two transitive or two cyclic
// ordered blocks covering the same pairs; expansion preserves lambda.
BaseSystem expand_directed(const BaseSystem& cts);
BaseSystem expand_mendelsohn(const BaseSystem& cts);

}  // namespace skolem

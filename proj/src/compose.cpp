#include "skolem/compose.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace skolem {

bool shell_feasible(int n, int t) {
    return t >= 3 && t % 2 == 1 && t <= n && n - t - t / 2 >= 0;
}

int shell_hole_count(int n, int t) { return n - t - t / 2; }

SlotSequence shell(int n, int t) {
    if (!shell_feasible(n, t))
        fail(Errc::InfeasibleShell,
             "no shell for n=" + std::to_string(n) + " t=" + std::to_string(t));
    int q = (t + 1) / 2;  // values with n's parity
    int r = t / 2;        // values with the other parity
    int len = n + q;
    std::vector<int> slot(static_cast<size_t>(len), 0);
    auto place = [&](int pos, int v) {
        if (slot[static_cast<size_t>(pos - 1)] || slot[static_cast<size_t>(pos + v - 1)])
            fail(Errc::ConstructionBug, "shell slots collide");
        slot[static_cast<size_t>(pos - 1)] = v;
        slot[static_cast<size_t>(pos + v - 1)] = v;
    };
    for (int i = 1; i <= q; ++i) place(i, n - 2 * (i - 1));
    for (int i = 1; i <= r; ++i) place(q + i, n - 1 - 2 * (i - 1));
    return SlotSequence(std::move(slot));
}

std::string Segment::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Lit: {
            os << "lit ";
            for (size_t i = 0; i < lit.size(); ++i) {
                if (i) os << ',';
                os << lit[i];
            }
            break;
        }
        case Kind::Holes: os << "holes " << count; break;
        case Kind::Shell: os << "shell " << n << ' ' << t; break;
        case Kind::Put: os << "put " << value << " @ " << a << ',' << b; break;
    }
    return os.str();
}

Segment Segment::parse(const std::string& line) {
    std::istringstream is(line);
    std::string word;
    if (!(is >> word)) fail(Errc::BadArgument, "empty plan line");
    Segment seg;
    auto rest_numbers = [&](char sep) {
        std::vector<int> out;
        std::string tail;
        std::getline(is, tail);
        std::string item;
        std::istringstream ts(tail);
        while (std::getline(ts, item, sep)) {
            size_t a0 = item.find_first_not_of(" \t");
            if (a0 == std::string::npos) continue;
            size_t b0 = item.find_last_not_of(" \t");
            out.push_back(std::stoi(item.substr(a0, b0 - a0 + 1)));
        }
        return out;
    };
    try {
        if (word == "lit") {
            seg.kind = Kind::Lit;
            seg.lit = rest_numbers(',');
            if (seg.lit.empty()) fail(Errc::BadArgument, "lit segment needs slots");
        } else if (word == "holes") {
            seg.kind = Kind::Holes;
            if (!(is >> seg.count) || seg.count < 1)
                fail(Errc::BadArgument, "holes segment needs a positive count");
        } else if (word == "shell") {
            seg.kind = Kind::Shell;
            if (!(is >> seg.n >> seg.t)) fail(Errc::BadArgument, "shell segment needs n and t");
        } else if (word == "put") {
            seg.kind = Kind::Put;
            std::string at;
            if (!(is >> seg.value >> at) || at != "@")
                fail(Errc::BadArgument, "put segment is 'put v @ a,b'");
            std::vector<int> ab = rest_numbers(',');
            if (ab.size() != 2) fail(Errc::BadArgument, "put segment needs two positions");
            seg.a = ab[0];
            seg.b = ab[1];
        } else {
            fail(Errc::BadArgument, "unknown plan segment '" + word + "'");
        }
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail(Errc::BadArgument, "malformed plan line '" + line + "'");
    }
    return seg;
}

std::string CompositionPlan::str() const {
    std::string out;
    for (const Segment& s : segments) {
        out += s.str();
        out += '\n';
    }
    return out;
}

CompositionPlan CompositionPlan::parse(const std::string& text) {
    CompositionPlan plan;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);
        if (line[0] == '#') continue;
        plan.segments.push_back(Segment::parse(line));
    }
    if (plan.segments.empty()) fail(Errc::BadArgument, "plan has no segments");
    return plan;
}

SlotSequence assemble(const CompositionPlan& plan, const SequenceSpec& spec) {
    std::vector<int> slot;     // 0-based buffer, -1 = unclaimed
    std::vector<char> taken;   // claimed flags
    auto grow_to = [&](size_t size) {
        if (slot.size() < size) {
            slot.resize(size, 0);
            taken.resize(size, 0);
        }
    };
    auto claim = [&](size_t idx, int v) {
        grow_to(idx + 1);
        if (taken[idx])
            fail(Errc::OverlapError, "slot " + std::to_string(idx + 1) + " is claimed twice");
        taken[idx] = 1;
        slot[idx] = v;
    };

    size_t cursor = 0;
    for (const Segment& seg : plan.segments) {
        switch (seg.kind) {
            case Segment::Kind::Lit:
                for (int v : seg.lit) {
                    if (v > 0)
                        claim(cursor, v);
                    else
                        grow_to(cursor + 1);  // stays open
                    ++cursor;
                }
                break;
            case Segment::Kind::Holes:
                grow_to(cursor + static_cast<size_t>(seg.count));
                cursor += static_cast<size_t>(seg.count);
                break;
            case Segment::Kind::Shell: {
                SlotSequence sh = shell(seg.n, seg.t);
                for (int p = 1; p <= sh.length(); ++p) {
                    int v = sh.slot(p);
                    if (v > 0)
                        claim(cursor, v);
                    else
                        grow_to(cursor + 1);
                    ++cursor;
                }
                break;
            }
            case Segment::Kind::Put: {
                if (seg.a < 1 || seg.b <= seg.a)
                    fail(Errc::BadArgument, "put positions must satisfy 1 <= a < b");
                if (seg.b - seg.a != seg.value)
                    fail(Errc::BadArgument, "put gap does not match the value");
                claim(static_cast<size_t>(seg.a - 1), seg.value);
                claim(static_cast<size_t>(seg.b - 1), seg.value);
                break;
            }
        }
    }

    SlotSequence result{std::vector<int>(slot.begin(), slot.end())};
    ValidationReport rep = validate(result, spec);
    if (!rep.valid) {
        std::string why = rep.violations.empty() ? "invalid" : rep.violations.front();
        fail(Errc::ValidationFailed, "assembled arrangement fails validation: " + why);
    }
    return result;
}

static void require_disjoint(const SlotSequence& a, const SlotSequence& b) {
    std::set<int> va;
    for (int v : a.raw())
        if (v > 0) va.insert(v);
    for (int v : b.raw())
        if (v > 0 && va.count(v))
            fail(Errc::OverlapError, "difference " + std::to_string(v) + " used by both parts");
}

SlotSequence concat(const SlotSequence& front, const SlotSequence& back) {
    require_disjoint(front, back);
    std::vector<int> v = front.raw();
    v.insert(v.end(), back.raw().begin(), back.raw().end());
    return SlotSequence(std::move(v));
}

SlotSequence adjoin(const SlotSequence& front, const SlotSequence& back) {
    if (!front.hole_positions().empty() || !back.hole_positions().empty())
        fail(Errc::BadArgument, "adjoin requires hole-free arrangements");
    return concat(front, back);
}

SlotSequence adjoin_hooked(const SlotSequence& front, const SlotSequence& back) {
    std::vector<int> fh = front.hole_positions();
    if (fh.size() != 1 || fh[0] != front.length() - 1)
        fail(Errc::HookMissing, "front part must have its single hole at the next-to-last slot");
    std::vector<int> bh = back.hole_positions();
    if (bh.size() != 1 || bh[0] != 2)
        fail(Errc::HookMissing, "back part must have its single hole at slot 2");
    require_disjoint(front, back);

    std::vector<int> v = front.raw();
    v[static_cast<size_t>(front.length() - 2)] = back.slot(1);  // fill the hook
    // back's slot 2 is its hole and overlays front's last slot; skip both
    for (int p = 3; p <= back.length(); ++p) v.push_back(back.slot(p));
    return SlotSequence(std::move(v));
}

}  // namespace skolem

#include "skolem/families.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace skolem {

const char* family_name(Family f) {
    switch (f) {
        case Family::Skolem: return "skolem";
        case Family::HookedSkolem: return "hooked-skolem";
        case Family::NearSkolem: return "near-skolem";
        case Family::ExtendedSkolem: return "ext-skolem";
        case Family::Rosa: return "rosa";
        case Family::Langford: return "langford";
        case Family::HookedLangford: return "hooked-langford";
        case Family::ExtendedLangford: return "ext-langford";
    }
    return "?";
}

static void require(bool ok, const std::string& what) {
    if (!ok) fail(Errc::BadArgument, what);
}

SequenceSpec SequenceSpec::skolem(int n) {
    require(n >= 1, "order must be positive");
    SequenceSpec s;
    s.family = Family::Skolem;
    s.n = n;
    return s;
}

SequenceSpec SequenceSpec::hooked_skolem(int n) {
    require(n >= 1, "order must be positive");
    SequenceSpec s;
    s.family = Family::HookedSkolem;
    s.n = n;
    return s;
}

SequenceSpec SequenceSpec::near_skolem(int n, int m) {
    require(n >= 2 && m >= 1 && m <= n, "defect must lie in 1..n, n >= 2");
    SequenceSpec s;
    s.family = Family::NearSkolem;
    s.n = n;
    s.m = m;
    return s;
}

SequenceSpec SequenceSpec::extended_skolem(int n, int k) {
    require(n >= 1 && k >= 1 && k <= 2 * n + 1, "hole must lie in 1..2n+1");
    SequenceSpec s;
    s.family = Family::ExtendedSkolem;
    s.n = n;
    s.k = k;
    return s;
}

SequenceSpec SequenceSpec::rosa(int n, int p, int q) {
    require(n >= 1, "order must be positive");
    if (p > q) std::swap(p, q);
    require(p >= 1 && p < q && q <= 2 * n + 2, "holes must be distinct, in 1..2n+2");
    SequenceSpec s;
    s.family = Family::Rosa;
    s.n = n;
    s.p = p;
    s.q = q;
    return s;
}

SequenceSpec SequenceSpec::langford(int d, int n) {
    require(d >= 1 && n >= 1, "difference base and order must be positive");
    SequenceSpec s;
    s.family = Family::Langford;
    s.d = d;
    s.n = n;
    return s;
}

SequenceSpec SequenceSpec::hooked_langford(int d, int n) {
    require(d >= 1 && n >= 1, "difference base and order must be positive");
    SequenceSpec s;
    s.family = Family::HookedLangford;
    s.d = d;
    s.n = n;
    return s;
}

SequenceSpec SequenceSpec::extended_langford(int d, int n, int k) {
    require(d >= 1 && n >= 1, "difference base and order must be positive");
    require(k >= 1 && k <= 2 * n + 1, "hole must lie in 1..2n+1");
    SequenceSpec s;
    s.family = Family::ExtendedLangford;
    s.d = d;
    s.n = n;
    s.k = k;
    return s;
}

int SequenceSpec::length() const {
    switch (family) {
        case Family::Skolem: return 2 * n;
        case Family::HookedSkolem: return 2 * n + 1;
        case Family::NearSkolem: return 2 * n - 2;
        case Family::ExtendedSkolem: return 2 * n + 1;
        case Family::Rosa: return 2 * n + 2;
        case Family::Langford: return 2 * n;
        case Family::HookedLangford: return 2 * n + 1;
        case Family::ExtendedLangford: return 2 * n + 1;
    }
    return 0;
}

std::vector<int> SequenceSpec::hole_positions() const {
    switch (family) {
        case Family::HookedSkolem:
        case Family::HookedLangford: return {2 * n};
        case Family::ExtendedSkolem:
        case Family::ExtendedLangford: return {k};
        case Family::Rosa: return {p, q};
        default: return {};
    }
}

std::vector<int> SequenceSpec::values() const {
    std::vector<int> out;
    switch (family) {
        case Family::NearSkolem:
            for (int v = 1; v <= n; ++v)
                if (v != m) out.push_back(v);
            break;
        case Family::Langford:
        case Family::HookedLangford:
        case Family::ExtendedLangford:
            for (int v = d; v <= d + n - 1; ++v) out.push_back(v);
            break;
        default:
            for (int v = 1; v <= n; ++v) out.push_back(v);
            break;
    }
    return out;
}

bool SequenceSpec::operator==(const SequenceSpec& o) const {
    return family == o.family && n == o.n && d == o.d && m == o.m && k == o.k && p == o.p &&
           q == o.q;
}

std::string SequenceSpec::str() const {
    std::ostringstream os;
    os << family_name(family);
    switch (family) {
        case Family::Skolem:
        case Family::HookedSkolem: os << ':' << n; break;
        case Family::NearSkolem: os << ':' << n << ':' << m; break;
        case Family::ExtendedSkolem: os << ':' << n << ':' << k; break;
        case Family::Rosa: os << ':' << n << ':' << p << ':' << q; break;
        case Family::Langford:
        case Family::HookedLangford: os << ':' << d << ':' << n; break;
        case Family::ExtendedLangford: os << ':' << d << ':' << n << ':' << k; break;
    }
    return os.str();
}

SequenceSpec SequenceSpec::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ':')) parts.push_back(item);
    if (parts.empty()) fail(Errc::BadArgument, "empty spec");

    auto num = [&](size_t i) -> int {
        if (i >= parts.size())
            fail(Errc::BadArgument, "spec '" + text + "' is missing a parameter");
        try {
            size_t used = 0;
            int v = std::stoi(parts[i], &used);
            if (used != parts[i].size()) throw std::invalid_argument(parts[i]);
            return v;
        } catch (const std::exception&) {
            fail(Errc::BadArgument, "bad number '" + parts[i] + "' in spec '" + text + "'");
        }
    };
    auto arity = [&](size_t want) {
        if (parts.size() != want + 1)
            fail(Errc::BadArgument, "spec '" + text + "' takes " + std::to_string(want) +
                                        " parameter(s)");
    };

    const std::string& name = parts[0];
    if (name == "skolem") { arity(1); return skolem(num(1)); }
    if (name == "hooked-skolem") { arity(1); return hooked_skolem(num(1)); }
    if (name == "near-skolem") { arity(2); return near_skolem(num(1), num(2)); }
    if (name == "ext-skolem") { arity(2); return extended_skolem(num(1), num(2)); }
    if (name == "rosa") { arity(3); return rosa(num(1), num(2), num(3)); }
    if (name == "langford") { arity(2); return langford(num(1), num(2)); }
    if (name == "hooked-langford") { arity(2); return hooked_langford(num(1), num(2)); }
    if (name == "ext-langford") { arity(3); return extended_langford(num(1), num(2), num(3)); }
    fail(Errc::BadArgument, "unknown family '" + name + "'");
}

ValidationReport validate(const SlotSequence& s, const SequenceSpec& spec) {
    ValidationReport rep;
    if (s.length() != spec.length()) {
        rep.note("length is " + std::to_string(s.length()) + ", expected " +
                 std::to_string(spec.length()));
        return rep;  // positional checks below would be meaningless
    }

    std::vector<int> want_holes = spec.hole_positions();
    std::vector<int> got_holes = s.hole_positions();
    if (got_holes != want_holes) {
        auto join = [](const std::vector<int>& v) {
            std::string out;
            for (size_t i = 0; i < v.size(); ++i) {
                if (i) out += ',';
                out += std::to_string(v[i]);
            }
            return out.empty() ? std::string("none") : out;
        };
        rep.note("holes at {" + join(got_holes) + "}, expected {" + join(want_holes) + "}");
    }

    std::vector<int> want = spec.values();
    std::set<int> want_set(want.begin(), want.end());
    std::map<int, std::vector<int>> where;
    for (int pos = 1; pos <= s.length(); ++pos) {
        int v = s.slot(pos);
        if (v > 0) where[v].push_back(pos);
    }
    for (const auto& [v, at] : where) {
        if (!want_set.count(v)) {
            rep.note("unexpected value " + std::to_string(v));
            continue;
        }
        if (at.size() != 2) {
            rep.note("value " + std::to_string(v) + " occurs " + std::to_string(at.size()) +
                     " times");
            continue;
        }
        if (at[1] - at[0] != v)
            rep.note("value " + std::to_string(v) + " has gap " + std::to_string(at[1] - at[0]));
    }
    for (int v : want)
        if (!where.count(v)) rep.note("value " + std::to_string(v) + " is missing");
    return rep;
}

static int mod4(int n) { return ((n % 4) + 4) % 4; }

bool exists(const SequenceSpec& s) {
    int r = mod4(s.n);
    switch (s.family) {
        case Family::Skolem:
            return r == 0 || r == 1;
        case Family::HookedSkolem:
            return r == 2 || r == 3;
        case Family::NearSkolem:
            return ((r == 0 || r == 1) && s.m % 2 == 1) || ((r == 2 || r == 3) && s.m % 2 == 0);
        case Family::ExtendedSkolem:
            return ((r == 0 || r == 1) && s.k % 2 == 1) || ((r == 2 || r == 3) && s.k % 2 == 0);
        case Family::Rosa: {
            if ((s.n == 1 && s.p == 2 && s.q == 3) || (s.n == 4 && s.p == 5 && s.q == 6))
                return false;
            bool parity_mixed = (s.p + s.q) % 2 == 1;
            return (parity_mixed && (r == 0 || r == 1)) || (!parity_mixed && (r == 2 || r == 3));
        }
        case Family::Langford:
            if (s.n < 2 * s.d - 1) return false;
            return s.d % 2 == 1 ? (r == 0 || r == 1) : (r == 2 || r == 3);
        case Family::HookedLangford:
            if (s.n < 2 * s.d - 1) return false;
            return s.d % 2 == 1 ? (r == 2 || r == 3) : (r == 0 || r == 1);
        case Family::ExtendedLangford: {
            // Published condition is sufficient only.
            if (s.n < 2 * s.d - 1) return false;
            if (s.n >= 2 * s.d + 2 && s.n <= 8 * s.d - 5) return false;
            int kr = s.k % 2;
            switch (r) {
                case 0: return kr == 1;
                case 1: return kr == s.d % 2;
                case 2: return kr == 0;
                case 3: return kr == (s.d + 1) % 2;
            }
            return false;
        }
    }
    return false;
}

bool feasible_langford(int d, int n) {
    if (n < 2 * d - 1) return false;
    long long t = static_cast<long long>(n) * (n + 1 - 2 * d);
    return t % 4 == 0;
}

bool feasible_hooked_langford(int d, int n) {
    if (n < 2 * d - 1) return false;
    long long t = static_cast<long long>(n) * (n + 1 - 2 * d);
    return ((t % 4) + 4) % 4 == 2;
}

}  // namespace skolem

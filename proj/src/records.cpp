#include "skolem/records.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "skolem/notation.hpp"

namespace skolem {

SequenceSpec RawRecord::spec() const {
    switch (family) {
        case Family::Skolem: return SequenceSpec::skolem(n);
        case Family::HookedSkolem: return SequenceSpec::hooked_skolem(n);
        case Family::Langford: return SequenceSpec::langford(d, n);
        case Family::HookedLangford: return SequenceSpec::hooked_langford(d, n);
        default: fail(Errc::BadRecord, "records cover no such family");
    }
}

std::string RawRecord::id() const {
    std::ostringstream os;
    os << file << ':' << line << ' ' << family_name(family);
    if (family == Family::Langford || family == Family::HookedLangford) os << " d=" << d;
    os << " n=" << n << " p=" << p;
    return os.str();
}

std::string resource_path(const std::string& name) {
    if (!name.empty() && name[0] == '/') return name;
    return std::string(SKOLEM_RESOURCE_DIR) + "/" + name;
}

namespace {

bool parse_group_directive(const std::string& line, Family* family, int* d) {
    const std::string tag = "# group:";
    if (line.compare(0, tag.size(), tag) != 0) return false;
    std::istringstream is(line.substr(tag.size()));
    std::string name, extra;
    is >> name;
    *d = 1;
    if (is >> extra) {
        if (extra.compare(0, 2, "d=") != 0)
            fail(Errc::BadRecord, "bad group directive '" + line + "'");
        *d = std::stoi(extra.substr(2));
    }
    if (name == "skolem") *family = Family::Skolem;
    else if (name == "hooked-skolem") *family = Family::HookedSkolem;
    else if (name == "langford") *family = Family::Langford;
    else if (name == "hooked-langford") *family = Family::HookedLangford;
    else fail(Errc::BadRecord, "bad group family '" + name + "'");
    return true;
}

}  // namespace

std::vector<RawRecord> parse_record_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::BadRecord, "cannot open record file " + path);
    std::vector<RawRecord> out;
    Family family = Family::Skolem;
    int d = 1;
    bool have_group = false;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (parse_group_directive(line, &family, &d)) have_group = true;
            continue;
        }
        if (!have_group)
            fail(Errc::BadRecord, path + ":" + std::to_string(line_no) +
                                      ": record before any group directive");
        RawRecord rec;
        rec.family = family;
        rec.d = d;
        rec.file = path.substr(path.find_last_of('/') + 1);
        rec.line = line_no;
        std::istringstream is(line);
        std::string field;
        int seen = 0;
        while (std::getline(is, field, ';')) {
            size_t eq = field.find('=');
            if (eq == std::string::npos)
                fail(Errc::BadRecord, rec.file + ":" + std::to_string(line_no) +
                                          ": field without '='");
            std::string key = field.substr(0, eq), val = field.substr(eq + 1);
            if (key == "n") rec.n = std::stoi(val);
            else if (key == "p") rec.p = std::stoi(val);
            else if (key == "first") rec.first = val;
            else if (key == "second") rec.second = val;
            else fail(Errc::BadRecord, "unknown record field '" + key + "'");
            ++seen;
        }
        if (seen != 4 || rec.n <= 0 || rec.first.empty() || rec.second.empty())
            fail(Errc::BadRecord, rec.file + ":" + std::to_string(line_no) +
                                      ": record needs n, p, first, second");
        out.push_back(std::move(rec));
    }
    return out;
}

namespace {

// Decode one stream either as compressed tokens or, when it already has one
// token per slot, as a verbatim slot list.
SlotSequence decode_stream(const TokenStream& ts, const SequenceSpec& spec) {
    if (static_cast<int>(ts.size()) == spec.length()) {
        std::vector<int> slots;
        slots.reserve(ts.size());
        for (const Token& t : ts.tokens) slots.push_back(t.value);
        return SlotSequence(std::move(slots));
    }
    // The written form may be the mirror image of the family layout, so a
    // fixed hole may emerge at the mirrored position.
    std::set<int> allowed;
    for (int h : spec.hole_positions()) {
        allowed.insert(h);
        allowed.insert(spec.length() + 1 - h);
    }
    return decode(ts, spec.length(), allowed);
}

bool orientation_valid(const SlotSequence& s, const SequenceSpec& spec, bool reversed) {
    SlotSequence probe = reversed ? reverse(s) : s;
    return validate(probe, spec).valid;
}

}  // namespace

RecordCheck verify_record(const RawRecord& rec) {
    RecordCheck check;
    check.rec = rec;
    SequenceSpec spec = rec.spec();
    try {
        TokenStream tf = TokenStream::parse(rec.first);
        SlotSequence s1 = decode_stream(tf, spec);

        // A verbatim pair of slot lists carries no marks; the computed overlap
        // is the only check then. Otherwise the marks define the shared pairs.
        bool verbatim = static_cast<int>(tf.size()) == spec.length();
        std::vector<int> marked = tf.marked_values();
        if (!verbatim && static_cast<int>(marked.size()) != rec.p)
            fail(Errc::BadRecord, "stated p=" + std::to_string(rec.p) + " but " +
                                      std::to_string(marked.size()) + " values are marked");

        PairSet p1 = pairs(s1);
        std::vector<PlacedPair> common;
        for (int v : marked) {
            auto it = p1.find(v);
            if (it == p1.end())
                fail(Errc::BadRecord, "marked value " + std::to_string(v) +
                                          " is not placed in the first arrangement");
            common.push_back({v, it->second.first, it->second.second});
        }

        TokenStream ts = TokenStream::parse(rec.second);
        SlotSequence s2 = static_cast<int>(ts.size()) == spec.length()
                              ? decode_stream(ts, spec)
                              : decode_companion(s1, common, ts);

        bool direct = orientation_valid(s1, spec, false) && orientation_valid(s2, spec, false);
        bool mirrored =
            !direct && orientation_valid(s1, spec, true) && orientation_valid(s2, spec, true);
        if (!direct && !mirrored) {
            ValidationReport r1 = validate(s1, spec);
            ValidationReport r2 = validate(s2, spec);
            std::string why = !r1.valid ? "first: " + r1.violations.front()
                                        : "second: " + r2.violations.front();
            fail(Errc::BadRecord, "arrangement does not fit the family either way (" + why + ")");
        }

        CommonPairs cp = common_pairs(s1, s2);
        if (cp.count != rec.p)
            fail(Errc::BadRecord, "stated p=" + std::to_string(rec.p) + " but the arrangements share " +
                                      std::to_string(cp.count) + " pairs");

        check.ok = true;
        check.first = s1;
        check.second = s2;
        check.reversed = mirrored;
    } catch (const Error& e) {
        check.ok = false;
        check.reason = e.what();
    }
    return check;
}

const RecordCheck* RecordIndex::find(Family f, int d, int n, int p) const {
    for (const RecordCheck& c : verified)
        if (c.rec.family == f && c.rec.d == d && c.rec.n == n && c.rec.p == p) return &c;
    return nullptr;
}

RecordIndex load_records(const std::vector<std::string>& files) {
    RecordIndex idx;
    for (const std::string& f : files) {
        for (const RawRecord& rec : parse_record_file(resource_path(f))) {
            RecordCheck check = verify_record(rec);
            (check.ok ? idx.verified : idx.failed).push_back(std::move(check));
        }
    }
    return idx;
}

RecordIndex load_standard_records() {
    return load_records({"skolem_intersections.txt", "hooked_intersections.txt",
                         "langford_intersections.txt"});
}

}  // namespace skolem

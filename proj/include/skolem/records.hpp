#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skolem/core.hpp"
#include "skolem/families.hpp"

namespace skolem {

// Transcribed intersection records. A resource file holds groups of lines
//   n=<order>;p=<common>;first=<tokens>;second=<tokens>
// under group directives of the form
//   # group: skolem | hooked-skolem | langford d=<d> | hooked-langford d=<d>
// `first` is a compressed arrangement with the shared pairs marked by a
// leading underscore; `second` spells only the non-shared values. A stream
// whose token count equals the target length is a verbatim slot list instead.

struct RawRecord {
    Family family = Family::Skolem;
    int d = 1;
    int n = 0;
    int p = 0;
    std::string first, second;
    std::string file;
    int line = 0;

    SequenceSpec spec() const;
    std::string id() const;  // short "file:line n=.. p=.." tag for messages
};

std::vector<RawRecord> parse_record_file(const std::string& path);

struct RecordCheck {
    RawRecord rec;
    bool ok = false;
    std::string reason;      // first failure, when !ok
    SlotSequence first, second;  // decoded, when ok
    bool reversed = false;   // arrangements validate only against the
                             // mirror-image of the family layout
};

// Decodes both streams, validates them against the record's family (in the
// written or mirrored orientation, the same for both), and recomputes the
// number of shared pairs. ok only when everything matches the stated p.
RecordCheck verify_record(const RawRecord& rec);

struct RecordIndex {
    std::vector<RecordCheck> verified;
    std::vector<RecordCheck> failed;

    const RecordCheck* find(Family f, int d, int n, int p) const;
};

// Loads and verifies every record in the given resource files (paths are
// relative to the built-in resource directory unless absolute).
RecordIndex load_records(const std::vector<std::string>& files);

// The standard resource set used by the intersection engine.
RecordIndex load_standard_records();

std::string resource_path(const std::string& name);

}  // namespace skolem

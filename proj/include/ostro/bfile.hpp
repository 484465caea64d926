#pragma once

#include <string>
#include <vector>

#include "ostro/context.hpp"

namespace ostro {

// OEIS b-file support: lines "index value", '#' comments, strictly
// increasing indices. parse -> serialize is canonical (comments drop).
struct BFileEntry {
    long index;
    Int value;
};

struct BFile {
    std::string id;  // e.g. "A049472"; may be empty for ad-hoc files
    std::vector<BFileEntry> entries;
};

BFile parse_bfile(const std::string& text, const std::string& id = "");
std::string serialize_bfile(const BFile& f);
BFile read_bfile(const std::string& path, const std::string& id = "");

// Sequences this library can regenerate from its own arithmetic, keyed by
// their catalog ids. Index conventions follow the stored fixtures.
std::vector<std::string> known_sequence_ids();
bool known_sequence(const std::string& id);
BFile generate_sequence(const std::string& id, long terms);

struct BFileDiff {
    bool match = true;
    long first_bad_index = 0;  // index of the first differing entry when !match
    std::string detail;
};

// Positional comparison over the shared prefix; differing lengths are fine,
// differing indices or values are not.
BFileDiff diff_bfiles(const BFile& expected, const BFile& actual);

// Downloads the published b-file text for an id (explicit CLI opt-in only;
// the test suite never touches the network).
std::string fetch_bfile_text(const std::string& id);

}  // namespace ostro

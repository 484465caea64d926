#include "ostro/bfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ostro/numeration.hpp"
#include "ostro/towers.hpp"

#include <httplib.h>

namespace ostro {

namespace {

bool valid_id(const std::string& id) {
    if (id.size() != 7 || id[0] != 'A') return false;
    for (size_t i = 1; i < id.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
    return true;
}

}  // namespace

BFile parse_bfile(const std::string& text, const std::string& id) {
    BFile f;
    f.id = id;
    std::istringstream in(text);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t at = line.find_first_not_of(" \t");
        if (at == std::string::npos) continue;
        if (line[at] == '#') continue;
        std::istringstream ls(line);
        long index;
        std::string value;
        if (!(ls >> index >> value))
            throw std::invalid_argument("b-file line " + std::to_string(lineno) +
                                        ": expected 'index value'");
        std::string rest;
        if (ls >> rest)
            throw std::invalid_argument("b-file line " + std::to_string(lineno) +
                                        ": trailing tokens");
        if (!f.entries.empty() && index <= f.entries.back().index)
            throw std::invalid_argument("b-file line " + std::to_string(lineno) +
                                        ": indices must increase");
        try {
            f.entries.push_back({index, Int(value)});
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("b-file line " + std::to_string(lineno) +
                                        ": bad integer '" + value + "'");
        }
    }
    return f;
}

std::string serialize_bfile(const BFile& f) {
    std::ostringstream os;
    for (const auto& e : f.entries) os << e.index << ' ' << e.value.get_str() << '\n';
    return os.str();
}

BFile read_bfile(const std::string& path, const std::string& id) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open b-file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_bfile(buf.str(), id);
}

std::vector<std::string> known_sequence_ids() {
    return {"A049472", "A001950", "A082845", "A276879"};
}

bool known_sequence(const std::string& id) {
    for (const auto& k : known_sequence_ids())
        if (k == id) return true;
    return false;
}

BFile generate_sequence(const std::string& id, long terms) {
    if (terms < 0) throw std::invalid_argument("generate_sequence: terms must be >= 0");
    BFile f;
    f.id = id;
    if (id == "A049472") {
        // floor(n/sqrt(2)): the d=2 wall column, indexed from 0.
        Context ctx(2);
        for (long n = 0; n < terms; ++n)
            f.entries.push_back({n, n == 0 ? Int(0) : wall_term(ctx, Int(n))});
    } else if (id == "A001950") {
        // floor(n*phi^2), the upper Wythoff sequence: one more than the d=1
        // first-column values.
        Context ctx(1);
        for (long n = 1; n <= terms; ++n)
            f.entries.push_back({n, first_column_value(ctx, Int(n)) + 1});
    } else if (id == "A082845") {
        // The complement of the d=2 first column: the out image of the
        // positive integers.
        Context ctx(2);
        for (long n = 1; n <= terms; ++n) f.entries.push_back({n, out_value(ctx, Int(n))});
    } else if (id == "A276879") {
        // Numbers whose red and left walls coincide (d=2), in order.
        Context ctx(2);
        long found = 0;
        for (Int n = 1; found < terms; ++n)
            if (terrace_class(ctx, n) == TerraceClass::coinciding) f.entries.push_back({++found, n});
    } else {
        throw std::invalid_argument("no generator for sequence '" + id + "'");
    }
    return f;
}

BFileDiff diff_bfiles(const BFile& expected, const BFile& actual) {
    BFileDiff d;
    const size_t n = std::min(expected.entries.size(), actual.entries.size());
    for (size_t i = 0; i < n; ++i) {
        const auto& e = expected.entries[i];
        const auto& a = actual.entries[i];
        if (e.index != a.index) {
            d.match = false;
            d.first_bad_index = e.index;
            d.detail = "entry " + std::to_string(i + 1) + ": index " + std::to_string(a.index) +
                       " where " + std::to_string(e.index) + " was expected";
            return d;
        }
        if (e.value != a.value) {
            d.match = false;
            d.first_bad_index = e.index;
            d.detail = "index " + std::to_string(e.index) + ": value " + a.value.get_str() +
                       " != expected " + e.value.get_str();
            return d;
        }
    }
    d.detail = "matched " + std::to_string(n) + " entries";
    return d;
}

std::string fetch_bfile_text(const std::string& id) {
    if (!valid_id(id)) throw std::invalid_argument("bad sequence id: " + id);
    httplib::Client cli("http://oeis.org");
    cli.set_follow_location(true);
    const std::string path = "/" + id + "/b" + id.substr(1) + ".txt";
    auto res = cli.Get(path);
    if (!res || res->status != 200)
        throw std::runtime_error("fetch failed for " + id +
                                 (res ? " (status " + std::to_string(res->status) + ")"
                                      : " (no connection)"));
    return res->body;
}

}  // namespace ostro

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <string>

#include "ostro/bfile.hpp"
#include "ostro/render.hpp"
#include "ostro/verify.hpp"

namespace {

using namespace ostro;
using nlohmann::json;

Int to_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
}

json report_to_json(const SuiteReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        checks.push_back({{"name", c.name},
                          {"law", c.law},
                          {"instances", c.instances},
                          {"failures", c.failures},
                          {"counterexamples", c.counterexamples},
                          {"notes", c.notes}});
    }
    return {{"suite", rep.suite}, {"d_min", rep.d_min},   {"d_max", rep.d_max},
            {"limit", rep.limit}, {"passed", rep.passed()}, {"checks", std::move(checks)}};
}

void print_report(const SuiteReport& rep) {
    std::cout << "suite " << rep.suite << " (d " << rep.d_min << ".." << rep.d_max << ", limit "
              << rep.limit << ")\n";
    for (const auto& c : rep.checks) {
        std::cout << "  " << (c.passed() ? "PASS" : "FAIL") << ' ' << c.name << ": " << c.law
                  << " [" << c.instances << " instances";
        if (c.failures) std::cout << ", " << c.failures << " failures";
        std::cout << "]\n";
        for (const auto& ex : c.counterexamples) std::cout << "    " << ex << '\n';
        for (const auto& note : c.notes) std::cout << "    note: " << note << '\n';
    }
}

int cmd_verify(const std::string& suite, const VerifyOptions& opt, const std::string& format) {
    std::vector<std::string> suites =
        suite == "all" ? suite_names() : std::vector<std::string>{suite};
    std::vector<SuiteReport> reports;
    for (const auto& s : suites) reports.push_back(run_suite(s, opt));
    bool ok = true;
    unsigned long failures = 0;
    for (const auto& r : reports) {
        ok = ok && r.passed();
        failures += r.total_failures();
    }
    if (format == "json") {
        json out = {{"passed", ok}, {"failures", failures}, {"suites", json::array()}};
        for (const auto& r : reports) out["suites"].push_back(report_to_json(r));
        std::cout << out.dump(2) << '\n';
    } else {
        for (const auto& r : reports) print_report(r);
        std::cout << "overall: " << (ok ? "PASS" : "FAIL") << " (" << failures << " failures)\n";
    }
    return ok ? 0 : 1;
}

int cmd_oeis(const std::string& id, long terms, const std::string& fixture, bool fetch) {
    BFile expected;
    if (fetch) {
        expected = parse_bfile(fetch_bfile_text(id), id);
    } else if (!fixture.empty()) {
        if (!std::filesystem::exists(fixture))
            throw std::invalid_argument("oeis: no such fixture: " + fixture);
        expected = read_bfile(fixture, id);
    } else {
        throw std::invalid_argument("oeis: provide --fixture PATH or --fetch");
    }
    if (static_cast<long>(expected.entries.size()) > terms)
        expected.entries.resize(static_cast<size_t>(terms));
    BFile actual = generate_sequence(id, terms);
    BFileDiff diff = diff_bfiles(expected, actual);
    if (diff.match) {
        std::cout << id << ": " << diff.detail << '\n';
        return 0;
    }
    std::cout << id << ": MISMATCH at index " << diff.first_bad_index << ": " << diff.detail
              << '\n';
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact numeration, bi-infinite recurrence arrays and their verification suites"};
    app.require_subcommand(1);

    // garden
    auto* garden = app.add_subcommand("garden", "Render the right-hand table (wall + columns 1..cols)");
    RenderSpec gspec;
    std::string gformat = "ascii";
    garden->add_option("--d", gspec.d, "recurrence parameter")->default_val(2);
    garden->add_option("--rows", gspec.rows, "rows to render")->default_val(9);
    garden->add_option("--cols", gspec.cols_right, "columns right of the wall")->default_val(8);
    garden->add_option("--format", gformat, "ascii, csv or json")
        ->check(CLI::IsMember({"ascii", "csv", "json"}));

    // tower
    auto* tower = app.add_subcommand("tower", "Render the two-sided table with wall markers");
    RenderSpec tspec;
    std::string tformat = "ascii";
    tower->add_option("--d", tspec.d, "recurrence parameter (>= 2)")->default_val(2);
    tower->add_option("--rows", tspec.rows, "rows to render")->default_val(10);
    tower->add_option("--left", tspec.cols_left, "columns left of the wall")->default_val(6);
    tower->add_flag("--labels", tspec.labels, "prepend the row label column");
    tower->add_flag("--underline-palindromes", tspec.underline_palindromes,
                    "underline rows that ride the denominator or companion sequences");
    tower->add_option("--format", tformat, "ascii, csv or json")
        ->check(CLI::IsMember({"ascii", "csv", "json"}));

    // codecs
    long enc_d = 2;
    std::string enc_value;
    auto* enc = app.add_subcommand("encode", "Digit word (msd) of a nonnegative integer");
    enc->add_option("--d", enc_d)->default_val(2);
    enc->add_option("value", enc_value, "integer >= 0")->required();

    long dec_d = 2;
    std::string dec_word;
    auto* dec = app.add_subcommand("decode", "Value of a digit word (msd)");
    dec->add_option("--d", dec_d)->default_val(2);
    dec->add_option("word", dec_word, "msd digit string")->required();

    long denc_d = 2;
    std::string denc_value;
    auto* denc = app.add_subcommand("dual-encode", "Dual digit word (msd) of any integer");
    denc->add_option("--d", denc_d)->default_val(2);
    denc->add_option("value", denc_value, "integer")->required();

    long ddec_d = 2;
    std::string ddec_word;
    auto* ddec = app.add_subcommand("dual-decode", "Value of a dual digit word (msd)");
    ddec->add_option("--d", ddec_d)->default_val(2);
    ddec->add_option("word", ddec_word, "msd digit string")->required();

    long loc_d = 2;
    std::string loc_value;
    auto* loc = app.add_subcommand("locate", "Row and column housing a positive integer");
    loc->add_option("--d", loc_d)->default_val(2);
    loc->add_option("n", loc_value, "integer >= 1")->required();

    // verify
    auto* ver = app.add_subcommand("verify", "Run the property suites");
    std::string suite = "all";
    VerifyOptions vopt;
    std::string vformat = "text";
    ver->add_option("--suite", suite, "all, numeration, towers, identities or blocks")
        ->check(CLI::IsMember({"all", "numeration", "towers", "identities", "blocks"}));
    ver->add_option("--d-min", vopt.d_min)->default_val(2);
    ver->add_option("--d-max", vopt.d_max)->default_val(6);
    ver->add_option("--limit", vopt.limit, "sweep bound (blocks: row budget per block)")
        ->default_val(10000);
    bool serial = false;
    ver->add_flag("--serial", serial, "run the serial reference sweeps instead of OpenMP");
    ver->add_option("--format", vformat, "text or json")->check(CLI::IsMember({"text", "json"}));

    // oeis
    auto* oeis = app.add_subcommand("oeis", "Diff a generated sequence against a b-file");
    std::string oid;
    long terms = 50;
    std::string fixture;
    bool fetch = false;
    oeis->add_option("--id", oid, "sequence id (A######)")->required();
    oeis->add_option("--terms", terms, "entries to generate")->default_val(50);
    oeis->add_option("--fixture", fixture, "b-file to compare against");
    oeis->add_flag("--fetch", fetch, "download the published b-file instead of reading a fixture");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*garden) {
            gspec.format = render_format_from_name(gformat);
            std::cout << render_garden(gspec);
            return 0;
        }
        if (*tower) {
            tspec.format = render_format_from_name(tformat);
            std::cout << render_tower(tspec);
            return 0;
        }
        if (*enc) {
            Context ctx(enc_d);
            Int v = to_int(enc_value);
            std::cout << to_msd_string(ctx, encode(ctx, v).digits) << '\n';
            return 0;
        }
        if (*dec) {
            Context ctx(dec_d);
            OstrowskiWord w{parse_msd(ctx, dec_word)};
            std::cout << decode(ctx, w).get_str() << '\n';
            return 0;
        }
        if (*denc) {
            Context ctx(denc_d);
            Int v = to_int(denc_value);
            std::cout << to_msd_string(ctx, dual_encode(ctx, v).digits) << '\n';
            return 0;
        }
        if (*ddec) {
            Context ctx(ddec_d);
            DualWord w{parse_msd(ctx, ddec_word)};
            std::cout << dual_decode(ctx, w).get_str() << '\n';
            return 0;
        }
        if (*loc) {
            Context ctx(loc_d);
            Position p = locate(ctx, to_int(loc_value));
            std::cout << p.m.get_str() << ' ' << p.n << '\n';
            return 0;
        }
        if (*ver) {
            vopt.parallel = !serial;
            return cmd_verify(suite, vopt, vformat);
        }
        if (*oeis) return cmd_oeis(oid, terms, fixture, fetch);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

#include "abcmin/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "abcmin/contrib.hpp"
#include "abcmin/errors.hpp"
#include "abcmin/oracle.hpp"
#include "abcmin/search.hpp"
#include "abcmin/shapes.hpp"
#include "abcmin/tree.hpp"
#include "abcmin/verify.hpp"

namespace abcmin::cli {

namespace {

std::string num17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string record_json(const ExtremalRecord& rec) {
    const CandidateShape& s = rec.shapes.front();
    std::ostringstream o;
    o << "{\"t\":" << rec.t << ",\"abc\":" << num17(rec.abc) << ",\"family\":\""
      << family_name(s.family) << "\",\"parameters\":{\"d_R\":" << s.d_R
      << ",\"d_M\":" << s.d_M << ",\"l\":" << s.l << ",\"k_R\":" << s.k_R
      << ",\"s_R\":" << s.s_R << ",\"k_M\":" << s.k_M << ",\"s_M\":" << s.s_M
      << "},\"order\":" << rec.order
      << ",\"unique\":" << (rec.unique ? "true" : "false") << "}";
    return o.str();
}

std::string report_json(const VerificationReport& r) {
    std::ostringstream o;
    o << "{\"name\":\"" << json_escape(r.name) << "\",\"range\":\""
      << json_escape(r.range) << "\",\"checked\":" << r.checked
      << ",\"worst_margin\":" << num17(r.worst_margin) << ",\"worst_point\":{";
    for (size_t i = 0; i < r.worst_point.size(); ++i) {
        if (i) o << ",";
        o << "\"" << json_escape(r.worst_point[i].first)
          << "\":" << r.worst_point[i].second;
    }
    o << "},\"direction\":\"" << json_escape(r.direction)
      << "\",\"passed\":" << (r.passed ? "true" : "false") << ",\"subchecks\":[";
    for (size_t i = 0; i < r.subchecks.size(); ++i) {
        if (i) o << ",";
        o << "{\"name\":\"" << json_escape(r.subchecks[i].first)
          << "\",\"passed\":" << (r.subchecks[i].second ? "true" : "false") << "}";
    }
    o << "]}";
    return o.str();
}

std::string oracle_json(const OracleResult& r) {
    std::ostringstream o;
    o << "{\"t\":" << r.t << ",\"trees_considered\":" << r.trees_considered
      << ",\"min_abc\":" << num17(r.min_abc) << ",\"minimizer_codes\":[";
    for (size_t i = 0; i < r.minimizer_codes.size(); ++i) {
        if (i) o << ",";
        o << "\"" << json_escape(r.minimizer_codes[i]) << "\"";
    }
    o << "]}";
    return o.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write " + path);
    f << content;
    if (!f.flush()) throw Error("cannot write " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string table1_text() {
    std::ostringstream o;
    char buf[128];
    std::snprintf(buf, sizeof buf, "%2s  %12s  %12s  %12s  %12s\n", "k", "c_120",
                  "diff_120", "c_inf", "diff_inf");
    o << buf;
    for (const ContribRow& row : table1()) {
        std::snprintf(buf, sizeof buf, "%2ld  %12.8f  %12.8f  %12.8f  %12.8f\n",
                      row.k, row.c_120, row.diff_120, row.c_inf, row.diff_inf);
        o << buf;
    }
    return o.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"abc-minimal trees: evaluate, search, enumerate, verify"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads,
                   "worker threads (default: machine parallelism)");

    std::string abc_file;
    CLI::App* cmd_abc = app.add_subcommand("abc", "abc index of a tree file");
    cmd_abc->add_option("FILE", abc_file, "edge-list file")->required();

    long search_t = 0;
    long kcap = SearchCaps{}.k_cap;
    long dcap = SearchCaps{}.d_cap;
    CLI::App* cmd_search =
        app.add_subcommand("search", "minimal configuration for t leaves");
    cmd_search->add_option("T", search_t, "number of leaves")->required();
    cmd_search->add_option("--kcap", kcap, "largest branch order tried");
    cmd_search->add_option("--dcap", dcap, "largest hub degree tried (0: t)");

    long scan_from = 0, scan_to = 0;
    std::string scan_csv_path;
    CLI::App* cmd_scan =
        app.add_subcommand("scan", "minimal configurations for a range of t");
    cmd_scan->add_option("T1", scan_from, "first t")->required();
    cmd_scan->add_option("T2", scan_to, "last t")->required();
    cmd_scan->add_option("--csv", scan_csv_path, "write CSV here instead of stdout");

    long oracle_t = 0;
    OracleOptions oracle_opt;
    std::string emit_dir;
    CLI::App* cmd_oracle =
        app.add_subcommand("oracle", "exhaustive minimum over all trees");
    cmd_oracle->add_option("T", oracle_t, "number of leaves")->required();
    cmd_oracle->add_option("--max-internal", oracle_opt.max_internal,
                           "internal vertex cap");
    cmd_oracle->add_option("--emit-trees", emit_dir,
                           "write one edge-list file per minimizer");

    std::string table_csv_path;
    CLI::App* cmd_table = app.add_subcommand("table1", "per-branch cost table");
    cmd_table->add_option("--csv", table_csv_path, "write CSV here as well");

    std::string verify_name;
    CLI::App* cmd_verify =
        app.add_subcommand("verify", "run one named check or all of them");
    cmd_verify->add_option("NAME", verify_name, "check name or 'all'")->required();

    CLI::App* cmd_tree = app.add_subcommand("tree", "tree utilities");
    cmd_tree->require_subcommand(1);
    long build_t = 0;
    std::string out_path;
    CLI::App* cmd_build =
        cmd_tree->add_subcommand("build", "emit a minimal tree as an edge list");
    cmd_build->add_option("T", build_t, "number of leaves")->required();
    cmd_build->add_option("--out", out_path, "write here instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_abc->parsed()) {
            Tree t = parse_tree(read_file(abc_file));
            out << num17(abc_index(t)) << "\n";
            return 0;
        }

        if (cmd_search->parsed()) {
            SearchCaps caps;
            caps.k_cap = kcap;
            caps.d_cap = dcap;
            out << record_json(minimal_tree(search_t, caps)) << "\n";
            return 0;
        }

        if (cmd_scan->parsed()) {
            ScanResult res = scan(scan_from, scan_to, SearchCaps{}, threads);
            std::string csv = scan_csv(res);
            if (scan_csv_path.empty())
                out << csv;
            else
                write_file(scan_csv_path, csv);
            if (res.change_points.empty()) {
                err << "change points: none\n";
            } else {
                err << "change points:";
                for (long t : res.change_points) err << " " << t;
                err << "\n";
            }
            return 0;
        }

        if (cmd_oracle->parsed()) {
            OracleResult res = oracle_minimal(oracle_t, oracle_opt);
            out << oracle_json(res) << "\n";
            if (!emit_dir.empty()) {
                std::filesystem::create_directories(emit_dir);
                for (size_t i = 0; i < res.minimizers.size(); ++i) {
                    std::ostringstream name;
                    name << "t" << res.t << "_minimizer_" << i + 1 << ".txt";
                    write_file((std::filesystem::path(emit_dir) / name.str()).string(),
                               serialize_tree(res.minimizers[i],
                                              {"abc = " + num17(res.min_abc)}));
                }
            }
            return 0;
        }

        if (cmd_table->parsed()) {
            out << table1_text();
            if (!table_csv_path.empty()) write_file(table_csv_path, table1_csv());
            return 0;
        }

        if (cmd_verify->parsed()) {
            std::vector<VerificationReport> reports;
            if (verify_name == "all")
                reports = verify_all();
            else
                reports.push_back(run_verification(verify_name));
            bool ok = true;
            for (const VerificationReport& r : reports) {
                out << report_json(r) << "\n";
                ok &= r.passed;
            }
            return ok ? 0 : 1;
        }

        if (cmd_build->parsed()) {
            ExtremalRecord rec = minimal_tree(build_t);
            const CandidateShape& shape = rec.shapes.front();
            Tree t = build_extremal_tree(shape);
            std::string body = serialize_tree(
                t, {shape_to_string(shape), "t = " + std::to_string(rec.t),
                    "abc = " + num17(rec.abc)});
            if (out_path.empty())
                out << body;
            else
                write_file(out_path, body);
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace abcmin::cli

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grouplib/catalog.hpp"
#include "grouplib/groupfile.hpp"
#include "grouplib/report.hpp"
#include "grouplib/verify.hpp"

namespace {

using grouplib::CheckStatus;
using grouplib::VerificationReport;

nlohmann::json report_json(const VerificationReport& rep) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : rep.entries)
        arr.push_back({{"check_id", e.check_id},
                       {"status", grouplib::status_name(e.status)},
                       {"group_id", e.group_id},
                       {"expected", e.expected},
                       {"computed", e.computed}});
    return arr;
}

void print_report(const VerificationReport& rep, const std::string& format) {
    if (format == "json")
        std::cout << report_json(rep).dump(2) << "\n";
    else
        std::cout << rep.tsv();
}

std::vector<std::pair<std::string, grouplib::FiniteGroup>> corpus_with_witnesses(long max_order) {
    std::vector<std::pair<std::string, grouplib::FiniteGroup>> gs;
    for (const auto& e : grouplib::corpus(max_order)) gs.emplace_back(e.id, e.make());
    for (const auto& id : grouplib::witness_ids())
        gs.emplace_back("witness:" + id, grouplib::witness(id));
    return gs;
}

nlohmann::json analysis_json(const grouplib::AnalysisReport& r) {
    nlohmann::json j;
    j["order"] = r.order;
    j["pr"] = r.pr.str();
    j["center_order"] = r.center_order;
    j["derived_order"] = r.derived_order;
    j["derived_center_order"] = r.derived_center_order;
    j["derived"] = r.derived_label.str();
    j["derived_center"] = r.derived_center_label.str();
    j["center_quotient"] = r.center_quotient_label.str();
    j["class_sizes"] = r.class_sizes;
    if (r.nilpotency)
        j["nilpotency_class"] = *r.nilpotency;
    else
        j["nilpotency_class"] = "not-nilpotent";
    j["smallest_prime"] = r.smallest_prime;
    j["derived_in_center"] = r.derived_in_center;
    j["cg_derived_abelian"] = r.cg_derived_abelian;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-group commutativity degree toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "tsv";
    bool strict = false;
    bool allow_vacuous = false;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();
    app.add_flag("--strict", strict, "full associativity validation on ingest");
    app.add_flag("--allow-vacuous", allow_vacuous, "vacuous coverage rows do not fail the run");

    auto* analyze_cmd = app.add_subcommand("analyze", "analyze a group file");
    std::string analyze_path;
    analyze_cmd->add_option("file", analyze_path, "group file")->required();

    auto* witness_cmd = app.add_subcommand("witness", "emit an internal witness group");
    std::string witness_id, witness_out;
    witness_cmd->add_option("row_id", witness_id, "witness row id")->required();
    witness_cmd->add_option("--out", witness_out, "write the group file here instead of stdout");

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->require_subcommand(1);
    auto* table_cmd = verify_cmd->add_subcommand("table", "classification table checks");
    std::string ingest_dir;
    long max_order = 100;
    table_cmd->add_option("--ingest", ingest_dir, "directory of extra group files to check");
    table_cmd->add_option("--max-order", max_order, "corpus order bound");
    auto* props_cmd = verify_cmd->add_subcommand("properties", "equation and lemma suites");
    props_cmd->add_option("--max-order", max_order, "corpus order bound");
    auto* remarks_cmd = verify_cmd->add_subcommand("remarks", "corrections to Rusin's table");

    auto* catalog_cmd = app.add_subcommand("catalog", "catalog operations");
    catalog_cmd->require_subcommand(1);
    auto* list_cmd = catalog_cmd->add_subcommand("list", "list corpus entries");
    list_cmd->add_option("--max-order", max_order, "corpus order bound");

    for (CLI::App* sc : {analyze_cmd, witness_cmd, verify_cmd, table_cmd, props_cmd, remarks_cmd,
                         catalog_cmd, list_cmd})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*analyze_cmd) {
            const grouplib::FiniteGroup g = grouplib::ingest(analyze_path, strict);
            const grouplib::AnalysisReport r = grouplib::analyze(g);
            if (format == "json")
                std::cout << analysis_json(r).dump(2) << "\n";
            else
                std::cout << grouplib::report_tsv(r);
            return 0;
        }
        if (*witness_cmd) {
            const grouplib::FiniteGroup g = grouplib::witness(witness_id);
            if (witness_out.empty())
                grouplib::write_group(std::cout, g);
            else
                grouplib::export_group(g, witness_out);
            return 0;
        }
        if (*table_cmd) {
            std::vector<std::pair<std::string, grouplib::FiniteGroup>> gs;
            for (const auto& e : grouplib::corpus(max_order)) gs.emplace_back(e.id, e.make());
            if (!ingest_dir.empty()) {
                std::vector<std::filesystem::path> files;
                for (const auto& entry : std::filesystem::directory_iterator(ingest_dir))
                    if (entry.is_regular_file()) files.push_back(entry.path());
                std::sort(files.begin(), files.end());
                for (const auto& p : files)
                    gs.emplace_back(p.filename().string(),
                                    grouplib::ingest(p.string(), strict));
            }
            const VerificationReport rep = grouplib::verify_char_table(gs);
            print_report(rep, format);
            return rep.ok(allow_vacuous) ? 0 : 1;
        }
        if (*props_cmd) {
            const auto gs = corpus_with_witnesses(max_order);
            VerificationReport rep = grouplib::verify_properties(gs);
            rep.append(grouplib::verify_formulas(gs));
            print_report(rep, format);
            return rep.ok(allow_vacuous) ? 0 : 1;
        }
        if (*remarks_cmd) {
            const VerificationReport rep = grouplib::verify_rusin_corrections();
            print_report(rep, format);
            return rep.ok(allow_vacuous) ? 0 : 1;
        }
        if (*list_cmd) {
            if (format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& e : grouplib::corpus(max_order))
                    arr.push_back({{"id", e.id}, {"order", e.order}});
                std::cout << arr.dump(2) << "\n";
            } else {
                std::cout << "id\torder\n";
                for (const auto& e : grouplib::corpus(max_order))
                    std::cout << e.id << "\t" << e.order << "\n";
            }
            return 0;
        }
    } catch (const grouplib::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const grouplib::GroupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "no subcommand\n";
    return 2;
}

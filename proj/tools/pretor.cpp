#include "pretor/app.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace pretor;

namespace {

void add_backend_flags(CLI::App* sub, app::RunConfig& cfg, std::string& window) {
    sub->add_option("--backend", cfg.backend, "typea | abgrp | chaincx")->capture_default_str();
    sub->add_option("--n", cfg.n, "typea: number of vertices (<= 6)");
    sub->add_option("--field", cfg.p, "prime field GF(p)")->capture_default_str();
    sub->add_option("--primes", cfg.primes, "abgrp: prime set")->delimiter(',');
    sub->add_option("--order", cfg.order, "abgrp: groups of order dividing this (<= 2000)")->capture_default_str();
    sub->add_option("--window", window, "chaincx: degree window lo,hi");
    sub->add_option("--dim-cap", cfg.dim_cap, "chaincx: max dimension per degree (<= 4)")->capture_default_str();
    sub->add_option("--samples", cfg.samples, "chaincx: seeded random complexes in the universe")
        ->capture_default_str();
    sub->add_option("--max-summands", cfg.max_summands, "typea: universe summand cap (0 = default)");
    sub->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
    sub->add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str();
}

void parse_window(const std::string& w, app::RunConfig& cfg) {
    if (w.empty()) return;
    auto comma = w.find(',');
    if (comma == std::string::npos) throw app::UsageError("--window expects lo,hi");
    try {
        cfg.lo = std::stoi(w.substr(0, comma));
        cfg.hi = std::stoi(w.substr(comma + 1));
    } catch (const std::exception&) {
        throw app::UsageError("--window expects lo,hi");
    }
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path);
    if (!out) throw app::UsageError("cannot write " + path);
    out << data;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App cli{"pretor: torsion and pretorsion theories in finite abelian length categories"};
    cli.require_subcommand(1);
    cli.set_version_flag("--version", app::kVersion);
    app::RunConfig cfg;
    std::string window, json_out, dot_out, t, f, name;
    int i = -1, j = -1;
    bool sweep = false;

    auto* en = cli.add_subcommand("enumerate", "list torsion pairs and comparable pairs");
    en->add_flag("--sweep", sweep, "check the three-way equivalence on every ordered pair");
    en->add_option("--dot", dot_out, "write the inclusion order of torsion classes");
    auto* ch = cli.add_subcommand("check", "is (T, F) a pretorsion theory?");
    ch->add_option("--T", t, "torsion members, e.g. \"1,12\"")->required();
    ch->add_option("--F", f, "torsion-free members")->required();
    auto* co = cli.add_subcommand("comparable", "(T1, F2) from torsion classes T2 in T1");
    co->add_option("--T1", t, "larger torsion class")->required();
    co->add_option("--T2", f, "smaller torsion class")->required();
    auto* se = cli.add_subcommand("serre-extend", "(U*S, S*V) from a torsion class U and a Serre class S");
    se->add_option("--U", t, "torsion class")->required();
    se->add_option("--S", f, "Serre class")->required();
    auto* st = cli.add_subcommand("stable", "the image of (T, F) in C/Z");
    st->add_option("--T", t, "torsion members")->required();
    st->add_option("--F", f, "torsion-free members")->required();
    auto* re = cli.add_subcommand("repro", "reproduce a worked example");
    re->add_option("name", name, "an-chain | an-quot | a2 | stable-ka2 | abgrp | chain | stability")->required();
    re->add_option("--i", i, "chain index i");
    re->add_option("--j", j, "chain index j");
    auto* cs = cli.add_subcommand("cases", "run the golden cases");
    std::string case_id;
    cs->add_option("id", case_id, "run only this case");
    bool update = false;
    cs->add_flag("--update", update, "rewrite digests and golden text files from the current build");

    for (auto* sub : {en, ch, co, se, st, re}) {
        add_backend_flags(sub, cfg, window);
        sub->add_option("--json", json_out, "write the JSON report");
    }

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = cli.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        parse_window(window, cfg);
        if (cs->parsed() && update) {
            std::string dir = app::default_data_dir();
            std::ifstream in(dir + "/cases.json");
            if (!in) throw app::UsageError("missing " + dir + "/cases.json");
            auto doc = nlohmann::json::parse(in);
            for (auto& e : doc.at("cases")) {
                if (!case_id.empty() && e.at("id") != case_id) continue;
                auto r = app::run_cfg(e.at("cfg"));
                e["digest"] = app::digest(r.report);
                if (e["cfg"].contains("golden"))
                    write_file(dir + "/golden/" + e["cfg"]["golden"].get<std::string>(), r.text);
                std::cout << "updated " << e["id"].get<std::string>() << (r.status ? " (check FAILED)" : "") << "\n";
            }
            write_file(dir + "/cases.json", doc.dump(2) + "\n");
            return 0;
        }
        if (cs->parsed()) {
            int failed = 0;
            for (const auto& gc : app::list_cases()) {
                if (!case_id.empty() && gc.id != case_id) continue;
                auto r = app::run_case(gc.id);
                std::cout << (r.pass ? "PASS " : "FAIL ") << gc.id << "  [" << gc.anchor << "]  " << r.detail << "\n";
                failed += !r.pass;
            }
            return failed ? 1 : 0;
        }
        app::Result r;
        std::string dot;
        if (en->parsed()) r = app::cmd_enumerate(cfg, sweep, dot_out.empty() ? nullptr : &dot);
        else if (ch->parsed()) r = app::cmd_check(cfg, t, f);
        else if (co->parsed()) r = app::cmd_comparable(cfg, t, f);
        else if (se->parsed()) r = app::cmd_serre_extend(cfg, t, f);
        else if (st->parsed()) r = app::cmd_stable(cfg, t, f);
        else r = app::cmd_repro(name, cfg, i, j);
        std::cout << r.text;
        if (!json_out.empty()) write_file(json_out, r.report.dump(2) + "\n");
        if (!dot_out.empty()) write_file(dot_out, dot);
        return r.status;
    } catch (const app::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BoundExceeded& e) {
        std::cerr << "error: " << e.what() << " (shrink --n, --order, --window, --dim-cap or --max-summands)\n";
        return 2;
    } catch (const TheoremViolation& e) {
        std::cerr << "BUG: theorem-guaranteed check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

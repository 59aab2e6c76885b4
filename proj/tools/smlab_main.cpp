// smlab: finite commutative-algebra workbench.
//
// Subcommands:
//   classify  — property table for the proper submodules in a workspace file
//   theorems  — run the theorem suite over the default catalog
//   search    — hunt for a submodule separating two classification flags
//   catalog   — summarize the default instance catalog
//
// Exit codes: 0 success/pass, 1 theorem check failed, 2 input error,
// 3 capacity error.

#include "smlab/catalog.hpp"
#include "smlab/classify.hpp"
#include "smlab/report.hpp"
#include "smlab/theorems.hpp"
#include "smlab/workspace.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace smlab;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw input_error("cannot open output file: " + out_path);
    out << text;
}

std::string flag_cell(const std::optional<bool>& f) {
    if (!f.has_value()) return "-";
    return *f ? "yes" : "no";
}

int cmd_classify(const std::string& spec_path, const std::string& module_name,
                 const std::string& format, const std::string& out_path) {
    Workspace ws = parse_workspace(read_file(spec_path));
    std::vector<std::pair<std::string, ModulePtr>> targets;
    if (!module_name.empty()) {
        auto it = ws.modules.find(module_name);
        if (it == ws.modules.end())
            throw input_error("no module named '" + module_name + "' in workspace");
        targets.emplace_back(it->first, it->second);
    } else {
        for (const std::string& n : ws.names) {
            auto it = ws.modules.find(n);
            if (it != ws.modules.end()) targets.emplace_back(n, it->second);
        }
    }
    if (targets.empty()) throw input_error("workspace declares no modules");

    const std::vector<std::string>& flags = classification_flag_names();
    ordered_json jmods = ordered_json::array();
    std::string text;
    for (const auto& [name, mod] : targets) {
        text += "module " + name + " (order " + std::to_string(mod->order) + ")\n";
        char head[256];
        std::snprintf(head, sizeof(head), "  %-16s", "submodule");
        text += head;
        for (const std::string& f : flags) {
            std::snprintf(head, sizeof(head), " %-14s", f.c_str());
            text += head;
        }
        text += "\n";
        ordered_json jsubs = ordered_json::array();
        for (const Submodule& n : enumerate_submodules(mod, ws.caps)) {
            PropertyVector pv = classify_submodule(n, ws.caps);
            std::string gens;
            for (int g : n.gens) gens += (gens.empty() ? "" : ",") + mod->name(g);
            if (gens.empty()) gens = mod->name(mod->zero);
            std::string label = "<" + gens + ">";
            std::snprintf(head, sizeof(head), "  %-16s", label.c_str());
            text += head;
            ordered_json jrow;
            jrow["generators"] = n.gens;
            jrow["label"] = label;
            jrow["size"] = n.members.size();
            jrow["proper"] = n.is_proper();
            for (const std::string& f : flags) {
                auto v = pv.flag(f);
                std::snprintf(head, sizeof(head), " %-14s", flag_cell(v).c_str());
                text += head;
                if (v.has_value())
                    jrow[f] = *v;
                else
                    jrow[f] = nullptr;
            }
            text += "\n";
            jsubs.push_back(jrow);
        }
        ordered_json jm;
        jm["module"] = name;
        jm["order"] = mod->order;
        jm["submodules"] = jsubs;
        jmods.push_back(jm);
    }
    if (format == "json") {
        ordered_json j;
        j["modules"] = jmods;
        emit(j.dump(2) + "\n", out_path);
    } else {
        emit(text, out_path);
    }
    return 0;
}

int cmd_theorems(const std::string& caps_name, std::uint64_t seed, const std::string& ids_arg,
                 const std::string& format, const std::string& out_path,
                 const std::string& mutate) {
    InstanceCatalog cat = default_catalog(caps_level_from_name(caps_name));
    std::vector<CheckReport> reports;
    {
        std::optional<MutationGuard> guard;
        if (!mutate.empty()) {
            bool known = false;
            for (Mutation m :
                 {Mutation::semi_n_drop_nilpotent_guard, Mutation::semi_n_drop_ann_guard,
                  Mutation::semi_n_forall_to_exists, Mutation::semi_n_conclude_membership,
                  Mutation::n_drop_radical_guard, Mutation::n_forall_to_exists})
                if (mutate == mutation_name(m)) {
                    guard.emplace(m);
                    known = true;
                    break;
                }
            if (!known) throw input_error("unknown mutation: " + mutate);
        }
        if (ids_arg.empty()) {
            reports = check_all(cat, seed);
        } else {
            std::stringstream ss(ids_arg);
            std::string id;
            while (std::getline(ss, id, ','))
                if (!id.empty()) reports.push_back(check_theorem(id, cat, seed));
        }
    }
    if (format == "json")
        emit(reports_to_json(reports, seed).dump(2) + "\n", out_path);
    else
        emit(reports_to_text(reports, seed), out_path);
    for (const CheckReport& r : reports)
        if (r.status == CheckReport::Status::fail) return 1;
    return 0;
}

int cmd_search(const std::string& a, const std::string& b, const std::string& caps_name,
               const std::string& format, const std::string& out_path) {
    InstanceCatalog cat = default_catalog(caps_level_from_name(caps_name));
    SeparatingResult res = search_separating(a, b, cat);
    if (format == "json") {
        ordered_json j;
        j["a"] = a;
        j["b"] = b;
        j["found"] = res.found;
        j["witness"] = res.witness;
        emit(j.dump(2) + "\n", out_path);
    } else if (res.found) {
        emit("separating witness (" + a + " but not " + b + "):\n" + res.witness, out_path);
    } else {
        emit("not_found: no submodule in the default catalog has " + a + " without " + b +
                 "\n",
             out_path);
    }
    return 0;
}

int cmd_catalog(const std::string& caps_name, const std::string& format,
                const std::string& out_path) {
    InstanceCatalog cat = default_catalog(caps_level_from_name(caps_name));
    std::size_t submods = 0, proper = 0;
    for (const ModulePtr& m : cat.modules)
        for (const Submodule& n : enumerate_submodules(m, cat.caps)) {
            ++submods;
            if (n.is_proper()) ++proper;
        }
    if (format == "json") {
        ordered_json j;
        j["caps"] = caps_level_name(cat.level);
        j["rings"] = cat.rings.size();
        j["modules"] = cat.modules.size();
        j["submodules"] = submods;
        j["proper_submodules"] = proper;
        j["idealizations"] = cat.idealizations.size();
        j["duplications"] = cat.duplications.size();
        j["amalgams"] = cat.amalgams.size();
        j["module_homs"] = cat.homs.size();
        emit(j.dump(2) + "\n", out_path);
    } else {
        char buf[512];
        std::snprintf(buf, sizeof(buf),
                      "catalog (%s caps)\n"
                      "  rings:              %zu\n"
                      "  modules:            %zu\n"
                      "  submodules:         %zu (%zu proper)\n"
                      "  idealizations:      %zu\n"
                      "  duplications:       %zu\n"
                      "  amalgams:           %zu\n"
                      "  module homs:        %zu\n",
                      caps_level_name(cat.level), cat.rings.size(), cat.modules.size(), submods,
                      proper, cat.idealizations.size(), cat.duplications.size(),
                      cat.amalgams.size(), cat.homs.size());
        emit(buf, out_path);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"smlab: finite commutative rings, modules, and submodule theory checks"};
    app.require_subcommand(1);

    std::string spec_path, module_name, ids_arg, caps_name = "standard";
    std::string out_path, format = "text", mutate, flag_a, flag_b;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--caps", caps_name, "catalog size: minimal|standard|large")
            ->check(CLI::IsMember({"minimal", "standard", "large"}));
        cmd->add_option("--out", out_path, "write the report to this path instead of stdout");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
    };

    CLI::App* classify = app.add_subcommand("classify", "classify submodules in a workspace");
    classify->add_option("--spec", spec_path, "workspace spec file")->required();
    classify->add_option("--module", module_name, "restrict to one named module");
    add_common(classify);

    CLI::App* theorems = app.add_subcommand("theorems", "run the theorem suite");
    theorems->add_option("--suite", ids_arg,
                         "'all' or ignored when --ids is given"); // kept for CLI symmetry
    theorems->add_option("--ids", ids_arg, "comma-separated theorem ids");
    theorems->add_option("--seed", seed, "seed for sampled subfamilies (lemma-int)");
    theorems->add_option("--mutate", mutate,
                         "run with a single predicate mutation (sensitivity harness)");
    add_common(theorems);

    CLI::App* search = app.add_subcommand("search", "find a flag-separating submodule");
    search->add_option("--a", flag_a, "flag the witness must have")->required();
    search->add_option("--b", flag_b, "flag the witness must lack")->required();
    add_common(search);

    CLI::App* catalog = app.add_subcommand("catalog", "summarize the default catalog");
    add_common(catalog);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(classify))
            return cmd_classify(spec_path, module_name, format, out_path);
        if (app.got_subcommand(theorems)) {
            if (ids_arg == "all") ids_arg.clear();
            return cmd_theorems(caps_name, seed, ids_arg, format, out_path, mutate);
        }
        if (app.got_subcommand(search))
            return cmd_search(flag_a, flag_b, caps_name, format, out_path);
        if (app.got_subcommand(catalog)) return cmd_catalog(caps_name, format, out_path);
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

// ppk: planar presentation kit. Recognizes, searches, and enumerates planar
// presentations, realizes finite Cayley graphs, and analyzes embeddings.
//
// Exit codes: 0 success/true, 1 semantic false/rejected, 2 input error,
// 3 budget exhausted.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ppk/cayley.hpp"
#include "ppk/conditions.hpp"
#include "ppk/crossing.hpp"
#include "ppk/decoration_io.hpp"
#include "ppk/embedding.hpp"
#include "ppk/enumerate.hpp"
#include "ppk/errors.hpp"
#include "ppk/graph.hpp"
#include "ppk/parse.hpp"
#include "ppk/planarity.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using ppk::InputError;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

nlohmann::ordered_json rotation_json(const ppk::ColoredGraph& g, const ppk::RotationSystem& rot) {
    nlohmann::ordered_json j;
    for (int v = 0; v < g.n; ++v) {
        nlohmann::ordered_json ring = nlohmann::ordered_json::array();
        for (int d : rot.rot[v]) ring.push_back("e" + std::to_string(d / 2) + "." + std::to_string(d % 2));
        j[std::to_string(v)] = ring;
    }
    return j;
}

ppk::RotationSystem rotation_from_json(const ppk::ColoredGraph& g, const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ppk::RotationSystem rot;
    rot.rot.assign(g.n, {});
    for (auto& [key, ring] : j.items()) {
        int v = std::stoi(key);
        if (v < 0 || v >= g.n) throw InputError("rotation JSON: vertex out of range");
        for (const auto& item : ring) {
            std::string s = item.get<std::string>();
            if (s.size() < 4 || s[0] != 'e') throw InputError("rotation JSON: bad dart id " + s);
            size_t dot = s.find('.');
            int e = std::stoi(s.substr(1, dot - 1));
            int end = std::stoi(s.substr(dot + 1));
            rot.rot[v].push_back(2 * e + end);
        }
    }
    return rot;
}

struct CheckArgs {
    std::string kind = "special";
    std::string decoration_path;
    bool no_self_pairs = false;
    bool strict_p4 = false;
};

int run_check(const CheckArgs& args) {
    ppk::DecorationFile file = ppk::read_decoration_json(read_input(args.decoration_path));
    ppk::CheckOptions opts;
    opts.include_self_pairs = !args.no_self_pairs;
    opts.strict_subword_inverses = args.strict_p4;
    ppk::Verdict v;
    if (args.kind == "special") {
        if (!file.special) throw InputError("check --kind special needs a special decoration");
        v = ppk::check_special(file.presentation, *file.special, opts);
    } else if (args.kind == "generic") {
        ppk::GenericDecoration d =
            file.generic ? *file.generic_decoration : ppk::lift_to_generic(*file.special);
        v = ppk::check_generic(file.presentation, d, opts);
    } else {
        throw InputError("check: unknown kind '" + args.kind + "'");
    }
    std::cout << ppk::verdict_json(v) << "\n";
    return v.accepted ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ppk: planar presentation kit"};
    app.set_version_flag("--version", std::string("ppk ") + kVersion);
    app.set_config("--config");
    app.require_subcommand(1);

    // ---- check ----
    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "check a decorated presentation");
    check->add_option("--kind", check_args.kind, "special|generic")->required();
    check->add_option("--decoration", check_args.decoration_path, "decoration JSON ('-' stdin)")
        ->required();
    check->add_flag("--no-self-pairs", check_args.no_self_pairs,
                    "exclude self-pairs from the crossing conditions");
    check->add_flag("--strict-p4", check_args.strict_p4, "also test rotations of inverses");

    // ---- cross ----
    std::string cross_dec, cross_w, cross_z;
    bool cross_oracle_flag = false;
    auto* cross = app.add_subcommand("cross", "decide whether two words cross");
    cross->add_option("--decoration", cross_dec)->required();
    cross->add_option("--w", cross_w)->required();
    cross->add_option("--z", cross_z)->required();
    cross->add_flag("--oracle", cross_oracle_flag, "use the constructive oracle");

    // ---- find-special ----
    std::string fs_pres;
    long fs_budget = 1000000;
    auto* fs = app.add_subcommand("find-special", "search for a special decoration");
    fs->add_option("--presentation", fs_pres, "presentation file ('-' stdin)")->required();
    fs->add_option("--max-candidates", fs_budget);

    // ---- enumerate ----
    std::string en_kind = "special", en_out = "-";
    ppk::Budget budget;
    int en_threads = 1;
    auto* en = app.add_subcommand("enumerate", "enumerate planar presentations");
    en->add_option("--kind", en_kind, "special|generic|general")->required();
    en->add_option("--max-generators", budget.max_generators)->required();
    en->add_option("--max-relators", budget.max_relators)->required();
    en->add_option("--max-total-length", budget.max_total_relator_length)->required();
    en->add_option("--limit", budget.max_outputs);
    en->add_option("--out", en_out);
    en->add_option("--threads", en_threads);

    // ---- cayley ----
    std::string cay_pres, cay_out = "-";
    int cay_max = 10000;
    auto* cay = app.add_subcommand("cayley", "realize a finite Cayley graph");
    cay->add_option("--presentation", cay_pres)->required();
    cay->add_option("--max-cosets", cay_max);
    cay->add_option("--out", cay_out, "graph.dot or graph.graphml");

    // ---- planar ----
    std::string pl_in, pl_rot;
    auto* pl = app.add_subcommand("planar", "planarity test with rotation output");
    pl->add_option("--in", pl_in, "graph in dot format")->required();
    pl->add_option("--emit-rotation", pl_rot, "write the rotation system JSON");

    // ---- extract ----
    std::string ex_in, ex_rot, ex_out = "-";
    auto* ex = app.add_subcommand("extract", "extract a special presentation");
    ex->add_option("--in", ex_in)->required();
    ex->add_option("--rotation", ex_rot, "rotation JSON (defaults to a planar embedding)");
    ex->add_option("--out", ex_out);

    // ---- verify ----
    std::string vf_dec;
    int vf_max = 10000;
    bool vf_json = false, vf_no_self = false;
    auto* vf = app.add_subcommand("verify", "check, build, and test planarity end to end");
    vf->add_option("--decoration", vf_dec)->required();
    vf->add_option("--max-cosets", vf_max);
    vf->add_flag("--json", vf_json);
    vf->add_flag("--no-self-pairs", vf_no_self,
                 "exclude self-pairs from the crossing conditions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (*check) return run_check(check_args);

        if (*cross) {
            ppk::DecorationFile file = ppk::read_decoration_json(read_input(cross_dec));
            ppk::GenericDecoration d =
                file.generic ? *file.generic_decoration : ppk::lift_to_generic(*file.special);
            ppk::Word w = ppk::parse_word(cross_w, file.presentation);
            ppk::Word z = ppk::parse_word(cross_z, file.presentation);
            ppk::CrossResult r = cross_oracle_flag ? ppk::crossing_oracle(w, z, d)
                                                   : ppk::decide_crossing(w, z, d);
            if (r.crosses) {
                std::cout << "cross " << ppk::alignment_json(*r.witness, file.presentation)
                          << "\n";
                return 1;
            }
            std::cout << "nested\n";
            return 0;
        }

        if (*fs) {
            ppk::Presentation p = ppk::parse_presentation(read_input(fs_pres));
            ppk::SearchOptions opts;
            opts.max_candidates = fs_budget;
            try {
                auto d = ppk::search_special_decoration(p, opts);
                if (!d) {
                    std::cout << "none\n";
                    return 1;
                }
                std::cout << ppk::write_decoration_json(p, *d) << "\n";
                return 0;
            } catch (const ppk::SearchBudgetExceeded&) {
                std::cerr << "search budget exhausted\n";
                return 3;
            }
        }

        if (*en) {
            ppk::PlanarKind kind = en_kind == "special"   ? ppk::PlanarKind::Special
                                   : en_kind == "generic" ? ppk::PlanarKind::Generic
                                   : en_kind == "general" ? ppk::PlanarKind::General
                                                          : throw InputError("bad --kind");
            std::ofstream file_out;
            std::ostream* os = &std::cout;
            if (en_out != "-") {
                file_out.open(en_out);
                if (!file_out) throw InputError("cannot open '" + en_out + "'");
                os = &file_out;
            }
            ppk::EnumerateOptions opts;
            opts.threads = en_threads;
            ppk::enumerate_planar(kind, budget, [&](const ppk::PlanarItem& item) {
                nlohmann::ordered_json j;
                j["presentation"] = ppk::format_presentation(item.presentation);
                if (item.decoration.special)
                    j["decoration"] = nlohmann::ordered_json::parse(ppk::write_decoration_json(
                        item.presentation, *item.decoration.special));
                else if (item.decoration.generic)
                    j["decoration"] = nlohmann::ordered_json::parse(ppk::write_decoration_json(
                        item.presentation, *item.decoration.generic));
                if (item.parent) {
                    j["parent"] = ppk::format_presentation(*item.parent);
                    j["removed"] = item.removed;
                }
                *os << j.dump() << "\n" << std::flush;
                return true;
            }, opts);
            return 0;
        }

        if (*cay) {
            ppk::Presentation p = ppk::parse_presentation(read_input(cay_pres));
            ppk::CosetTable t = ppk::coset_enumerate(p, cay_max);
            if (!t.complete) {
                std::cerr << "coset enumeration incomplete within " << cay_max << " cosets\n";
                return 3;
            }
            ppk::ColoredGraph g = ppk::build_cayley_graph(p, t);
            std::ofstream file_out;
            std::ostream* os = &std::cout;
            if (cay_out != "-") {
                file_out.open(cay_out);
                if (!file_out) throw InputError("cannot open '" + cay_out + "'");
                os = &file_out;
            }
            if (cay_out.size() >= 8 && cay_out.substr(cay_out.size() - 8) == ".graphml")
                ppk::write_graphml(g, *os);
            else
                ppk::write_dot(g, *os);
            return 0;
        }

        if (*pl) {
            std::istringstream is(read_input(pl_in));
            ppk::ColoredGraph g = ppk::read_dot(is);
            ppk::PlanarityResult r = ppk::planarity_test(g);
            if (r.planar) {
                std::cout << "planar faces="
                          << ppk::trace_faces(g, r.rotation).size() << "\n";
                if (!pl_rot.empty()) {
                    std::ofstream out(pl_rot);
                    out << rotation_json(g, r.rotation).dump() << "\n";
                }
                return 0;
            }
            std::cout << "nonplanar witness=" << r.kuratowski_kind << " edges=";
            for (size_t i = 0; i < r.kuratowski_edges.size(); ++i)
                std::cout << (i ? "," : "") << r.kuratowski_edges[i];
            std::cout << "\n";
            return 1;
        }

        if (*ex) {
            std::istringstream is(read_input(ex_in));
            ppk::ColoredGraph g = ppk::read_dot(is);
            ppk::RotationSystem rot;
            if (!ex_rot.empty()) {
                rot = rotation_from_json(g, read_input(ex_rot));
            } else {
                ppk::PlanarityResult r = ppk::planarity_test(g);
                if (!r.planar) throw ppk::NotPlanar("graph is not planar");
                rot = r.rotation;
            }
            ppk::Extraction e = ppk::extract_special_presentation(g, rot);
            std::ofstream file_out;
            std::ostream* os = &std::cout;
            if (ex_out != "-") {
                file_out.open(ex_out);
                os = &file_out;
            }
            *os << ppk::format_presentation(e.presentation) << "\n";
            *os << ppk::write_decoration_json(e.presentation, e.decoration) << "\n";
            return 0;
        }

        if (*vf) {
            ppk::DecorationFile file = ppk::read_decoration_json(read_input(vf_dec));
            ppk::GenericDecoration d =
                file.generic ? *file.generic_decoration : ppk::lift_to_generic(*file.special);
            nlohmann::ordered_json out;
            if (!vf_json) std::cout << "ppk " << kVersion << "\n";
            auto stage = [&](const std::string& name, const std::string& value) {
                if (vf_json) {
                    nlohmann::ordered_json j;
                    j["stage"] = name;
                    j["result"] = value;
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << name << ": " << value << "\n";
                }
            };
            ppk::CheckOptions copts;
            copts.include_self_pairs = !vf_no_self;
            ppk::Verdict v = ppk::check_generic(file.presentation, d, copts);
            stage("check", v.accepted ? "accepted" : "rejected");
            if (!v.accepted) {
                stage("reason", v.failures[0].condition + ": " + v.failures[0].witness);
                return 1;
            }
            ppk::CosetTable t = ppk::coset_enumerate(file.presentation, vf_max);
            if (!t.complete) {
                stage("cosets", "incomplete within " + std::to_string(vf_max));
                return 3;
            }
            stage("cosets", std::to_string(t.coset_count));
            ppk::ColoredGraph g = ppk::build_cayley_graph(file.presentation, t);
            stage("graph", std::to_string(g.n) + " vertices, " + std::to_string(g.edges.size()) +
                               " edges");
            ppk::PlanarityResult r = ppk::planarity_test(g);
            stage("planar", r.planar ? "true" : "false");
            if (!r.planar) return 1;
            // hinge separation for the structure's hinge colors
            std::vector<int> hinge_colors;
            try {
                ppk::HingeSet h = ppk::hinges(d.structure);
                std::set<int> cols;
                for (int idx : h.members) cols.insert(d.structure.alphabet.letter(idx).gen);
                hinge_colors.assign(cols.begin(), cols.end());
            } catch (const ppk::InvalidStructure&) {
            }
            bool hs = ppk::hinge_separation(g, hinge_colors);
            stage("hinge-separation", hs ? "true" : "false");
            return hs ? 0 : 1;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ppk::SyntaxError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ppk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

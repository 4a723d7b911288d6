// Command-line interface: region choice matrices, problem solving, kernel
// and image bases, corpus access, and the verification suites.
//
// Exit codes: 0 success (an unsolvable instance is still success), 1 domain
// error, 2 usage or input parse error, 3 internal invariant violation.

#include "rcp/choice.hpp"
#include "rcp/corpus.hpp"
#include "rcp/json_io.hpp"
#include "rcp/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace rcp;

LinkDiagram load_diagram(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw DiagramError("cannot open " + path);
    json j = json::parse(in);
    return diagram_from_json(j);
}

ScoreVector parse_scores(const std::string &text) {
    ScoreVector s;
    s.values = int_map_from_json(json::parse(text));
    return s;
}

Rule need_rule(const std::string &name) {
    auto r = rule_from_name(name);
    if (!r)
        throw DiagramError("unknown rule " + name +
                           " (expected d1, d2, a1 or a2)");
    return *r;
}

json numbering_json(const NumberingVector &v) {
    std::map<int, Int> m;
    for (std::size_t r = 0; r < v.size(); ++r)
        m[static_cast<int>(r)] = v.values[r];
    return int_map_to_json(m);
}

void print_matrix_text(const LabeledMatrix &m, std::ostream &os) {
    std::vector<std::size_t> width(m.mat.cols(), 1);
    for (std::size_t j = 0; j < m.mat.cols(); ++j) {
        width[j] = ("R" + std::to_string(m.col_ids[j])).size();
        for (std::size_t i = 0; i < m.mat.rows(); ++i)
            width[j] = std::max(width[j], m.mat(i, j).str().size());
    }
    auto cell = [&](std::size_t j, const std::string &v) {
        return std::string(width[j] + 1 - v.size(), ' ') + v;
    };
    os << "     ";
    for (std::size_t j = 0; j < m.mat.cols(); ++j)
        os << cell(j, "R" + std::to_string(m.col_ids[j]));
    os << "\n";
    for (std::size_t i = 0; i < m.mat.rows(); ++i) {
        std::string h = "x" + std::to_string(m.row_ids[i]);
        os << h << std::string(h.size() < 5 ? 5 - h.size() : 1, ' ');
        for (std::size_t j = 0; j < m.mat.cols(); ++j)
            os << cell(j, m.mat(i, j).str());
        os << "\n";
    }
}

int print_report(const VerifyReport &rep) {
    for (const auto &item : rep.items)
        std::cout << (item.ok ? "[ ok ] " : "[FAIL] ") << item.name
                  << (item.detail.empty() ? "" : ": " + item.detail) << "\n";
    std::cout << (rep.all_ok ? "verify: all checks passed"
                             : "verify: FAILURES above")
              << std::endl;
    return rep.all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"integral region choice problems on link diagrams"};
    app.require_subcommand(1);

    std::string file, rule_name = "d1", scores_text = "{}";
    std::string family_name = "alternating", entry_name;
    bool as_text = false;
    unsigned long long seed = 0;
    int walk_steps = 50;

    auto *info = app.add_subcommand("info", "diagram summary");
    info->add_option("file", file)->required();

    auto *matrix = app.add_subcommand("matrix", "region choice matrix");
    matrix->add_option("file", file)->required();
    matrix->add_option("--rule", rule_name, "d1|d2|a1|a2");
    matrix->add_flag("--text", as_text, "aligned text grid");

    auto *solve_cmd = app.add_subcommand("solve", "solve A u + c = 0");
    solve_cmd->add_option("file", file)->required();
    solve_cmd->add_option("--rule", rule_name);
    solve_cmd->add_option("--scores", scores_text,
                          "JSON map crossing id -> score");

    auto *kernel_cmd = app.add_subcommand("kernel", "kernel basis");
    kernel_cmd->add_option("file", file)->required();
    kernel_cmd->add_option("--rule", rule_name);

    auto *image = app.add_subcommand("image-basis",
                                     "two-component image basis");
    image->add_option("file", file)->required();
    image->add_option("--family", family_name, "definite|alternating");

    auto *member = app.add_subcommand("member", "score vector in the image?");
    member->add_option("file", file)->required();
    member->add_option("--rule", rule_name);
    member->add_option("--scores", scores_text);

    auto *verify = app.add_subcommand("verify", "run the property suites");
    bool verify_all_flag = false;
    unsigned long long walk_seed = 0;
    bool have_walk = false;
    verify->add_flag("--all", verify_all_flag, "all builtins plus walks");
    verify->add_option("--name", entry_name, "one corpus entry");
    verify->add_option("--walk", walk_seed, "seeded move walk")
        ->trigger_on_parse();
    verify->add_option("--steps", walk_steps, "walk length");
    verify->add_option("--seed", seed, "seed for randomized checks");
    verify->callback([&] { have_walk = verify->count("--walk") > 0; });

    auto *corpus_cmd = app.add_subcommand("corpus", "built-in diagrams");
    auto *corpus_list = corpus_cmd->add_subcommand("list", "entry names");
    auto *corpus_dump = corpus_cmd->add_subcommand("dump", "emit diagram JSON");
    corpus_dump->add_option("name", entry_name)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (info->parsed()) {
            LinkDiagram d = load_diagram(file);
            json out;
            out["n"] = d.n();
            out["d"] = d.d();
            out["l"] = d.l();
            out["regions"] = d.region_count();
            out["outer_region"] = d.outer_region();
            out["reducible_crossings"] = d.reducible_crossings();
            out["projection"] = d.is_projection();
            std::cout << out.dump(2) << std::endl;
        } else if (matrix->parsed()) {
            LinkDiagram d = load_diagram(file);
            LabeledMatrix m = region_choice_matrix(d, need_rule(rule_name));
            if (as_text) {
                print_matrix_text(m, std::cout);
            } else {
                json out = matrix_to_json(m.mat, m.row_ids, m.col_ids);
                out["rule"] = rule_name;
                std::cout << out.dump(2) << std::endl;
            }
        } else if (solve_cmd->parsed()) {
            LinkDiagram d = load_diagram(file);
            ProblemInstance inst{&d, need_rule(rule_name),
                                 parse_scores(scores_text)};
            auto sol = solve(inst);
            json out;
            out["rule"] = rule_name;
            out["solvable"] = sol.has_value();
            if (sol) {
                out["u"] = numbering_json(sol->u);
                out["certificate"] = sol->certificate;
            }
            std::cout << out.dump(2) << std::endl;
        } else if (kernel_cmd->parsed()) {
            LinkDiagram d = load_diagram(file);
            Rule rule = need_rule(rule_name);
            json out;
            out["rule"] = rule_name;
            json basis = json::array();
            if (rule.counting == Counting::double_) {
                out["standard"] = true;
                for (const NumberingVector &v : kernel_basis(d, rule))
                    basis.push_back(numbering_json(v));
            } else {
                out["standard"] = false;
                IntMat A = region_choice_matrix(d, rule).mat;
                for (const IntVec &k : kernel_lattice(A)) {
                    NumberingVector v;
                    v.values = k;
                    basis.push_back(numbering_json(v));
                }
            }
            out["basis"] = basis;
            std::cout << out.dump(2) << std::endl;
        } else if (image->parsed()) {
            LinkDiagram d = load_diagram(file);
            Family fam = family_name == "definite" ? Family::definite
                                                   : Family::alternating;
            ImageBasis b = image_basis_two_component(d, fam);
            json out;
            out["family"] = family_name;
            out["self_count"] = b.self_count;
            out["paired_crossing"] = b.paired_crossing;
            json vecs = json::array(), wits = json::array();
            for (std::size_t i = 0; i < b.vectors.size(); ++i) {
                vecs.push_back(int_map_to_json(b.vectors[i].values));
                wits.push_back(numbering_json(b.witnesses[i]));
            }
            out["basis"] = vecs;
            out["witnesses"] = wits;
            std::cout << out.dump(2) << std::endl;
        } else if (member->parsed()) {
            LinkDiagram d = load_diagram(file);
            bool ok = image_membership(d, need_rule(rule_name),
                                       parse_scores(scores_text));
            json out;
            out["rule"] = rule_name;
            out["solvable"] = ok;
            std::cout << out.dump(2) << std::endl;
        } else if (verify->parsed()) {
            if (have_walk) {
                WalkResult w = random_walk(builtin("kink_sum(2)").diagram,
                                           walk_seed, walk_steps, 14);
                VerifyReport rep;
                for (std::size_t i = 0; i < w.steps.size(); ++i) {
                    const WalkStep &st = w.steps[i];
                    std::string detail;
                    for (const std::string &f : st.report.failures)
                        detail += f + "; ";
                    rep.add("step " + std::to_string(i) + " " +
                                move_spec_to_json(st.spec).dump(),
                            st.report.ok, detail);
                }
                return print_report(rep);
            }
            VerifyReport rep = entry_name.empty()
                                   ? verify_all(seed)
                                   : verify_entry(builtin(entry_name), seed);
            return print_report(rep);
        } else if (corpus_cmd->parsed()) {
            if (corpus_list->parsed()) {
                for (const std::string &n : builtin_names())
                    std::cout << n << "\n";
            } else if (corpus_dump->parsed()) {
                CorpusEntry e = builtin(entry_name);
                std::cout << diagram_spec_to_json(e.spec).dump(2) << std::endl;
            } else {
                std::cerr << "corpus: need list or dump" << std::endl;
                return 2;
            }
        }
        return 0;
    } catch (const json::exception &ex) {
        std::cerr << "input error: " << ex.what() << std::endl;
        return 2;
    } catch (const DiagramError &ex) {
        std::cerr << "error: " << ex.what() << std::endl;
        return 1;
    } catch (const std::logic_error &ex) {
        std::cerr << "internal error: " << ex.what() << std::endl;
        return 3;
    }
}

#include "lmt/bounds.hpp"
#include "lmt/countermodel.hpp"
#include "lmt/json_io.hpp"
#include "lmt/lj2lmt.hpp"
#include "lmt/render.hpp"
#include "lmt/suite.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace lmt;

namespace {

enum Exit { Ok = 0, Failed = 1, Usage = 2 };

struct Output {
    std::string format = "text";
    std::string out;

    int emit(const std::string& text) const
    {
        if (out.empty()) {
            std::cout << text;
            return Ok;
        }
        std::ofstream f(out);
        if (!f) {
            std::cerr << "cannot write " << out << "\n";
            return Usage;
        }
        f << text;
        return Ok;
    }
};

std::string resolve(const std::string& path)
{
    if (std::filesystem::exists(path))
        return path;
    if (const char* dir = std::getenv("LMT_GOLDEN_DIR")) {
        auto alt = std::filesystem::path(dir) / path;
        if (std::filesystem::exists(alt))
            return alt.string();
    }
    return path;
}

std::string show(const ProofTree& t, const std::string& fmt)
{
    if (fmt == "json")
        return dump(to_json(t));
    return fmt == "latex" ? latex_tree(t) : text_tree(t);
}

std::string show(const LJProof& p, const std::string& fmt)
{
    if (fmt == "json")
        return dump(to_json(p));
    return fmt == "latex" ? latex_tree(p) : text_tree(p);
}

std::string show(const KripkeModel& m, const std::string& fmt)
{
    return fmt == "json" ? dump(to_json(m)) : model_text(m);
}

int cmd_prove(const std::string& text, const Output& o, std::optional<std::uint64_t> max_depth)
{
    Formula f = parse(text);
    auto out = search(f, {max_depth});
    if (out.proved) {
        if (auto v = check_lmt_proof(out.tree)) {
            std::cerr << "internal error: proof rejected at '" << v->path << "': " << v->reason << "\n";
            return Failed;
        }
        int rc = o.emit(show(out.tree, o.format));
        return rc == Ok ? Ok : rc;
    }
    KripkeModel m = assemble_countermodel(out.tree);
    int rc = o.emit(show(m, o.format));
    return rc == Ok ? Failed : rc;
}

int report(const std::optional<Violation>& v)
{
    if (v) {
        std::cout << "violation at '" << v->path << "': " << v->reason << "\n";
        return Failed;
    }
    std::cout << "ok\n";
    return Ok;
}

int cmd_check(const std::string& kind, const std::string& file, const std::string& formula)
{
    Json j = read_json_file(resolve(file));
    if (kind == "lmt")
        return report(check_lmt_proof(lmt_from_json(j)));
    if (kind == "lj")
        return report(check_lj_proof(lj_from_json(j)));
    if (kind == "nd") {
        auto r = check_nd_proof(nd_from_json(j));
        if (r.violation)
            return report(r.violation);
        std::cout << "ok";
        if (!r.open.empty()) {
            std::cout << ", open hypotheses:";
            for (const auto& h : r.open)
                std::cout << " " << render(h) << ";";
        }
        std::cout << "\n";
        return Ok;
    }
    KripkeModel m = model_from_json(j);
    if (auto v = validate_model(m)) {
        std::cout << "invalid model: " << *v << "\n";
        return Failed;
    }
    if (formula.empty()) {
        std::cout << "ok\n";
        return Ok;
    }
    Formula f = parse(formula);
    m.normalize();
    Forcing fr(m);
    for (const auto& w : m.worlds)
        std::cout << w << ": " << (fr.forces(w, f) ? "forces" : "does not force") << "\n";
    if (!fr.forces(m.root, f)) {
        std::cout << "falsified at " << m.root << "\n";
        return Failed;
    }
    for (const auto& w : m.worlds)
        if (!fr.forces(w, f)) {
            std::cout << "falsified at " << w << "\n";
            return Failed;
        }
    std::cout << "validated\n";
    return Ok;
}

int cmd_translate(const std::string& from, const std::string& to, const std::string& file, const Output& o)
{
    Json j = read_json_file(resolve(file));
    LJProof lj;
    std::uint64_t source_height = 0;
    if (from == "nd") {
        NDProof nd = nd_from_json(j);
        source_height = height(nd);
        try {
            lj = translate_nd_to_lj(nd);
        } catch (const TranslationError& e) {
            std::cerr << e.what() << "\n";
            return Failed;
        }
        if (auto v = check_lj_proof(lj)) {
            std::cerr << "translated proof rejected at '" << v->path << "': " << v->reason << "\n";
            return Failed;
        }
        if (to == "lj") {
            std::cerr << "source height " << source_height << ", target height " << height(lj) << "\n";
            return o.emit(show(lj, o.format));
        }
    } else {
        lj = lj_from_json(j);
        source_height = height(lj);
    }
    LJTranslation t;
    try {
        t = translate_lj_to_lmt(lj);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return Failed;
    }
    if (auto v = check_lmt_proof(t.proof)) {
        std::cerr << "translated proof rejected at '" << v->path << "': " << v->reason << "\n";
        return Failed;
    }
    std::cerr << "source height " << source_height << ", target height " << height(t.proof) << "\n";
    for (const auto& r : t.table)
        std::cerr << "  " << (r.lj_path.empty() ? "/" : r.lj_path) << " " << row_name(r.kind) << " 1:" << r.lmt_nodes
                  << "\n";
    return o.emit(show(t.proof, o.format));
}

int cmd_enumerate(std::size_t atoms, int max_degree, const std::string& mode)
{
    auto formulas = enumerate_upto(max_degree, default_atoms(atoms));
    std::size_t theorems = 0, disagreements = 0;
    std::uint64_t max_height = 0;
    std::size_t max_nodes = 0;
    for (const auto& f : formulas) {
        CrossCheck c = cross_check(f);
        if (mode == "cross-check" && c.problem) {
            std::cout << "disagreement: " << *c.problem << "\n";
            return Failed;
        }
        if (c.theorem != c.oracle_theorem)
            ++disagreements;
        if (c.theorem) {
            ++theorems;
            max_height = std::max(max_height, c.height);
        }
        max_nodes = std::max(max_nodes, c.nodes);
    }
    std::cout << formulas.size() << " formulas, " << theorems << " theorems\n";
    if (mode == "cross-check") {
        std::cout << "0 disagreements\n";
        return Ok;
    }
    std::cout << "max proof height " << max_height << "\n";
    std::cout << "max search tree size " << max_nodes << "\n";
    std::cout << "theorem ratio " << (formulas.empty() ? 0.0 : double(theorems) / double(formulas.size())) << "\n";
    std::cout << disagreements << " disagreements\n";
    return disagreements == 0 ? Ok : Failed;
}

int cmd_bound(const std::string& text)
{
    Formula f = parse(text);
    unsigned d = static_cast<unsigned>(f.degree());
    std::cout << "degree " << d << "\n";
    std::cout << "nd " << nd_bound_exact(d) << "\n";
    std::cout << "lmt " << lmt_bound_exact(d) << "\n";
    std::cout << "h " << expansion_bound_exact(d) << "\n";
    return Ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Proof search, checking and counter-models for minimal implicational logic"};
    app.require_subcommand(1);
    Output o;
    auto add_output = [&](CLI::App* c) {
        c->add_option("--format", o.format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));
        c->add_option("--out", o.out, "write to FILE instead of standard output");
    };

    std::string formula, kind, file, from, to, mode = "cross-check";
    std::optional<std::uint64_t> max_depth;
    std::size_t atoms = 2;
    int max_degree = 5;

    auto* prove = app.add_subcommand("prove", "search for a proof or a counter-model");
    prove->add_option("formula", formula)->required();
    prove->add_option("--max-depth", max_depth, "override the depth bound (testing only)");
    add_output(prove);

    auto* check = app.add_subcommand("check", "check a proof or a model");
    check->add_option("kind", kind)->required()->check(CLI::IsMember({"nd", "lj", "lmt", "model"}));
    check->add_option("file", file)->required();
    check->add_option("formula", formula);

    auto* translate = app.add_subcommand("translate", "translate nd->lj, lj->lmt or nd->lmt");
    translate->add_option("from", from)->required()->check(CLI::IsMember({"nd", "lj"}));
    translate->add_option("to", to)->required()->check(CLI::IsMember({"lj", "lmt"}));
    translate->add_option("file", file)->required();
    add_output(translate);

    auto* enumerate = app.add_subcommand("enumerate", "run both engines over every formula up to a degree");
    enumerate->add_option("--atoms", atoms)->check(CLI::PositiveNumber);
    enumerate->add_option("--max-degree", max_degree)->check(CLI::PositiveNumber);
    enumerate->add_option("--mode", mode)->check(CLI::IsMember({"cross-check", "stats"}));

    auto* bound = app.add_subcommand("bound", "print degree and height bounds");
    bound->add_option("formula", formula)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? Ok : Usage;
    }

    try {
        if (*prove)
            return cmd_prove(formula, o, max_depth);
        if (*check)
            return cmd_check(kind, file, formula);
        if (*translate) {
            if (from == to) {
                std::cerr << "unsupported translation " << from << " -> " << to << "\n";
                return Usage;
            }
            return cmd_translate(from, to, file, o);
        }
        if (*enumerate)
            return cmd_enumerate(atoms, max_degree, mode);
        if (*bound)
            return cmd_bound(formula);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return Usage;
    } catch (const SchemaError& e) {
        std::cerr << e.what() << "\n";
        return Usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Failed;
    }
    return Usage;
}

#include "lmt/render.hpp"

#include <sstream>

namespace lmt {

namespace {

std::string join(const Formulas& fs)
{
    std::string out;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i)
            out += ", ";
        out += fs[i].is_atom() ? render(fs[i]) : "(" + render(fs[i]) + ")";
    }
    return out;
}

std::string rule_text(const Rule& r)
{
    std::string n = rule_name(r.kind);
    switch (r.kind) {
    case RuleKind::Focus:
    case RuleKind::ImplLeft: return n + " " + render(r.formula);
    case RuleKind::Restart: return n + " " + r.atom;
    case RuleKind::OpenLeaf: return n + (r.reason == OpenReason::Cap ? " (cap)" : " (saturated)");
    default: return n;
    }
}

std::string latex_formula_text(std::string s)
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.compare(i, 2, "->") == 0) {
            out += "\\to";
            ++i;
        } else if (s[i] == '_') {
            out += "\\_";
        } else if (s[i] == '{' || s[i] == '}') {
            out += std::string("\\") + s[i];
        } else {
            out += s[i];
        }
    }
    return out;
}

template <class Tree, class Label, class Concl>
void latex_rec(const Tree& t, std::ostringstream& os, Label label, Concl concl)
{
    for (const auto& c : t.children)
        latex_rec(c, os, label, concl);
    std::string seq = "$" + latex_formula_text(concl(t)) + "$";
    if (t.children.empty()) {
        os << "\\AxiomC{}\n\\RightLabel{\\scriptsize " << label(t) << "}\n\\UnaryInfC{" << seq << "}\n";
        return;
    }
    os << "\\RightLabel{\\scriptsize " << label(t) << "}\n";
    os << (t.children.size() == 1 ? "\\UnaryInfC{" : "\\BinaryInfC{") << seq << "}\n";
}

template <class Tree, class Line>
void text_rec(const Tree& t, std::ostringstream& os, int depth, Line line)
{
    os << std::string(2 * depth, ' ') << line(t) << "\n";
    for (const auto& c : t.children)
        text_rec(c, os, depth + 1, line);
}

}  // namespace

std::string sequent_text(const Sequent& s)
{
    std::string out = "{" + join(s.focus) + "}";
    for (const auto& b : s.bags)
        out += ", [" + join(b.content) + "]^" + b.label;
    if (!s.delta.empty())
        out += ", " + join(s.delta);
    out += " => [";
    for (std::size_t i = 0; i < s.labels.size(); ++i)
        out += (i ? ", " : "") + s.labels[i];
    return out + "], " + render(s.goal);
}

std::string sequent_text(const LJSequent& s) { return join(s.antecedent) + " => " + render(s.succedent); }

std::string text_tree(const ProofTree& t)
{
    std::ostringstream os;
    text_rec(t, os, 0, [](const ProofTree& n) { return sequent_text(n.node) + "   (" + rule_text(n.rule) + ")"; });
    return os.str();
}

std::string text_tree(const LJProof& p)
{
    std::ostringstream os;
    text_rec(p, os, 0, [](const LJProof& n) { return sequent_text(n.node) + "   (" + lj_rule_name(n.rule) + ")"; });
    return os.str();
}

std::string text_tree(const NDProof& p)
{
    std::ostringstream os;
    text_rec(p, os, 0, [](const NDProof& n) {
        std::string r = nd_rule_name(n.rule);
        if (n.rule != NDRule::ImplElim)
            r += " " + std::to_string(n.discharge);
        return render(n.conclusion) + "   (" + r + ")";
    });
    return os.str();
}

std::string model_text(const KripkeModel& m)
{
    KripkeModel n = m;
    n.normalize();
    std::ostringstream os;
    os << "root " << n.root << "\n";
    for (const auto& w : n.worlds) {
        os << "world " << w << ":";
        if (auto it = n.valuation.find(w); it != n.valuation.end())
            for (const auto& a : it->second)
                os << " " << a;
        os << "\n";
    }
    for (const auto& [a, b] : n.edges)
        os << "edge " << a << " < " << b << "\n";
    return os.str();
}

std::string latex_tree(const ProofTree& t)
{
    std::ostringstream os;
    os << "\\begin{prooftree}\n";
    latex_rec(t, os, [](const ProofTree& n) { return latex_formula_text(rule_text(n.rule)); },
              [](const ProofTree& n) {
                  std::string s = sequent_text(n.node);
                  std::string out;
                  for (std::size_t i = 0; i < s.size(); ++i)
                      out += s.compare(i, 2, "=>") == 0 ? (++i, std::string("\\Rightarrow")) : std::string(1, s[i]);
                  return out;
              });
    os << "\\end{prooftree}\n";
    return os.str();
}

std::string latex_tree(const LJProof& p)
{
    std::ostringstream os;
    os << "\\begin{prooftree}\n";
    latex_rec(p, os, [](const LJProof& n) { return lj_rule_name(n.rule); },
              [](const LJProof& n) { return join(n.node.antecedent) + " \\Rightarrow " + render(n.node.succedent); });
    os << "\\end{prooftree}\n";
    return os.str();
}

std::string latex_tree(const NDProof& p)
{
    std::ostringstream os;
    os << "\\begin{prooftree}\n";
    latex_rec(p, os,
              [](const NDProof& n) {
                  std::string r = nd_rule_name(n.rule);
                  return n.rule == NDRule::ImplElim ? r : r + " " + std::to_string(n.discharge);
              },
              [](const NDProof& n) { return render(n.conclusion); });
    os << "\\end{prooftree}\n";
    return os.str();
}

}  // namespace lmt

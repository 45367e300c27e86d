#include "lmt/json_io.hpp"

#include <fstream>
#include <sstream>

namespace lmt {

namespace {

Json formulas_json(const Formulas& fs)
{
    Json a = Json::array();
    for (const auto& f : fs)
        a.push_back(render(f));
    return a;
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::string text(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_string())
        throw SchemaError(std::string("field \"") + key + "\" is not a string");
    return v.get<std::string>();
}

Formula formula(const std::string& s)
{
    try {
        return parse(s);
    } catch (const ParseError& e) {
        throw SchemaError("bad formula \"" + s + "\": " + e.what());
    }
}

Formulas formulas(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_array())
        throw SchemaError(std::string("field \"") + key + "\" is not an array");
    Formulas out;
    for (const auto& e : v) {
        if (!e.is_string())
            throw SchemaError(std::string("non-string formula in \"") + key + "\"");
        out.push_back(formula(e.get<std::string>()));
    }
    return out;
}

const Json& children(const Json& j)
{
    static const Json none = Json::array();
    if (!j.contains("children"))
        return none;
    const Json& c = j.at("children");
    if (!c.is_array())
        throw SchemaError("field \"children\" is not an array");
    return c;
}

}  // namespace

Json to_json(const LJProof& p)
{
    Json j;
    j["sequent"] = {{"antecedent", formulas_json(p.node.antecedent)}, {"succedent", render(p.node.succedent)}};
    j["rule"] = lj_rule_name(p.rule);
    j["children"] = Json::array();
    for (const auto& c : p.children)
        j["children"].push_back(to_json(c));
    return j;
}

LJProof lj_from_json(const Json& j)
{
    LJProof p;
    const Json& s = field(j, "sequent");
    p.node.antecedent = formulas(s, "antecedent");
    p.node.succedent = formula(text(s, "succedent"));
    auto r = lj_rule_from_name(text(j, "rule"));
    if (!r)
        throw SchemaError("unknown LJ rule \"" + text(j, "rule") + "\"");
    p.rule = *r;
    for (const auto& c : children(j))
        p.children.push_back(lj_from_json(c));
    return p;
}

Json to_json(const NDProof& p)
{
    Json j;
    j["conclusion"] = render(p.conclusion);
    j["rule"] = nd_rule_name(p.rule);
    if (p.rule != NDRule::ImplElim)
        j["discharge"] = p.discharge;
    j["children"] = Json::array();
    for (const auto& c : p.children)
        j["children"].push_back(to_json(c));
    return j;
}

NDProof nd_from_json(const Json& j)
{
    NDProof p;
    p.conclusion = formula(text(j, "conclusion"));
    auto r = nd_rule_from_name(text(j, "rule"));
    if (!r)
        throw SchemaError("unknown ND rule \"" + text(j, "rule") + "\"");
    p.rule = *r;
    if (j.contains("discharge")) {
        if (!j.at("discharge").is_number_integer())
            throw SchemaError("field \"discharge\" is not an integer");
        p.discharge = j.at("discharge").get<int>();
    }
    for (const auto& c : children(j))
        p.children.push_back(nd_from_json(c));
    return p;
}

Json to_json(const Sequent& s)
{
    Json j;
    j["focus"] = formulas_json(s.focus);
    j["bags"] = Json::array();
    for (const auto& b : s.bags)
        j["bags"].push_back({{"label", b.label}, {"content", formulas_json(b.content)}});
    j["delta"] = formulas_json(s.delta);
    j["labels"] = s.labels;
    j["goal"] = render(s.goal);
    return j;
}

Sequent sequent_from_json(const Json& j)
{
    Sequent s;
    s.focus = formulas(j, "focus");
    const Json& bags = field(j, "bags");
    if (!bags.is_array())
        throw SchemaError("field \"bags\" is not an array");
    for (const auto& b : bags)
        s.bags.push_back({text(b, "label"), formulas(b, "content")});
    s.delta = formulas(j, "delta");
    const Json& labels = field(j, "labels");
    if (!labels.is_array())
        throw SchemaError("field \"labels\" is not an array");
    for (const auto& l : labels) {
        if (!l.is_string())
            throw SchemaError("non-string label");
        s.labels.push_back(l.get<std::string>());
    }
    s.goal = formula(text(j, "goal"));
    return s;
}

Json to_json(const ProofTree& t)
{
    Json j;
    j["sequent"] = to_json(t.node);
    j["rule"] = rule_name(t.rule.kind);
    switch (t.rule.kind) {
    case RuleKind::Focus:
    case RuleKind::ImplLeft: j["param"] = render(t.rule.formula); break;
    case RuleKind::Restart:
        j["param"] = t.rule.atom;
        j["index"] = t.rule.index;
        break;
    case RuleKind::OpenLeaf: j["param"] = t.rule.reason == OpenReason::Cap ? "cap" : "saturated"; break;
    default: break;
    }
    j["children"] = Json::array();
    for (const auto& c : t.children)
        j["children"].push_back(to_json(c));
    return j;
}

ProofTree lmt_from_json(const Json& j)
{
    ProofTree t;
    t.node = sequent_from_json(field(j, "sequent"));
    auto k = rule_from_name(text(j, "rule"));
    if (!k)
        throw SchemaError("unknown LMT rule \"" + text(j, "rule") + "\"");
    t.rule.kind = *k;
    switch (*k) {
    case RuleKind::Focus:
    case RuleKind::ImplLeft: t.rule.formula = formula(text(j, "param")); break;
    case RuleKind::Restart: {
        t.rule.atom = text(j, "param");
        const Json& i = field(j, "index");
        if (!i.is_number_unsigned())
            throw SchemaError("field \"index\" is not a non-negative integer");
        t.rule.index = i.get<std::size_t>();
        break;
    }
    case RuleKind::OpenLeaf:
        t.rule.reason = j.contains("param") && j.at("param") == "cap" ? OpenReason::Cap : OpenReason::Saturated;
        break;
    default: break;
    }
    for (const auto& c : children(j))
        t.children.push_back(lmt_from_json(c));
    return t;
}

Json to_json(const KripkeModel& m)
{
    KripkeModel n = m;
    n.normalize();
    Json j;
    j["worlds"] = n.worlds;
    j["edges"] = Json::array();
    for (const auto& [a, b] : n.edges)
        j["edges"].push_back({a, b});
    j["valuation"] = Json::object();
    for (const auto& w : n.worlds) {
        auto it = n.valuation.find(w);
        Json atoms = Json::array();
        if (it != n.valuation.end())
            for (const auto& a : it->second)
                atoms.push_back(a);
        j["valuation"][w] = atoms;
    }
    j["root"] = n.root;
    return j;
}

KripkeModel model_from_json(const Json& j)
{
    KripkeModel m;
    const Json& ws = field(j, "worlds");
    if (!ws.is_array())
        throw SchemaError("field \"worlds\" is not an array");
    for (const auto& w : ws) {
        if (!w.is_string())
            throw SchemaError("non-string world");
        m.worlds.push_back(w.get<std::string>());
    }
    const Json& es = field(j, "edges");
    if (!es.is_array())
        throw SchemaError("field \"edges\" is not an array");
    for (const auto& e : es) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw SchemaError("edge is not a pair of world names");
        m.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    const Json& val = field(j, "valuation");
    if (!val.is_object())
        throw SchemaError("field \"valuation\" is not an object");
    for (const auto& [w, atoms] : val.items()) {
        if (!atoms.is_array())
            throw SchemaError("valuation of " + w + " is not an array");
        auto& set = m.valuation[w];
        for (const auto& a : atoms) {
            if (!a.is_string())
                throw SchemaError("non-string atom in valuation of " + w);
            set.insert(a.get<std::string>());
        }
    }
    m.root = text(j, "root");
    return m;
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw SchemaError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lmt

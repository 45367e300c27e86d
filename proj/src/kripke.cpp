#include "lmt/kripke.hpp"

#include <algorithm>

namespace lmt {

void KripkeModel::normalize()
{
    std::sort(worlds.begin(), worlds.end());
    worlds.erase(std::unique(worlds.begin(), worlds.end()), worlds.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

namespace {

struct Closure {
    std::map<std::string, std::size_t> index;
    std::vector<std::vector<bool>> reach;
};

std::optional<Closure> closure(const KripkeModel& m, std::string& err)
{
    Closure c;
    for (std::size_t i = 0; i < m.worlds.size(); ++i)
        if (!c.index.emplace(m.worlds[i], i).second) {
            err = "duplicate world " + m.worlds[i];
            return std::nullopt;
        }
    std::size_t n = m.worlds.size();
    c.reach.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        c.reach[i][i] = true;
    for (const auto& [a, b] : m.edges) {
        auto ia = c.index.find(a), ib = c.index.find(b);
        if (ia == c.index.end() || ib == c.index.end()) {
            err = "edge (" + a + ", " + b + ") names an unknown world";
            return std::nullopt;
        }
        c.reach[ia->second][ib->second] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (c.reach[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (c.reach[k][j])
                        c.reach[i][j] = true;
    return c;
}

}  // namespace

std::optional<std::string> validate_model(const KripkeModel& m)
{
    std::string err;
    auto c = closure(m, err);
    if (!c)
        return err;
    for (const auto& [w, atoms] : m.valuation)
        if (!c->index.contains(w))
            return "valuation names unknown world " + w;
    auto r = c->index.find(m.root);
    if (r == c->index.end())
        return "root " + m.root + " is not a world";
    std::size_t n = m.worlds.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (c->reach[i][j] && c->reach[j][i])
                return "antisymmetry violated between " + m.worlds[i] + " and " + m.worlds[j];
    auto val = [&](const std::string& w) {
        auto it = m.valuation.find(w);
        return it == m.valuation.end() ? std::set<std::string>{} : it->second;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !c->reach[i][j])
                continue;
            auto vi = val(m.worlds[i]), vj = val(m.worlds[j]);
            if (!std::includes(vj.begin(), vj.end(), vi.begin(), vi.end()))
                return "monotonicity violated between " + m.worlds[i] + " and " + m.worlds[j];
        }
    for (std::size_t i = 0; i < n; ++i)
        if (!c->reach[r->second][i])
            return "world " + m.worlds[i] + " is not reachable from the root";
    return std::nullopt;
}

Forcing::Forcing(const KripkeModel& m) : m_(m)
{
    std::string err;
    auto c = closure(m, err);
    if (!c)
        throw std::invalid_argument(err);
    index_ = c->index;
    std::size_t n = m.worlds.size();
    up_.resize(n);
    up_names_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (c->reach[i][j]) {
                up_[i].push_back(j);
                up_names_[i].push_back(m.worlds[j]);
            }
}

std::size_t Forcing::id(const std::string& w) const
{
    auto it = index_.find(w);
    if (it == index_.end())
        throw UnknownWorld(w);
    return it->second;
}

const std::vector<std::string>& Forcing::above(const std::string& w) const { return up_names_[id(w)]; }

bool Forcing::leq(const std::string& a, const std::string& b) const
{
    const auto& u = up_[id(a)];
    return std::find(u.begin(), u.end(), id(b)) != u.end();
}

bool Forcing::eval(std::size_t w, const Formula& f) const
{
    if (f.is_atom()) {
        auto it = m_.valuation.find(m_.worlds[w]);
        return it != m_.valuation.end() && it->second.contains(f.name());
    }
    auto key = std::make_pair(w, f);
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;
    bool r = std::all_of(up_[w].begin(), up_[w].end(),
                         [&](std::size_t j) { return !eval(j, f.lhs()) || eval(j, f.rhs()); });
    memo_.emplace(key, r);
    return r;
}

bool Forcing::forces(const std::string& w, const Formula& f) const { return eval(id(w), f); }

bool Forcing::forces_all(const std::string& w, const Formulas& fs) const
{
    std::size_t i = id(w);
    return std::all_of(fs.begin(), fs.end(), [&](const Formula& f) { return eval(i, f); });
}

bool forces(const KripkeModel& m, const std::string& w, const Formula& f) { return Forcing(m).forces(w, f); }

bool validates(const KripkeModel& m, const Formula& f)
{
    Forcing fr(m);
    return std::all_of(m.worlds.begin(), m.worlds.end(), [&](const std::string& w) { return fr.forces(w, f); });
}

bool sequent_invalid_at(const KripkeModel& m, const std::string& w, const Sequent& s)
{
    Forcing fr(m);
    auto fails = [&](const Formulas& set, const Formula& goal) {
        const auto& up = fr.above(w);
        return std::any_of(up.begin(), up.end(),
                           [&](const std::string& v) { return fr.forces_all(v, set) && !fr.forces(v, goal); });
    };
    for (const auto& b : s.bags)
        if (!fails(b.content, Formula::atom(b.label)))
            return false;
    return fails(s.delta, s.goal);
}

}  // namespace lmt

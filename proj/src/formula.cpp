#include "lmt/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <unordered_set>

namespace lmt {

struct Formula::Node {
    std::string name;
    Formula lhs;
    Formula rhs;
    int degree = 1;
    std::size_t hash = 0;
    bool atom = true;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v)
{
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula::Formula() = default;

Formula::Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

Formula Formula::atom(std::string name)
{
    auto n = std::make_shared<Node>();
    n->hash = std::hash<std::string>{}(name);
    n->name = std::move(name);
    return Formula(std::move(n));
}

Formula Formula::implies(Formula antecedent, Formula consequent)
{
    auto n = std::make_shared<Node>();
    n->atom = false;
    n->degree = antecedent.degree() + consequent.degree() + 1;
    n->hash = mix(mix(0x51ed27, antecedent.hash()), consequent.hash());
    n->lhs = std::move(antecedent);
    n->rhs = std::move(consequent);
    return Formula(std::move(n));
}

bool Formula::is_atom() const { return n_->atom; }
const std::string& Formula::name() const { return n_->name; }
const Formula& Formula::lhs() const { return n_->lhs; }
const Formula& Formula::rhs() const { return n_->rhs; }
int Formula::degree() const { return n_ ? n_->degree : 0; }
std::size_t Formula::hash() const { return n_ ? n_->hash : 0; }

bool operator==(const Formula& a, const Formula& b)
{
    if (a.n_ == b.n_)
        return true;
    if (!a.n_ || !b.n_)
        return false;
    if (a.n_->hash != b.n_->hash || a.n_->degree != b.n_->degree || a.n_->atom != b.n_->atom)
        return false;
    if (a.n_->atom)
        return a.n_->name == b.n_->name;
    return a.n_->lhs == b.n_->lhs && a.n_->rhs == b.n_->rhs;
}

// Atoms before implications, atoms by name, implications lexicographically.
std::strong_ordering operator<=>(const Formula& a, const Formula& b)
{
    if (a.n_ == b.n_)
        return std::strong_ordering::equal;
    if (!a.n_ || !b.n_)
        return a.n_ ? std::strong_ordering::greater : std::strong_ordering::less;
    if (a.n_->atom != b.n_->atom)
        return a.n_->atom ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.n_->atom)
        return a.n_->name.compare(b.n_->name) <=> 0;
    if (auto c = a.n_->lhs <=> b.n_->lhs; c != 0)
        return c;
    return a.n_->rhs <=> b.n_->rhs;
}

ParseError::ParseError(std::size_t pos, const std::string& msg)
    : std::runtime_error("syntax error at " + std::to_string(pos) + ": " + msg), pos_(pos)
{
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Formula run()
    {
        skip();
        if (i_ == s_.size())
            throw ParseError(i_, "empty input");
        Formula f = impl();
        skip();
        if (i_ != s_.size())
            throw ParseError(i_, std::string("unexpected '") + s_[i_] + "'");
        return f;
    }

private:
    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }

    bool arrow()
    {
        skip();
        if (s_.substr(i_, 2) == "->") {
            i_ += 2;
            return true;
        }
        return false;
    }

    Formula impl()
    {
        Formula a = unit();
        if (arrow())
            return Formula::implies(a, impl());
        return a;
    }

    Formula unit()
    {
        skip();
        if (i_ == s_.size())
            throw ParseError(i_, "unexpected end of input");
        char c = s_[i_];
        if (c == '(') {
            std::size_t open = i_++;
            Formula f = impl();
            skip();
            if (i_ == s_.size() || s_[i_] != ')')
                throw ParseError(i_ == s_.size() ? open : i_, "unbalanced parenthesis");
            ++i_;
            return f;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
                ++i_;
            return Formula::atom(std::string(s_.substr(start, i_ - start)));
        }
        throw ParseError(i_, std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(text).run(); }

std::string render(const Formula& f)
{
    if (f.is_atom())
        return f.name();
    std::string left = render(f.lhs());
    if (!f.lhs().is_atom())
        left = "(" + left + ")";
    return left + " -> " + render(f.rhs());
}

int degree(const Formula& f)
{
    return f.is_atom() ? 1 : degree(f.lhs()) + degree(f.rhs()) + 1;
}

Formulas subformulas(const Formula& f)
{
    Formulas out;
    std::unordered_set<Formula> seen;
    std::vector<Formula> todo{f};
    while (!todo.empty()) {
        Formula g = todo.back();
        todo.pop_back();
        if (!seen.insert(g).second)
            continue;
        out.push_back(g);
        if (!g.is_atom()) {
            todo.push_back(g.rhs());
            todo.push_back(g.lhs());
        }
    }
    return out;
}

Formula chain(const Formulas& parts)
{
    if (parts.empty())
        throw std::invalid_argument("chain of no formulas");
    Formula f = parts.back();
    for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it)
        f = Formula::implies(*it, f);
    return f;
}

std::pair<Formulas, Formula> premises_and_head(const Formula& f)
{
    Formulas ps;
    Formula g = f;
    while (!g.is_atom()) {
        ps.push_back(g.lhs());
        g = g.rhs();
    }
    return {ps, g};
}

bool contains(const Formulas& bag, const Formula& f)
{
    return std::find(bag.begin(), bag.end(), f) != bag.end();
}

Formulas as_set(const Formulas& bag)
{
    Formulas s = bag;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool same_set(const Formulas& a, const Formulas& b) { return as_set(a) == as_set(b); }

bool subset_of(const Formulas& a, const Formulas& b)
{
    return std::all_of(a.begin(), a.end(), [&](const Formula& f) { return contains(b, f); });
}

bool same_multiset(const Formulas& a, const Formulas& b)
{
    if (a.size() != b.size())
        return false;
    Formulas x = a, y = b;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

std::vector<Formula> enumerate_exact(int degree, const std::vector<std::string>& atoms)
{
    static std::map<std::pair<int, std::vector<std::string>>, std::vector<Formula>> memo;
    if (degree < 1 || degree % 2 == 0)
        return {};
    auto key = std::make_pair(degree, atoms);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    std::vector<Formula> out;
    if (degree == 1) {
        for (const auto& a : atoms)
            out.push_back(Formula::atom(a));
    } else {
        for (int dl = 1; dl < degree - 1; dl += 2) {
            auto ls = enumerate_exact(dl, atoms);
            auto rs = enumerate_exact(degree - 1 - dl, atoms);
            for (const auto& l : ls)
                for (const auto& r : rs)
                    out.push_back(Formula::implies(l, r));
        }
    }
    memo.emplace(key, out);
    return out;
}

std::vector<Formula> enumerate_upto(int max_degree, const std::vector<std::string>& atoms)
{
    std::vector<Formula> out;
    for (int d = 1; d <= max_degree; d += 2) {
        auto xs = enumerate_exact(d, atoms);
        out.insert(out.end(), xs.begin(), xs.end());
    }
    return out;
}

std::uint64_t count_exact(int degree, std::size_t atoms)
{
    if (degree < 1 || degree % 2 == 0)
        return 0;
    if (degree == 1)
        return atoms;
    std::uint64_t n = 0;
    for (int dl = 1; dl < degree - 1; dl += 2)
        n += count_exact(dl, atoms) * count_exact(degree - 1 - dl, atoms);
    return n;
}

Formula unrank(int degree, std::uint64_t idx, const std::vector<std::string>& atoms)
{
    if (idx >= count_exact(degree, atoms.size()))
        throw std::out_of_range("unrank index past the enumeration");
    if (degree == 1)
        return Formula::atom(atoms[idx]);
    for (int dl = 1; dl < degree - 1; dl += 2) {
        std::uint64_t nl = count_exact(dl, atoms.size());
        std::uint64_t nr = count_exact(degree - 1 - dl, atoms.size());
        if (idx < nl * nr)
            return Formula::implies(unrank(dl, idx / nr, atoms), unrank(degree - 1 - dl, idx % nr, atoms));
        idx -= nl * nr;
    }
    throw std::logic_error("unrank fell through");
}

std::vector<std::string> default_atoms(std::size_t n)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (i < 26)
            out.push_back(std::string(1, static_cast<char>('A' + i)));
        else
            out.push_back("P" + std::to_string(i));
    }
    return out;
}

}  // namespace lmt

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lmt {

// Immutable implicational formula. Copies share structure; comparison is structural.
class Formula {
public:
    Formula();

    static Formula atom(std::string name);
    static Formula implies(Formula antecedent, Formula consequent);

    bool is_atom() const;
    const std::string& name() const;
    const Formula& lhs() const;
    const Formula& rhs() const;

    int degree() const;
    std::size_t hash() const;

    friend bool operator==(const Formula& a, const Formula& b);
    friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> n);
    std::shared_ptr<const Node> n_;
};

using Formulas = std::vector<Formula>;

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, const std::string& msg);
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

Formula parse(std::string_view text);
std::string render(const Formula& f);

int degree(const Formula& f);
Formulas subformulas(const Formula& f);

// Right-nested implication a1 -> a2 -> ... -> last.
Formula chain(const Formulas& parts);

// Premises and head atom: a1 -> ... -> ak -> h gives ({a1..ak}, h).
std::pair<Formulas, Formula> premises_and_head(const Formula& f);

bool contains(const Formulas& bag, const Formula& f);
Formulas as_set(const Formulas& bag);
bool same_set(const Formulas& a, const Formulas& b);
bool subset_of(const Formulas& a, const Formulas& b);
bool same_multiset(const Formulas& a, const Formulas& b);

// Formulas of exactly the given degree over the atom names, in a fixed order.
std::vector<Formula> enumerate_exact(int degree, const std::vector<std::string>& atoms);
std::vector<Formula> enumerate_upto(int max_degree, const std::vector<std::string>& atoms);

// Number of formulas of exactly the given degree, and the idx-th of them in enumerate_exact order.
std::uint64_t count_exact(int degree, std::size_t atoms);
Formula unrank(int degree, std::uint64_t idx, const std::vector<std::string>& atoms);

std::vector<std::string> default_atoms(std::size_t n);

}  // namespace lmt

template <>
struct std::hash<lmt::Formula> {
    std::size_t operator()(const lmt::Formula& f) const noexcept { return f.hash(); }
};

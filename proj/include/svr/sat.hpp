#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace svr::sat {

/// DIMACS-style literal: +v or -v for variable v >= 1.
using Literal = int;
using Clause3 = std::array<Literal, 3>;

/// Three-literal CNF. Duplicate literals inside a clause are kept.
struct Cnf3Instance {
    int nVars = 0;
    std::vector<Clause3> clauses;

    bool operator==(const Cnf3Instance&) const = default;
};

/// Monotone not-all-equal 3SAT: positive literals only.
struct NaeInstance {
    int nVars = 0;
    std::vector<std::array<int, 3>> clauses;

    bool operator==(const NaeInstance&) const = default;
};

/// Total truth assignment; variable v is values[v-1].
struct Assignment {
    std::vector<bool> values;

    Assignment() = default;
    explicit Assignment(int nVars) : values(static_cast<std::size_t>(nVars), false) {}

    int size() const { return static_cast<int>(values.size()); }
    bool operator[](int var) const { return values.at(static_cast<std::size_t>(var - 1)); }
    void set(int var, bool value) { values.at(static_cast<std::size_t>(var - 1)) = value; }
    bool literal(Literal l) const { return l > 0 ? (*this)[l] : !(*this)[-l]; }

    /// "0101" -> v2 = v4 = T. Throws std::invalid_argument on other characters.
    static Assignment from_bits(std::string_view bits);
    std::string bits() const;

    bool operator==(const Assignment&) const = default;
};

class DimacsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Cnf3Instance parse_dimacs(std::string_view text);
std::string to_dimacs(const Cnf3Instance& f);

/// Throws DimacsError if a literal is negative.
NaeInstance as_nae(const Cnf3Instance& f);
Cnf3Instance as_cnf(const NaeInstance& f);

/// Index of the first clause the assignment violates, if any.
std::optional<std::size_t> first_unsatisfied(const Cnf3Instance& f, const Assignment& a);
std::optional<std::size_t> first_nae_violation(const NaeInstance& f, const Assignment& a);

inline bool satisfies(const Cnf3Instance& f, const Assignment& a) { return !first_unsatisfied(f, a); }
inline bool nae_satisfies(const NaeInstance& f, const Assignment& a) { return !first_nae_violation(f, a); }

/// Variables that occur in the formula, ascending.
std::vector<int> occurring_variables(const Cnf3Instance& f);

}  // namespace svr::sat

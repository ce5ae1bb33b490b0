#include "svr/sat.hpp"

#include <charconv>
#include <cstdlib>
#include <set>
#include <sstream>

#include <fmt/format.h>

namespace svr::sat {

Assignment Assignment::from_bits(std::string_view bits) {
    Assignment a(static_cast<int>(bits.size()));
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1')
            throw std::invalid_argument(fmt::format("assignment bit {} is '{}', expected 0 or 1", i + 1, bits[i]));
        a.values[i] = bits[i] == '1';
    }
    return a;
}

std::string Assignment::bits() const {
    std::string s;
    s.reserve(values.size());
    for (bool b : values) s.push_back(b ? '1' : '0');
    return s;
}

namespace {

long parse_int(std::string_view tok, int line) {
    long v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw DimacsError(fmt::format("line {}: '{}' is not an integer", line, tok));
    return v;
}

}  // namespace

Cnf3Instance parse_dimacs(std::string_view text) {
    Cnf3Instance f;
    long declaredClauses = -1;
    std::vector<Literal> current;
    std::istringstream in{std::string(text)};
    std::string lineText;
    int line = 0;
    while (std::getline(in, lineText)) {
        ++line;
        std::istringstream ls(lineText);
        std::string tok;
        if (!(ls >> tok) || tok == "c") continue;
        if (tok == "%") break;
        if (tok == "p") {
            std::string fmtName, v, c, extra;
            if (declaredClauses >= 0) throw DimacsError(fmt::format("line {}: duplicate header", line));
            if (!(ls >> fmtName >> v >> c) || fmtName != "cnf" || (ls >> extra))
                throw DimacsError(fmt::format("line {}: malformed header, expected 'p cnf <vars> <clauses>'", line));
            const long nv = parse_int(v, line), nc = parse_int(c, line);
            if (nv < 0 || nc < 0) throw DimacsError(fmt::format("line {}: negative count in header", line));
            f.nVars = static_cast<int>(nv);
            declaredClauses = nc;
            continue;
        }
        if (declaredClauses < 0) throw DimacsError(fmt::format("line {}: clause before 'p cnf' header", line));
        do {
            const long lit = parse_int(tok, line);
            if (lit == 0) {
                if (current.size() != 3)
                    throw DimacsError(fmt::format("line {}: clause {} has {} literals, expected 3", line,
                                                  f.clauses.size() + 1, current.size()));
                f.clauses.push_back({current[0], current[1], current[2]});
                current.clear();
                continue;
            }
            if (std::labs(lit) > f.nVars)
                throw DimacsError(fmt::format("line {}: literal {} out of range 1..{}", line, lit, f.nVars));
            current.push_back(static_cast<Literal>(lit));
        } while (ls >> tok);
    }
    if (declaredClauses < 0) throw DimacsError("missing 'p cnf' header");
    if (!current.empty()) throw DimacsError("last clause is not terminated by 0");
    if (static_cast<long>(f.clauses.size()) != declaredClauses)
        throw DimacsError(fmt::format("header declares {} clauses, found {}", declaredClauses, f.clauses.size()));
    return f;
}

std::string to_dimacs(const Cnf3Instance& f) {
    std::string out = fmt::format("p cnf {} {}\n", f.nVars, f.clauses.size());
    for (const Clause3& c : f.clauses) out += fmt::format("{} {} {} 0\n", c[0], c[1], c[2]);
    return out;
}

NaeInstance as_nae(const Cnf3Instance& f) {
    NaeInstance g{f.nVars, {}};
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        const Clause3& c = f.clauses[i];
        for (Literal l : c)
            if (l < 0) throw DimacsError(fmt::format("clause {} has negative literal {}; NAE input must be monotone", i + 1, l));
        g.clauses.push_back({c[0], c[1], c[2]});
    }
    return g;
}

Cnf3Instance as_cnf(const NaeInstance& f) {
    Cnf3Instance g{f.nVars, {}};
    for (const auto& c : f.clauses) g.clauses.push_back({c[0], c[1], c[2]});
    return g;
}

std::optional<std::size_t> first_unsatisfied(const Cnf3Instance& f, const Assignment& a) {
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        const Clause3& c = f.clauses[i];
        if (!a.literal(c[0]) && !a.literal(c[1]) && !a.literal(c[2])) return i;
    }
    return std::nullopt;
}

std::optional<std::size_t> first_nae_violation(const NaeInstance& f, const Assignment& a) {
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        const auto& c = f.clauses[i];
        if (a[c[0]] == a[c[1]] && a[c[1]] == a[c[2]]) return i;
    }
    return std::nullopt;
}

std::vector<int> occurring_variables(const Cnf3Instance& f) {
    std::set<int> vars;
    for (const Clause3& c : f.clauses)
        for (Literal l : c) vars.insert(std::abs(l));
    return {vars.begin(), vars.end()};
}

}  // namespace svr::sat

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "derham/polynomial.hpp"

namespace derham {

/// Ordered, duplicate-free list of variable names. Declaration order is the
/// variable index order and therefore the monomial-order precedence.
class VarTable {
public:
    VarTable() = default;
    explicit VarTable(std::vector<std::string> names);

    /// Splits "x,y,z" (whitespace around names is ignored).
    static VarTable from_list(std::string_view comma_separated);
    static bool is_identifier(std::string_view name);

    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& operator[](std::size_t i) const { return names_.at(i); }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const VarTable&, const VarTable&) = default;

private:
    std::vector<std::string> names_;
};

struct ParsedPolynomial {
    Polynomial poly;
    VarTable vars;
};

/// Parses with an explicit variable table; names outside it raise UnknownVariable.
///
///   expr     := term (('+'|'-') term)*
///   term     := ('-')? factor ('*' factor)*
///   factor   := base ('^' nat)?
///   base     := rational | var | '(' expr ')'
///   rational := int ('/' nat_nonzero)?
Polynomial parse(std::string_view text, const VarTable& vars);

/// Parses with variables collected in first-occurrence order.
ParsedPolynomial parse_infer(std::string_view text);

/// Optional sign, integer, optional "/denominator"; surrounding whitespace is not allowed.
Rational parse_rational(std::string_view text);

/// "a" or "a/b" in lowest terms.
std::string format_rational(const Rational& q);

/// Deterministic text form: terms in descending degrevlex order, explicit '*',
/// coefficients as integers or a/b. parse(print(p, v), v) == p.
std::string print(const Polynomial& p, const VarTable& vars);

}  // namespace derham

#include "derham/parse.hpp"

#include <cctype>
#include <sstream>

namespace derham {

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!is_identifier(names_[i])) throw Error("invalid variable name '" + names_[i] + "'");
        for (std::size_t j = 0; j < i; ++j)
            if (names_[j] == names_[i]) throw Error("duplicate variable name '" + names_[i] + "'");
    }
}

VarTable VarTable::from_list(std::string_view comma_separated) {
    std::vector<std::string> names;
    std::string current;
    auto flush = [&] {
        const auto first = current.find_first_not_of(" \t");
        const auto last = current.find_last_not_of(" \t");
        names.push_back(first == std::string::npos ? std::string() : current.substr(first, last - first + 1));
        current.clear();
    };
    for (char ch : comma_separated) {
        if (ch == ',') flush();
        else current.push_back(ch);
    }
    flush();
    return VarTable(std::move(names));
}

bool VarTable::is_identifier(std::string_view name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
    for (char ch : name)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
    return true;
}

std::optional<std::size_t> VarTable::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    int line = 1;
    int column = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t count) {
        for (std::size_t k = 0; k < count; ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
    };
    while (i < text.size()) {
        const char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            advance(1);
            continue;
        }
        const int l = line;
        const int c = column;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Tok::Int, std::string(text.substr(i, j - i)), l, c});
            advance(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), l, c});
            advance(j - i);
            continue;
        }
        Tok kind;
        switch (ch) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '^': kind = Tok::Caret; break;
            case '/': kind = Tok::Slash; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + ch + "'", l, c);
        }
        out.push_back({kind, std::string(1, ch), l, c});
        advance(1);
    }
    out.push_back({Tok::End, "", line, column});
    return out;
}

class Parser {
public:
    Parser(const std::vector<Token>& tokens, const VarTable& vars) : toks_(tokens), vars_(vars) {}

    Polynomial parse_all() {
        Polynomial p = expr();
        if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
        return p;
    }

private:
    const Token& peek() const { return toks_[pos_]; }

    bool accept(Tok kind) {
        if (peek().kind != kind) return false;
        ++pos_;
        return true;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, peek().line, peek().column); }

    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            if (accept(Tok::Plus)) acc += term();
            else if (accept(Tok::Minus)) acc -= term();
            else return acc;
        }
    }

    Polynomial term() {
        const bool negate = accept(Tok::Minus);
        Polynomial acc = factor();
        while (accept(Tok::Star)) acc *= factor();
        return negate ? -acc : acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (!accept(Tok::Caret)) return b;
        if (peek().kind != Tok::Int) fail("exponent must be a non-negative integer literal");
        const Token& tok = peek();
        if (tok.text.size() > 6) fail("exponent too large");
        const unsigned e = static_cast<unsigned>(std::stoul(tok.text));
        ++pos_;
        return b.pow(e);
    }

    Polynomial base() {
        const Token& tok = peek();
        const std::size_t n = vars_.size();
        switch (tok.kind) {
            case Tok::Int: {
                Rational value(Integer(tok.text), Integer(1));
                ++pos_;
                if (accept(Tok::Slash)) {
                    if (peek().kind != Tok::Int) fail("denominator must be an integer literal");
                    const Integer den(peek().text);
                    if (den == 0) fail("zero denominator");
                    ++pos_;
                    value = Rational(value.get_num(), den);
                    value.canonicalize();
                }
                return Polynomial::constant(n, value);
            }
            case Tok::Ident: {
                const auto idx = vars_.index_of(tok.text);
                if (!idx) throw UnknownVariable("unknown variable '" + tok.text + "'", tok.line, tok.column);
                ++pos_;
                return Polynomial::variable(n, *idx);
            }
            case Tok::LParen: {
                ++pos_;
                Polynomial inner = expr();
                if (!accept(Tok::RParen)) fail("expected ')'");
                return inner;
            }
            case Tok::End:
                fail("unexpected end of input");
            default:
                fail("unexpected '" + tok.text + "'");
        }
    }

    const std::vector<Token>& toks_;
    const VarTable& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse(std::string_view text, const VarTable& vars) {
    if (vars.size() == 0) throw Error("variable table is empty");
    const auto tokens = tokenize(text);
    return Parser(tokens, vars).parse_all();
}

ParsedPolynomial parse_infer(std::string_view text) {
    const auto tokens = tokenize(text);
    std::vector<std::string> names;
    for (const auto& t : tokens) {
        if (t.kind != Tok::Ident) continue;
        bool seen = false;
        for (const auto& n : names) seen = seen || n == t.text;
        if (!seen) names.push_back(t.text);
    }
    // A constant still needs an ambient ring.
    if (names.empty()) names.push_back("x");
    VarTable vars(std::move(names));
    Polynomial p = Parser(tokens, vars).parse_all();
    return {std::move(p), std::move(vars)};
}

Rational parse_rational(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        return j;
    };
    const std::size_t num_end = digits(i);
    if (num_end == i) throw ParseError("expected a rational literal", 1, static_cast<int>(i) + 1);
    Rational value(Integer(std::string(text.substr(i, num_end - i))), Integer(1));
    i = num_end;
    if (i < text.size() && text[i] == '/') {
        const std::size_t den_end = digits(i + 1);
        if (den_end == i + 1) throw ParseError("expected a denominator", 1, static_cast<int>(i) + 2);
        const Integer den(std::string(text.substr(i + 1, den_end - i - 1)));
        if (den == 0) throw ParseError("zero denominator", 1, static_cast<int>(i) + 2);
        value = Rational(value.get_num(), den);
        value.canonicalize();
        i = den_end;
    }
    if (i != text.size()) throw ParseError("trailing characters after rational literal", 1, static_cast<int>(i) + 1);
    return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string print(const Polynomial& p, const VarTable& vars) {
    if (p.arity() != vars.size()) throw ArityMismatch("variable table does not match polynomial arity");
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = sgn(c) < 0;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const Rational mag = abs(c);
        bool wrote = false;
        if (m.is_one() || mag != 1) {
            os << format_rational(mag);
            wrote = true;
        }
        for (std::size_t i = 0; i < m.arity(); ++i) {
            if (m[i] == 0) continue;
            if (wrote) os << '*';
            os << vars[i];
            if (m[i] > 1) os << '^' << m[i];
            wrote = true;
        }
    }
    return os.str();
}

}  // namespace derham

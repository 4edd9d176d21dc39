#include <cctype>

#include "ggraph/group.hpp"

namespace ggraph {

namespace {

struct Token {
    enum Kind { Word, Number, Str, LParen, RParen, Comma, End } kind;
    std::string text;
    long num = 0;
    std::size_t off = 0;
};

struct Lexer {
    const std::string& s;
    std::size_t i = 0;

    Token next() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t off = i;
        if (i >= s.size()) return {Token::End, "", 0, off};
        char c = s[i];
        if (c == '(') { ++i; return {Token::LParen, "(", 0, off}; }
        if (c == ')') { ++i; return {Token::RParen, ")", 0, off}; }
        if (c == ',') { ++i; return {Token::Comma, ",", 0, off}; }
        if (c == '"') {
            ++i;
            std::string v;
            while (i < s.size() && s[i] != '"') v += s[i++];
            if (i >= s.size()) throw SyntaxError("unterminated string", off);
            ++i;
            return {Token::Str, v, 0, off};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                v = v * 10 + (s[i] - '0');
                if (v > 1000000000000L) throw SyntaxError("number too large", off);
                ++i;
            }
            return {Token::Number, "", v, off};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string v;
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                v += s[i++];
            return {Token::Word, v, 0, off};
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", off);
    }
};

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
    Lexer lex{text};
    GroupSpec spec;
    Token t = lex.next();
    while (true) {
        if (t.kind != Token::Word || t.text == "x")
            throw SyntaxError("expected an atom name", t.off);
        AtomSpec atom;
        atom.atom = t.text;
        t = lex.next();
        if (t.kind == Token::LParen) {
            t = lex.next();
            if (t.kind != Token::RParen) {
                while (true) {
                    if (t.kind == Token::Number)
                        atom.nums.push_back(t.num);
                    else if (t.kind == Token::Str)
                        atom.strs.push_back(t.text);
                    else
                        throw SyntaxError("expected an integer or string argument", t.off);
                    t = lex.next();
                    if (t.kind == Token::Comma) {
                        t = lex.next();
                        continue;
                    }
                    break;
                }
            }
            if (t.kind != Token::RParen) throw SyntaxError("expected ')'", t.off);
            t = lex.next();
        } else if (atom.atom != "M11") {
            throw SyntaxError("expected '(' after atom name", t.off);
        }
        spec.factors.push_back(std::move(atom));
        if (t.kind == Token::End) break;
        if (t.kind != Token::Word || t.text != "x")
            throw SyntaxError("expected 'x' between factors", t.off);
        t = lex.next();
    }
    return spec;
}

std::string AtomSpec::text() const {
    if (atom == "M11" && nums.empty() && strs.empty()) return atom;
    std::string out = atom + "(";
    bool first = true;
    for (long n : nums) {
        if (!first) out += ",";
        out += std::to_string(n);
        first = false;
    }
    for (auto& s : strs) {
        if (!first) out += ",";
        out += "\"" + s + "\"";
        first = false;
    }
    return out + ")";
}

std::string GroupSpec::text() const {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += " x ";
        out += factors[i].text();
    }
    return out;
}

}  // namespace ggraph

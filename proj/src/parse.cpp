#include "exls/parse.hpp"

#include <cctype>

#include "exls/errors.hpp"

namespace exls {

namespace {

struct Token {
    enum Kind { kNumber, kIdent, kPlus, kMinus, kStar, kSlash, kCaret, kLParen, kRParen, kEnd } kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(const std::string &s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Token::kNumber, s.substr(start, i - start), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Token::kIdent, s.substr(start, i - start), start});
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::kPlus; break;
            case '-': k = Token::kMinus; break;
            case '*': k = Token::kStar; break;
            case '/': k = Token::kSlash; break;
            case '^': k = Token::kCaret; break;
            case '(': k = Token::kLParen; break;
            case ')': k = Token::kRParen; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({k, std::string(1, c), i});
        ++i;
    }
    out.push_back({Token::kEnd, "", s.size()});
    return out;
}

bool is_index_token(const std::string &id, const std::string &prefix, int lo, int hi) {
    if (id.size() != prefix.size() + 1 || id.compare(0, prefix.size(), prefix) != 0) return false;
    int v = id.back() - '0';
    return v >= lo && v <= hi;
}

SymTerm multiply(const SymTerm &a, const SymTerm &b, std::size_t pos) {
    SymTerm r;
    r.coeff = a.coeff * b.coeff;
    r.even = a.even;
    for (const auto &[v, e] : b.even) r.even[v] += e;
    r.odd = a.odd;
    r.odd.insert(r.odd.end(), b.odd.begin(), b.odd.end());
    if (!a.derivation.empty() && !b.derivation.empty())
        throw ParseError("two derivation symbols in one term", pos);
    r.derivation = a.derivation.empty() ? b.derivation : a.derivation;
    r.position = a.position;
    return r;
}

std::vector<SymTerm> multiply(const std::vector<SymTerm> &a, const std::vector<SymTerm> &b, std::size_t pos) {
    std::vector<SymTerm> r;
    r.reserve(a.size() * b.size());
    for (const auto &x : a)
        for (const auto &y : b) r.push_back(multiply(x, y, pos));
    return r;
}

class Parser {
public:
    explicit Parser(const std::string &s) : toks_(lex(s)) {}

    Expression run() {
        Expression e;
        e.terms = parse_sum(&e);
        if (peek().kind != Token::kEnd) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
        return e;
    }

private:
    const Token &peek() const { return toks_[k_]; }
    const Token &next() { return toks_[k_++]; }
    void expect(Token::Kind kind, const char *what) {
        if (peek().kind != kind) throw ParseError(std::string("expected ") + what, peek().pos);
        ++k_;
    }

    std::vector<SymTerm> parse_sum(Expression *top) {
        std::vector<SymTerm> out;
        bool first = true;
        while (true) {
            int sign = 1;
            if (peek().kind == Token::kPlus || peek().kind == Token::kMinus) {
                sign = next().kind == Token::kMinus ? -1 : 1;
            } else if (!first) {
                break;
            }
            first = false;
            if (top && is_trunc_marker()) {
                parse_trunc(top);
                continue;
            }
            auto prod = parse_product();
            for (auto &t : prod) {
                if (sign < 0) t.coeff = -t.coeff;
                out.push_back(std::move(t));
            }
        }
        return out;
    }

    bool is_trunc_marker() const {
        return peek().kind == Token::kIdent && peek().text == "O" && toks_[k_ + 1].kind == Token::kLParen;
    }

    void parse_trunc(Expression *top) {
        std::size_t pos = next().pos;
        expect(Token::kLParen, "'('");
        if (peek().kind != Token::kIdent) throw ParseError("expected variable in O(...)", peek().pos);
        std::string var = next().text;
        if (var != "t" && !is_index_token(var, "x", 1, 5)) throw ParseError("bad truncation variable", pos);
        int order = 1;
        if (peek().kind == Token::kCaret) {
            ++k_;
            if (peek().kind != Token::kNumber) throw ParseError("expected exponent", peek().pos);
            order = std::stoi(next().text);
        }
        expect(Token::kRParen, "')'");
        if (top->trunc_var) throw ParseError("duplicate truncation marker", pos);
        top->trunc_var = Truncation{var, order};
    }

    std::vector<SymTerm> parse_product() {
        auto acc = parse_power();
        while (peek().kind == Token::kStar) {
            std::size_t pos = next().pos;
            acc = multiply(acc, parse_power(), pos);
        }
        return acc;
    }

    std::vector<SymTerm> parse_power() {
        std::size_t pos = peek().pos;
        auto base = parse_atom();
        if (peek().kind != Token::kCaret) return base;
        ++k_;
        if (peek().kind != Token::kNumber) throw ParseError("expected exponent", peek().pos);
        int e = std::stoi(next().text);
        // even variables get a plain exponent; anything else is repeated multiplication
        if (base.size() == 1 && base[0].coeff.is_one() && base[0].odd.empty() && base[0].derivation.empty() &&
            base[0].even.size() == 1) {
            if (e == 0)
                base[0].even.clear();
            else
                base[0].even.begin()->second *= e;
            return base;
        }
        SymTerm one;
        one.position = pos;
        std::vector<SymTerm> r{one};
        for (int j = 0; j < e; ++j) r = multiply(r, base, pos);
        return r;
    }

    std::vector<SymTerm> parse_atom() {
        const Token &t = peek();
        SymTerm s;
        s.position = t.pos;
        switch (t.kind) {
            case Token::kNumber: {
                mpq_class num(next().text);
                if (peek().kind == Token::kSlash) {
                    ++k_;
                    if (peek().kind != Token::kNumber) throw ParseError("expected denominator", peek().pos);
                    mpz_class den(next().text);
                    if (den == 0) throw ParseError("division by zero", t.pos);
                    num /= den;
                    num.canonicalize();
                }
                s.coeff = Scalar(num);
                return {s};
            }
            case Token::kLParen: {
                ++k_;
                auto inner = parse_sum(nullptr);
                expect(Token::kRParen, "')'");
                return inner;
            }
            case Token::kIdent: {
                std::string id = next().text;
                classify(id, t.pos, s);
                return {s};
            }
            default:
                throw ParseError("unexpected '" + t.text + "'", t.pos);
        }
    }

    static void classify(const std::string &id, std::size_t pos, SymTerm &s) {
        if (id == "r2") {
            s.coeff = Scalar::sqrt2();
        } else if (id == "i") {
            s.coeff = Scalar::imag();
        } else if (id == "t" || is_index_token(id, "x", 1, 5)) {
            s.even[id] = 1;
        } else if (id == "Dt" || is_index_token(id, "D", 1, 5)) {
            s.derivation = id;
        } else if (id == "dt" || is_index_token(id, "dx", 1, 5)) {
            s.odd.push_back(id);
        } else if (is_index_token(id, "xi", 1, 4) || is_index_token(id, "eta", 1, 4) ||
                   is_index_token(id, "rho", 1, 6)) {
            s.odd.push_back(id);
        } else if (id.size() >= 2 && id[0] == 'd' &&
                   id.find_first_not_of("12345", 1) == std::string::npos) {
            for (std::size_t j = 1; j < id.size(); ++j) s.odd.push_back(std::string("dx") + id[j]);
        } else {
            throw ParseError("unknown symbol '" + id + "'", pos);
        }
    }

    std::vector<Token> toks_;
    std::size_t k_ = 0;
};

}  // namespace

Expression parse_expression(const std::string &text) { return Parser(text).run(); }

}  // namespace exls

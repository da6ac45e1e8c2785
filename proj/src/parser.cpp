#include "taut/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace taut {

ParseError::ParseError(const std::string& message, size_t position)
    : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
    Tok kind;
    std::string text;
    size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
                ++j;
            out.push_back({Tok::Number, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Tok::Ident, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '/': k = Tok::Slash; break;
            case '^': k = Tok::Caret; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case ',': k = Tok::Comma; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({k, std::string(1, c), i});
        ++i;
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

class Parser {
public:
    Parser(const std::string& text, const RingParams& params, const PointSet& points,
           std::string star_alias)
        : params_(params),
          points_(points),
          star_alias_(std::move(star_alias)),
          toks_(tokenize(text)) {}

    TautClass parse() {
        TautClass r = expr();
        expect(Tok::End, "end of input");
        return r;
    }

    CharClassMonomial parse_monomial_only() {
        CharClassMonomial m = cc_monomial();
        expect(Tok::End, "end of input");
        return m;
    }

private:
    const RingParams& params_;
    const PointSet& points_;
    std::string star_alias_;
    std::vector<Token> toks_;
    size_t pos_ = 0;

    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_++]; }

    static int small_int(const Token& t, const char* what) {
        try {
            if (t.text.size() <= 9) {
                const int v = std::stoi(t.text);
                if (v <= 1'000'000)
                    return v;
            }
        } catch (const std::exception&) {
        }
        throw ParseError(std::string(what) + " out of range: " + t.text, t.pos);
    }

    bool accept(Tok k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }
    Token expect(Tok k, const std::string& what) {
        if (peek().kind != k)
            throw ParseError("expected " + what + ", found '" +
                                 (peek().kind == Tok::End ? "end of input" : peek().text) + "'",
                             peek().pos);
        return next();
    }

    TautClass expr() {
        TautClass r = term();
        while (true) {
            if (accept(Tok::Plus))
                r = r + term();
            else if (accept(Tok::Minus))
                r = r - term();
            else
                return r;
        }
    }

    TautClass term() {
        TautClass r = unary();
        while (true) {
            if (accept(Tok::Star)) {
                r = r * unary();
            } else if (peek().kind == Tok::Slash) {
                const Token tok = next();
                const TautClass rhs = unary();
                std::optional<Rational> divisor;
                if (rhs.is_zero())
                    throw ParseError("division by zero", tok.pos);
                if (rhs.terms().size() == 1 && rhs.terms().begin()->first.is_unit())
                    divisor = rhs.terms().begin()->second;
                if (!divisor)
                    throw ParseError("divisor must be a scalar", tok.pos);
                r = r.scaled(1 / *divisor);
            } else {
                return r;
            }
        }
    }

    TautClass unary() {
        if (accept(Tok::Minus))
            return -unary();
        return power();
    }

    TautClass power() {
        TautClass r = atom();
        while (peek().kind == Tok::Caret) {
            next();
            const Token e = expect(Tok::Number, "a non-negative integer exponent");
            r = r.pow(static_cast<unsigned>(small_int(e, "exponent")));
        }
        return r;
    }

    TautClass atom() {
        const Token t = peek();
        if (t.kind == Tok::Number) {
            next();
            return TautClass::scalar(params_, points_, Rational(t.text, 10));
        }
        if (t.kind == Tok::LParen) {
            next();
            TautClass r = expr();
            expect(Tok::RParen, "')'");
            return r;
        }
        if (t.kind == Tok::Ident) {
            next();
            if (t.text == "chi")
                return TautClass::scalar(params_, points_, params_.chi);
            if (t.text == "kappa") {
                expect(Tok::LParen, "'('");
                CharClassMonomial m = cc_monomial();
                expect(Tok::RParen, "')'");
                return TautClass::kappa(params_, points_, m);
            }
            if (t.text == "psi") {
                expect(Tok::LParen, "'('");
                CharClassMonomial m = cc_monomial();
                expect(Tok::Comma, "','");
                const int pt = point();
                expect(Tok::RParen, "')'");
                return TautClass::psi(params_, points_, m, pt);
            }
            if (t.text == "pi") {
                expect(Tok::LParen, "'('");
                std::vector<int> pts{point()};
                while (accept(Tok::Comma))
                    pts.push_back(point());
                const Token closing = expect(Tok::RParen, "')'");
                if (pts.size() < 2)
                    throw ParseError("intersection class needs at least 2 points",
                                     closing.pos);
                return TautClass::intersection(params_, points_, std::move(pts));
            }
            throw ParseError("unknown name '" + t.text + "'", t.pos);
        }
        throw ParseError("expected a number, name, or '('", t.pos);
    }

    int point() {
        const Token t = peek();
        if (t.kind == Tok::Number) {
            next();
            const int label = small_int(t, "point label");
            if (!points_.contains(label))
                throw ParseError("unknown point " + t.text, t.pos);
            return label;
        }
        if (t.kind == Tok::Ident && (t.text == "star" || t.text == star_alias_)) {
            next();
            if (!points_.contains(PointSet::kStar))
                throw ParseError("the star point is not in the point set", t.pos);
            return PointSet::kStar;
        }
        throw ParseError("expected a point label", t.pos);
    }

    // Char-class monomial: '1' or factors e / p<k> with optional ^exponent,
    // joined by '*'.
    CharClassMonomial cc_monomial() {
        std::map<int, int> raw;
        while (true) {
            const Token t = peek();
            if (t.kind == Tok::Number && t.text == "1") {
                next();
            } else if (t.kind == Tok::Ident) {
                next();
                int index;
                if (t.text == "e") {
                    index = 0;
                } else if (t.text.size() > 1 && t.text[0] == 'p') {
                    for (size_t i = 1; i < t.text.size(); ++i)
                        if (!std::isdigit(static_cast<unsigned char>(t.text[i])))
                            throw ParseError("bad generator '" + t.text + "'", t.pos);
                    index = small_int(Token{t.kind, t.text.substr(1), t.pos}, "generator index");
                    if (index < 1 || index > params_.d)
                        throw ParseError("generator p" + std::to_string(index) +
                                             " out of range for d = " +
                                             std::to_string(params_.d),
                                         t.pos);
                } else {
                    throw ParseError("expected 'e' or 'p<k>', found '" + t.text + "'",
                                     t.pos);
                }
                int exp = 1;
                if (accept(Tok::Caret)) {
                    const Token e = expect(Tok::Number, "a non-negative integer exponent");
                    exp = small_int(e, "exponent");
                }
                raw[index] += exp;
            } else {
                throw ParseError("expected a char-class monomial", t.pos);
            }
            if (!accept(Tok::Star))
                break;
        }
        return CharClassMonomial::make(params_.d, raw);
    }
};

}  // namespace

TautClass parse_expression(const std::string& text, const RingParams& params,
                           const PointSet& points, const std::string& star_alias) {
    return Parser(text, params, points, star_alias).parse();
}

CharClassMonomial parse_charclass(const std::string& text, const RingParams& params) {
    const PointSet none;
    return Parser(text, params, none, "").parse_monomial_only();
}

}  // namespace taut

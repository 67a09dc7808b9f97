/*
   Copyright 2026 the finring authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "finring/dsl.hpp"

#include <cctype>

#include "finring/constructions.hpp"

namespace finring::dsl {

bool same_tree(const RingExpr& a, const RingExpr& b) {
    if (a.kind != b.kind || a.params != b.params || a.children.size() != b.children.size())
        return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!same_tree(a.children[i], b.children[i])) return false;
    return true;
}

namespace {

struct Token {
    enum Type { ident, number, lparen, rparen, comma, end } type = end;
    std::string text;
    std::uint64_t value = 0;
    int line = 1;
    int col = 1;
    std::size_t offset = 0;
};

class Lexer {
  public:
    explicit Lexer(std::string_view input) : in_(input) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) step();
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        tok_.offset = pos_;
        if (pos_ >= in_.size()) {
            tok_.type = Token::end;
            tok_.text = "end of input";
            return;
        }
        char c = in_[pos_];
        if (c == '(') {
            tok_.type = Token::lparen;
            tok_.text = "(";
            step();
        } else if (c == ')') {
            tok_.type = Token::rparen;
            tok_.text = ")";
            step();
        } else if (c == ',') {
            tok_.type = Token::comma;
            tok_.text = ",";
            step();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            tok_.type = Token::number;
            std::uint64_t v = 0;
            bool overflow = false;
            while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
                v = v * 10 + (in_[pos_] - '0');
                if (v > 0xFFFFFFFFull) overflow = true;
                tok_.text += in_[pos_];
                step();
            }
            if (overflow)
                throw ParseError("integer literal too large", tok_.line, tok_.col, {"integer"});
            tok_.value = v;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            tok_.type = Token::ident;
            while (pos_ < in_.size() && std::isalpha(static_cast<unsigned char>(in_[pos_]))) {
                tok_.text += in_[pos_];
                step();
            }
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line_, col_,
                             {"constructor name", "integer", "(", ")", ","});
        }
    }

    void step() {
        if (in_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view in_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_;
};

class Parser {
  public:
    explicit Parser(std::string_view input) : lex_(input) {}

    RingExpr run() {
        RingExpr e = expr();
        const Token& t = lex_.peek();
        if (t.type != Token::end)
            throw ParseError("expected end of input, found '" + t.text + "'", t.line, t.col,
                             {"end of input"});
        return e;
    }

  private:
    [[noreturn]] void fail(const Token& t, std::vector<std::string> expected) {
        std::string msg = "expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) msg += i + 1 == expected.size() ? " or " : ", ";
            msg += "'" + expected[i] + "'";
        }
        msg += ", found '" + t.text + "'";
        throw ParseError(msg, t.line, t.col, std::move(expected));
    }

    Token expect(Token::Type type, const char* what) {
        const Token& t = lex_.peek();
        if (t.type != type) fail(t, {what});
        return lex_.take();
    }

    std::uint32_t integer() {
        Token t = expect(Token::number, "integer");
        return std::uint32_t(t.value);
    }

    RingExpr expr() {
        const Token& head = lex_.peek();
        if (head.type != Token::ident)
            fail(head, {"Z", "Prod", "Mat", "UT", "Tnk", "Triv", "PolyMod"});
        Token name = lex_.take();
        RingExpr e;
        e.span = Span{name.line, name.col, name.offset, 0};
        if (name.text == "Z") {
            e.kind = ExprKind::zn;
            expect(Token::lparen, "(");
            e.params.push_back(integer());
            finish(e);
        } else if (name.text == "Prod") {
            e.kind = ExprKind::prod;
            expect(Token::lparen, "(");
            e.children.push_back(expr());
            expect(Token::comma, ",");
            e.children.push_back(expr());
            while (lex_.peek().type == Token::comma) {
                lex_.take();
                e.children.push_back(expr());
            }
            finish(e);
        } else if (name.text == "Mat" || name.text == "UT") {
            e.kind = name.text == "Mat" ? ExprKind::mat : ExprKind::ut;
            expect(Token::lparen, "(");
            e.children.push_back(expr());
            expect(Token::comma, ",");
            e.params.push_back(integer());
            finish(e);
        } else if (name.text == "Tnk") {
            e.kind = ExprKind::tnk;
            expect(Token::lparen, "(");
            e.children.push_back(expr());
            expect(Token::comma, ",");
            e.params.push_back(integer());
            expect(Token::comma, ",");
            e.params.push_back(integer());
            finish(e);
        } else if (name.text == "Triv") {
            e.kind = ExprKind::triv;
            expect(Token::lparen, "(");
            e.children.push_back(expr());
            finish(e);
        } else if (name.text == "PolyMod") {
            e.kind = ExprKind::polymod;
            expect(Token::lparen, "(");
            e.children.push_back(expr());
            expect(Token::comma, ",");
            e.params.push_back(integer());
            finish(e);
        } else {
            fail(name, {"Z", "Prod", "Mat", "UT", "Tnk", "Triv", "PolyMod"});
        }
        return e;
    }

    void finish(RingExpr& e) {
        Token close = expect(Token::rparen, ")");
        e.span.length = close.offset + 1 - e.span.offset;
    }

    Lexer lex_;
};

}  // namespace

RingExpr parse(std::string_view input) { return Parser(input).run(); }

std::string pretty(const RingExpr& e) {
    switch (e.kind) {
        case ExprKind::zn: return "Z(" + std::to_string(e.params[0]) + ")";
        case ExprKind::prod: {
            std::string out = "Prod(";
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i) out += ", ";
                out += pretty(e.children[i]);
            }
            return out + ")";
        }
        case ExprKind::mat:
            return "Mat(" + pretty(e.children[0]) + ", " + std::to_string(e.params[0]) + ")";
        case ExprKind::ut:
            return "UT(" + pretty(e.children[0]) + ", " + std::to_string(e.params[0]) + ")";
        case ExprKind::tnk:
            return "Tnk(" + pretty(e.children[0]) + ", " + std::to_string(e.params[0]) + ", " +
                   std::to_string(e.params[1]) + ")";
        case ExprKind::triv: return "Triv(" + pretty(e.children[0]) + ")";
        case ExprKind::polymod:
            return "PolyMod(" + pretty(e.children[0]) + ", " + std::to_string(e.params[0]) + ")";
    }
    throw Error("unreachable expression kind");
}

RingPtr elaborate(const RingExpr& e, const Caps& caps) {
    try {
        switch (e.kind) {
            case ExprKind::zn: return make_zn(e.params[0], caps);
            case ExprKind::prod: {
                std::vector<RingPtr> factors;
                factors.reserve(e.children.size());
                for (const auto& c : e.children) factors.push_back(elaborate(c, caps));
                return make_product(std::move(factors), caps);
            }
            case ExprKind::mat: return make_matrix(elaborate(e.children[0], caps), e.params[0], caps);
            case ExprKind::ut:
                return make_upper_triangular(elaborate(e.children[0], caps), e.params[0], caps);
            case ExprKind::tnk:
                return make_tnk(elaborate(e.children[0], caps), e.params[0], e.params[1], caps);
            case ExprKind::triv: return make_trivial_extension(elaborate(e.children[0], caps), caps);
            case ExprKind::polymod:
                return make_poly_mod(elaborate(e.children[0], caps), e.params[0], caps);
        }
    } catch (InvalidParameter& err) {
        if (err.line < 0) throw InvalidParameter(err.what(), e.span.line, e.span.col);
        throw;
    } catch (OrderOverflow& err) {
        if (err.line < 0) throw OrderOverflow(err.what(), e.span.line, e.span.col);
        throw;
    }
    throw Error("unreachable expression kind");
}

RingPtr eval_expr(std::string_view input, const Caps& caps) {
    return elaborate(parse(input), caps);
}

}  // namespace finring::dsl

// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#include "zonoset/parser.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "zonoset/error.hpp"

namespace zonoset {

namespace {

enum class Tok { Ident, Number, Punct, In, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
    bool line_break_before = false;
};

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        bool broke = false;
        while (true) {
            broke = skip_blank() || broke;
            Token t;
            t.line = line_;
            t.column = col_;
            t.line_break_before = broke;
            broke = false;
            if (pos_ >= src_.size()) {
                out.push_back(t);
                return out;
            }
            const char c = src_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
                t.kind = Tok::Ident;
                while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) != 0 || src_[pos_] == '_')) {
                    t.text += advance();
                }
                if (t.text == "in") {
                    t.kind = Tok::In;
                }
            } else if (std::isdigit(static_cast<unsigned char>(c)) != 0 ||
                       (c == '.' && pos_ + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])) != 0)) {
                t.kind = Tok::Number;
                lex_number(t.text);
            } else if (src_.substr(pos_, 3) == "\xE2\x88\x88") {
                t.kind = Tok::In;
                t.text = "\xE2\x88\x88";
                pos_ += 3;
                ++col_;
            } else {
                t.kind = Tok::Punct;
                static const char* const two[] = {"<=", ">=", "==", "!=", ":="};
                for (const char* op : two) {
                    if (src_.substr(pos_, 2) == op) {
                        t.text = op;
                    }
                }
                if (t.text.empty()) {
                    if (std::string_view("(){}[],;+-*/=<>").find(c) == std::string_view::npos) {
                        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
                    }
                    t.text = std::string(1, c);
                }
                for (std::size_t i = 0; i < t.text.size(); ++i) {
                    advance();
                }
            }
            out.push_back(std::move(t));
        }
    }

  private:
    char advance() {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
            ++col_;
        }
        return c;
    }

    /// Skips whitespace and comments; reports whether a line break was crossed.
    bool skip_blank() {
        bool broke = false;
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '\n') {
                broke = true;
                advance();
            } else if (std::isspace(static_cast<unsigned char>(c)) != 0) {
                advance();
            } else if (src_.substr(pos_, 2) == "//") {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    advance();
                }
            } else if (src_.substr(pos_, 2) == "/*") {
                const std::size_t l = line_;
                const std::size_t k = col_;
                advance();
                advance();
                while (pos_ < src_.size() && src_.substr(pos_, 2) != "*/") {
                    broke = advance() == '\n' || broke;
                }
                if (pos_ >= src_.size()) {
                    throw ParseError("unterminated comment", l, k);
                }
                advance();
                advance();
            } else {
                break;
            }
        }
        return broke;
    }

    void lex_number(std::string& out) {
        auto digits = [&] {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])) != 0) {
                out += advance();
            }
        };
        digits();
        if (pos_ < src_.size() && src_[pos_] == '.') {
            out += advance();
            digits();
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            const std::size_t save_pos = pos_;
            const std::size_t save_col = col_;
            std::string exp(1, advance());
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
                exp += advance();
            }
            if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])) != 0) {
                out += exp;
                digits();
            } else {
                pos_ = save_pos;
                col_ = save_col;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

std::optional<Scalar> fold(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Const:
        return e.value;
    case Expr::Kind::Neg:
        if (auto a = fold(*e.args[0])) {
            return -*a;
        }
        return std::nullopt;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Mul: {
        auto a = fold(*e.args[0]);
        auto b = fold(*e.args[1]);
        if (!a || !b) {
            return std::nullopt;
        }
        if (e.kind == Expr::Kind::Add) {
            return *a + *b;
        }
        if (e.kind == Expr::Kind::Sub) {
            return *a - *b;
        }
        return *a * *b;
    }
    default:
        return std::nullopt;
    }
}

class Parser {
  public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Program program() {
        Program p;
        while (peek().kind != Tok::End) {
            p.functions.push_back(function());
        }
        return p;
    }

  private:
    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }

    Token next() {
        Token t = peek();
        if (pos_ < toks_.size() - 1) {
            ++pos_;
        }
        return t;
    }

    [[noreturn]] void fail(const std::string& msg, const Token& at) const { throw ParseError(msg, at.line, at.column); }

    static std::string describe(const Token& t) {
        switch (t.kind) {
        case Tok::End:
            return "end of input";
        case Tok::Number:
            return "number '" + t.text + "'";
        case Tok::Ident:
            return "identifier '" + t.text + "'";
        default:
            return "'" + t.text + "'";
        }
    }

    bool is_punct(const char* text, std::size_t ahead = 0) const {
        const Token& t = peek(ahead);
        return t.kind == Tok::Punct && t.text == text;
    }

    bool is_keyword(const char* word) const { return peek().kind == Tok::Ident && peek().text == word; }

    Token expect_punct(const char* text) {
        if (!is_punct(text)) {
            fail(std::string("expected '") + text + "' but found " + describe(peek()), peek());
        }
        return next();
    }

    Token expect_ident(const char* what) {
        if (peek().kind != Tok::Ident || reserved(peek().text)) {
            fail(std::string("expected ") + what + " but found " + describe(peek()), peek());
        }
        return next();
    }

    void expect_keyword(const char* word) {
        if (!is_keyword(word)) {
            fail(std::string("expected '") + word + "' but found " + describe(peek()), peek());
        }
        next();
    }

    static bool reserved(const std::string& s) {
        return s == "float" || s == "if" || s == "else" || s == "while" || s == "return";
    }

    /// ";", or nothing before a line break or a closing brace.
    void terminator() {
        if (is_punct(";")) {
            next();
            return;
        }
        if (peek().line_break_before || is_punct("}") || peek().kind == Tok::End) {
            return;
        }
        fail("expected ';' but found " + describe(peek()), peek());
    }

    std::string label_for(std::size_t line) {
        const int n = ++labels_[line];
        return "L" + std::to_string(line) + (n == 1 ? "" : "_" + std::to_string(n));
    }

    Function function() {
        expect_keyword("float");
        const Token name = expect_ident("function name");
        Function f;
        f.name = name.text;
        f.line = name.line;
        expect_punct("(");
        if (!is_punct(")")) {
            do {
                expect_keyword("float");
                const Token param = expect_ident("parameter name");
                for (const auto& other : f.params) {
                    if (other == param.text) {
                        fail("duplicate parameter '" + param.text + "'", param);
                    }
                }
                f.params.push_back(param.text);
            } while (is_punct(",") && (next(), true));
        }
        expect_punct(")");
        if (!is_punct("{")) {
            fail("expected '{' but found " + describe(peek()), peek());
        }
        f.body = block();
        return f;
    }

    Block block() {
        expect_punct("{");
        Block b;
        while (!is_punct("}")) {
            if (peek().kind == Tok::End) {
                fail("missing '}'", peek());
            }
            if (auto s = statement()) {
                b.push_back(std::move(s));
            }
        }
        next();
        return b;
    }

    StmtPtr statement() {
        const Token start = peek();
        if (is_punct(";")) {
            next();
            return nullptr;
        }
        auto s = std::make_shared<Stmt>();
        s->line = start.line;
        if (is_punct("{")) {
            s->kind = Stmt::Kind::Block;
            s->label = label_for(start.line);
            s->body = block();
            return s;
        }
        if (start.kind == Tok::Ident && start.text == "float") {
            next();
            s->kind = Stmt::Kind::Decl;
            s->label = label_for(start.line);
            do {
                Declarator d;
                d.name = expect_ident("variable name").text;
                if (peek().kind == Tok::In) {
                    next();
                    d.init = interval();
                } else if (is_punct("=")) {
                    next();
                    d.init = expr();
                }
                s->decls.push_back(std::move(d));
            } while (is_punct(",") && (next(), true));
            terminator();
            return s;
        }
        if (start.kind == Tok::Ident && (start.text == "if" || start.text == "while")) {
            next();
            s->kind = start.text == "if" ? Stmt::Kind::If : Stmt::Kind::While;
            s->label = label_for(start.line);
            expect_punct("(");
            s->cond = condition();
            expect_punct(")");
            s->body = body();
            if (s->kind == Stmt::Kind::If && is_keyword("else")) {
                next();
                s->has_else = true;
                s->else_body = body();
            }
            return s;
        }
        if (start.kind == Tok::Ident && start.text == "else") {
            fail("'else' without 'if'", start);
        }
        if (start.kind == Tok::Ident && start.text == "return") {
            next();
            s->kind = Stmt::Kind::Return;
            s->label = label_for(start.line);
            s->expr = expr();
            terminator();
            return s;
        }
        const Token target = expect_ident("statement");
        s->kind = Stmt::Kind::Assign;
        s->label = label_for(start.line);
        s->target = target.text;
        if (is_punct("=") || is_punct(":=")) {
            next();
        } else {
            fail("expected '=' after '" + target.text + "' but found " + describe(peek()), peek());
        }
        s->expr = expr();
        terminator();
        return s;
    }

    Block body() {
        if (is_punct("{")) {
            return block();
        }
        Block b;
        if (auto s = statement()) {
            b.push_back(std::move(s));
        }
        return b;
    }

    Condition condition() {
        Condition c;
        if (is_punct("*") && is_punct(")", 1)) {
            next();
            return c;
        }
        c.nondet = false;
        c.lhs = expr();
        static const std::set<std::string> relops{"<", "<=", ">", ">=", "==", "!="};
        if (peek().kind != Tok::Punct || relops.count(peek().text) == 0) {
            fail("expected comparison operator but found " + describe(peek()), peek());
        }
        c.op = next().text;
        c.rhs = expr();
        return c;
    }

    static ExprPtr at(ExprPtr e, const Token& t) {
        auto m = std::const_pointer_cast<Expr>(e);
        m->line = t.line;
        m->column = t.column;
        return m;
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (is_punct("+") || is_punct("-")) {
            const Token op = next();
            ExprPtr rhs = term();
            lhs = at(Expr::binary(op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, lhs, rhs), op);
        }
        return lhs;
    }

    ExprPtr term() {
        ExprPtr lhs = unary();
        while (is_punct("*") || is_punct("/")) {
            const Token op = next();
            ExprPtr rhs = unary();
            if (op.text == "*") {
                lhs = at(Expr::binary(Expr::Kind::Mul, lhs, rhs), op);
                continue;
            }
            const auto a = fold(*lhs);
            const auto b = fold(*rhs);
            if (!a || !b) {
                fail("division is only supported between numeric literals", op);
            }
            if (b->is_zero()) {
                fail("division by zero", op);
            }
            lhs = at(Expr::constant(*a / *b), op);
        }
        return lhs;
    }

    ExprPtr unary() {
        const Token t = peek();
        if (is_punct("-")) {
            next();
            return at(Expr::unary(Expr::Kind::Neg, unary()), t);
        }
        if (is_punct("+")) {
            next();
            return unary();
        }
        if (t.kind == Tok::Number) {
            next();
            return at(Expr::constant(number(t)), t);
        }
        if (is_punct("(")) {
            next();
            ExprPtr e = expr();
            expect_punct(")");
            return e;
        }
        if (is_punct("[")) {
            return interval();
        }
        if (t.kind == Tok::Ident && !reserved(t.text)) {
            next();
            if (!is_punct("(")) {
                return at(Expr::var(t.text), t);
            }
            next();
            std::vector<ExprPtr> args;
            if (!is_punct(")")) {
                do {
                    args.push_back(expr());
                } while (is_punct(",") && (next(), true));
            }
            expect_punct(")");
            return at(Expr::call(t.text, std::move(args)), t);
        }
        fail("expected expression but found " + describe(t), t);
    }

    Scalar number(const Token& t) const {
        try {
            return Scalar::parse(t.text);
        } catch (const Error&) {
            fail("malformed number '" + t.text + "'", t);
        }
    }

    Scalar signed_number() {
        bool negative = false;
        if (is_punct("-")) {
            next();
            negative = true;
        }
        if (peek().kind != Tok::Number) {
            fail("expected number but found " + describe(peek()), peek());
        }
        const Scalar v = number(next());
        return negative ? -v : v;
    }

    ExprPtr interval() {
        const Token open = expect_punct("[");
        const Scalar lo = signed_number();
        expect_punct(",");
        const Scalar hi = signed_number();
        expect_punct("]");
        if (hi < lo) {
            fail("empty interval [" + lo.str() + ", " + hi.str() + "]", open);
        }
        return at(Expr::range(lo, hi), open);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::map<std::size_t, int> labels_;
};

void collect_calls(const Expr& e, std::vector<const Expr*>& out) {
    if (e.kind == Expr::Kind::Call) {
        out.push_back(&e);
    }
    for (const auto& a : e.args) {
        collect_calls(*a, out);
    }
}

void collect_calls(const Block& b, std::vector<const Expr*>& out) {
    for (const auto& s : b) {
        for (const auto& d : s->decls) {
            if (d.init) {
                collect_calls(*d.init, out);
            }
        }
        if (s->expr) {
            collect_calls(*s->expr, out);
        }
        if (!s->cond.nondet) {
            collect_calls(*s->cond.lhs, out);
            collect_calls(*s->cond.rhs, out);
        }
        collect_calls(s->body, out);
        collect_calls(s->else_body, out);
    }
}

void check_returns(const Block& b, bool top_level, const Function& f) {
    for (std::size_t i = 0; i < b.size(); ++i) {
        const auto& s = *b[i];
        if (s.kind == Stmt::Kind::Return && !(top_level && i + 1 == b.size())) {
            throw ParseError("'return' must be the last statement of function '" + f.name + "'", s.line, 1);
        }
        check_returns(s.body, false, f);
        check_returns(s.else_body, false, f);
    }
}

void check(const Program& p) {
    std::map<std::string, const Function*> byname;
    for (const auto& f : p.functions) {
        if (!byname.emplace(f.name, &f).second) {
            throw ParseError("function '" + f.name + "' defined twice", f.line, 1);
        }
        check_returns(f.body, true, f);
        if (f.body.empty() || f.body.back()->kind != Stmt::Kind::Return) {
            throw ParseError("function '" + f.name + "' must end with 'return'", f.line, 1);
        }
    }
    const auto main = byname.find("main");
    if (main == byname.end()) {
        throw ParseError("no main", p.functions.empty() ? 1 : p.functions.front().line, 1);
    }
    if (!main->second->params.empty()) {
        throw ParseError("'main' takes no parameters", main->second->line, 1);
    }
    std::map<std::string, std::vector<std::string>> graph;
    for (const auto& f : p.functions) {
        std::vector<const Expr*> calls;
        collect_calls(f.body, calls);
        for (const Expr* c : calls) {
            const auto it = byname.find(c->name);
            if (it == byname.end()) {
                throw ParseError("call to undefined function '" + c->name + "'", c->line, c->column);
            }
            if (it->second->params.size() != c->args.size()) {
                throw ParseError("'" + c->name + "' expects " + std::to_string(it->second->params.size()) +
                                     " argument(s), got " + std::to_string(c->args.size()),
                                 c->line, c->column);
            }
            graph[f.name].push_back(c->name);
        }
    }
    std::map<std::string, int> state; // 1 on stack, 2 done
    std::function<void(const std::string&)> visit = [&](const std::string& name) {
        state[name] = 1;
        for (const auto& callee : graph[name]) {
            if (state[callee] == 1) {
                const Function* f = byname.at(name);
                throw ParseError("recursive call from '" + name + "' to '" + callee + "'", f->line, 1);
            }
            if (state[callee] == 0) {
                visit(callee);
            }
        }
        state[name] = 2;
    };
    for (const auto& f : p.functions) {
        if (state[f.name] == 0) {
            visit(f.name);
        }
    }
}

} // namespace

Program parse(std::string_view source) {
    Program p = Parser(Lexer(source).run()).program();
    check(p);
    return p;
}

} // namespace zonoset

#include "qha/dsl.hpp"
#include <cctype>
#include <sstream>

namespace qha {

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        skip_ws();
        int line = line_, col = col_;
        if (i_ >= s_.size()) return {Tok::End, "", line, col};
        char c = s_[i_];
        if (std::isalpha((unsigned char)c) || c == '_') {
            std::string t;
            while (i_ < s_.size() && (std::isalnum((unsigned char)s_[i_]) || s_[i_] == '_' || s_[i_] == '^'))
                t += advance();
            return {Tok::Ident, t, line, col};
        }
        if (std::isdigit((unsigned char)c)) {
            std::string t;
            while (i_ < s_.size() && std::isdigit((unsigned char)s_[i_])) t += advance();
            return {Tok::Int, t, line, col};
        }
        if (c == '-' && i_ + 1 < s_.size() && s_[i_ + 1] == '>') {
            advance(); advance();
            return {Tok::Punct, "->", line, col};
        }
        if (std::string("{};,:+-*/").find(c) != std::string::npos) {
            advance();
            return {Tok::Punct, std::string(1, c), line, col};
        }
        fail(ErrKind::Parse, at(line, col) + "unexpected character '" + std::string(1, c) + "'");
    }

    static std::string at(int line, int col) {
        return "line " + std::to_string(line) + ", col " + std::to_string(col) + ": ";
    }

private:
    char advance() {
        char c = s_[i_++];
        if (c == '\n') { ++line_; col_ = 1; } else ++col_;
        return c;
    }
    void skip_ws() {
        while (i_ < s_.size()) {
            char c = s_[i_];
            if (c == '#') {
                while (i_ < s_.size() && s_[i_] != '\n') advance();
            } else if (std::isspace((unsigned char)c)) {
                advance();
            } else {
                break;
            }
        }
    }
    const std::string& s_;
    size_t i_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& s) : lex_(s) { cur_ = lex_.next(); }

    Presentation parse() {
        Presentation pres;
        expect_ident("field");
        pres.field = Field(parse_field_spec());
        expect_ident("quiver");
        expect_punct("{");
        while (!at_punct("}")) {
            if (at_ident("vertex")) parse_vertices(pres.quiver);
            else if (at_ident("arrow")) parse_arrow(pres.quiver);
            else err("expected 'vertex', 'arrow' or '}'");
        }
        expect_punct("}");
        if (at_ident("relations")) {
            bump();
            expect_punct("{");
            PathAlgebra pa(pres.quiver, pres.field);
            while (!at_punct("}")) {
                int line = cur_.line, col = cur_.col;
                FreeElement el = parse_element(pa);
                expect_punct(";");
                if (el.is_zero())
                    fail(ErrKind::Parse, Lexer::at(line, col) + "relation is zero");
                for (const Term& t : el.terms)
                    if (t.p.length() < 2)
                        fail(ErrKind::Parse, Lexer::at(line, col) +
                             "relation term '" + path_str(pres.quiver, t.p) +
                             "' has length < 2");
                int s, t;
                if (!pa.is_uniform(el, &s, &t))
                    fail(ErrKind::Parse, Lexer::at(line, col) + "relation is not uniform: " +
                         pa.to_string(el));
                pres.relations.push_back(UniformElement{el, s, t});
            }
            expect_punct("}");
        }
        if (cur_.kind != Tok::End) err("trailing input");
        return pres;
    }

private:
    FieldSpec parse_field_spec() {
        if (cur_.kind != Tok::Ident) err("expected field name");
        std::string n = cur_.text;
        bump();
        if (n == "Q") return FieldSpec{FieldKind::Rationals, 0};
        if (n.size() > 1 && n[0] == 'F' &&
            n.find_first_not_of("0123456789", 1) == std::string::npos) {
            FieldSpec s{FieldKind::Prime, std::stoull(n.substr(1))};
            return s;
        }
        err("unknown field '" + n + "' (expected Q or F<p>)");
    }

    void parse_vertices(Quiver& q) {
        bump(); // vertex
        for (;;) {
            q.add_vertex(expect_any_ident());
            if (at_punct(",")) { bump(); continue; }
            break;
        }
        expect_punct(";");
    }

    void parse_arrow(Quiver& q) {
        bump(); // arrow
        std::string name = expect_any_ident();
        expect_punct(":");
        int line = cur_.line, col = cur_.col;
        std::string sv = expect_any_ident();
        expect_punct("->");
        std::string tv = expect_any_ident();
        expect_punct(";");
        int s = q.find_vertex(sv), t = q.find_vertex(tv);
        if (s < 0) fail(ErrKind::Parse, Lexer::at(line, col) + "unknown vertex '" + sv + "'");
        if (t < 0) fail(ErrKind::Parse, Lexer::at(line, col) + "unknown vertex '" + tv + "'");
        q.add_arrow(name, s, t);
    }

    FreeElement parse_element(PathAlgebra& pa) {
        FreeElement out = pa.zero();
        bool first = true;
        for (;;) {
            bool negative = false;
            if (at_punct("-")) { negative = true; bump(); }
            else if (at_punct("+")) {
                if (first) err("element cannot start with '+'");
                bump();
            } else if (!first) {
                break;
            }
            Scalar c = pa.field().one();
            if (cur_.kind == Tok::Int) c = parse_scalar(pa.field());
            if (negative) c = pa.field().neg(c);
            out = pa.add(out, pa.scale(c, parse_path_monomial(pa)));
            first = false;
        }
        return out;
    }

    Scalar parse_scalar(const Field& f) {
        long long num = std::stoll(cur_.text);
        bump();
        if (at_punct("/")) {
            bump();
            if (cur_.kind != Tok::Int) err("expected denominator");
            long long den = std::stoll(cur_.text);
            bump();
            return f.from_fraction(num, den);
        }
        return f.from_int(num);
    }

    FreeElement parse_path_monomial(PathAlgebra& pa) {
        const Quiver& q = pa.quiver();
        int line = cur_.line, col = cur_.col;
        Path p;
        bool started = false;
        for (;;) {
            std::string n = expect_any_ident();
            int a = q.find_arrow(n);
            if (a < 0) fail(ErrKind::Parse, Lexer::at(line, col) + "unknown arrow '" + n + "'");
            if (!started) {
                p.src = q.arrow(a).src;
                started = true;
            } else if (p.target(q) != q.arrow(a).src) {
                fail(ErrKind::Parse, Lexer::at(line, col) + "arrows do not compose at '" + n + "'");
            }
            p.as.push_back(a);
            if (at_punct("*")) { bump(); continue; }  // tolerated separator
            if (cur_.kind == Tok::Ident) continue;    // juxtaposition
            break;
        }
        return pa.monomial(pa.field().one(), p);
    }

    void bump() { cur_ = lex_.next(); }
    bool at_punct(const std::string& s) const { return cur_.kind == Tok::Punct && cur_.text == s; }
    bool at_ident(const std::string& s) const { return cur_.kind == Tok::Ident && cur_.text == s; }
    void expect_punct(const std::string& s) {
        if (!at_punct(s)) err("expected '" + s + "'");
        bump();
    }
    void expect_ident(const std::string& s) {
        if (!at_ident(s)) err("expected '" + s + "'");
        bump();
    }
    std::string expect_any_ident() {
        if (cur_.kind != Tok::Ident) err("expected identifier");
        std::string t = cur_.text;
        bump();
        return t;
    }
    [[noreturn]] void err(const std::string& msg) {
        std::string got = cur_.kind == Tok::End ? "end of input" : "'" + cur_.text + "'";
        fail(ErrKind::Parse, Lexer::at(cur_.line, cur_.col) + msg + " (got " + got + ")");
    }

    Lexer lex_;
    Token cur_;
};

} // namespace

Presentation parse_presentation(const std::string& text) {
    return Parser(text).parse();
}

std::string print_presentation(const Presentation& pres) {
    std::ostringstream os;
    os << "field " << pres.field.spec().name() << "\n";
    os << "quiver {\n";
    for (int v = 0; v < pres.quiver.num_vertices(); ++v)
        os << "  vertex " << pres.quiver.vertex_name(v) << ";\n";
    for (const Arrow& a : pres.quiver.arrows())
        os << "  arrow " << a.name << ": " << pres.quiver.vertex_name(a.src)
           << " -> " << pres.quiver.vertex_name(a.tgt) << ";\n";
    os << "}\n";
    PathAlgebra pa(pres.quiver, pres.field);
    os << "relations {\n";
    for (const UniformElement& r : pres.relations)
        os << "  " << pa.to_string(r.el) << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace qha

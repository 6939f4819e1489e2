#include "covseg/session.hpp"

#include <cctype>

namespace covseg {

const CuspidalDatum* Session::find_cuspidal(const std::string& id) const {
    for (const auto& [name, datum] : cuspidals)
        if (name == id) return &datum;
    return nullptr;
}

const Multisegment* Session::find_multisegment(const std::string& name) const {
    for (const auto& [key, m] : multisegments)
        if (key == name) return &m;
    return nullptr;
}

bool Session::operator==(const Session& o) const {
    return cover == o.cover && cuspidals == o.cuspidals && multisegments == o.multisegments;
}

namespace {

struct Token {
    enum Kind { Ident, Integer, Sym, End } kind = End;
    std::string text;
    Int value = 0;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : s_(text) {}

    Token next() {
        skip();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= s_.size()) return t;
        char c = s_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            t.kind = Token::Ident;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                t.text += take();
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])))) {
            t.kind = Token::Integer;
            if (c == '-') t.text += take();
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                t.text += take();
            try {
                t.value = std::stoll(t.text);
            } catch (const std::exception&) {
                throw ParseError(t.line, t.col, "integer out of range: " + t.text);
            }
            return t;
        }
        if (std::string("[],=+_").find(c) != std::string::npos) {
            t.kind = Token::Sym;
            t.text = take();
            return t;
        }
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }

private:
    char take() {
        char c = s_[pos_++];
        if (c == '\n') { ++line_; col_ = 1; } else { ++col_; }
        return c;
    }

    void skip() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') take();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                take();
            } else {
                break;
            }
        }
    }

    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) { advance(); }

    Session parse() {
        Session s;
        if (cur_.kind != Token::Ident || cur_.text != "cover")
            throw ParseError(cur_.line, cur_.col, "no cover declared; a session starts with 'cover'");
        advance();
        std::string fam = expect_ident("cover family 'KP' or 'S'");
        if (fam == "KP") {
            Int n = expect_kv("n");
            Int a = expect_kv("a");
            s.cover = wrap([&] { return make_kp(n, a); });
        } else if (fam == "S") {
            Int n = expect_kv("n");
            s.cover = wrap([&] { return make_s(n); });
        } else {
            throw ParseError(prev_.line, prev_.col, "unknown cover family '" + fam + "'");
        }
        while (cur_.kind != Token::End) parse_decl(s);
        return s;
    }

private:
    void parse_decl(Session& s) {
        if (cur_.kind != Token::Ident)
            throw ParseError(cur_.line, cur_.col, "expected 'cuspidal' or 'm' declaration");
        if (cur_.text == "cuspidal") {
            advance();
            Token nameTok = cur_;
            std::string name = expect_ident("cuspidal name");
            Int r0 = expect_kv("r0");
            Int l = expect_kv("l");
            if (s.find_cuspidal(name))
                throw ParseError(nameTok.line, nameTok.col, "duplicate cuspidal '" + name + "'");
            CuspidalDatum d{name, r0, l};
            wrap_at(nameTok, [&] { validate_cuspidal(d, s.cover); return 0; });
            s.cuspidals.emplace_back(name, d);
        } else if (cur_.text == "m") {
            advance();
            Token nameTok = cur_;
            std::string name = expect_ident("multisegment name");
            if (s.find_multisegment(name))
                throw ParseError(nameTok.line, nameTok.col, "duplicate multisegment '" + name + "'");
            expect_sym('=');
            std::vector<Segment> segs{parse_segment(s)};
            while (cur_.kind == Token::Sym && cur_.text == "+") {
                advance();
                segs.push_back(parse_segment(s));
            }
            s.multisegments.emplace_back(name, Multisegment(std::move(segs)));
        } else {
            throw ParseError(cur_.line, cur_.col, "expected 'cuspidal' or 'm' declaration, got '" + cur_.text + "'");
        }
    }

    Segment parse_segment(const Session& s) {
        Token open = cur_;
        expect_sym('[');
        Int a = expect_int("left endpoint");
        expect_sym(',');
        Int b = expect_int("right endpoint");
        expect_sym(']');
        expect_sym('_');
        Token idTok = cur_;
        std::string id = expect_ident("cuspidal id");
        const CuspidalDatum* d = s.find_cuspidal(id);
        if (!d) throw ParseError(idTok.line, idTok.col, "unknown cuspidal '" + id + "'");
        if (b < a)
            throw ParseError(open.line, open.col,
                             "empty segment [" + std::to_string(a) + "," + std::to_string(b) + "]");
        return Segment(*d, a, b);
    }

    template <class F>
    auto wrap(F f) -> decltype(f()) {
        return wrap_at(prev_, f);
    }

    template <class F>
    auto wrap_at(const Token& t, F f) -> decltype(f()) {
        try {
            return f();
        } catch (const DomainError& e) {
            throw ParseError(t.line, t.col, e.what());
        }
    }

    std::string expect_ident(const std::string& what) {
        if (cur_.kind != Token::Ident)
            throw ParseError(cur_.line, cur_.col, "expected " + what);
        std::string text = cur_.text;
        advance();
        return text;
    }

    Int expect_int(const std::string& what) {
        if (cur_.kind != Token::Integer)
            throw ParseError(cur_.line, cur_.col, "expected " + what);
        Int v = cur_.value;
        advance();
        return v;
    }

    void expect_sym(char c) {
        if (cur_.kind != Token::Sym || cur_.text[0] != c)
            throw ParseError(cur_.line, cur_.col, std::string("expected '") + c + "'");
        advance();
    }

    Int expect_kv(const std::string& key) {
        if (cur_.kind != Token::Ident || cur_.text != key)
            throw ParseError(cur_.line, cur_.col, "expected '" + key + "='");
        advance();
        expect_sym('=');
        return expect_int("integer value for '" + key + "'");
    }

    void advance() {
        prev_ = cur_;
        cur_ = lex_.next();
    }

    Lexer lex_;
    Token cur_;
    Token prev_;
};

} // namespace

Session parse_session(const std::string& text) {
    return Parser(text).parse();
}

std::string print_session(const Session& s) {
    std::string out = "cover " + s.cover.str() + "\n";
    for (const auto& [name, d] : s.cuspidals)
        out += "cuspidal " + name + " r0=" + std::to_string(d.r0) + " l=" + std::to_string(d.l) + "\n";
    for (const auto& [name, m] : s.multisegments)
        out += "m " + name + " = " + m.str() + "\n";
    return out;
}

} // namespace covseg

#include "leavitt/expression.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace leavitt {

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error("at offset " + std::to_string(offset) + ": " + message), offset_(offset)
{
}

namespace {

enum class Tok { number, ident, star, dot, plus, minus, lparen, rparen, semicolon, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

bool id_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> lex(std::string_view s)
{
    std::vector<Token> out;
    std::size_t k = 0;
    while (k < s.size()) {
        char c = s[k];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++k;
            continue;
        }
        std::size_t start = k;
        if (id_char(c)) {
            while (k < s.size() && id_char(s[k]))
                ++k;
            std::string word(s.substr(start, k - start));
            bool digits = word.find_first_not_of("0123456789") == std::string::npos;
            if (digits && k + 1 < s.size() && s[k] == '/' && std::isdigit(static_cast<unsigned char>(s[k + 1]))) {
                ++k;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])))
                    ++k;
                word = std::string(s.substr(start, k - start));
            }
            out.push_back({digits ? Tok::number : Tok::ident, word, start});
            continue;
        }
        Tok kind;
        switch (c) {
        case '*': kind = Tok::star; break;
        case '.': kind = Tok::dot; break;
        case '+': kind = Tok::plus; break;
        case '-': kind = Tok::minus; break;
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        case ';': kind = Tok::semicolon; break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        out.push_back({kind, std::string(1, c), start});
        ++k;
    }
    out.push_back({Tok::end, "", s.size()});
    return out;
}

class Parser {
public:
    Parser(std::string_view text, const Quiver& quiver, Field field)
        : tokens_(lex(text)), quiver_(quiver), field_(field)
    {
    }

    LpaElement parse_algebra()
    {
        LpaElement out = expr();
        expect(Tok::end, "end of input");
        return out;
    }

    ComplexVector parse_vector()
    {
        ComplexVector out(field_);
        if (peek().kind == Tok::number && peek().text == "0" && tokens_[pos_ + 1].kind == Tok::end)
            return out;
        bool negative = false;
        if (accept(Tok::minus))
            negative = true;
        else
            accept(Tok::plus);
        while (true) {
            auto [b, c] = vector_term();
            out.add(b, negative ? -c : c);
            if (accept(Tok::plus))
                negative = false;
            else if (accept(Tok::minus))
                negative = true;
            else
                break;
        }
        expect(Tok::end, "end of input");
        return out;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    bool accept(Tok kind)
    {
        if (peek().kind != kind)
            return false;
        ++pos_;
        return true;
    }
    const Token& expect(Tok kind, const char* what)
    {
        if (peek().kind != kind)
            throw ParseError(std::string("expected ") + what + (peek().kind == Tok::end ? ", found end of input"
                                                                                         : ", found '" + peek().text + "'"),
                             peek().offset);
        return tokens_[pos_++];
    }

    Scalar number(const Token& t)
    {
        try {
            return Scalar::parse(t.text, field_);
        } catch (const std::exception& e) {
            throw ParseError(e.what(), t.offset);
        }
    }

    LpaElement expr()
    {
        bool negative = false;
        if (accept(Tok::minus))
            negative = true;
        else
            accept(Tok::plus);
        LpaElement out(field_);
        while (true) {
            LpaElement t = term();
            out.add_scaled(t, Scalar(negative ? -1 : 1, field_));
            if (accept(Tok::plus))
                negative = false;
            else if (accept(Tok::minus))
                negative = true;
            else
                return out;
        }
    }

    LpaElement term()
    {
        LpaElement out = factor();
        while (accept(Tok::dot))
            out = mul(quiver_, out, factor());
        return out;
    }

    bool starts_factor() const
    {
        auto k = peek().kind;
        return k == Tok::number || k == Tok::ident || k == Tok::lparen;
    }

    std::string vertex_name_in_parens()
    {
        expect(Tok::lparen, "'('");
        const Token& t = peek();
        if (t.kind != Tok::ident && t.kind != Tok::number)
            throw ParseError("expected vertex id", t.offset);
        ++pos_;
        expect(Tok::rparen, "')'");
        return t.text;
    }

    VertexId vertex(const std::string& name, std::size_t offset)
    {
        auto v = quiver_.find_vertex(name);
        if (!v)
            throw ParseError("unknown vertex '" + name + "'", offset);
        return *v;
    }

    ArrowId arrow(const Token& t)
    {
        auto a = quiver_.find_arrow(t.text);
        if (!a)
            throw ParseError("unknown arrow '" + t.text + "'", t.offset);
        return *a;
    }

    LpaElement factor()
    {
        const Token& t = peek();
        if (t.kind == Tok::number) {
            ++pos_;
            Scalar c = number(t);
            if (starts_factor())
                return factor() * c;
            return unit(quiver_, field_) * c;
        }
        if (t.kind == Tok::lparen) {
            ++pos_;
            LpaElement inner = expr();
            expect(Tok::rparen, "')'");
            return inner;
        }
        if (t.kind == Tok::ident) {
            ++pos_;
            if (t.text == "e" && peek().kind == Tok::lparen) {
                std::size_t at = peek().offset;
                return vertex_element(quiver_, vertex(vertex_name_in_parens(), at), field_);
            }
            ArrowId a = arrow(t);
            if (accept(Tok::star))
                return ghost_element(quiver_, a, field_);
            return arrow_element(quiver_, a, field_);
        }
        throw ParseError(t.kind == Tok::end ? "unexpected end of input" : "unexpected '" + t.text + "'", t.offset);
    }

    Path path()
    {
        const Token& t = peek();
        if (t.kind == Tok::ident && t.text == "e" && tokens_[pos_ + 1].kind == Tok::lparen) {
            ++pos_;
            std::size_t at = peek().offset;
            return Path::trivial(vertex(vertex_name_in_parens(), at));
        }
        std::vector<ArrowId> written;
        std::size_t start = t.offset;
        while (true) {
            const Token& a = expect(Tok::ident, "arrow id");
            written.push_back(arrow(a));
            if (!accept(Tok::dot))
                break;
        }
        std::reverse(written.begin(), written.end());
        try {
            return make_path(quiver_, written);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), start);
        }
    }

    std::pair<BasisVector, Scalar> vector_term()
    {
        Scalar coeff(1, field_);
        if (peek().kind == Tok::number) {
            coeff = number(tokens_[pos_++]);
            accept(Tok::star);
        }
        const Token& s = expect(Tok::ident, "socle E(...) or G(...)");
        Socle socle;
        if (s.text == "E") {
            std::size_t at = peek().offset;
            socle = Socle::E(vertex(vertex_name_in_parens(), at));
        } else if (s.text == "G") {
            expect(Tok::lparen, "'('");
            socle = Socle::G(arrow(expect(Tok::ident, "arrow id")));
            expect(Tok::rparen, "')'");
        } else {
            throw ParseError("expected socle E(...) or G(...), found '" + s.text + "'", s.offset);
        }
        const Token& z = expect(Tok::ident, "'zeta'");
        if (z.text != "zeta")
            throw ParseError("expected 'zeta', found '" + z.text + "'", z.offset);
        expect(Tok::lparen, "'('");
        Path p = path();
        expect(Tok::semicolon, "';'");
        Path q = path();
        expect(Tok::rparen, "')'");
        BasisVector b{socle, {p, q}};
        if (!is_admissible(quiver_, p, q))
            throw ParseError("(" + format_path(quiver_, p) + " ; " + format_path(quiver_, q) + ") is not admissible",
                             s.offset);
        if (socle_vertex(quiver_, socle) != q.source)
            throw ParseError("socle vertex differs from the source of q", s.offset);
        return {b, coeff};
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    const Quiver& quiver_;
    Field field_;
};

template <class Key, class Fmt>
std::string format_combination(const Combination<Key>& v, const char* joiner, Fmt&& fmt, bool always_coeff)
{
    if (v.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : v.terms()) {
        bool negative = c.is_negative();
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        Scalar mag = c.abs();
        if (always_coeff || !mag.is_one())
            out += mag.to_string() + joiner;
        out += fmt(key);
        first = false;
    }
    return out;
}

}  // namespace

LpaElement parse_expression(std::string_view text, const Quiver& quiver, Field field)
{
    return Parser(text, quiver, field).parse_algebra();
}

ComplexVector parse_vector(std::string_view text, const Quiver& quiver, Field field)
{
    return Parser(text, quiver, field).parse_vector();
}

std::string format_monomial(const Quiver& quiver, const AdmissiblePair& pair)
{
    if (pair.p.is_trivial() && pair.q.is_trivial())
        return "e(" + quiver.vertex_name(pair.p.source) + ")";
    std::string out;
    auto letter = [&](const std::string& s) {
        if (!out.empty())
            out += " . ";
        out += s;
    };
    for (ArrowId a : pair.p.arrows)
        letter(quiver.arrow_name(a) + "*");
    for (auto it = pair.q.arrows.rbegin(); it != pair.q.arrows.rend(); ++it)
        letter(quiver.arrow_name(*it));
    return out;
}

std::string format_lpa(const Quiver& quiver, const LpaElement& a)
{
    return format_combination(a, " ", [&](const AdmissiblePair& m) { return format_monomial(quiver, m); }, false);
}

std::string format_basis_vector(const Quiver& quiver, const BasisVector& b)
{
    std::string socle = b.socle.is_vertex() ? "E(" + quiver.vertex_name(b.socle.id) + ")"
                                            : "G(" + quiver.arrow_name(b.socle.id) + ")";
    return socle + " zeta(" + format_path(quiver, b.pair.p) + " ; " + format_path(quiver, b.pair.q) + ")";
}

std::string format_vector(const Quiver& quiver, const ComplexVector& v)
{
    return format_combination(v, " * ", [&](const BasisVector& b) { return format_basis_vector(quiver, b); }, true);
}

}  // namespace leavitt

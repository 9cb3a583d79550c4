#include "leavitt/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace leavitt {

QuiverError::QuiverError(const std::string& message, int line, int column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message
                                  : message),
      line_(line), column_(column)
{
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows,
               std::vector<std::pair<std::string, std::string>> special_overrides)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows))
{
    std::set<std::string> seen;
    for (const auto& v : vertices_)
        if (!seen.insert(v).second)
            throw QuiverError("duplicate vertex id '" + v + "'");
    if (vertices_.empty())
        throw QuiverError("quiver has no vertices");

    std::sort(arrows_.begin(), arrows_.end(), [](const Arrow& a, const Arrow& b) { return a.name < b.name; });
    for (std::size_t k = 1; k < arrows_.size(); ++k)
        if (arrows_[k].name == arrows_[k - 1].name)
            throw QuiverError("duplicate arrow id '" + arrows_[k].name + "'");

    outgoing_.assign(vertices_.size(), {});
    incoming_.assign(vertices_.size(), {});
    for (ArrowId a = 0; a < arrow_count(); ++a) {
        const auto& arr = arrows_[a];
        if (arr.source < 0 || arr.source >= vertex_count() || arr.target < 0 || arr.target >= vertex_count())
            throw QuiverError("arrow '" + arr.name + "' has an endpoint outside the vertex set");
        outgoing_[arr.source].push_back(a);
        incoming_[arr.target].push_back(a);
    }
    for (VertexId v = 0; v < vertex_count(); ++v)
        if (outgoing_[v].empty())
            throw QuiverError("vertex '" + vertices_[v] + "' is a sink (no outgoing arrow)");

    special_.resize(vertices_.size());
    for (VertexId v = 0; v < vertex_count(); ++v)
        special_[v] = outgoing_[v].front();
    std::set<VertexId> overridden;
    for (const auto& [vname, aname] : special_overrides) {
        auto v = find_vertex(vname);
        if (!v)
            throw QuiverError("special arrow declared for unknown vertex '" + vname + "'");
        auto a = find_arrow(aname);
        if (!a)
            throw QuiverError("unknown special arrow '" + aname + "'");
        if (source(*a) != *v)
            throw QuiverError("special arrow '" + aname + "' does not start at vertex '" + vname + "'");
        if (!overridden.insert(*v).second)
            throw QuiverError("vertex '" + vname + "' has more than one special arrow");
        special_[*v] = *a;
    }
}

std::optional<VertexId> Quiver::find_vertex(std::string_view name) const
{
    for (VertexId v = 0; v < vertex_count(); ++v)
        if (vertices_[v] == name)
            return v;
    return std::nullopt;
}

std::optional<ArrowId> Quiver::find_arrow(std::string_view name) const
{
    auto it = std::lower_bound(arrows_.begin(), arrows_.end(), name,
                               [](const Arrow& a, std::string_view n) { return a.name < n; });
    if (it == arrows_.end() || it->name != name)
        return std::nullopt;
    return static_cast<ArrowId>(it - arrows_.begin());
}

VertexId Quiver::vertex(std::string_view name) const
{
    if (auto v = find_vertex(name))
        return *v;
    throw QuiverError("unknown vertex '" + std::string(name) + "'");
}

ArrowId Quiver::arrow(std::string_view name) const
{
    if (auto a = find_arrow(name))
        return *a;
    throw QuiverError("unknown arrow '" + std::string(name) + "'");
}

std::vector<ArrowId> Quiver::companions(ArrowId alpha) const
{
    std::vector<ArrowId> out;
    for (ArrowId b : outgoing(source(alpha)))
        if (b != alpha)
            out.push_back(b);
    return out;
}

std::string Quiver::canonical_text() const
{
    std::ostringstream out;
    out << "vertices:";
    for (const auto& v : vertices_)
        out << ' ' << v;
    out << '\n';
    for (const auto& a : arrows_)
        out << "arrow " << a.name << ": " << vertices_[a.source] << " -> " << vertices_[a.target] << '\n';
    for (VertexId v = 0; v < vertex_count(); ++v)
        out << "special " << vertices_[v] << ": " << arrows_[special_[v]].name << '\n';
    return out.str();
}

namespace {

struct Token {
    std::string text;
    int column;
};

bool is_id_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> tokenize(const std::string& line, int line_no)
{
    std::vector<Token> out;
    std::size_t k = 0;
    while (k < line.size()) {
        char c = line[k];
        if (c == '#')
            break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++k;
            continue;
        }
        int column = static_cast<int>(k) + 1;
        if (c == ':') {
            out.push_back({":", column});
            ++k;
        } else if (c == '-' && k + 1 < line.size() && line[k + 1] == '>') {
            out.push_back({"->", column});
            k += 2;
        } else if (is_id_char(c)) {
            std::size_t start = k;
            while (k < line.size() && is_id_char(line[k]))
                ++k;
            out.push_back({line.substr(start, k - start), column});
        } else {
            throw QuiverError(std::string("unexpected character '") + c + "'", line_no, column);
        }
    }
    return out;
}

}  // namespace

Quiver parse_quiver(std::string_view text)
{
    std::vector<std::string> vertices;
    std::map<std::string, int> vertex_index;
    struct PendingArrow {
        std::string name, source, target;
        int line, column;
    };
    std::vector<PendingArrow> pending;
    std::vector<std::pair<std::string, std::string>> specials;
    std::vector<std::pair<int, int>> special_pos;

    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line, line_no);
        if (tokens.empty())
            continue;
        auto expect = [&](std::size_t idx, const char* what) -> const Token& {
            if (idx >= tokens.size()) {
                int col = static_cast<int>(line.size()) + 1;
                throw QuiverError(std::string("expected ") + what, line_no, col);
            }
            return tokens[idx];
        };
        auto expect_id = [&](std::size_t idx, const char* what) -> const Token& {
            const Token& t = expect(idx, what);
            if (t.text == ":" || t.text == "->")
                throw QuiverError(std::string("expected ") + what, line_no, t.column);
            return t;
        };
        auto expect_literal = [&](std::size_t idx, const char* lit) {
            const Token& t = expect(idx, lit);
            if (t.text != lit)
                throw QuiverError(std::string("expected '") + lit + "'", line_no, t.column);
        };
        auto expect_end = [&](std::size_t idx) {
            if (idx < tokens.size())
                throw QuiverError("unexpected token '" + tokens[idx].text + "'", line_no, tokens[idx].column);
        };

        const std::string& head = tokens[0].text;
        if (head == "vertices") {
            expect_literal(1, ":");
            for (std::size_t k = 2; k < tokens.size(); ++k) {
                const Token& t = expect_id(k, "vertex id");
                if (vertex_index.count(t.text))
                    throw QuiverError("duplicate vertex id '" + t.text + "'", line_no, t.column);
                vertex_index[t.text] = static_cast<int>(vertices.size());
                vertices.push_back(t.text);
            }
        } else if (head == "arrow") {
            const Token& id = expect_id(1, "arrow id");
            expect_literal(2, ":");
            const Token& src = expect_id(3, "source vertex");
            expect_literal(4, "->");
            const Token& tgt = expect_id(5, "target vertex");
            expect_end(6);
            for (const auto& p : pending)
                if (p.name == id.text)
                    throw QuiverError("duplicate arrow id '" + id.text + "'", line_no, id.column);
            pending.push_back({id.text, src.text, tgt.text, line_no, src.column});
            if (!vertex_index.count(src.text))
                throw QuiverError("unknown vertex '" + src.text + "' in arrow '" + id.text + "'", line_no, src.column);
            if (!vertex_index.count(tgt.text))
                throw QuiverError("unknown vertex '" + tgt.text + "' in arrow '" + id.text + "'", line_no, tgt.column);
        } else if (head == "special") {
            const Token& v = expect_id(1, "vertex id");
            expect_literal(2, ":");
            const Token& a = expect_id(3, "arrow id");
            expect_end(4);
            specials.emplace_back(v.text, a.text);
            special_pos.emplace_back(line_no, v.column);
        } else {
            throw QuiverError("unknown directive '" + head + "'", line_no, tokens[0].column);
        }
    }

    std::vector<Quiver::Arrow> arrows;
    for (const auto& p : pending)
        arrows.push_back({p.name, vertex_index.at(p.source), vertex_index.at(p.target)});

    // Validate specials here so errors carry a position.
    for (std::size_t k = 0; k < specials.size(); ++k) {
        const auto& [vname, aname] = specials[k];
        auto [ln, col] = special_pos[k];
        if (!vertex_index.count(vname))
            throw QuiverError("special arrow declared for unknown vertex '" + vname + "'", ln, col);
        auto it = std::find_if(pending.begin(), pending.end(), [&](const PendingArrow& p) { return p.name == aname; });
        if (it == pending.end())
            throw QuiverError("unknown special arrow '" + aname + "'", ln, col);
        if (it->source != vname)
            throw QuiverError("special arrow '" + aname + "' does not start at vertex '" + vname + "'", ln, col);
        for (std::size_t j = 0; j < k; ++j)
            if (specials[j].first == vname)
                throw QuiverError("vertex '" + vname + "' has more than one special arrow", ln, col);
    }

    return Quiver(std::move(vertices), std::move(arrows), std::move(specials));
}

Quiver load_quiver(const std::string& filename)
{
    std::ifstream in(filename);
    if (!in)
        throw QuiverError("cannot open quiver file '" + filename + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_quiver(buf.str());
}

Path make_path(const Quiver& q, const std::vector<ArrowId>& arrows)
{
    if (arrows.empty())
        throw std::invalid_argument("make_path needs at least one arrow; use Path::trivial");
    for (std::size_t k = 1; k < arrows.size(); ++k)
        if (q.target(arrows[k - 1]) != q.source(arrows[k]))
            throw std::invalid_argument("arrows '" + q.arrow_name(arrows[k - 1]) + "' and '" + q.arrow_name(arrows[k]) +
                                        "' do not compose");
    return Path{q.source(arrows.front()), q.target(arrows.back()), arrows};
}

Path truncate_hat(const Quiver& q, const Path& p)
{
    if (p.is_trivial())
        throw std::invalid_argument("truncate_hat of a trivial path");
    Path r = p;
    r.arrows.pop_back();
    r.target = r.arrows.empty() ? r.source : q.target(r.arrows.back());
    return r;
}

Path truncate_tilde(const Quiver& q, const Path& p)
{
    if (p.is_trivial())
        throw std::invalid_argument("truncate_tilde of a trivial path");
    Path r = p;
    r.arrows.erase(r.arrows.begin());
    r.source = r.arrows.empty() ? r.target : q.source(r.arrows.front());
    return r;
}

Path then_arrow(const Quiver& q, const Path& p, ArrowId alpha)
{
    if (q.source(alpha) != p.target)
        throw std::invalid_argument("arrow '" + q.arrow_name(alpha) + "' does not start at the end of the path");
    Path r = p;
    r.arrows.push_back(alpha);
    r.target = q.target(alpha);
    return r;
}

Path after_arrow(const Quiver& q, ArrowId alpha, const Path& p)
{
    if (q.target(alpha) != p.source)
        throw std::invalid_argument("arrow '" + q.arrow_name(alpha) + "' does not end at the start of the path");
    Path r = p;
    r.arrows.insert(r.arrows.begin(), alpha);
    r.source = q.source(alpha);
    return r;
}

Path compose(const Path& later, const Path& earlier)
{
    if (earlier.target != later.source)
        throw std::invalid_argument("paths do not compose");
    Path r = earlier;
    r.arrows.insert(r.arrows.end(), later.arrows.begin(), later.arrows.end());
    r.target = later.target;
    return r;
}

std::vector<Path> enumerate_paths(const Quiver& q, int length, std::optional<VertexId> from, std::optional<VertexId> to)
{
    std::vector<Path> out;
    if (length < 0)
        return out;
    if (length == 0) {
        for (VertexId v = 0; v < q.vertex_count(); ++v)
            if ((!from || *from == v) && (!to || *to == v))
                out.push_back(Path::trivial(v));
        std::sort(out.begin(), out.end());
        return out;
    }
    // Depth-first in arrow-id order yields lexicographic order directly.
    std::vector<ArrowId> stack;
    auto rec = [&](auto&& self, VertexId at) -> void {
        if (static_cast<int>(stack.size()) == length) {
            if (!to || *to == at)
                out.push_back(make_path(q, stack));
            return;
        }
        for (ArrowId a : q.outgoing(at)) {
            stack.push_back(a);
            self(self, q.target(a));
            stack.pop_back();
        }
    };
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        if (from && q.source(a) != *from)
            continue;
        stack.assign(1, a);
        rec(rec, q.target(a));
    }
    return out;
}

std::string format_path(const Quiver& q, const Path& p)
{
    if (p.is_trivial())
        return "e(" + q.vertex_name(p.source) + ")";
    std::string out;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
        if (!out.empty())
            out += '.';
        out += q.arrow_name(*it);
    }
    return out;
}

namespace {

std::string trim(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

}  // namespace

Path parse_path(const Quiver& q, std::string_view text)
{
    std::string t = trim(text);
    if (t.size() > 3 && t.substr(0, 2) == "e(" && t.back() == ')')
        return Path::trivial(q.vertex(trim(std::string_view(t).substr(2, t.size() - 3))));
    std::vector<ArrowId> written;
    std::size_t start = 0;
    while (true) {
        auto dot = t.find('.', start);
        std::string name = trim(std::string_view(t).substr(start, dot == std::string::npos ? std::string::npos : dot - start));
        if (name.empty())
            throw std::invalid_argument("malformed path '" + t + "'");
        written.push_back(q.arrow(name));
        if (dot == std::string::npos)
            break;
        start = dot + 1;
    }
    std::reverse(written.begin(), written.end());
    return make_path(q, written);
}

}  // namespace leavitt

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace leavitt {

using VertexId = int;
using ArrowId = int;

class QuiverError : public std::runtime_error {
public:
    QuiverError(const std::string& message, int line = 0, int column = 0);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Finite quiver without sinks. Vertices keep declaration order; arrows are
// indexed in lexicographic order of their ids, so comparing arrow indices
// compares ids.
class Quiver {
public:
    struct Arrow {
        std::string name;
        VertexId source;
        VertexId target;
    };

    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows,
           std::vector<std::pair<std::string, std::string>> special_overrides = {});

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }

    const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
    const std::string& arrow_name(ArrowId a) const { return arrows_.at(a).name; }
    VertexId source(ArrowId a) const { return arrows_.at(a).source; }
    VertexId target(ArrowId a) const { return arrows_.at(a).target; }

    std::optional<VertexId> find_vertex(std::string_view name) const;
    std::optional<ArrowId> find_arrow(std::string_view name) const;
    VertexId vertex(std::string_view name) const;
    ArrowId arrow(std::string_view name) const;

    ArrowId special(VertexId v) const { return special_.at(v); }
    bool is_special(ArrowId a) const { return special_.at(source(a)) == a; }

    // Outgoing / incoming arrows, in arrow-id order.
    const std::vector<ArrowId>& outgoing(VertexId v) const { return outgoing_.at(v); }
    const std::vector<ArrowId>& incoming(VertexId v) const { return incoming_.at(v); }

    // S(alpha): the other arrows sharing the source of alpha.
    std::vector<ArrowId> companions(ArrowId alpha) const;

    // Normalized text form, used for report digests.
    std::string canonical_text() const;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<ArrowId> special_;
    std::vector<std::vector<ArrowId>> outgoing_;
    std::vector<std::vector<ArrowId>> incoming_;
};

Quiver parse_quiver(std::string_view text);
Quiver load_quiver(const std::string& filename);

// A path alpha_n ... alpha_1, stored first-traversed first: arrows = [alpha_1, ..., alpha_n].
struct Path {
    VertexId source = 0;
    VertexId target = 0;
    std::vector<ArrowId> arrows;

    static Path trivial(VertexId v) { return Path{v, v, {}}; }
    static Path of_arrow(const Quiver& q, ArrowId a) { return Path{q.source(a), q.target(a), {a}}; }

    int length() const { return static_cast<int>(arrows.size()); }
    bool is_trivial() const { return arrows.empty(); }
    ArrowId last() const { return arrows.back(); }
    ArrowId first() const { return arrows.front(); }

    friend bool operator==(const Path&, const Path&) = default;
    friend std::strong_ordering operator<=>(const Path& a, const Path& b)
    {
        if (auto c = a.arrows <=> b.arrows; c != 0)
            return c;
        return a.source <=> b.source;
    }
};

// Builds a path from arrows listed first-traversed first; checks composability.
Path make_path(const Quiver& q, const std::vector<ArrowId>& arrows);

// p-hat drops the last-traversed arrow, p-tilde the first-traversed one.
Path truncate_hat(const Quiver& q, const Path& p);
Path truncate_tilde(const Quiver& q, const Path& p);

// alpha p: traverse p, then alpha. Requires s(alpha) = t(p).
Path then_arrow(const Quiver& q, const Path& p, ArrowId alpha);
// p alpha: traverse alpha, then p. Requires t(alpha) = s(p).
Path after_arrow(const Quiver& q, ArrowId alpha, const Path& p);
// later . earlier: traverse earlier, then later.
Path compose(const Path& later, const Path& earlier);

std::vector<Path> enumerate_paths(const Quiver& q, int length,
                                  std::optional<VertexId> from = std::nullopt,
                                  std::optional<VertexId> to = std::nullopt);

// Text form: `e(v)` for trivial paths, otherwise arrow ids joined by `.`
// with the last-traversed arrow first (the written order of alpha_n ... alpha_1).
std::string format_path(const Quiver& q, const Path& p);
Path parse_path(const Quiver& q, std::string_view text);

}  // namespace leavitt

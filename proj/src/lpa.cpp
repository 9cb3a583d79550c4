#include "leavitt/lpa.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace leavitt {

bool is_admissible(const Quiver& quiver, const Path& p, const Path& q)
{
    if (p.target != q.target)
        return false;
    if (p.is_trivial() || q.is_trivial())
        return true;
    return p.last() != q.last() || !quiver.is_special(p.last());
}

std::vector<AdmissiblePair> enumerate_B(const Quiver& quiver, VertexId i, int l, int n)
{
    std::vector<AdmissiblePair> out;
    int plen = n - l;
    if (n < 0 || plen < 0)
        return out;
    auto qs = enumerate_paths(quiver, n, i);
    std::map<VertexId, std::vector<Path>> ps_by_target;
    for (const auto& qq : qs) {
        if (ps_by_target.count(qq.target))
            continue;
        ps_by_target[qq.target] = enumerate_paths(quiver, plen, std::nullopt, qq.target);
    }
    for (const auto& qq : qs)
        for (const auto& p : ps_by_target[qq.target])
            if (is_admissible(quiver, p, qq))
                out.push_back({p, qq});
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Path canonical_walk(const Quiver& quiver, VertexId from, int steps)
{
    Path p = Path::trivial(from);
    for (int k = 0; k < steps; ++k)
        p = then_arrow(quiver, p, quiver.outgoing(p.target).front());
    return p;
}

std::optional<ArrowId> least_loop(const Quiver& quiver, VertexId v)
{
    for (ArrowId a : quiver.outgoing(v))
        if (quiver.target(a) == v)
            return a;
    return std::nullopt;
}

// Shortest path (breadth first, arrow-id order) from i to a vertex carrying a loop.
std::optional<Path> path_to_loop(const Quiver& quiver, VertexId i)
{
    std::vector<std::optional<Path>> reached(quiver.vertex_count());
    std::deque<VertexId> queue{i};
    reached[i] = Path::trivial(i);
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        if (least_loop(quiver, v))
            return reached[v];
        for (ArrowId a : quiver.outgoing(v)) {
            VertexId w = quiver.target(a);
            if (!reached[w]) {
                reached[w] = then_arrow(quiver, *reached[v], a);
                queue.push_back(w);
            }
        }
    }
    return std::nullopt;
}

}  // namespace

AdmissiblePair witness_admissible(const Quiver& quiver, VertexId i, int l)
{
    if (l >= 0) {
        Path q = canonical_walk(quiver, i, l);
        return {Path::trivial(q.target), q};
    }

    if (auto q = path_to_loop(quiver, i)) {
        ArrowId alpha = *least_loop(quiver, q->target);
        Path p = Path::trivial(q->target);
        for (int k = 0; k < q->length() - l; ++k)
            p = then_arrow(quiver, p, alpha);
        return {p, *q};
    }

    // Walk alpha_1, alpha_2, ... until alpha_n repeats alpha_m (1-based, m < n).
    std::vector<ArrowId> walk;
    std::map<ArrowId, int> first_seen;
    VertexId at = i;
    int m = 0, n = 0;
    while (true) {
        ArrowId a = quiver.outgoing(at).front();
        walk.push_back(a);
        int index = static_cast<int>(walk.size());
        if (auto it = first_seen.find(a); it != first_seen.end()) {
            m = it->second;
            n = index;
            break;
        }
        first_seen[a] = index;
        at = quiver.target(a);
    }
    auto alpha = [&](int k) { return walk[k - 1]; };
    int period = n - m;
    int s = (m - l - 1) / period;  // m - l - 1 > 0, so this is the floor
    int t = m - l - 1 - s * period;

    std::vector<ArrowId> p_arrows;
    for (int k = n - t; k <= n - 1; ++k)
        p_arrows.push_back(alpha(k));
    for (int rep = 0; rep < s; ++rep)
        for (int k = m; k <= n - 1; ++k)
            p_arrows.push_back(alpha(k));
    std::vector<ArrowId> q_arrows;
    for (int k = 1; k <= m - 1; ++k)
        q_arrows.push_back(alpha(k));

    Path q = q_arrows.empty() ? Path::trivial(i) : make_path(quiver, q_arrows);
    Path p = make_path(quiver, p_arrows);
    return {p, q};
}

LpaElement monomial(const AdmissiblePair& pair, Field field)
{
    return LpaElement::basis(pair, field);
}

LpaElement unit(const Quiver& quiver, Field field)
{
    LpaElement out(field);
    for (VertexId v = 0; v < quiver.vertex_count(); ++v)
        out += vertex_element(quiver, v, field);
    return out;
}

LpaElement vertex_element(const Quiver& quiver, VertexId v, Field field)
{
    if (v < 0 || v >= quiver.vertex_count())
        throw std::out_of_range("vertex index out of range");
    return monomial({Path::trivial(v), Path::trivial(v)}, field);
}

LpaElement arrow_element(const Quiver& quiver, ArrowId a, Field field)
{
    return monomial({Path::trivial(quiver.target(a)), Path::of_arrow(quiver, a)}, field);
}

LpaElement ghost_element(const Quiver& quiver, ArrowId a, Field field)
{
    return monomial({Path::of_arrow(quiver, a), Path::trivial(quiver.target(a))}, field);
}

void reduce_into(const Quiver& quiver, LpaElement& out, Path p, Path q, const Scalar& coeff)
{
    if (p.target != q.target)
        throw std::invalid_argument("reduce_into: paths with different targets");
    while (!p.is_trivial() && !q.is_trivial() && p.last() == q.last() && quiver.is_special(p.last())) {
        ArrowId alpha = p.last();
        Path ph = truncate_hat(quiver, p);
        Path qh = truncate_hat(quiver, q);
        for (ArrowId beta : quiver.companions(alpha))
            out.add({then_arrow(quiver, ph, beta), then_arrow(quiver, qh, beta)}, -coeff);
        p = std::move(ph);
        q = std::move(qh);
    }
    out.add({std::move(p), std::move(q)}, coeff);
}

LpaElement multiply_monomials(const Quiver& quiver, const AdmissiblePair& left, const AdmissiblePair& right, Field field)
{
    LpaElement out(field);
    const Path& q = left.q;
    const Path& gamma = right.p;
    // The middle factor q gamma* is nonzero only if both paths start at the
    // same vertex and one is a first-traversed prefix of the other.
    if (q.source != gamma.source)
        return out;
    std::size_t k = 0;
    while (k < q.arrows.size() && k < gamma.arrows.size()) {
        if (q.arrows[k] != gamma.arrows[k])
            return out;
        ++k;
    }
    Scalar one(1, field);
    if (k == q.arrows.size() && k == gamma.arrows.size()) {
        reduce_into(quiver, out, left.p, right.q, one);
    } else if (k == q.arrows.size()) {
        Path p = left.p;
        for (std::size_t j = k; j < gamma.arrows.size(); ++j)
            p = then_arrow(quiver, p, gamma.arrows[j]);
        reduce_into(quiver, out, std::move(p), right.q, one);
    } else {
        Path eta = right.q;
        for (std::size_t j = k; j < q.arrows.size(); ++j)
            eta = then_arrow(quiver, eta, q.arrows[j]);
        reduce_into(quiver, out, left.p, std::move(eta), one);
    }
    return out;
}

LpaElement mul(const Quiver& quiver, const LpaElement& a, const LpaElement& b)
{
    if (a.is_zero() || b.is_zero()) {
        if (!a.is_zero() && !b.is_zero() && !(a.field() == b.field()))
            throw FieldMismatch("mul: field mismatch");
        return LpaElement(a.is_zero() ? b.field() : a.field());
    }
    if (!(a.field() == b.field()))
        throw FieldMismatch("mul: field mismatch: " + a.field().name() + " vs " + b.field().name());
    Field field = a.field();
    LpaElement out(field);
    for (const auto& [x, cx] : a.terms())
        for (const auto& [y, cy] : b.terms())
            out.add_scaled(multiply_monomials(quiver, x, y, field), cx * cy);
    return out;
}

std::map<int, LpaElement> grade(const LpaElement& a)
{
    std::map<int, LpaElement> out;
    for (const auto& [pair, coeff] : a.terms()) {
        auto [it, _] = out.try_emplace(pair.degree(), LpaElement(a.field()));
        it->second.add(pair, coeff);
    }
    return out;
}

std::optional<int> homogeneous_degree(const LpaElement& a)
{
    std::optional<int> d;
    for (const auto& [pair, coeff] : a.terms()) {
        if (d && *d != pair.degree())
            return std::nullopt;
        d = pair.degree();
    }
    return d;
}

AdmissiblePair star(const AdmissiblePair& pair)
{
    return {pair.q, pair.p};
}

bool is_normal_form(const Quiver& quiver, const LpaElement& a)
{
    for (const auto& [pair, coeff] : a.terms())
        if (coeff.is_zero() || !is_admissible(quiver, pair.p, pair.q))
            return false;
    return true;
}

}  // namespace leavitt

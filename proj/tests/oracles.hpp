#pragma once

// Independent reference models used only by the tests. They share nothing with
// the library except the Quiver accessors.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "leavitt/lpa.hpp"

namespace oracle {

using leavitt::Quiver;

// All arrow sequences of the given length that compose, first-traversed first.
// Plain odometer over arrow_count^length.
inline std::vector<std::vector<int>> all_walks(const Quiver& q, int length, int from)
{
    std::vector<std::vector<int>> out;
    if (length == 0) {
        out.push_back({});
        return out;
    }
    int m = q.arrow_count();
    std::vector<int> digits(length, 0);
    while (true) {
        bool ok = q.source(digits[0]) == from;
        for (int k = 1; ok && k < length; ++k)
            ok = q.source(digits[k]) == q.target(digits[k - 1]);
        if (ok)
            out.push_back(digits);
        int k = 0;
        while (k < length && ++digits[k] == m)
            digits[k++] = 0;
        if (k == length)
            break;
    }
    return out;
}

// |B^{l,n}_i| by filtering every pair of walks.
inline long brute_force_count(const Quiver& q, int i, int l, int n)
{
    int lp = n - l;
    if (lp < 0)
        return 0;
    auto qs = all_walks(q, n, i);
    long count = 0;
    for (int from = 0; from < q.vertex_count(); ++from)
        for (const auto& p : all_walks(q, lp, from))
            for (const auto& w : qs) {
                int tp = p.empty() ? from : q.target(p.back());
                int tq = w.empty() ? i : q.target(w.back());
                if (tp != tq)
                    continue;
                if (!p.empty() && !w.empty() && p.back() == w.back() && q.special(q.source(p.back())) == p.back())
                    continue;
                ++count;
            }
    return count;
}

// Closed form for one vertex with two loops, one of them special.
inline long two_loop_count(int l, int n)
{
    int lp = n - l;
    if (lp < 0)
        return 0;
    if (n == 0 && lp == 0)
        return 1;
    if (n == 0 || lp == 0)
        return 1L << (n + lp);
    return 3L * (1L << (n + lp - 2));
}

// Words in the double quiver, written left to right as algebra products.
struct Letter {
    int arrow;
    bool ghost;
    auto operator<=>(const Letter&) const = default;
};

struct Word {
    int vertex = -1;  // only meaningful for the empty word
    std::vector<Letter> letters;
    auto operator<=>(const Word&) const = default;
};

using WordSum = std::map<Word, long long>;

class WordAlgebra {
public:
    explicit WordAlgebra(const Quiver& q) : q_(q) {}

    int left(const Word& w) const
    {
        if (w.letters.empty())
            return w.vertex;
        const Letter& a = w.letters.front();
        return a.ghost ? q_.source(a.arrow) : q_.target(a.arrow);
    }
    int right(const Word& w) const
    {
        if (w.letters.empty())
            return w.vertex;
        const Letter& a = w.letters.back();
        return a.ghost ? q_.target(a.arrow) : q_.source(a.arrow);
    }

    Word vertex(int v) const { return {v, {}}; }
    Word arrow(int a) const { return {-1, {{a, false}}}; }
    Word ghost(int a) const { return {-1, {{a, true}}}; }

    // p* q: ghosts of p in traversal order, then the arrows of q last-traversed first.
    Word from_pair(const leavitt::AdmissiblePair& x) const
    {
        Word w;
        for (int a : x.p.arrows)
            w.letters.push_back({a, true});
        for (auto it = x.q.arrows.rbegin(); it != x.q.arrows.rend(); ++it)
            w.letters.push_back({*it, false});
        if (w.letters.empty())
            w.vertex = x.p.source;
        return w;
    }

    WordSum concat(const Word& a, const Word& b) const
    {
        if (right(a) != left(b))
            return {};
        Word w;
        w.letters = a.letters;
        w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
        w.vertex = w.letters.empty() ? a.vertex : -1;
        return normalize({{w, 1}});
    }

    WordSum product(const WordSum& a, const WordSum& b) const
    {
        WordSum out;
        for (const auto& [wa, ca] : a)
            for (const auto& [wb, cb] : b)
                for (const auto& [w, c] : concat(wa, wb))
                    add(out, w, ca * cb * c);
        return out;
    }

    // Rewrites alpha beta* -> delta e and alpha* alpha -> e - sum beta* beta
    // (alpha special, beta its companions) until neither applies.
    WordSum normalize(WordSum in) const
    {
        WordSum done;
        while (!in.empty()) {
            auto node = in.extract(in.begin());
            Word w = node.key();
            long long c = node.mapped();
            int at = -1;
            bool cancel = false;
            for (std::size_t k = 0; k + 1 < w.letters.size(); ++k) {
                const Letter& x = w.letters[k];
                const Letter& y = w.letters[k + 1];
                if (!x.ghost && y.ghost) {
                    at = static_cast<int>(k);
                    cancel = true;
                    break;
                }
                if (x.ghost && !y.ghost && x.arrow == y.arrow && q_.special(q_.source(x.arrow)) == x.arrow) {
                    at = static_cast<int>(k);
                    break;
                }
            }
            if (at < 0) {
                add(done, w, c);
                continue;
            }
            int alpha = w.letters[at].arrow;
            auto dropped = [&] {
                Word r;
                r.letters = w.letters;
                r.letters.erase(r.letters.begin() + at, r.letters.begin() + at + 2);
                if (r.letters.empty())
                    r.vertex = cancel ? q_.target(alpha) : q_.source(alpha);
                return r;
            };
            if (cancel) {
                if (alpha == w.letters[at + 1].arrow)
                    add(in, dropped(), c);
                continue;
            }
            add(in, dropped(), c);
            for (int beta : q_.outgoing(q_.source(alpha))) {
                if (beta == alpha)
                    continue;
                Word r = w;
                r.letters[at] = {beta, true};
                r.letters[at + 1] = {beta, false};
                add(in, r, -c);
            }
        }
        return done;
    }

    // Library element to word sum; coefficients must be integers.
    WordSum from_element(const leavitt::LpaElement& a) const
    {
        WordSum out;
        for (const auto& [x, c] : a.terms())
            add(out, from_pair(x), std::stoll(c.to_string()));
        return out;
    }

    static void add(WordSum& s, const Word& w, long long c)
    {
        if (c == 0)
            return;
        auto [it, fresh] = s.emplace(w, c);
        if (!fresh && (it->second += c) == 0)
            s.erase(it);
    }

private:
    const Quiver& q_;
};

}  // namespace oracle

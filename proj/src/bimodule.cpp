#include "leavitt/bimodule.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "leavitt/expression.hpp"

namespace leavitt {

LpaElement generator_element(const Quiver& quiver, const LGenerator& g, Field field)
{
    switch (g.kind) {
    case LGenerator::Kind::vertex: return vertex_element(quiver, g.id, field);
    case LGenerator::Kind::arrow: return arrow_element(quiver, g.id, field);
    case LGenerator::Kind::ghost: return ghost_element(quiver, g.id, field);
    }
    return LpaElement(field);
}

std::vector<LGenerator> all_generators(const Quiver& quiver)
{
    std::vector<LGenerator> out;
    for (VertexId v = 0; v < quiver.vertex_count(); ++v)
        out.push_back(LGenerator::vertex(v));
    for (ArrowId a = 0; a < quiver.arrow_count(); ++a) {
        out.push_back(LGenerator::arrow(a));
        out.push_back(LGenerator::ghost(a));
    }
    return out;
}

ComplexVector act_generator(const Quiver& quiver, const BasisVector& b, const LGenerator& g, Field field)
{
    ComplexVector out(field);
    Scalar one(1, field);
    const Path& p = b.pair.p;
    const Path& q = b.pair.q;
    switch (g.kind) {
    case LGenerator::Kind::vertex:
        if (p.source == g.id)
            out.add(b, one);
        break;
    case LGenerator::Kind::arrow: {
        ArrowId alpha = g.id;
        if (!p.is_trivial()) {
            if (p.first() == alpha)
                out.add({b.socle, {truncate_tilde(quiver, p), q}}, one);
        } else if (quiver.source(alpha) == q.target) {
            out.add({b.socle, {Path::trivial(quiver.target(alpha)), then_arrow(quiver, q, alpha)}}, one);
        }
        break;
    }
    case LGenerator::Kind::ghost: {
        ArrowId alpha = g.id;
        if (p.is_trivial() && !q.is_trivial() && q.last() == alpha && quiver.is_special(alpha)) {
            Path qh = truncate_hat(quiver, q);
            out.add({b.socle, {Path::trivial(quiver.source(alpha)), qh}}, one);
            for (ArrowId beta : quiver.companions(alpha))
                out.add({b.socle, {Path::of_arrow(quiver, beta), then_arrow(quiver, qh, beta)}}, -one);
        } else if (p.source == quiver.target(alpha)) {
            out.add({b.socle, {after_arrow(quiver, alpha, p), q}}, one);
        }
        break;
    }
    }
    return out;
}

namespace {

ComplexVector act_generator(const Quiver& quiver, const ComplexVector& v, const LGenerator& g)
{
    ComplexVector out(v.field());
    for (const auto& [b, c] : v.terms())
        out.add_scaled(act_generator(quiver, b, g, v.field()), c);
    return out;
}

ComplexVector act_monomial(const Quiver& quiver, ComplexVector v, const AdmissiblePair& m)
{
    v = act_generator(quiver, v, LGenerator::vertex(m.q.source));
    for (ArrowId a : m.q.arrows) {
        if (v.is_zero())
            return v;
        v = act_generator(quiver, v, LGenerator::arrow(a));
    }
    for (auto it = m.p.arrows.rbegin(); it != m.p.arrows.rend(); ++it) {
        if (v.is_zero())
            return v;
        v = act_generator(quiver, v, LGenerator::ghost(*it));
    }
    return v;
}

}  // namespace

ComplexVector b_action(const Quiver& quiver, const ComplexVector& v, const LpaElement& b)
{
    ComplexVector out(v.field());
    if (v.is_zero() || b.is_zero())
        return out;
    if (!(v.field() == b.field()))
        throw FieldMismatch("b_action: field mismatch");
    for (const auto& [m, c] : b.terms())
        out.add_scaled(act_monomial(quiver, v, m), c);
    return out;
}

ComplexVector psi(const Quiver&, const LpaElement& b)
{
    ComplexVector out(b.field());
    for (const auto& [m, c] : b.terms())
        out.add({Socle::E(m.q.source), m}, c);
    return out;
}

ComplexVector psi_beta(const Quiver& quiver, ArrowId beta, const LpaElement& b)
{
    ComplexVector out(b.field());
    for (const auto& [m, c] : b.terms())
        if (m.q.source == quiver.target(beta))
            out.add({Socle::G(beta), m}, c);
    return out;
}

ComplexVector rho(const Quiver& quiver, const LpaElement& b, const ComplexVector& v)
{
    if (b.is_zero() || v.is_zero())
        return ComplexVector(v.is_zero() ? b.field() : v.field());
    auto db = homogeneous_degree(b);
    auto dv = homogeneous_degree(v);
    if (!db || !dv)
        throw std::invalid_argument("rho needs homogeneous arguments");
    ComplexVector out = b_action(quiver, v, b);
    if (sign_power(static_cast<long long>(*db) * *dv) < 0)
        out *= Scalar(-1, out.field());
    return out;
}

ComplexVector ALinearMap::apply(const Quiver& quiver, const BasisVector& b) const
{
    ComplexVector out(field);
    auto n = N.find(b.pair);
    if (b.socle.is_vertex()) {
        if (n != N.end())
            out += psi(quiver, n->second);
        return out;
    }
    ArrowId alpha = b.socle.id;
    if (auto m = M.find({alpha, b.pair}); m != M.end())
        out += psi(quiver, m->second);
    if (n != N.end())
        out += psi_beta(quiver, alpha, n->second);
    return out;
}

ComplexVector ALinearMap::apply(const Quiver& quiver, const ComplexVector& v) const
{
    ComplexVector out(field);
    for (const auto& [b, c] : v.terms())
        out.add_scaled(apply(quiver, b), c);
    return out;
}

ComplexVector coboundary(const Quiver& quiver, const ALinearMap& h, const BasisVector& b, DifferentialFault fault)
{
    ComplexVector hb = h.apply(quiver, b);
    ComplexVector out = hb.is_zero() ? ComplexVector(h.field) : differential(quiver, hb, fault);
    ComplexVector tail = h.apply(quiver, differential(quiver, b, h.field, fault));
    out.add_scaled(tail, Scalar(-sign_power(h.degree), h.field));
    return out;
}

std::vector<AdmissiblePair> bounded_pairs(const Quiver& quiver, int bound)
{
    std::vector<AdmissiblePair> out;
    for (int lq = 0; lq <= bound; ++lq)
        for (const auto& q : enumerate_paths(quiver, lq))
            for (int lp = 0; lp <= bound; ++lp)
                for (const auto& p : enumerate_paths(quiver, lp, std::nullopt, q.target))
                    if (is_admissible(quiver, p, q))
                        out.push_back({p, q});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BasisVector> bounded_basis(const Quiver& quiver, int bound)
{
    std::vector<BasisVector> out;
    for (const auto& pair : bounded_pairs(quiver, bound)) {
        VertexId i = pair.q.source;
        out.push_back({Socle::E(i), pair});
        for (ArrowId a : quiver.incoming(i))
            out.push_back({Socle::G(a), pair});
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

const LpaElement* lookup(const std::map<AdmissiblePair, LpaElement>& table, const AdmissiblePair& key)
{
    auto it = table.find(key);
    return it == table.end() ? nullptr : &it->second;
}

const LpaElement* lookup(const std::map<std::pair<ArrowId, AdmissiblePair>, LpaElement>& table, ArrowId a,
                         const AdmissiblePair& key)
{
    auto it = table.find({a, key});
    return it == table.end() ? nullptr : &it->second;
}

// Right-hand side of the relation for nu alpha (or omega alpha): the special
// case gives f(p-hat, e) - sum f(beta p-hat, beta), otherwise f(p, q alpha).
// Returns nullopt when some entry is missing from the table.
std::optional<LpaElement> alpha_relation_rhs(const Quiver& quiver, const std::map<AdmissiblePair, LpaElement>& table,
                                             const AdmissiblePair& x, ArrowId alpha, Field field)
{
    const auto& [p, q] = x;
    LpaElement out(field);
    if (q.is_trivial() && !p.is_trivial() && p.last() == alpha && quiver.is_special(alpha)) {
        Path ph = truncate_hat(quiver, p);
        const LpaElement* head = lookup(table, {ph, Path::trivial(ph.target)});
        if (!head)
            return std::nullopt;
        out += *head;
        for (ArrowId beta : quiver.companions(alpha)) {
            const LpaElement* term = lookup(table, {then_arrow(quiver, ph, beta), Path::of_arrow(quiver, beta)});
            if (!term)
                return std::nullopt;
            out -= *term;
        }
        return out;
    }
    const LpaElement* next = lookup(table, {p, after_arrow(quiver, alpha, q)});
    if (!next)
        return std::nullopt;
    return *next;
}

}  // namespace

CocycleData extract_cocycle_data(const Quiver& quiver, const MapTable& y)
{
    CocycleData data;
    data.degree = y.degree;
    data.field = y.field;

    for (const auto& [b, value] : y.values) {
        if (!b.socle.is_vertex())
            continue;
        LpaElement nu(y.field);
        for (const auto& [term, c] : value.terms()) {
            if (!term.socle.is_vertex() || term.socle.id != b.socle.id)
                throw CocycleError("extraction", "value at " + format_basis_vector(quiver, b) + " has a term " +
                                   format_basis_vector(quiver, term) + " outside psi(L e_i)");
            nu.add(term.pair, c);
        }
        data.nu[b.pair] = std::move(nu);
    }

    for (const auto& [b, value] : y.values) {
        if (b.socle.is_vertex())
            continue;
        ArrowId alpha = b.socle.id;
        VertexId from = quiver.source(alpha);
        LpaElement mu(y.field);
        ComplexVector g_part(y.field);
        for (const auto& [term, c] : value.terms()) {
            if (term.socle.is_vertex()) {
                if (term.socle.id != from)
                    throw CocycleError("extraction", "value at " + format_basis_vector(quiver, b) + " has an E term " +
                                       format_basis_vector(quiver, term) + " outside psi(L e_s(alpha))");
                mu.add(term.pair, c);
            } else if (term.socle.id == alpha) {
                g_part.add(term, c);
            } else {
                throw CocycleError("extraction", "value at " + format_basis_vector(quiver, b) + " has a term " +
                                   format_basis_vector(quiver, term) + " with a foreign arrow socle");
            }
        }
        if (const LpaElement* nu = lookup(data.nu, b.pair)) {
            if (!(g_part == psi_beta(quiver, alpha, *nu)))
                throw CocycleError("extraction", "arrow-socle part of the value at " + format_basis_vector(quiver, b) +
                                   " is not psi_alpha(nu): got " + format_vector(quiver, g_part));
        }
        data.mu[{alpha, b.pair}] = std::move(mu);
    }

    Scalar sign(sign_power(data.degree), data.field);
    for (const auto& [x, nu] : data.nu) {
        for (ArrowId alpha : quiver.incoming(x.q.source)) {
            auto rhs = alpha_relation_rhs(quiver, data.nu, x, alpha, data.field);
            if (!rhs)
                continue;
            LpaElement lhs = mul(quiver, nu, arrow_element(quiver, alpha, data.field));
            if (!(lhs == *rhs * sign))
                throw CocycleError("consistency", "consistency of nu fails at (" + format_path(quiver, x.p) + " ; " +
                                   format_path(quiver, x.q) + "), alpha = " + quiver.arrow_name(alpha) + ": nu alpha = " +
                                   format_lpa(quiver, lhs) + ", expected " + format_lpa(quiver, *rhs * sign));
            ++data.consistency_checks;
        }
    }
    return data;
}

LpaElement recover_x(const Quiver& quiver, const CocycleData& data)
{
    LpaElement x(data.field);
    for (VertexId j = 0; j < quiver.vertex_count(); ++j) {
        const LpaElement* nu = lookup(data.nu, {Path::trivial(j), Path::trivial(j)});
        if (!nu)
            throw CocycleError("recovery", "support lacks (e_j, e_j) for vertex " + quiver.vertex_name(j));
        x += *nu;
    }
    if (!x.is_zero()) {
        auto d = homogeneous_degree(x);
        if (!d || *d != data.degree)
            throw CocycleError("recovery", "recovered element is not homogeneous of degree " + std::to_string(data.degree));
    }
    for (const auto& [pair, nu] : data.nu) {
        LpaElement expected = mul(quiver, x, monomial(pair, data.field));
        if (sign_power(static_cast<long long>(data.degree) * pair.degree()) < 0)
            expected *= Scalar(-1, data.field);
        if (!(expected == nu))
            throw CocycleError("recovery", "nu at (" + format_path(quiver, pair.p) + " ; " + format_path(quiver, pair.q) +
                               ") is " + format_lpa(quiver, nu) + " but x p*q gives " + format_lpa(quiver, expected));
    }
    return x;
}

ALinearMap HomotopyTable::as_map() const
{
    ALinearMap h;
    h.degree = degree;
    h.field = field;
    h.N = omega;
    return h;
}

HomotopyTable build_homotopy(const Quiver& quiver, const CocycleData& data)
{
    HomotopyTable table;
    table.degree = data.degree - 1;
    table.field = data.field;
    Field field = data.field;
    Scalar sign(sign_power(data.degree - 1), field);

    std::map<AdmissiblePair, std::optional<LpaElement>> memo;
    std::function<std::optional<LpaElement>(const AdmissiblePair&)> omega = [&](const AdmissiblePair& x)
        -> std::optional<LpaElement> {
        if (auto it = memo.find(x); it != memo.end())
            return it->second;
        std::optional<LpaElement> result;
        const auto& [p, q] = x;
        if (p.is_trivial() && q.is_trivial()) {
            LpaElement sum(field);
            bool ok = true;
            for (ArrowId beta : quiver.outgoing(p.source)) {
                const LpaElement* m =
                    lookup(data.mu, beta, {Path::of_arrow(quiver, beta), Path::trivial(quiver.target(beta))});
                if (!m) {
                    ok = false;
                    break;
                }
                sum += *m;
            }
            if (ok)
                result = std::move(sum);
        } else if (q.is_trivial()) {
            ArrowId gamma = p.last();
            Path ph = truncate_hat(quiver, p);
            LpaElement ghost = ghost_element(quiver, gamma, field);
            auto prev = omega({ph, Path::trivial(ph.target)});
            if (prev) {
                LpaElement acc = mul(quiver, *prev, ghost) * sign;
                bool ok = true;
                for (ArrowId beta : quiver.outgoing(quiver.source(gamma))) {
                    const LpaElement* m =
                        lookup(data.mu, beta, {then_arrow(quiver, ph, beta), Path::trivial(quiver.target(beta))});
                    if (!m) {
                        ok = false;
                        break;
                    }
                    acc += mul(quiver, *m, ghost);
                }
                if (ok)
                    result = std::move(acc);
            }
        } else {
            ArrowId delta = q.first();
            AdmissiblePair shorter{p, truncate_tilde(quiver, q)};
            auto prev = omega(shorter);
            const LpaElement* m = lookup(data.mu, delta, shorter);
            if (prev && m) {
                LpaElement acc = mul(quiver, *prev, arrow_element(quiver, delta, field));
                acc -= *m;
                result = acc * sign;
            }
        }
        memo[x] = result;
        return result;
    };

    for (const auto& [x, nu] : data.nu)
        if (auto w = omega(x))
            table.omega[x] = *w;

    // omega alpha - mu^alpha must match (-1)^(n-1) times the relation's right-hand side.
    for (const auto& [x, w] : table.omega) {
        for (ArrowId alpha : quiver.incoming(x.q.source)) {
            const LpaElement* m = lookup(data.mu, alpha, x);
            auto rhs = alpha_relation_rhs(quiver, table.omega, x, alpha, field);
            if (!m || !rhs)
                continue;
            LpaElement lhs = mul(quiver, w, arrow_element(quiver, alpha, field)) - *m;
            if (!(lhs == *rhs * sign))
                throw CocycleError("homotopy", "omega relation fails at (" + format_path(quiver, x.p) + " ; " +
                                   format_path(quiver, x.q) + "), alpha = " + quiver.arrow_name(alpha) + ": got " +
                                   format_lpa(quiver, lhs) + ", expected " + format_lpa(quiver, *rhs * sign));
            ++table.identity_checks;
        }
    }
    return table;
}

RoundTripResult verify_quasibalance_roundtrip(const Quiver& quiver, const LpaElement& x0, int n, const ALinearMap& h0,
                                              int bound)
{
    RoundTripResult result;
    Field field = h0.field;
    if (!x0.is_zero()) {
        auto d = homogeneous_degree(x0);
        if (!d || *d != n)
            throw std::invalid_argument("x0 must be homogeneous of degree n");
    }
    if (h0.degree != n - 1)
        throw std::invalid_argument("h0 must have degree n - 1");

    MapTable y{n, field, {}};
    auto basis = bounded_basis(quiver, bound);
    for (const auto& b : basis) {
        ComplexVector value = rho(quiver, x0, ComplexVector::basis(b, field));
        value += coboundary(quiver, h0, b);
        y.values[b] = std::move(value);
    }

    CocycleData data;
    try {
        data = extract_cocycle_data(quiver, y);
        result.consistency_checks = data.consistency_checks;
        result.recovered = recover_x(quiver, data);
    } catch (const CocycleError& e) {
        result.violations.emplace_back(e.stage(), e.what());
        return result;
    }
    if (!(result.recovered == x0))
        result.violations.emplace_back("recovery", "recovered x = " + format_lpa(quiver, result.recovered) + " differs from x0 = " +
                                    format_lpa(quiver, x0));

    HomotopyTable table;
    try {
        table = build_homotopy(quiver, data);
        result.omega_checks = table.identity_checks;
    } catch (const CocycleError& e) {
        result.violations.emplace_back(e.stage(), e.what());
        return result;
    }
    ALinearMap h = table.as_map();

    for (const auto& b : basis) {
        if (!table.omega.count(b.pair))
            continue;
        ComplexVector db = differential(quiver, b, field);
        bool inside = true;
        for (const auto& [term, c] : db.terms())
            if (!table.omega.count(term.pair)) {
                inside = false;
                break;
            }
        if (!inside)
            continue;
        ++result.interior_points;
        ComplexVector lhs = y.values.at(b) - rho(quiver, result.recovered, ComplexVector::basis(b, field));
        ComplexVector rhs = coboundary(quiver, h, b);
        if (!(lhs == rhs))
            result.violations.emplace_back("identity", "at " + format_basis_vector(quiver, b) + ": y - rho(x) = " +
                                        format_vector(quiver, lhs) + " but d(h) = " + format_vector(quiver, rhs));
    }
    if (result.interior_points == 0)
        result.violations.emplace_back("bound", "bound " + std::to_string(bound) + " leaves no interior point");
    return result;
}

}  // namespace leavitt

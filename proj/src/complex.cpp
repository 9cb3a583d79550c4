#include "leavitt/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace leavitt {

VertexId socle_vertex(const Quiver& quiver, const Socle& s)
{
    return s.is_vertex() ? s.id : quiver.target(s.id);
}

bool is_valid_basis_vector(const Quiver& quiver, const BasisVector& b)
{
    if (b.socle.is_vertex()) {
        if (b.socle.id < 0 || b.socle.id >= quiver.vertex_count())
            return false;
    } else if (b.socle.id < 0 || b.socle.id >= quiver.arrow_count()) {
        return false;
    }
    return socle_vertex(quiver, b.socle) == b.pair.q.source && is_admissible(quiver, b.pair.p, b.pair.q);
}

std::optional<int> homogeneous_degree(const ComplexVector& v)
{
    std::optional<int> d;
    for (const auto& [b, c] : v.terms()) {
        if (d && *d != b.degree())
            return std::nullopt;
        d = b.degree();
    }
    return d;
}

const char* fault_name(DifferentialFault f)
{
    switch (f) {
    case DifferentialFault::none: return "none";
    case DifferentialFault::flip_hat_sign: return "flip-hat-sign";
    case DifferentialFault::flip_sum_sign: return "flip-sum-sign";
    case DifferentialFault::drop_sum: return "drop-sum";
    }
    return "none";
}

std::optional<DifferentialFault> parse_fault(std::string_view name)
{
    for (auto f : {DifferentialFault::none, DifferentialFault::flip_hat_sign, DifferentialFault::flip_sum_sign,
                   DifferentialFault::drop_sum})
        if (name == fault_name(f))
            return f;
    return std::nullopt;
}

ComplexVector differential(const Quiver& quiver, const BasisVector& b, Field field, DifferentialFault fault)
{
    ComplexVector out(field);
    if (b.socle.is_vertex())
        return out;
    ArrowId alpha = b.socle.id;
    const Path& p = b.pair.p;
    const Path& q = b.pair.q;
    Socle target_socle = Socle::E(quiver.source(alpha));
    if (q.is_trivial() && !p.is_trivial() && p.last() == alpha && quiver.is_special(alpha)) {
        Path ph = truncate_hat(quiver, p);
        Scalar hat_sign(fault == DifferentialFault::flip_hat_sign ? -1 : 1, field);
        out.add({target_socle, {ph, Path::trivial(quiver.source(alpha))}}, hat_sign);
        if (fault != DifferentialFault::drop_sum) {
            Scalar sum_sign(fault == DifferentialFault::flip_sum_sign ? 1 : -1, field);
            for (ArrowId beta : quiver.companions(alpha))
                out.add({target_socle, {then_arrow(quiver, ph, beta), Path::of_arrow(quiver, beta)}}, sum_sign);
        }
        return out;
    }
    out.add({target_socle, {p, after_arrow(quiver, alpha, q)}}, Scalar(1, field));
    return out;
}

ComplexVector differential(const Quiver& quiver, const ComplexVector& v, DifferentialFault fault)
{
    if (!v.is_zero() && !homogeneous_degree(v))
        throw InhomogeneousVector("differential of a vector that is not homogeneous in degree");
    ComplexVector out(v.field());
    for (const auto& [b, c] : v.terms())
        out.add_scaled(differential(quiver, b, v.field(), fault), c);
    return out;
}

ComplexVector a_action(const Quiver& quiver, const AGenerator& g, const BasisVector& b, Field field)
{
    ComplexVector out(field);
    Scalar one(1, field);
    if (g.kind == AGenerator::Kind::vertex) {
        VertexId at = b.socle.is_vertex() ? b.socle.id : quiver.source(b.socle.id);
        if (at == g.id)
            out.add(b, one);
        return out;
    }
    if (!b.socle.is_vertex() && b.socle.id == g.id)
        out.add({Socle::E(quiver.target(g.id)), b.pair}, one);
    return out;
}

ComplexVector a_action(const Quiver& quiver, const AElement& a, const ComplexVector& v)
{
    ComplexVector out(v.field());
    for (const auto& [g, cg] : a.terms())
        for (const auto& [b, cb] : v.terms())
            out.add_scaled(a_action(quiver, g, b, v.field()), cg * cb);
    return out;
}

const char* class_name(BasisClass c)
{
    switch (c) {
    case BasisClass::gamma0: return "Gamma0";
    case BasisClass::gamma1: return "Gamma1";
    case BasisClass::gamma2: return "Gamma2";
    }
    return "?";
}

BasisClass classify_basis(const Quiver& quiver, const BasisVector& b)
{
    if (b.socle.is_vertex())
        return BasisClass::gamma0;
    ArrowId alpha = b.socle.id;
    const auto& [p, q] = b.pair;
    if (b.degree() < 0 && quiver.is_special(alpha) && q.is_trivial() && !p.is_trivial() && p.last() == alpha)
        return BasisClass::gamma2;
    return BasisClass::gamma1;
}

std::vector<BasisVector> basis_vectors_exact(const Quiver& quiver, VertexId i, int l, int n)
{
    std::vector<BasisVector> out;
    std::vector<Socle> socles{Socle::E(i)};
    for (ArrowId a : quiver.incoming(i))
        socles.push_back(Socle::G(a));
    for (const auto& pair : enumerate_B(quiver, i, l, n))
        for (const auto& s : socles)
            out.push_back({s, pair});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BasisVector> basis_vectors(const Quiver& quiver, int l, int nmax)
{
    std::vector<BasisVector> out;
    for (VertexId i = 0; i < quiver.vertex_count(); ++i)
        for (int n = 0; n <= nmax; ++n) {
            auto part = basis_vectors_exact(quiver, i, l, n);
            out.insert(out.end(), part.begin(), part.end());
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BasisVector> kernel_basis(const Quiver& quiver, int l, int nmax)
{
    std::vector<BasisVector> out;
    for (const auto& b : basis_vectors(quiver, l, nmax))
        if (classify_basis(quiver, b) == BasisClass::gamma0)
            out.push_back(b);
    return out;
}

ComplexVector preimage_witness(const Quiver& quiver, const BasisVector& b, Field field)
{
    if (!b.socle.is_vertex())
        throw std::invalid_argument("preimage_witness: basis vector is not in Gamma0");
    ComplexVector out(field);
    Scalar one(1, field);
    const auto& [p, q] = b.pair;
    if (!q.is_trivial()) {
        ArrowId alpha = q.first();
        out.add({Socle::G(alpha), {p, truncate_tilde(quiver, q)}}, one);
        return out;
    }
    for (ArrowId alpha : quiver.outgoing(q.source))
        out.add({Socle::G(alpha), {then_arrow(quiver, p, alpha), Path::trivial(quiver.target(alpha))}}, one);
    return out;
}

FiltrationInfo filtration_membership(const Quiver& quiver, const BasisVector& b)
{
    FiltrationInfo info;
    const Path& p = b.pair.p;
    info.in_M = p.is_trivial();
    if (!p.is_trivial()) {
        info.c_index = p.length();
        info.e_gamma = truncate_hat(quiver, p);
        if (p.length() == 1)
            info.e_vertex = p.source;
    }
    return info;
}

namespace {

ComplexVector keep_terms(const ComplexVector& v, const std::function<bool(const BasisVector&)>& keep)
{
    ComplexVector out(v.field());
    for (const auto& [b, c] : v.terms())
        if (keep(b))
            out.add(b, c);
    return out;
}

}  // namespace

ComplexVector cokernel_differential(const Quiver& quiver, const ComplexVector& v, DifferentialFault fault)
{
    return keep_terms(differential(quiver, v, fault), [](const BasisVector& b) { return !b.pair.p.is_trivial(); });
}

ComplexVector layer_differential(const Quiver& quiver, const ComplexVector& v, int n, DifferentialFault fault)
{
    return keep_terms(differential(quiver, v, fault), [n](const BasisVector& b) { return b.pair.p.length() == n; });
}

ComplexVector iso_f_gamma(const Quiver& quiver, const Path& gamma, const ComplexVector& v)
{
    ComplexVector out(v.field());
    int n = gamma.length() + 1;
    for (const auto& [b, c] : v.terms()) {
        const Path& p = b.pair.p;
        if (p.length() != n || truncate_hat(quiver, p) != gamma)
            throw std::invalid_argument("iso_f_gamma: term whose first path is not an arrow after gamma");
        int l = b.degree();
        BasisVector image{b.socle, {Path::of_arrow(quiver, p.last()), b.pair.q}};
        out.add(image, c * Scalar(sign_power(static_cast<long long>(l) * (n - 1)), v.field()));
    }
    return out;
}

ComplexVector resolution_f0(const Quiver&, VertexId i, Field field)
{
    return ComplexVector::basis({Socle::E(i), {Path::trivial(i), Path::trivial(i)}}, field);
}

ComplexVector resolution_eps(const Quiver& quiver, VertexId j, Field field)
{
    ComplexVector out(field);
    for (ArrowId beta : quiver.outgoing(j))
        out.add({Socle::G(beta), {Path::of_arrow(quiver, beta), Path::trivial(quiver.target(beta))}}, Scalar(1, field));
    return out;
}

}  // namespace leavitt

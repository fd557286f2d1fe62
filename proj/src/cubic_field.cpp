#include "cyccubic/cubic_field.hpp"

#include <sstream>
#include <vector>

namespace cyccubic {

FieldElement fe_const(const Rat& q) { return {{q, Rat(0), Rat(0)}}; }
FieldElement fe_rho() { return {{Rat(0), Rat(1), Rat(0)}}; }

CubicField::CubicField(BigInt n1, BigInt n2)
{
    if (n2 == 0)
        throw zero_denominator_error("n2 = 0");
    BigInt g = gcd(abs(n1), abs(n2));
    n1 /= g;
    n2 /= g;
    if (n2 < 0) {
        n1 = -n1;
        n2 = -n2;
    }
    // f_n is reducible iff the minimal polynomial of n2*rho,
    // X^3 - n1 X^2 - (n1 n2 + 3 n2^2) X - n2^3, has an integer root;
    // any such root divides n2^3.
    const BigInt n23 = n2 * n2 * n2;
    const auto is_root = [&](const BigInt& r) {
        return r * r * r - n1 * r * r - (n1 * n2 + 3 * n2 * n2) * r - n23 == 0;
    };
    for (BigInt t = 1; t * t <= n23; ++t) {
        if (n23 % t != 0)
            continue;
        for (const BigInt& u : {t, BigInt(n23 / t)}) {
            if (is_root(u) || is_root(-u)) {
                std::ostringstream os;
                os << "f_n is reducible: rational root " << (is_root(u) ? u : BigInt(-u))
                   << "/" << n2;
                throw reducible_error(os.str());
            }
        }
    }
    n1_ = n1;
    n2_ = n2;
    n_ = make_rat(n1_, n2_);
}

BigInt CubicField::delta() const
{
    return n1_ * n1_ + 3 * n1_ * n2_ + 9 * n2_ * n2_;
}

FieldElement CubicField::add(const FieldElement& x, const FieldElement& y) const
{
    return {{x.c[0] + y.c[0], x.c[1] + y.c[1], x.c[2] + y.c[2]}};
}

FieldElement CubicField::sub(const FieldElement& x, const FieldElement& y) const
{
    return {{x.c[0] - y.c[0], x.c[1] - y.c[1], x.c[2] - y.c[2]}};
}

FieldElement CubicField::smul(const Rat& s, const FieldElement& x) const
{
    return {{s * x.c[0], s * x.c[1], s * x.c[2]}};
}

FieldElement CubicField::mul(const FieldElement& x, const FieldElement& y) const
{
    std::array<Rat, 5> c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            c[i + j] += x.c[i] * y.c[j];
    // rho^3 = n rho^2 + (n+3) rho + 1
    for (int k = 4; k >= 3; --k) {
        Rat t = c[k];
        c[k] = 0;
        c[k - 1] += n_ * t;
        c[k - 2] += (n_ + 3) * t;
        c[k - 3] += t;
    }
    return {{c[0], c[1], c[2]}};
}

FieldElement CubicField::sigma(const FieldElement& x) const
{
    const FieldElement rp{{Rat(-2), -(n_ + 1), Rat(1)}}; // rho' = rho^2 - (n+1)rho - 2
    FieldElement acc = fe_const(x.c[0]);
    acc = add(acc, smul(x.c[1], rp));
    acc = add(acc, smul(x.c[2], mul(rp, rp)));
    return acc;
}

Rat CubicField::trace(const FieldElement& x) const
{
    const FieldElement s = sigma(x);
    const FieldElement t = add(add(x, s), sigma(s));
    if (t.c[1] != 0 || t.c[2] != 0)
        throw internal_inconsistency_error("trace is not rational");
    return t.c[0];
}

Rat CubicField::norm_elem(const FieldElement& x) const
{
    const FieldElement s = sigma(x);
    const FieldElement p = mul(mul(x, s), sigma(s));
    if (p.c[1] != 0 || p.c[2] != 0)
        throw internal_inconsistency_error("norm is not rational");
    return p.c[0];
}

std::vector<Rat> CubicField::minpoly(const FieldElement& x) const
{
    if (x.c[1] == 0 && x.c[2] == 0)
        return {-x.c[0], Rat(1)}; // X - c0
    // Characteristic polynomial from the elementary symmetric functions of
    // the conjugate orbit; degree 3 since x is not rational.
    const FieldElement s = sigma(x);
    const FieldElement s2 = sigma(s);
    const Rat e1 = trace(x);
    const FieldElement e2e = add(add(mul(x, s), mul(x, s2)), mul(s, s2));
    const FieldElement e3e = mul(mul(x, s), s2);
    if (e2e.c[1] != 0 || e2e.c[2] != 0 || e3e.c[1] != 0 || e3e.c[2] != 0)
        throw internal_inconsistency_error("symmetric functions not rational");
    return {-e3e.c[0], e2e.c[0], -e1, Rat(1)};
}

bool CubicField::is_integral(const FieldElement& x) const
{
    for (const Rat& q : minpoly(x))
        if (denominator(q) != 1)
            return false;
    return true;
}

FieldElement CubicField::inv(const FieldElement& x) const
{
    const Rat nx = norm_elem(x);
    if (nx == 0)
        throw precondition_error("inv: division by zero");
    const FieldElement s = sigma(x);
    return smul(Rat(1) / nx, mul(s, sigma(s)));
}

namespace {

Rat det3(const std::array<std::array<Rat, 3>, 3>& m)
{
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
         - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
         + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

} // namespace

Rat CubicField::disc_triple(const FieldElement& x1, const FieldElement& x2,
                            const FieldElement& x3) const
{
    std::array<std::array<Rat, 3>, 3> m;
    const FieldElement* xs[3] = {&x1, &x2, &x3};
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i)
            m[i][j] = xs[j]->c[i];
    const Rat det = det3(m);
    const BigInt d = delta();
    const Rat base = make_rat(d * d, n2_ * n2_ * n2_ * n2_); // d(1, rho, rho^2)
    return det * det * base;
}

std::array<Rat, 3> CubicField::coords_in_basis(const std::array<FieldElement, 3>& basis,
                                               const FieldElement& x) const
{
    std::array<std::array<Rat, 3>, 3> b;
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i)
            b[i][j] = basis[j].c[i];
    const Rat db = det3(b);
    if (db == 0)
        throw singular_basis_error("coords_in_basis: basis is linearly dependent");
    std::array<Rat, 3> out;
    for (int j = 0; j < 3; ++j) {
        auto m = b;
        for (int i = 0; i < 3; ++i)
            m[i][j] = x.c[i];
        out[j] = det3(m) / db;
    }
    return out;
}

Rat CubicField::lattice_index(const std::array<FieldElement, 3>& basis,
                              const std::array<FieldElement, 3>& vectors) const
{
    std::array<std::array<Rat, 3>, 3> t;
    for (int j = 0; j < 3; ++j) {
        const auto col = coords_in_basis(basis, vectors[j]);
        for (int i = 0; i < 3; ++i)
            t[i][j] = col[i];
    }
    return abs(det3(t));
}

std::array<Rat, 3> CubicField::to_rho_rhoprime(const FieldElement& x) const
{
    // rho^2 = rho' + (n+1) rho + 2
    return {x.c[0] + 2 * x.c[2], x.c[1] + (n_ + 1) * x.c[2], x.c[2]};
}

FieldElement CubicField::from_rho_rhoprime(const std::array<Rat, 3>& coords) const
{
    return {{coords[0] - 2 * coords[2], coords[1] - (n_ + 1) * coords[2], coords[2]}};
}

} // namespace cyccubic

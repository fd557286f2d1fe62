#include "cyccubic/integral_basis.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace cyccubic {

namespace {

void require(bool ok, const char* what)
{
    if (!ok)
        throw internal_inconsistency_error(what);
}

BigInt ipow(const BigInt& base, const BigInt& exp)
{
    if (exp < 0)
        throw precondition_error("ipow: negative exponent");
    BigInt r = 1, b = base, e = exp;
    while (e > 0) {
        if (e % 2 == 1)
            r *= b;
        b *= b;
        e /= 2;
    }
    return r;
}

BigInt pow2(long k) { return ipow(2, k); }
BigInt pow3(long k) { return ipow(3, k); }

/// (lambda, mu, P, Q, delta_prime) derived from (a, b) alone, following
/// Albert's normalization of 4a^3 + 27b^2.
AlbertParams params_from_ab(const BigInt& a, const BigInt& b)
{
    const BigInt d4 = 4 * a * a * a + 27 * b * b;
    AlbertParams ap;
    ap.lambda = valuation(d4, 2) / 2;
    ap.mu = valuation(d4, 3) / 2;
    ap.p_part = 1;
    if (a != 0)
        for (const auto& [p, k] : factor(a).primes)
            if (p != 2 && p != 3 && b != 0 && valuation(b, p) >= 2)
                ap.p_part *= p;
    ap.q_part = 1;
    for (const auto& [p, k] : factor(d4).primes)
        if (p != 2 && p != 3 && a % p != 0)
            ap.q_part *= ipow(p, k / 2);
    const BigInt unit = pow2(2 * ap.lambda) * pow3(2 * ap.mu) * ap.p_part * ap.p_part
                      * ap.q_part * ap.q_part;
    require(d4 % unit == 0, "albert: normalization does not divide");
    ap.delta_prime = d4 / unit;
    require(ap.delta_prime % 4 != 0 && abs(ap.delta_prime) % 9 != 0,
            "albert: delta_prime not normalized");
    return ap;
}

void check_ab_precondition(const BigInt& a, const BigInt& b)
{
    if (a != 0 && b != 0)
        for (const auto& [p, k] : factor(a).primes)
            if (k >= 2 && valuation(b, p) >= 3)
                throw precondition_error("a, b have a common p^2 | a, p^3 | b");
    // Irreducibility of X^3 + aX + b: no integer root t (t | b).
    if (b == 0)
        throw precondition_error("X^3 + aX + b reducible (b = 0)");
    const BigInt ab = abs(b);
    for (BigInt t = 1; t * t <= ab; ++t) {
        if (ab % t != 0)
            continue;
        for (const BigInt& u : {t, BigInt(ab / t)})
            for (const BigInt& root : {u, BigInt(-u)})
                if (root * root * root + a * root + b == 0)
                    throw precondition_error("X^3 + aX + b reducible");
    }
}

} // namespace

TransformData transform(const CubicField& field, const FieldInvariants& inv)
{
    const BigInt delta = inv.delta;
    const BigInt m = inv.m, m2 = m * m, m3 = m2 * m;
    require(3 * delta % m2 == 0, "transform: m^2 does not divide 3*delta");
    require((2 * inv.n1 + 3 * inv.n2) * delta % m3 == 0,
            "transform: m^3 does not divide (2n1+3n2)*delta");
    TransformData td{-3 * delta / m2, -(2 * inv.n1 + 3 * inv.n2) * delta / m3, m};
    for (const auto& [p, k] : factor(td.a).primes)
        if (k >= 2 && td.b != 0 && valuation(td.b, p) >= 3)
            throw internal_inconsistency_error("transform: p^2 | a and p^3 | b");
    const auto mp = field.minpoly(theta_element(inv));
    if (mp != std::vector<Rat>{Rat(td.b), Rat(td.a), Rat(0), Rat(1)})
        throw internal_inconsistency_error("transform: minpoly(theta) != X^3 + aX + b");
    return td;
}

FieldElement theta_element(const FieldInvariants& inv)
{
    return {{make_rat(-inv.n1, inv.m), make_rat(3 * inv.n2, inv.m), Rat(0)}};
}

AlbertParams albert_params(const FieldInvariants& inv, const TransformData& td)
{
    AlbertParams ap;
    ap.lambda = valuation(inv.n2, 2);
    switch (inv.tag) {
    case CaseTag::T1: ap.mu = valuation(inv.n2, 3) + 3; break;
    case CaseTag::T2: ap.mu = 0; break;
    case CaseTag::W3i: ap.mu = 3; break;
    case CaseTag::W3ii: ap.mu = 2; break;
    }
    const BigInt e_eff = inv.tag == CaseTag::W3ii ? inv.dec.e / 3 : inv.dec.e;
    ap.p_part = e_eff;
    ap.q_part = inv.n2 / (pow2(valuation(inv.n2, 2)) * pow3(valuation(inv.n2, 3)));
    ap.delta_prime = -inv.dec.d * inv.dec.d * e_eff * e_eff;
    const AlbertParams ref = params_from_ab(td.a, td.b);
    if (ap.lambda != ref.lambda || ap.mu != ref.mu || ap.p_part != ref.p_part
        || ap.q_part != ref.q_part || ap.delta_prime != ref.delta_prime)
        throw internal_inconsistency_error(
            "albert_params: closed forms disagree with the factorization");
    return ap;
}

BigInt psi_denominator(const FieldInvariants& inv)
{
    const BigInt ec2 = inv.dec.e * inv.dec.c * inv.dec.c;
    return (is_tame(inv.tag) ? 9 : 3) * ec2 * inv.n2;
}

BigInt compute_r(const FieldInvariants& inv, const TransformData& td,
                 const AlbertParams& ap, const BigInt& u)
{
    const BigInt M = 3 * u;
    const BigInt &a = td.a, &b = td.b, &Q = ap.q_part;
    const long lam = ap.lambda, mu = ap.mu;
    const BigInt psiQ = euler_psi(Q);
    BigInt r;
    if (inv.n1 % 3 != 0) {
        const BigInt p3m1 = pow3(mu - 1);
        const BigInt psi3 = euler_psi(p3m1);
        const BigInt a3 = a / 3;
        if (inv.n2 % 2 == 1) {
            r = -b * (mod_pow(2 * p3m1 * a, psiQ, M) * pow3(mu)
                      + Q * mod_pow(2 * a3 * Q, psi3, M));
        } else if (inv.n2 % 4 == 2) {
            r = -b * (mod_pow(2 * p3m1 * a, psiQ, M) * pow3(mu)
                      + Q * mod_pow(2 * a3 * Q, psi3, M))
                + p3m1 * a * Q;
        } else {
            const BigInt psi2 = euler_psi(pow2(lam));
            r = -b * (mod_pow(pow2(lam + 1) * p3m1 * a, psiQ, M) * pow3(mu)
                      + Q * mod_pow(pow2(lam + 1) * a3 * Q, psi3, M)) * pow2(lam)
                + (pow2(lam - 1) - 3 * b / 2) * mod_pow(p3m1 * a * Q, psi2, M)
                  * Q * p3m1;
        }
    } else {
        if (inv.n2 % 2 == 1) {
            r = -b * (3 * mod_pow(2 * a, psiQ, M) + Q * Q);
        } else if (inv.n2 % 4 == 2) {
            r = -b * (3 * mod_pow(2 * a, psiQ, M) + Q * Q) + 3 * Q * Q * a;
        } else {
            const BigInt psi2 = euler_psi(pow2(lam));
            r = -3 * pow2(lam) * b * mod_pow(pow2(lam + 1) * a, psiQ, M)
                + 3 * Q * (pow2(lam - 1) - 3 * b / 2) * mod_pow(3 * a * Q, psi2, M)
                - pow2(2 * lam) * b * Q * Q;
        }
    }
    r %= M;
    if (r < 0)
        r += M;
    return r;
}

IntegralBasis basis(const CubicField& field, const FieldInvariants& inv)
{
    const TransformData td = transform(field, inv);
    const AlbertParams ap = albert_params(inv, td);
    const BigInt u = psi_denominator(inv);
    const BigInt r = compute_r(inv, td, ap, u);
    const BigInt &n1 = inv.n1, &n2 = inv.n2, &m = inv.m, &a = td.a;

    IntegralBasis ib;
    ib.one = fe_const(Rat(1));
    ib.u = u;
    ib.r = r;
    if (n1 % 3 != 0)
        ib.phi = {{make_rat(-n1 - m * r, 3 * m), make_rat(3 * n2, 3 * m), Rat(0)}};
    else
        ib.phi = {{make_rat(-n1, m), make_rat(3 * n2, m), Rat(0)}};
    ib.psi = {{make_rat(m * m * r * r + m * m * a - m * n1 * r + n1 * n1, u),
               make_rat(3 * n2 * (m * r - 2 * n1), u),
               make_rat(9 * n2 * n2, u)}};

    if (!field.is_integral(ib.phi))
        throw verification_error("integral basis: phi is not integral");
    if (!field.is_integral(ib.psi))
        throw verification_error("integral basis: psi is not integral");
    if (field.disc_triple(ib.one, ib.phi, ib.psi) != Rat(inv.discriminant))
        throw verification_error("integral basis: disc(1, phi, psi) != D_L");
    return ib;
}

std::array<std::array<Rat, 3>, 3> albert_oracle(const BigInt& a, const BigInt& b)
{
    check_ab_precondition(a, b);
    const AlbertParams ap = params_from_ab(a, b);
    const BigInt &P = ap.p_part, &Q = ap.q_part, &Dp = ap.delta_prime;
    const long lam = ap.lambda, mu = ap.mu;
    const BigInt psiQ = euler_psi(Q);

    const auto mod9 = [](const BigInt& x) { BigInt r = x % 9; return r < 0 ? r + 9 : r; };
    const auto mod4 = [](const BigInt& x) { BigInt r = x % 4; return r < 0 ? r + 4 : r; };
    const bool ib1 = mod9(a) == 6 && b % 3 != 0 && mu > 2;

    // Branch on the 2-adic shape of (a, b, delta_prime).
    enum { A, B, C, D } br;
    if (b % 2 == 0 && (b / 2) % 2 != 0 && mod4(a) == 1)
        br = mod4(Dp) == 3 ? A : B;
    else if (b % 4 == 0 && mod4(a) != 1)
        br = C;
    else
        br = D;

    BigInt r, den;
    if (ib1) {
        const BigInt a1 = a / 3;
        const BigInt psi3 = euler_psi(pow3(mu - 1));
        long eps2;
        switch (br) {
        case A: {
            const BigInt b1 = b / 2;
            eps2 = lam;
            r = -2 * b1 * (ipow(pow2(lam + 1) * pow3(mu) * a1, psiQ) * pow3(mu)
                           + ipow(pow2(lam + 1) * Q * a1, psi3) * Q) * pow2(lam)
                + (pow2(lam - 1) - 3 * b1)
                  * ipow(a1 * Q * pow3(mu), euler_psi(pow2(lam))) * Q * pow3(mu - 1);
            break;
        }
        case B: {
            const BigInt b1 = b / 2;
            eps2 = lam - 1;
            r = -pow2(lam) * b1 * (pow3(mu) * ipow(pow2(lam) * pow3(mu) * a1, psiQ)
                                   + Q * ipow(pow2(lam) * Q * a1, psi3))
                - pow3(mu) * b1 * Q * ipow(pow3(mu) * Q * a1, euler_psi(pow2(lam - 1)));
            break;
        }
        case C:
            eps2 = 1;
            r = -b * (ipow(2 * a1 * pow3(mu), psiQ) * pow3(mu)
                      + Q * ipow(2 * a1 * Q, psi3))
                + pow3(mu) * a1 * Q;
            break;
        case D:
            eps2 = 0;
            r = -b * (ipow(2 * a1 * pow3(mu), psiQ) * pow3(mu)
                      + Q * ipow(2 * a1 * Q, psi3));
            break;
        }
        den = pow2(eps2) * pow3(mu - 1) * P * Q;
        return {{{Rat(1), Rat(0), Rat(0)},
                 {make_rat(-r, 3), make_rat(1, 3), Rat(0)},
                 {make_rat(r * r + a, den), make_rat(r, den), make_rat(1, den)}}};
    }

    const bool eps1 = (b % 9 == 0 && a % 3 == 0)
                   || (b % 3 != 0 && mod9(b * b + a - 1) == 0);
    long eps2;
    switch (br) {
    case A: {
        const BigInt b1 = b / 2;
        eps2 = lam;
        r = -3 * pow2(lam) * b * ipow(pow2(lam + 1) * a, psiQ)
            + 3 * Q * (pow2(lam - 1) - 3 * b1) * ipow(3 * a * Q, euler_psi(pow2(lam)))
            - pow2(2 * lam) * b * Q * Q;
        break;
    }
    case B: {
        const BigInt b1 = b / 2;
        eps2 = lam - 1;
        r = -3 * b1 * (pow2(lam) * ipow(a * pow2(lam), psiQ)
                       + Q * ipow(a * Q, euler_psi(pow2(lam - 1))))
            - b * pow2(2 * lam) * Q * Q;
        break;
    }
    case C:
        eps2 = 1;
        r = -b * (3 * ipow(2 * a, psiQ) + Q * Q) + 3 * Q * Q * a;
        break;
    case D:
        eps2 = 0;
        r = -b * (3 * ipow(2 * a, psiQ) + Q * Q);
        break;
    }
    den = (eps1 ? 3 : 1) * pow2(eps2) * P * Q;
    return {{{Rat(1), Rat(0), Rat(0)},
             {Rat(0), Rat(1), Rat(0)},
             {make_rat(r * r + a, den), make_rat(r, den), make_rat(1, den)}}};
}

} // namespace cyccubic

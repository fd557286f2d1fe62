#include "cyccubic/galois_module.hpp"

namespace cyccubic {

namespace {

bool divides3(const BigInt& x) { return x % 3 == 0; }

bool all_integer(const std::array<Rat, 3>& coords)
{
    for (const Rat& q : coords)
        if (denominator(q) != 1)
            return false;
    return true;
}

} // namespace

std::string structure_label(StructureTag s)
{
    return s == StructureTag::TameFreeRank1 ? "TAME_FREE_RANK1" : "WILD_SUM";
}

Eis find_a0a1(const FieldInvariants& inv)
{
    const BigInt ec = inv.dec.e * inv.dec.c;
    const BigInt s = inv.tag == CaseTag::T1 ? ec : ec / 3;
    Eis prod{1, 0};
    for (const auto& [p, k] : factor(s).primes) {
        if (p % 3 != 1)
            throw internal_inconsistency_error(
                "find_a0a1: prime of S not congruent to 1 mod 3");
        const Eis pi = split_prime(p);
        const Eis alt = canonical(e_conj(pi));
        Eis chosen;
        if (e_divides(pi, inv.a_n))
            chosen = pi;
        else if (e_divides(alt, inv.a_n))
            chosen = alt;
        else
            throw internal_inconsistency_error(
                "find_a0a1: neither prime above p divides A_n");
        prod = e_mul(prod, e_pow(chosen, k));
    }
    prod = canonical(prod);
    if (inv.tag == CaseTag::T2 || inv.tag == CaseTag::W3i)
        prod = e_mul(prod, {1, -1});
    return prod;
}

int epsilon(const FieldInvariants& inv, const Eis& pair)
{
    if (!is_tame(inv.tag))
        throw case_error("epsilon: defined only in the tame cases");
    const int eps = inv.tag == CaseTag::T1 ? legendre3(inv.n1 * (pair.a + pair.b))
                                           : legendre3(inv.n2 * pair.a);
    const BigInt ec2 = inv.dec.e * inv.dec.c * inv.dec.c;
    if (!divides3(eps * ec2 - inv.n1 * (pair.a + pair.b)))
        throw internal_inconsistency_error(
            "epsilon: 3 does not divide eps*ec^2 - n1(a0+a1)");
    return eps;
}

FieldElement alpha_from_pair(const CubicField& field, const FieldInvariants& inv,
                             const Eis& pair)
{
    const BigInt ec2 = inv.dec.e * inv.dec.c * inv.dec.c;
    const FieldElement rho = fe_rho();
    const FieldElement rho_p = field.sigma(rho);
    const FieldElement mix = field.add(field.smul(Rat(pair.a), rho),
                                       field.smul(Rat(pair.b), rho_p));
    if (is_tame(inv.tag)) {
        const int eps = epsilon(inv, pair);
        return field.add(
            field.smul(make_rat(inv.n2, ec2), mix),
            fe_const(make_rat(eps * ec2 - inv.n1 * (pair.a + pair.b), 3 * ec2)));
    }
    return field.add(field.smul(make_rat(3 * inv.n2, ec2), mix),
                     fe_const(make_rat(-inv.n1 * (pair.a + pair.b), ec2)));
}

Certificate verify_structure(const CubicField& field, const FieldInvariants& inv,
                             const FieldElement& alpha, const IntegralBasis& ib)
{
    Certificate cert;
    const FieldElement s = field.sigma(alpha);
    const FieldElement s2 = field.sigma(s);
    const std::array<FieldElement, 3> base{ib.one, ib.phi, ib.psi};
    const Rat disc_target{inv.discriminant};

    if (is_tame(inv.tag)) {
        cert.integrality = field.is_integral(alpha) && field.is_integral(s)
                        && field.is_integral(s2);
        cert.discriminant = field.disc_triple(alpha, s, s2) == disc_target;
        const std::array<FieldElement, 3> vecs{alpha, s, s2};
        try {
            bool ints = true;
            for (const FieldElement& v : vecs)
                ints = ints && all_integer(field.coords_in_basis(base, v));
            cert.index_one = ints && field.lattice_index(base, vecs) == 1;
        } catch (const singular_basis_error&) {
            cert.index_one = false;
        }
        return cert;
    }

    cert.integrality = field.is_integral(alpha);
    cert.trace_zero = field.trace(alpha) == 0;
    cert.discriminant = field.disc_triple(ib.one, alpha, s) == disc_target;
    const std::array<FieldElement, 3> vecs{ib.one, alpha, s};
    try {
        bool ints = true;
        for (const FieldElement& v : vecs)
            ints = ints && all_integer(field.coords_in_basis(base, v));
        cert.index_one = ints && field.lattice_index(base, vecs) == 1;
    } catch (const singular_basis_error&) {
        cert.index_one = false;
    }
    // The order's idempotents act on alpha + 1 as projections onto the
    // Z[G]-part and the Z-part respectively.
    const FieldElement x = field.add(alpha, fe_const(Rat(1)));
    const FieldElement sx = field.sigma(x);
    const FieldElement s2x = field.sigma(sx);
    const FieldElement proj_g =
        field.smul(make_rat(1, 3),
                   field.sub(field.smul(Rat(2), x), field.add(sx, s2x)));
    const FieldElement proj_z =
        field.smul(make_rat(1, 3), field.add(field.add(x, sx), s2x));
    cert.idempotent = proj_g == alpha && proj_z == fe_const(Rat(1));
    return cert;
}

GeneratorResult generator(const CubicField& field, const FieldInvariants& inv,
                          const IntegralBasis& ib)
{
    GeneratorResult res;
    const Eis pair = find_a0a1(inv);
    res.a0 = pair.a;
    res.a1 = pair.b;
    if (is_tame(inv.tag)) {
        res.epsilon = epsilon(inv, pair);
        res.structure = StructureTag::TameFreeRank1;
    } else {
        res.structure = StructureTag::WildSum;
    }
    res.alpha = alpha_from_pair(field, inv, pair);
    res.certificate = verify_structure(field, inv, res.alpha, ib);
    return res;
}

std::optional<FieldElement> corollary_form(const CubicField& field,
                                           const FieldInvariants& inv)
{
    const BigInt &n1 = inv.n1, &n2 = inv.n2;
    const BigInt &e = inv.dec.e, &c = inv.dec.c;
    const FieldElement rho = fe_rho();
    const FieldElement rho_p = field.sigma(rho);
    const FieldElement diff = field.sub(rho, rho_p);
    if (inv.tag == CaseTag::T1 && e == 1 && c == 1) {
        // delta square-free.
        return field.add(field.smul(Rat(n2), rho),
                         fe_const(make_rat(legendre3(n1) - n1, 3)));
    }
    if (inv.tag == CaseTag::T2 && e == 1 && c == 3) {
        // delta = 27 d, d square-free.
        return field.add(field.smul(make_rat(n2, 9), diff),
                         fe_const(make_rat(legendre3(n2), 3)));
    }
    if (inv.tag == CaseTag::W3i && e == 1 && c == 3) {
        // delta = 27 d, d square-free.
        return field.smul(make_rat(n2, 3), diff);
    }
    if (inv.tag == CaseTag::W3ii && e == 3 && c == 1) {
        // delta = 9 d, d square-free, 3 not dividing d.
        return FieldElement{{make_rat(-n1, 3), Rat(n2), Rat(0)}};
    }
    return std::nullopt;
}

} // namespace cyccubic

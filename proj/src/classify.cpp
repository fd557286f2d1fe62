#include "cyccubic/classify.hpp"

namespace cyccubic {

std::string tag_label(CaseTag tag)
{
    switch (tag) {
    case CaseTag::T1: return "1";
    case CaseTag::T2: return "2";
    case CaseTag::W3i: return "3i";
    case CaseTag::W3ii: return "3ii";
    }
    throw internal_inconsistency_error("tag_label: bad tag");
}

bool is_tame(CaseTag tag)
{
    return tag == CaseTag::T1 || tag == CaseTag::T2;
}

namespace {

BigInt mod(const BigInt& x, int m)
{
    BigInt r = x % m;
    return r < 0 ? r + m : r;
}

void require(bool ok, const char* what)
{
    if (!ok)
        throw internal_inconsistency_error(std::string("classify: ") + what);
}

} // namespace

FieldInvariants classify(const CubicField& field)
{
    FieldInvariants inv;
    inv.n1 = field.n1();
    inv.n2 = field.n2();
    inv.delta = field.delta();
    inv.dec = dec_factor(inv.delta);
    inv.a_n = {inv.n1 + 3 * inv.n2, 3 * inv.n2};
    require(e_norm(inv.a_n) == inv.delta, "norm(A_n) != delta");

    const BigInt &d = inv.dec.d, &e = inv.dec.e, &c = inv.dec.c;
    if (mod(inv.n1, 3) != 0) {
        inv.tag = CaseTag::T1;
        inv.m = c;
        require(d % 3 != 0 && e % 3 != 0 && c % 3 != 0, "T1: 3 | dec");
    } else {
        const BigInt t = inv.n1 / 3;
        if (mod(inv.n2 + 2 * t, 9) == 0) {
            inv.tag = CaseTag::T2;
            inv.m = 3 * c;
            require(c % 3 == 0 && c % 9 != 0, "T2: 3 || c fails");
            require(d % 3 != 0 && e % 3 != 0, "T2: 3 | d or 3 | e");
        } else if (mod(t - inv.n2, 3) == 0) {
            inv.tag = CaseTag::W3i;
            inv.m = c;
            require(c % 3 == 0 && c % 9 != 0, "W3i: 3 || c fails");
            require(d % 3 != 0 && e % 3 != 0, "W3i: 3 | d or 3 | e");
        } else {
            inv.tag = CaseTag::W3ii;
            inv.m = 3 * c;
            require(e % 3 == 0 && e % 9 != 0, "W3ii: 3 || e fails");
            require(d % 3 != 0 && c % 3 != 0, "W3ii: 3 | d or 3 | c");
        }
    }

    const BigInt de = d * e;
    switch (inv.tag) {
    case CaseTag::T1:
    case CaseTag::T2: inv.conductor = de; break;
    case CaseTag::W3i: inv.conductor = 9 * de; break;
    case CaseTag::W3ii: inv.conductor = 3 * de; break;
    }
    inv.discriminant = inv.conductor * inv.conductor;
    return inv;
}

OrderDescription associated_order_description(const FieldInvariants& inv)
{
    const BigInt de = inv.dec.d * inv.dec.e;
    if (is_tame(inv.tag))
        return {"Z[G]", {de}};
    if (inv.tag == CaseTag::W3i)
        return {"Z[G][(2-s-s^2)/3]", {9 * de, 3 * de}};
    return {"Z[G][(2-s-s^2)/3]", {3 * de, de}};
}

} // namespace cyccubic

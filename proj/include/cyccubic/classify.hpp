#ifndef CYCCUBIC_CLASSIFY_HPP
#define CYCCUBIC_CLASSIFY_HPP

#include <string>
#include <vector>

#include "cyccubic/cubic_field.hpp"
#include "cyccubic/eisenstein.hpp"

namespace cyccubic {

/// The four-way case split on (n1 mod 3, n2 mod 9, ...):
///   T1:   3 does not divide n1                       (tame)
///   T2:   n1 = 3t and n2 = -2t mod 9                 (tame)
///   W3i:  n1 = 3t, n2 != -2t mod 9, t = n2 mod 3     (wild)
///   W3ii: n1 = 3t, t != n2 mod 3                     (wild)
enum class CaseTag { T1, T2, W3i, W3ii };

/// "1", "2", "3i", "3ii".
std::string tag_label(CaseTag tag);

bool is_tame(CaseTag tag);

struct FieldInvariants {
    BigInt n1, n2;
    BigInt delta;      // n1^2 + 3 n1 n2 + 9 n2^2 = d e^2 c^3
    DecDec dec;        // d, e square-free, gcd(d,e) = 1
    BigInt m;          // c (T1, W3i) or 3c (T2, W3ii)
    CaseTag tag;
    BigInt conductor;    // de, de, 9de, 3de for T1, T2, W3i, W3ii
    BigInt discriminant; // conductor^2
    Eis a_n;             // A_n = n1 + 3 n2 (1 + zeta)
};

/// Populate all invariants; internally asserts the proved divisibility facts
/// of the case analysis (throws internal_inconsistency_error on violation).
FieldInvariants classify(const CubicField& field);

struct OrderDescription {
    std::string order;        // "Z[G]" or "Z[G][(2-s-s^2)/3]"
    std::vector<BigInt> d_set; // moduli attached to the order
};

OrderDescription associated_order_description(const FieldInvariants& inv);

} // namespace cyccubic

#endif

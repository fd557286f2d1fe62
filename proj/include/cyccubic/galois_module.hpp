#ifndef CYCCUBIC_GALOIS_MODULE_HPP
#define CYCCUBIC_GALOIS_MODULE_HPP

#include <optional>
#include <string>

#include "cyccubic/classify.hpp"
#include "cyccubic/cubic_field.hpp"
#include "cyccubic/integral_basis.hpp"

namespace cyccubic {

enum class StructureTag { TameFreeRank1, WildSum };

std::string structure_label(StructureTag s); // "TAME_FREE_RANK1" / "WILD_SUM"

/// Exact checks backing the module-structure claim. All flags must be true.
struct Certificate {
    bool integrality = false;
    bool trace_zero = true;    // wild only; vacuously true when tame
    bool discriminant = false;
    bool index_one = false;
    bool idempotent = true;    // wild only; vacuously true when tame

    bool all_ok() const
    {
        return integrality && trace_zero && discriminant && index_one && idempotent;
    }

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct GeneratorResult {
    BigInt a0, a1;
    std::optional<int> epsilon; // tame only
    FieldElement alpha;
    StructureTag structure;
    Certificate certificate;
};

/// The canonical (a0, a1): product over primes p^iota of S of the divisor of
/// A_n above p, canonicalized, times (1 - zeta) for tags T2 and W3i.
/// S = ec (T1) or ec/3 (T2, W3i, W3ii).
Eis find_a0a1(const FieldInvariants& inv);

/// Tame sign: legendre3(n1 (a0 + a1)) for T1, legendre3(n2 a0) for T2.
/// Throws case_error on wild input.
int epsilon(const FieldInvariants& inv, const Eis& pair);

/// Alpha rebuilt from a given admissible (a0, a1) pair (any associate that
/// divides A_n); used both by generator() and fixture verification.
FieldElement alpha_from_pair(const CubicField& field, const FieldInvariants& inv,
                             const Eis& pair);

/// Full generator computation including the verified certificate.
GeneratorResult generator(const CubicField& field, const FieldInvariants& inv,
                          const IntegralBasis& ib);

/// Exact certificate for a candidate generator alpha against a verified
/// integral basis. Does not throw on failed checks; flags record them.
Certificate verify_structure(const CubicField& field, const FieldInvariants& inv,
                             const FieldElement& alpha, const IntegralBasis& ib);

/// Closed-form alpha when one of the special-shape hypotheses applies
/// (delta square-free; delta = 27d; delta = 9d with 3 not dividing d).
std::optional<FieldElement> corollary_form(const CubicField& field,
                                           const FieldInvariants& inv);

} // namespace cyccubic

#endif

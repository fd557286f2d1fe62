#ifndef CYCCUBIC_CUBIC_FIELD_HPP
#define CYCCUBIC_CUBIC_FIELD_HPP

#include <array>
#include <string>

#include "cyccubic/arith.hpp"

namespace cyccubic {

/// Element of L_n as coordinates over the power basis {1, rho, rho^2}.
struct FieldElement {
    std::array<Rat, 3> c{Rat(0), Rat(0), Rat(0)};

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

FieldElement fe_const(const Rat& q);
FieldElement fe_rho();

/// The cyclic cubic field L_n = Q(rho), rho a root of
/// f_n(X) = X^3 - n X^2 - (n+3) X - 1, n = n1/n2 in lowest terms, n2 > 0.
/// Construction rejects reducible f_n.
class CubicField {
public:
    CubicField(BigInt n1, BigInt n2);

    const BigInt& n1() const { return n1_; }
    const BigInt& n2() const { return n2_; }
    const Rat& n() const { return n_; }

    /// n1^2 + 3 n1 n2 + 9 n2^2 (always positive).
    BigInt delta() const;

    FieldElement add(const FieldElement& x, const FieldElement& y) const;
    FieldElement sub(const FieldElement& x, const FieldElement& y) const;
    FieldElement mul(const FieldElement& x, const FieldElement& y) const;
    FieldElement smul(const Rat& s, const FieldElement& x) const;
    FieldElement inv(const FieldElement& x) const;

    /// The order-3 automorphism determined by rho -> rho^2 - (n+1) rho - 2.
    FieldElement sigma(const FieldElement& x) const;

    Rat trace(const FieldElement& x) const;
    Rat norm_elem(const FieldElement& x) const;

    /// Monic minimal polynomial, coefficients low -> high (degree 1 or 3).
    std::vector<Rat> minpoly(const FieldElement& x) const;
    bool is_integral(const FieldElement& x) const;

    /// d(x1,x2,x3) = (det M)^2 * Delta^2 / n2^4, M the coordinate matrix.
    Rat disc_triple(const FieldElement& x1, const FieldElement& x2,
                    const FieldElement& x3) const;

    /// Coordinates of x in the given basis; throws singular_basis_error.
    std::array<Rat, 3> coords_in_basis(const std::array<FieldElement, 3>& basis,
                                       const FieldElement& x) const;

    /// |det T| where T expresses vectors in basis coordinates.
    Rat lattice_index(const std::array<FieldElement, 3>& basis,
                      const std::array<FieldElement, 3>& vectors) const;

    /// Coordinates of x over {1, rho, rho'} (rho' = sigma(rho)).
    std::array<Rat, 3> to_rho_rhoprime(const FieldElement& x) const;
    FieldElement from_rho_rhoprime(const std::array<Rat, 3>& coords) const;

private:
    BigInt n1_, n2_;
    Rat n_;
};

} // namespace cyccubic

#endif

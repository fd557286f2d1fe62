#ifndef CYCCUBIC_INTEGRAL_BASIS_HPP
#define CYCCUBIC_INTEGRAL_BASIS_HPP

#include <array>

#include "cyccubic/classify.hpp"
#include "cyccubic/cubic_field.hpp"

namespace cyccubic {

/// Data of the depressed model: theta = (3 n2 / m)(rho - n/3) is a root of
/// X^3 + a X + b with a = -3 delta / m^2, b = -(2 n1 + 3 n2) delta / m^3.
struct TransformData {
    BigInt a, b, m;
};

/// Parameters of the factorization 4a^3 + 27b^2 = 2^(2 lambda) 3^(2 mu)
/// P^2 Q^2 delta_prime with 4 and 9 not dividing delta_prime.
struct AlbertParams {
    long lambda = 0;
    long mu = 0;
    BigInt p_part, q_part;
    BigInt delta_prime;
};

struct IntegralBasis {
    FieldElement one, phi, psi;
    BigInt u; // denominator of psi
    BigInt r; // residue representative used to build phi, psi
};

/// Compute (a, b, m); asserts integrality, the "no p^2 | a and p^3 | b"
/// condition, and minpoly(theta) = X^3 + a X + b.
TransformData transform(const CubicField& field, const FieldInvariants& inv);

/// theta as a field element: (3 n2 rho - n1) / m.
FieldElement theta_element(const FieldInvariants& inv);

/// Closed forms for (lambda, mu, P, Q, delta_prime), cross-checked against
/// the factorization of 4a^3 + 27b^2; throws internal_inconsistency_error
/// on any mismatch.
AlbertParams albert_params(const FieldInvariants& inv, const TransformData& td);

/// The case-ladder value r, reduced modulo 3u (any representative of the
/// residue class yields the same lattice). Result in [0, 3u).
BigInt compute_r(const FieldInvariants& inv, const TransformData& td,
                 const AlbertParams& ap, const BigInt& u);

/// The denominator u of psi: 9 e c^2 n2 (tame) or 3 e c^2 n2 (wild).
BigInt psi_denominator(const FieldInvariants& inv);

/// The integral basis {1, phi, psi}; verifies integrality of each element
/// and disc(1, phi, psi) = field discriminant, else throws
/// verification_error.
IntegralBasis basis(const CubicField& field, const FieldInvariants& inv);

/// Independent oracle: given only (a, b) with X^3 + aX + b irreducible and
/// no prime p with p^2 | a and p^3 | b, return an integral basis of Q(theta)
/// as three coordinate triples over {1, theta, theta^2}. Uses exact (not
/// reduced) r values. Throws precondition_error if the hypothesis fails.
std::array<std::array<Rat, 3>, 3> albert_oracle(const BigInt& a, const BigInt& b);

} // namespace cyccubic

#endif

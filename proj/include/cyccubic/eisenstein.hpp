#ifndef CYCCUBIC_EISENSTEIN_HPP
#define CYCCUBIC_EISENSTEIN_HPP

#include <array>
#include <string>
#include <utility>

#include "cyccubic/arith.hpp"

namespace cyccubic {

/// Element a + b*zeta of Z[zeta_3], with zeta^2 = -1 - zeta.
struct Eis {
    BigInt a, b;

    friend bool operator==(const Eis&, const Eis&) = default;
};

Eis e_add(const Eis& x, const Eis& y);
Eis e_sub(const Eis& x, const Eis& y);
Eis e_mul(const Eis& x, const Eis& y);
Eis e_neg(const Eis& x);

/// zeta -> zeta^2: (a, b) -> (a - b, -b).
Eis e_conj(const Eis& x);

/// a^2 - ab + b^2 >= 0.
BigInt e_norm(const Eis& x);

bool is_zero(const Eis& x);

/// The six unit multiples of x (units are +-1, +-zeta, +-zeta^2).
std::array<Eis, 6> associates(const Eis& x);

/// x = q*y + r with norm(r) < norm(y); q rounds x*conj(y)/norm(y) to the
/// nearest integers, ties toward -infinity. y must be nonzero.
std::pair<Eis, Eis> e_divmod(const Eis& x, const Eis& y);

/// True iff y divides x exactly.
bool e_divides(const Eis& y, const Eis& x);

/// Generator of the ideal (x, y), in canonical-associate form.
Eis e_gcd(Eis x, Eis y);

/// The unique associate with a > b >= 0 (argument in [0, pi/3)). x != 0.
Eis canonical(const Eis& x);

/// x^k by repeated multiplication; x^0 = 1.
Eis e_pow(const Eis& x, const BigInt& k);

/// Canonical prime of norm p, for p prime with p = 1 mod 3. Uses a modular
/// square root of -3 (Tonelli-Shanks) and gcd(p, s - (1 + 2*zeta)).
Eis split_prime(const BigInt& p);

/// Square root of a mod odd prime p; throws if a is a non-residue.
BigInt sqrt_mod(const BigInt& a, const BigInt& p);

std::string to_string(const Eis& x); // "a+b*z"

} // namespace cyccubic

#endif

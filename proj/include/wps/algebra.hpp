#pragma once

#include "wps/ext_field.hpp"
#include "wps/prime_field.hpp"
#include "wps/rational.hpp"
#include "wps/upoly.hpp"

#include <optional>
#include <random>
#include <vector>

namespace wps {

using GF = Ext<Fp>;      // F_p[X]/(h), a finite field when h is irreducible
using QExt = Ext<Rational>;

inline Fp random_like(const Fp& x, std::mt19937_64& rng)
{
    return Fp::raw(x.modulus(), rng() % x.modulus());
}
inline GF random_like(const GF& x, std::mt19937_64& rng)
{
    std::vector<Fp> c;
    for (int i = 0; i < x.deg(); ++i) c.push_back(random_like(x.context()->modulus.one(), rng));
    return GF::from_poly(x.context(), UPoly<Fp>(x.context()->modulus.one(), c));
}

// Square roots; nullopt when the element is not a square in its field.
std::optional<Rational> sqrt_of(const Rational& a);
std::optional<Fp> sqrt_of(const Fp& a);
std::optional<GF> sqrt_of(const GF& a);
std::optional<QExt> sqrt_of(const QExt& a);  // degree 1 or 2 extensions of Q

// Root finding over F_p.
UPoly<Fp> squarefree_part(const UPoly<Fp>& f);
std::vector<UPoly<Fp>> distinct_degree_factorization(const UPoly<Fp>& f);
UPoly<Fp> equal_degree_factor(const UPoly<Fp>& g, int k, std::mt19937_64& rng);
// Monic irreducible factor of least degree; throws on constant input.
UPoly<Fp> smallest_irreducible_factor(const UPoly<Fp>& f, std::uint64_t seed = 1);
std::vector<Fp> roots_in_base(const UPoly<Fp>& f, std::uint64_t seed = 1);

// Rational roots of a polynomial with rational coefficients. Returns nullopt
// when the coefficients are too large to enumerate divisors.
std::optional<std::vector<Rational>> rational_roots(const UPoly<Rational>& f);

}  // namespace wps

#pragma once

#include <vector>

#include "vanishforge/complexnum.hpp"
#include "vanishforge/precision.hpp"
#include "vanishforge/rationalx.hpp"

namespace vanishforge {

bool is_odd_prime(long n);
long smallest_primitive_root(long p);

// Dirichlet character modulo an odd prime p, identified by its exponent
// index against the smallest primitive root g: chi(g) = e(index/(p-1)).
// Conjugation is index negation; chi(-1) = (-1)^index.
struct DirichletCharacter {
    long modulus = 0;
    long index = 0;

    bool is_principal() const { return index == 0; }
    int parity() const { return (index % 2 == 0) ? +1 : -1; }
    DirichletCharacter conjugate() const;

    // exponent e with chi(m) = e(e/(p-1)), or -1 when p | m
    long exponent_at(long m) const;
    Complex value_at(long m) const;
    // chi(r) for r = 0..p-1 at the ambient precision
    std::vector<Complex> value_table() const;

    bool operator==(const DirichletCharacter& o) const {
        return modulus == o.modulus && index == o.index;
    }
};

// The p-2 non-principal characters mod p, ordered by index.
std::vector<DirichletCharacter> enumerate_characters(long p);

enum class DftDirection { Forward, Inverse };

// (F_N f)(j) = sum_n f(n) e(-jn/N); inverse carries 1/N and e(+jn/N).
std::vector<Complex> dft(const std::vector<Complex>& values, DftDirection direction);

Complex gauss_sum(const DirichletCharacter& chi);

// L(chi, s) for non-principal chi at any complex s, via the Hurwitz-zeta
// decomposition p^{-s} sum_a chi(a) zeta(s, a/p); s = 1 handled by the
// digamma limit.
Complex dirichlet_l(const DirichletCharacter& chi, const Complex& s, const PrecisionContext& ctx);

// Closed form L(chi, 1-n) = -B_{n,chi}/n for n >= 1 via generalized
// Bernoulli numbers; cross-check path for the Hurwitz route.
Complex dirichlet_l_bernoulli(const DirichletCharacter& chi, long n);

// True when L(chi, s) vanishes for parity reasons at the integer s <= 0.
bool parity_trivial_zero(const DirichletCharacter& chi, long s);

}  // namespace vanishforge

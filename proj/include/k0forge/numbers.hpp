#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k0forge/errors.hpp"

namespace k0forge {

// Exact arbitrary-precision integers and rationals.  mpq_class keeps values
// canonical (lowest terms, denominator >= 1), which is exactly the Rational
// contract; we alias rather than re-wrap.
using Int = mpz_class;
using Rat = mpq_class;

// Parses "A/B" or "A"; result is canonicalized.
Rat parse_rational(const std::string& text);

std::string rat_to_string(const Rat& x);

// num/den in lowest terms; den must be positive.
Rat make_rat(const Int& num, const Int& den);

// ceil(a / b) for b > 0, exact.
Int ceil_div(const Int& a, const Int& b);

bool is_prime(unsigned long n);

// Trial-division factorization.  Inputs are desk-scale: every factor is
// expected to be small or the smooth cofactor must itself be prime.
std::map<unsigned long, unsigned long> factorize(const Int& n);

// A generalized integer n = prod p_i^{n_i} with exponents in N or infinity.
// Zero exponents are never stored; the key set is a finite set of primes.
class Supernatural {
  public:
    struct Exponent {
        bool infinite = false;
        unsigned long value = 0;  // ignored when infinite
    };

    Supernatural() = default;

    // Grammar (bit-exact): expr := term ("*" term)* ;
    //                      term := PRIME ("^" (DIGITS | "inf"))?
    // "inf" is case-insensitive; no whitespace; primes must be distinct.
    static Supernatural parse(const std::string& text);

    void set(unsigned long prime, Exponent e);

    const std::map<unsigned long, Exponent>& factors() const { return factors_; }

    // True iff some exponent is infinite (the map is finite, so this is the
    // only way G_n can be infinitely generated).
    bool is_infinite() const;

    // Exponent of p, treating absent primes as 0.
    Exponent exponent_of(unsigned long prime) const;

    // g_contains: x (in lowest terms) lies in G_n iff every prime power in
    // its denominator is allowed by the exponents of n.
    bool contains(const Rat& x) const;

    // n / b with the convention infinity - l = infinity.  Throws
    // InvalidParams naming the offending prime when b does not divide n.
    Supernatural divide_by(const Int& b) const;

    std::string to_string() const;

  private:
    std::map<unsigned long, Exponent> factors_;
};

// Round-robin enumeration L_2,...,L_{count+1} over the primes of nprime in
// increasing order.  Finite exponents act as emission budgets; primes with
// infinite exponent are emitted on every pass.  Requires nprime infinite.
std::vector<unsigned long> enumerate_primes(const Supernatural& nprime, int count);

// Same policy, but the first pass only emits primes strictly greater than
// `first_pass_above`.  The engine uses this to continue the enumeration from
// where L_1 = b left off; later passes cover all primes, so the enumeration
// stays exhaustive.
std::vector<unsigned long> enumerate_primes_from(const Supernatural& nprime, int count,
                                                 unsigned long first_pass_above);

}  // namespace k0forge

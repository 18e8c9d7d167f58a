#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "paramodular/errors.hpp"

namespace paramodular {

using Rational = mpq_class;

/// Monomial: variable name -> integer exponent (possibly negative).
/// Zero exponents are never stored.  std::map keeps a deterministic
/// lexicographic order on (name, exponent) pairs, which is also the
/// normal-form term order.
using Monomial = std::map<std::string, int>;

/// Exact multivariate Laurent polynomial over Q.
///
/// Conventions used throughout the library:
///   "r"  formal square root of the residue cardinality; q := r^2.
///        reduce_sqrt(p) rewrites r^m -> p^(m/2) * r^(m mod 2).
///   "i"  a formal order-4 unit where needed; reduce_square("i", -1)
///        rewrites i^2 -> -1.
/// Equality is structural on normal forms: relations such as r^2 = q
/// hold only after the corresponding rewrite has been applied.
class RingElt {
public:
    RingElt() = default;

    static RingElt zero() { return RingElt(); }
    static RingElt one() { return from_rational(1); }
    static RingElt from_rational(const Rational& c);
    static RingElt from_int(long n) { return from_rational(Rational(n)); }
    static RingElt variable(const std::string& name, int exp = 1);
    static RingElt monomial(const Rational& c, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// Exactly one term?
    bool is_monomial() const { return terms_.size() == 1; }
    /// No variables at all; returns the constant.
    std::optional<Rational> as_rational() const;

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    std::set<std::string> variables() const;

    RingElt operator+(const RingElt& o) const;
    RingElt operator-(const RingElt& o) const;
    RingElt operator-() const;
    RingElt operator*(const RingElt& o) const;
    RingElt& operator+=(const RingElt& o) { return *this = *this + o; }
    RingElt& operator*=(const RingElt& o) { return *this = *this * o; }

    /// Integer power.  A negative exponent requires a single-term element
    /// (Laurent monomial); otherwise NegativePowerOfNonMonomial.
    RingElt pow(int e) const;

    /// Simultaneous substitution; variables not bound are left alone.
    /// A variable occurring with negative exponent must be bound to a
    /// monomial or to an invertible constant (NonInvertibleSubstitution).
    RingElt substitute(const std::map<std::string, RingElt>& bindings) const;

    /// Rewrite var^m -> val^floor(m/2) * var^(m mod 2), m mod 2 in {0,1}.
    RingElt reduce_square(const std::string& var, const Rational& val) const;

    /// reduce_square("r", p): eliminates even powers of the formal sqrt.
    RingElt reduce_sqrt(long p) const { return reduce_square("r", Rational(p)); }

    bool operator==(const RingElt& o) const { return terms_ == o.terms_; }
    bool operator!=(const RingElt& o) const { return !(*this == o); }

    /// Floating evaluation; every variable must be bound (UnboundVariable).
    /// IEEE double accumulation, adequate for the archimedean checks.
    double evaluate_numeric(const std::map<std::string, double>& bindings) const;

    /// Canonical text form, e.g. "3/2*a^-1*r^3" or "1 - 2*x + x^2".
    std::string str() const;

    /// Inverse of str() for the canonical (paren-free, expanded) form.
    static RingElt parse(const std::string& text);

private:
    std::map<Monomial, Rational> terms_;

    void add_term(const Monomial& m, const Rational& c);
};

/// Structural equality with witness: nullopt when equal, a - b otherwise.
std::optional<RingElt> equals_witness(const RingElt& a, const RingElt& b);

inline bool ring_equal(const RingElt& a, const RingElt& b) { return a == b; }

namespace sym {

/// q^(1/2) as the designated variable r.
inline RingElt r(int exp = 1) { return RingElt::variable("r", exp); }
/// The residue cardinality q = r^2.
inline RingElt q(int exp = 1) { return RingElt::variable("r", 2 * exp); }
/// Half-integer power q^(m/2) = r^m.
inline RingElt q_half(int m) { return RingElt::variable("r", m); }

} // namespace sym

} // namespace paramodular

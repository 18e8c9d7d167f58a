#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paramodular/ring.hpp"

namespace paramodular {

/// Residue-field specification for an Euler factor: either fully symbolic
/// (q carried as r^2) or a concrete prime power p^f.
struct QSpec {
    std::optional<long> p;
    int f = 1;

    static QSpec symbolic() { return QSpec{}; }
    static QSpec concrete(long p, int f = 1) { return QSpec{p, f}; }
    bool is_symbolic() const { return !p.has_value(); }
    bool operator==(const QSpec&) const = default;
};

/// Inverse Euler factor P(u) with P(0) = 1 and deg <= 4; u stands for q^{-s}.
class EulerFactor {
public:
    EulerFactor() : coeffs_{RingElt::one()} {}
    explicit EulerFactor(std::vector<RingElt> coeffs, QSpec q = QSpec::symbolic());

    static EulerFactor constant_one(QSpec q = QSpec::symbolic()) { return EulerFactor({RingElt::one()}, q); }
    /// 1 - a*u  (linear factor).
    static EulerFactor linear(const RingElt& a, QSpec q = QSpec::symbolic());

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<RingElt>& coeffs() const { return coeffs_; }
    const RingElt& coeff(int i) const { return coeffs_.at(static_cast<size_t>(i)); }
    const QSpec& q_spec() const { return q_spec_; }

    /// Product of inverse factors (degree must stay <= 4).
    EulerFactor operator*(const EulerFactor& o) const;

    /// Replace u by u^f: a factor over a residue extension of degree f,
    /// written in the base variable.  Only multiples of f carry coefficients.
    EulerFactor embed_base_change(int f) const;

    /// Replace u by scale*u.
    EulerFactor rescale_u(const RingElt& scale) const;

    /// Apply RingElt::reduce_sqrt to every coefficient; marks the factor concrete.
    EulerFactor reduce_sqrt(long p) const;

    /// The polynomial as a RingElt in an explicit variable (default "u").
    RingElt as_ring_poly(const std::string& var = "u") const;

    bool operator==(const EulerFactor& o) const;
    bool operator!=(const EulerFactor& o) const { return !(*this == o); }

    std::string str(const std::string& var = "u") const;

private:
    std::vector<RingElt> coeffs_; // c0..cd, c0 == 1
    QSpec q_spec_;

    void trim();
};

} // namespace paramodular

#pragma once

#include <optional>
#include <string>

#include "paramodular/euler.hpp"
#include "paramodular/localdata.hpp"

namespace paramodular {

/// Level, Atkin-Lehner sign and Hecke eigenvalues of the paramodular
/// newform in the unique generic member of the packet.  Symbols are
/// carried exactly; q is the residue cardinality of the ground field,
/// written as r^2.
struct ParamodularInvariants {
    int N = 0;
    RingElt eps;
    RingElt lambda;
    RingElt mu;
    std::string row_id;
};

/// Table lookup on tempered trivial-central-character inducing data.
ParamodularInvariants paramodular_invariants(const InducingData& data);

/// Conductor of the parameter, computed independently of the table:
/// a(pi1) + a(pi2), resp. 2 d(E/F) + f(E/F) a(pi0).
int conductor_formula(const InducingData& data);

/// epsilon(1/2) of the parameter from the component epsilon factors:
/// product in the split case; epsilon(1/2, pi0) * omega_{E/F}(-1) in the
/// non-split case.
RingElt epsilon_formula(const InducingData& data);

/// The degree <= 4 factor attached to (N, eps, lambda, mu):
///   N = 0:  1 - q^{-3/2} l u + (q^{-2} m + 1 + q^{-2}) u^2 - q^{-3/2} l u^3 + u^4
///   N = 1:  1 - q^{-3/2}(l + e) u + (q^{-2} m + 1) u^2 + e q^{-1/2} u^3
///   N >= 2: 1 - q^{-3/2} l u + (q^{-2} m + 1) u^2
EulerFactor paramodular_euler_factor(int N, const RingElt& eps, const RingElt& lambda,
                                     const RingElt& mu, QSpec q = QSpec::symbolic());

struct LEqualityResult {
    bool ok = false;
    std::optional<RingElt> witness; // lhs - rhs as a polynomial in u
    EulerFactor lhs, rhs;
};

/// Exact identity between the paramodular-side factor built from the
/// table data and the product of the degree-2 factors of the inducing
/// representations.
LEqualityResult verify_L_equality(const InducingData& data);

} // namespace paramodular

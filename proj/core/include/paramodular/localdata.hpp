#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paramodular/euler.hpp"
#include "paramodular/quadfield.hpp"
#include "paramodular/ring.hpp"

namespace paramodular {

/// What the square of a descended character is.
enum class CharSquare { Trivial, OmegaEF };

/// Bare character data shared by characters of F^x and E_w^x.
/// Characters are structural records: every table condition reads only
/// these fields.  Two ramified characters are the "same character" only
/// if they carry the same name; unramified ones are compared by value.
struct CharCore {
    std::string name;
    int cond = 0;                        // a(chi)
    RingElt value_at_unif = RingElt::one();
    int value_at_minus_one = 1;          // +-1
    bool quadratic = false;              // chi^2 = 1
    bool unitary = true;                 // |chi| = 1 (tempered inputs)

    bool unramified() const { return cond == 0; }
};

/// Descent data for a Galois-invariant character alpha of E_w^x:
/// alpha = alpha_hat o Norm for a character alpha_hat of F^x.
/// square_is records alpha_hat^2 measured against eta: Trivial means
/// alpha_hat^2 = eta, OmegaEF means alpha_hat^2 = eta * omega_{E/F}
/// (eta is trivial throughout the tempered pipeline).
struct DescentData {
    RingElt value_at_unif = RingElt::one(); // alpha_hat(varpi_F)
    int cond = 0;                           // a(alpha_hat)
    CharSquare square_is = CharSquare::Trivial;
};

/// Galois-side data for characters of E_w^x.
struct GaloisData {
    bool sigma_invariant = false;
    /// For non-invariant characters: is alpha|_{F^x} = omega_{E/F}?
    std::optional<bool> restriction_is_omega;
    /// Full restriction record when a classification row needs it.
    std::optional<CharCore> restriction;
    std::optional<DescentData> descends;
};

struct Char : CharCore {
    std::optional<GaloisData> galois;

    static Char unramified(const std::string& name, const RingElt& value,
                           bool quadratic = false);
    static Char trivial();
};

/// Structural identity of characters (see CharCore).
bool same_character(const CharCore& a, const CharCore& b);

/// Base field of a local representation: Q_p itself or the completion
/// E_w, with residue degree f in {1, 2}.
struct LocalField {
    long p = 0;
    bool is_extension = false;
    int f = 1;

    static LocalField ground(long p) { return {p, false, 1}; }
    static LocalField extension(long p, int f) { return {p, true, f}; }
    bool operator==(const LocalField&) const = default;
};

struct BaseChangeData {
    CharSquare central_char_of_descent = CharSquare::Trivial;
    int descended_cond = 0;
};

/// Generic irreducible admissible representation of GL(2) used as
/// inducing data.  PrincipalSeries is alpha x alpha^{-1} unless alpha2
/// is present (general alpha1 x alpha2, classification only).
/// OneDimTwist (alpha composed with det) exists for the classification
/// tables; it never enters the tempered pipeline.
struct GL2Rep {
    enum class Kind { PrincipalSeries, SteinbergTwist, OneDimTwist, Supercuspidal };

    Kind kind = Kind::PrincipalSeries;
    LocalField field;
    std::optional<Char> alpha;
    std::optional<Char> alpha2;
    /// Unramified principal series may carry alpha + alpha^{-1} directly
    /// (inputs given by a Hecke eigenvalue rather than a Satake symbol).
    std::optional<RingElt> satake_sum;

    // supercuspidal data
    std::string label;       // identity for isomorphism tests
    int sc_cond = 2;         // a(pi)
    int sc_eps_half = 1;     // epsilon(1/2, pi), +-1
    std::optional<bool> galois_invariant;
    std::optional<BaseChangeData> base_change;

    static GL2Rep principal_series(LocalField fld, Char a);
    static GL2Rep general_principal_series(LocalField fld, Char a1, Char a2);
    static GL2Rep steinberg(LocalField fld, Char a);
    static GL2Rep one_dim(LocalField fld, Char a);
    static GL2Rep supercuspidal(LocalField fld, std::string label, int cond, int eps_half);

    bool is_ps() const { return kind == Kind::PrincipalSeries; }
    bool is_steinberg() const { return kind == Kind::SteinbergTwist; }
    bool is_one_dim() const { return kind == Kind::OneDimTwist; }
    bool is_supercuspidal() const { return kind == Kind::Supercuspidal; }

    /// alpha(varpi) + alpha(varpi)^{-1} for an unramified principal series.
    RingElt satake_sum_value() const;
    /// Twist character is unramified?
    bool twist_unramified() const;
};

/// The two parameter families: a pair over F, or quadratic-extension data.
struct InducingData {
    enum class Kind { Split, NonSplit };

    Kind kind = Kind::Split;
    // split
    std::optional<GL2Rep> pi1, pi2;
    // non-split
    std::optional<PlaceData> place;
    std::optional<GL2Rep> pi0;
    std::optional<Char> eta;

    static InducingData split(GL2Rep a, GL2Rep b);
    static InducingData non_split(PlaceData place, GL2Rep pi0,
                                  std::optional<Char> eta = std::nullopt);

    bool eta_is_trivial() const;
};

/// Invariant checks; returns human-readable violations, never throws.
std::vector<std::string> validate(const InducingData& data);

/// a(pi) of the local representation (over its own base field).
int conductor(const GL2Rep& rep);

/// Hecke eigenvalue lambda_tau of the local newform.  Unramified
/// principal series: q^{1/2}(alpha + alpha^{-1}); Steinberg with
/// unramified twist: alpha(varpi); all other ramified cases: 0 (reported
/// only, never used in table lookups).
RingElt hecke_eigenvalue(const GL2Rep& rep);

/// Atkin-Lehner eigenvalue epsilon(1/2, pi); a signed symbol when the
/// twist value is symbolic.
RingElt atkin_lehner_epsilon(const GL2Rep& rep);

/// Degree <= 2 inverse local factor, embedded in u^f for representations
/// over an extension.
EulerFactor gl2_euler_factor(const GL2Rep& rep);

} // namespace paramodular

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paramodular/localdata.hpp"
#include "paramodular/quadfield.hpp"
#include "paramodular/tables.hpp"

namespace paramodular {

/// Local data of the input form at one place: a full representation, or an
/// eigenvalue shorthand.  The shorthand is allowed only when val_level <= 1
/// (val 1 pins the representation to an unramified Steinberg twist).
struct PlaceInput {
    long p = 0;
    int index = 1; // 1, or 2 for the second place over a split prime
    int val_level = 0;
    std::optional<GL2Rep> rep;
    std::optional<RingElt> lambda;

    bool operator==(const PlaceInput&) const = default;
};

/// The Hilbert-side input: infinity type (2, 2n+2), level data per place.
struct HilbertFormInput {
    QuadField field;
    int n = 0;
    bool not_galois_invariant = true;
    std::vector<PlaceInput> places;
};

struct PrimeInvariantsReport {
    long p = 0;
    int val_N = 0;
    std::string row_id;
    RingElt lambda_p, mu_p;            // normalization of the invariant table, q = p
    std::optional<RingElt> eps_p;      // present iff val_N >= 1
    EulerFactor euler;                 // inverse factor, u = p^{-s}
    RingElt classical_lambda;          // p^{k-3} lambda_p
    RingElt classical_mu;              // p^{2(k-3)} mu_p
    EulerFactor classical_euler;

    bool operator==(const PrimeInvariantsReport&) const = default;
};

struct GlobalReportData {
    RingElt sign;                      // (-1)^k prod_{p|N} eps_p
    std::string functional_equation;
    std::string epsilon_chain;
    std::string archimedean_factor;
    bool sign_consistent = false;
    bool archimedean_ok = false;
    double archimedean_constant = 0.0;
    std::vector<std::string> notes;    // conventions in force for this input

    bool operator==(const GlobalReportData&) const = default;
};

struct SiegelFormReport {
    int k = 0;
    std::map<long, int> level;         // factored N
    std::string N;                     // decimal rendering of N
    std::map<long, PrimeInvariantsReport> per_prime;
    GlobalReportData global;

    bool operator==(const SiegelFormReport&) const = default;
};

/// The local inducing data at p built from the input (split pairs and
/// non-split triples, defaulting to symbolic unramified data).
InducingData build_local_data(const HilbertFormInput& input, long p);

PrimeInvariantsReport prime_invariants(const HilbertFormInput& input, long p);

/// The classical degree-four factor at p in the classical normalization
/// (lambda_cl = p^{k-3} lambda_p, mu_cl = p^{2(k-3)} mu_p).
EulerFactor classical_euler_factor(int k, int val_p_N, const RingElt& lambda_cl,
                                   const RingElt& mu_cl, const RingElt& eps,
                                   QSpec q = QSpec::symbolic());

struct ShiftCheckResult {
    bool ok = false;
    std::optional<RingElt> witness;
};

/// Substituting u -> q^{3/2-k} u into the classical factor must reproduce
/// the normalized factor exactly; fully symbolic in the eigenvalues.
ShiftCheckResult verify_shift_identity_data(int k, int val_N, const RingElt& eps,
                                            const RingElt& lambda, const RingElt& mu);
ShiftCheckResult verify_shift_identity(const HilbertFormInput& input, long p, int k);

struct ArchimedeanResult {
    bool ok = false;
    double constant = 0.0;
    double max_relative_deviation = 0.0;
};

/// Ratio of the shifted degree-two completed archimedean factor to the
/// input-side product at the sample points; asserts s-independence.
ArchimedeanResult archimedean_check(int n, const std::vector<double>& samples,
                                    double tolerance);
/// Same with an explicit shift (the correct one is k - 3/2 = n + 1/2).
ArchimedeanResult archimedean_check_with_shift(int n, double shift,
                                               const std::vector<double>& samples,
                                               double tolerance);

SiegelFormReport global_report(const HilbertFormInput& input,
                               const std::vector<long>& extra_primes = {},
                               double tolerance = 1e-9);

} // namespace paramodular

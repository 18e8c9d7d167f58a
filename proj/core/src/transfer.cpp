#include "paramodular/transfer.hpp"

#include <cmath>
#include <sstream>

namespace paramodular {

namespace {

using sym::q;
using sym::q_half;

RingElt reduce_all(const RingElt& e, long p) {
    return e.reduce_sqrt(p).reduce_square("i", Rational(-1));
}

Rational int_power(long base, int e) {
    Rational out(1);
    Rational b(base);
    int k = e < 0 ? -e : e;
    for (int i = 0; i < k; ++i) out *= b;
    if (e < 0) out = Rational(1) / out;
    return out;
}

std::vector<const PlaceInput*> entries_at(const HilbertFormInput& input, long p) {
    std::vector<const PlaceInput*> out;
    for (const auto& pl : input.places)
        if (pl.p == p) out.push_back(&pl);
    return out;
}

/// Representation of one place from its input entry; base is Q_p for split
/// places and E_w otherwise.
GL2Rep rep_from_entry(const PlaceInput& entry, const LocalField& fld, bool non_split) {
    if (entry.rep) {
        GL2Rep rep = *entry.rep;
        rep.field = fld;
        if (conductor(rep) != entry.val_level)
            raise(ErrorCode::BadInput,
                  "place over p = " + std::to_string(entry.p) +
                      ": conductor of the representation (" +
                      std::to_string(conductor(rep)) + ") disagrees with val_level (" +
                      std::to_string(entry.val_level) + ")");
        return rep;
    }
    if (!entry.lambda)
        raise(ErrorCode::MissingLocalData,
              "place over p = " + std::to_string(entry.p) +
                  " carries neither a representation nor an eigenvalue");
    if (entry.val_level == 0) {
        GL2Rep rep;
        rep.kind = GL2Rep::Kind::PrincipalSeries;
        rep.field = fld;
        rep.satake_sum = *entry.lambda * q_half(-fld.f);
        return rep;
    }
    if (entry.val_level == 1) {
        // level p^1 forces an unramified Steinberg twist; the eigenvalue is
        // the twist value at the uniformizer
        if (!entry.lambda->is_monomial())
            raise(ErrorCode::BadInput,
                  "eigenvalue of a level-one place must be a single +-1 value or symbol");
        Char a = Char::unramified("lam", *entry.lambda, true);
        a.name = entry.lambda->str();
        if (non_split) {
            GaloisData g;
            g.sigma_invariant = true;
            a.galois = g;
        }
        return GL2Rep::steinberg(fld, a);
    }
    raise(ErrorCode::MissingLocalData,
          "place over p = " + std::to_string(entry.p) +
              " has val_level >= 2 and needs full representation data");
}

GL2Rep default_unramified(const LocalField& fld, const std::string& lambda_name) {
    GL2Rep rep;
    rep.kind = GL2Rep::Kind::PrincipalSeries;
    rep.field = fld;
    rep.satake_sum = RingElt::variable(lambda_name) * q_half(-fld.f);
    return rep;
}

} // namespace

InducingData build_local_data(const HilbertFormInput& input, long p) {
    PlaceData pd = splitting_type(input.field, p);
    auto entries = entries_at(input, p);
    for (const auto* e : entries)
        if (e->index < 1 || e->index > pd.num_places)
            raise(ErrorCode::InconsistentPlaces,
                  "place index " + std::to_string(e->index) + " invalid over " +
                      split_type_name(pd.type) + " prime " + std::to_string(p));

    if (pd.type == SplitType::Split) {
        const PlaceInput* e1 = nullptr;
        const PlaceInput* e2 = nullptr;
        for (const auto* e : entries) (e->index == 1 ? e1 : e2) = e;
        LocalField fld = LocalField::ground(p);
        GL2Rep r1 = e1 ? rep_from_entry(*e1, fld, false) : default_unramified(fld, "lam_w1");
        GL2Rep r2 = e2 ? rep_from_entry(*e2, fld, false) : default_unramified(fld, "lam_w2");
        return InducingData::split(std::move(r1), std::move(r2));
    }
    if (entries.size() > 1)
        raise(ErrorCode::InconsistentPlaces,
              "two places supplied over the non-split prime " + std::to_string(p));
    LocalField fld = LocalField::extension(p, pd.f);
    GL2Rep r0 = entries.empty() ? default_unramified(fld, "lam_w")
                                : rep_from_entry(*entries[0], fld, true);
    return InducingData::non_split(pd, std::move(r0));
}

PrimeInvariantsReport prime_invariants(const HilbertFormInput& input, long p) {
    const int k = input.n + 2;
    PlaceData pd = splitting_type(input.field, p);
    InducingData data = build_local_data(input, p);
    ParamodularInvariants inv = paramodular_invariants(data);

    int val_from_level = 2 * pd.d;
    for (const auto* e : entries_at(input, p)) val_from_level += pd.f * e->val_level;
    if (val_from_level != inv.N)
        raise(ErrorCode::BadInput,
              "val_p(N) from the level formula (" + std::to_string(val_from_level) +
                  ") disagrees with the local conductor (" + std::to_string(inv.N) +
                  ") at p = " + std::to_string(p));

    PrimeInvariantsReport rep;
    rep.p = p;
    rep.val_N = inv.N;
    rep.row_id = inv.row_id;
    rep.lambda_p = reduce_all(inv.lambda, p);
    rep.mu_p = reduce_all(inv.mu, p);
    if (inv.N >= 1) rep.eps_p = reduce_all(inv.eps, p);
    rep.euler = paramodular_euler_factor(inv.N, inv.eps, inv.lambda, inv.mu,
                                         QSpec::concrete(p));
    rep.classical_lambda = RingElt::from_rational(int_power(p, k - 3)) * rep.lambda_p;
    rep.classical_mu = RingElt::from_rational(int_power(p, 2 * (k - 3))) * rep.mu_p;
    rep.classical_euler =
        classical_euler_factor(k, inv.N, rep.classical_lambda, rep.classical_mu,
                               rep.eps_p ? *rep.eps_p : RingElt::one(), QSpec::concrete(p));
    return rep;
}

EulerFactor classical_euler_factor(int k, int val_p_N, const RingElt& lambda_cl,
                                   const RingElt& mu_cl, const RingElt& eps, QSpec qs) {
    std::vector<RingElt> c;
    if (val_p_N == 0) {
        c = {RingElt::one(), -lambda_cl,
             q() * mu_cl + q_half(2 * (2 * k - 3)) + q_half(2 * (2 * k - 5)),
             -q_half(2 * (2 * k - 3)) * lambda_cl, q_half(2 * (4 * k - 6))};
    } else if (val_p_N == 1) {
        c = {RingElt::one(), -(lambda_cl + q_half(2 * (k - 3)) * eps),
             q() * mu_cl + q_half(2 * (2 * k - 3)), eps * q_half(2 * (3 * k - 5))};
    } else {
        c = {RingElt::one(), -lambda_cl, q() * mu_cl + q_half(2 * (2 * k - 3))};
    }
    EulerFactor factor(std::move(c));
    if (!qs.is_symbolic()) factor = factor.reduce_sqrt(*qs.p);
    return factor;
}

ShiftCheckResult verify_shift_identity_data(int k, int val_N, const RingElt& eps,
                                            const RingElt& lambda, const RingElt& mu) {
    RingElt lambda_cl = q_half(2 * (k - 3)) * lambda;
    RingElt mu_cl = q_half(4 * (k - 3)) * mu;
    EulerFactor classical = classical_euler_factor(k, val_N, lambda_cl, mu_cl, eps);
    EulerFactor shifted = classical.rescale_u(q_half(3 - 2 * k));
    EulerFactor normalized = paramodular_euler_factor(val_N, eps, lambda, mu);
    RingElt diff = shifted.as_ring_poly("u") - normalized.as_ring_poly("u");
    ShiftCheckResult res;
    res.ok = diff.is_zero();
    if (!res.ok) res.witness = diff;
    return res;
}

ShiftCheckResult verify_shift_identity(const HilbertFormInput& input, long p, int k) {
    InducingData data = build_local_data(input, p);
    ParamodularInvariants inv = paramodular_invariants(data);
    return verify_shift_identity_data(k, inv.N, inv.eps, inv.lambda, inv.mu);
}

namespace {

double log_two_pi() { return std::log(2.0 * std::acos(-1.0)); }

double siegel_log(double s, double shift, int k) {
    return -2.0 * (s + shift) * log_two_pi() + std::lgamma(s + shift) +
           std::lgamma(s + shift - k + 2);
}

double hilbert_log(double s, int n) {
    return -(2.0 * s + n + 1) * log_two_pi() + std::lgamma(s + 0.5) +
           std::lgamma(s + n + 0.5);
}

} // namespace

ArchimedeanResult archimedean_check_with_shift(int n, double shift,
                                               const std::vector<double>& samples,
                                               double tolerance) {
    if (samples.size() < 3)
        raise(ErrorCode::BadInput, "archimedean check needs at least 3 sample points");
    const int k = n + 2;
    ArchimedeanResult res;
    double base = 0.0;
    bool first = true;
    for (double s : samples) {
        if (s + shift - k + 2 <= 0 || s + shift <= 0)
            raise(ErrorCode::NumericalInstability,
                  "sample point leaves the well-conditioned region");
        double ratio = std::exp(siegel_log(s, shift, k) - hilbert_log(s, n));
        if (!std::isfinite(ratio))
            raise(ErrorCode::NumericalInstability, "non-finite gamma-factor ratio");
        if (first) {
            base = ratio;
            res.constant = ratio;
            first = false;
        } else {
            double dev = std::abs(ratio / base - 1.0);
            res.max_relative_deviation = std::max(res.max_relative_deviation, dev);
        }
    }
    res.ok = res.max_relative_deviation <= tolerance;
    return res;
}

ArchimedeanResult archimedean_check(int n, const std::vector<double>& samples,
                                    double tolerance) {
    return archimedean_check_with_shift(n, n + 0.5, samples, tolerance);
}

SiegelFormReport global_report(const HilbertFormInput& input,
                               const std::vector<long>& extra_primes, double tolerance) {
    if (!input.not_galois_invariant)
        raise(ErrorCode::GaloisInvariantInput,
              "the transfer requires a non-Galois-invariant input form");
    if (input.n < 0) raise(ErrorCode::BadInput, "infinity type requires n >= 0");

    SiegelFormReport rep;
    rep.k = input.n + 2;

    std::vector<PlaceLevel> levels;
    for (const auto& pl : input.places) levels.push_back({pl.p, pl.index, pl.val_level});
    rep.level = paramodular_level(input.field, levels);

    mpz_class N(1);
    for (const auto& [p, e] : rep.level) {
        for (int i = 0; i < e; ++i) N *= p;
    }
    rep.N = N.get_str();

    std::vector<long> primes;
    for (const auto& [p, e] : rep.level) primes.push_back(p);
    for (long p : extra_primes)
        if (!rep.level.count(p)) primes.push_back(p);

    RingElt eps_product = RingElt::one();
    for (long p : primes) {
        PrimeInvariantsReport pr = prime_invariants(input, p);
        if (pr.eps_p) eps_product = eps_product * (*pr.eps_p);
        rep.per_prime.emplace(p, std::move(pr));
    }

    GlobalReportData g;
    int sign_k = (rep.k % 2 == 0) ? 1 : -1;
    g.sign = RingElt::from_int(sign_k) * eps_product;
    g.sign_consistent = sign_k == ((input.n % 2 == 0) ? 1 : -1);

    {
        std::ostringstream os;
        os << "Lambda(" << 2 * rep.k - 2 << "-s,F) = (" << g.sign.str() << ") * " << rep.N
           << "^(s-" << rep.k - 1 << ") * Lambda(s,F)";
        g.functional_equation = os.str();
    }
    {
        std::ostringstream os;
        os << "epsilon(s,pi0) = (" << ((input.n % 2 == 0) ? "+1" : "-1") << ") * " << rep.N
           << "^(1/2-s) * (" << eps_product.str() << ")";
        g.epsilon_chain = os.str();
    }
    {
        std::ostringstream os;
        os << "(2*pi)^(-2*s) * Gamma(s) * Gamma(s";
        if (rep.k > 2) os << "-" << rep.k - 2;
        os << ")";
        g.archimedean_factor = os.str();
    }
    ArchimedeanResult ar =
        archimedean_check(input.n, {1.0, 1.75, 2.5, 3.25, 4.0}, tolerance);
    g.archimedean_ok = ar.ok;
    g.archimedean_constant = ar.constant;

    bool has_level_one = false, has_twin_level_one = false;
    for (const auto& [p, pr] : rep.per_prime) {
        has_level_one = has_level_one || pr.val_N == 1;
        has_twin_level_one =
            has_twin_level_one || pr.row_id.rfind("Va|VIa", 0) == 0 ||
            pr.row_id == "Va-unr-unr" || pr.row_id == "VIa-unr";
    }
    if (has_level_one)
        g.notes.push_back(
            "at val_p(N) = 1 primes, lambda_p weights the unramified place's "
            "eigenvalue by p and the Steinberg place's by p+1");
    if (has_twin_level_one)
        g.notes.push_back(
            "at split primes with both local levels 1, mu_p = -p^2 + p "
            "lambda_w1 lambda_w2 (the product term is nonzero exactly here)");

    rep.global = std::move(g);
    return rep;
}

} // namespace paramodular

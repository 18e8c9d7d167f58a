#include "paramodular/rowsuite.hpp"

#include <random>
#include <sstream>

#include "paramodular/packets.hpp"
#include "paramodular/quadfield.hpp"

namespace paramodular {

namespace {

using sym::q;
using sym::q_half;

const LocalField F7 = LocalField::ground(7);

Char unr_symbol(const std::string& name) {
    Char c = Char::unramified(name, RingElt::variable(name));
    return c;
}

Char unr_quad_symbol(const std::string& name) {
    Char c = Char::unramified(name, RingElt::variable(name), true);
    return c;
}

Char unr_quad_exact(const std::string& name, int v) {
    Char c = Char::unramified(name, RingElt::from_int(v), true);
    return c;
}

Char ram_char(const std::string& name, int cond, int at_minus_one, bool quadratic,
              int at_unif = 1) {
    Char c;
    c.name = name;
    c.cond = cond;
    c.value_at_unif = RingElt::from_int(at_unif);
    c.value_at_minus_one = at_minus_one;
    c.quadratic = quadratic;
    c.unitary = true;
    return c;
}

Char with_galois(Char c, bool sigma_invariant,
                 std::optional<bool> restriction_is_omega = std::nullopt,
                 std::optional<DescentData> descends = std::nullopt) {
    GaloisData g;
    g.sigma_invariant = sigma_invariant;
    g.restriction_is_omega = restriction_is_omega;
    g.descends = std::move(descends);
    c.galois = std::move(g);
    return c;
}

PlaceData inert_place() { return splitting_type(QuadField::make(5), 2); }
PlaceData ramified_place_plus() { return splitting_type(QuadField::make(5), 5); }   // w(-1) = +1
PlaceData ramified_place_minus() { return splitting_type(QuadField::make(3), 3); }  // w(-1) = -1

LocalField ext_field(const PlaceData& pd) { return LocalField::extension(pd.p, pd.f); }

GL2Rep sc(LocalField fld, const std::string& label, int cond, int eps) {
    return GL2Rep::supercuspidal(fld, label, cond, eps);
}

GL2Rep sc_over_E(const PlaceData& pd, const std::string& label, int cond, int eps,
                 bool galois_invariant,
                 std::optional<BaseChangeData> bc = std::nullopt) {
    GL2Rep r = sc(ext_field(pd), label, cond, eps);
    r.galois_invariant = galois_invariant;
    r.base_change = bc;
    return r;
}

} // namespace

std::vector<RowCase> table_row_cases() {
    std::vector<RowCase> rows;
    auto add = [&rows](std::string id, InducingData data,
                       std::vector<std::string> quads = {}) -> RowCase& {
        rows.push_back(RowCase{std::move(id), std::move(data), std::move(quads)});
        return rows.back();
    };

    // -- split pairs over F = Q_7 ------------------------------------------
    add("I-unr-unr", InducingData::split(GL2Rep::principal_series(F7, unr_symbol("a")),
                                         GL2Rep::principal_series(F7, unr_symbol("b"))));
    add("I-unr-ram", InducingData::split(GL2Rep::principal_series(F7, unr_symbol("a")),
                                         GL2Rep::principal_series(F7, ram_char("c", 1, -1, false))));
    add("I-ram-unr", InducingData::split(GL2Rep::principal_series(F7, ram_char("c", 1, -1, false)),
                                         GL2Rep::principal_series(F7, unr_symbol("a"))));
    add("I-ram-ram",
        InducingData::split(GL2Rep::principal_series(F7, ram_char("c1", 1, -1, false)),
                            GL2Rep::principal_series(F7, ram_char("c2", 2, 1, false))));

    add("IIa-unr-unr", InducingData::split(GL2Rep::principal_series(F7, unr_symbol("a")),
                                           GL2Rep::steinberg(F7, unr_quad_symbol("b"))),
        {"b"});
    add("IIa-unr-ram", InducingData::split(GL2Rep::principal_series(F7, unr_symbol("a")),
                                           GL2Rep::steinberg(F7, ram_char("bq", 1, -1, true, -1))));
    add("IIa-ram-unr", InducingData::split(GL2Rep::principal_series(F7, ram_char("c", 1, -1, false)),
                                           GL2Rep::steinberg(F7, unr_quad_symbol("b"))),
        {"b"});
    add("IIa-ram-ram",
        InducingData::split(GL2Rep::principal_series(F7, ram_char("c", 2, 1, false)),
                            GL2Rep::steinberg(F7, ram_char("bq", 1, -1, true, -1))));

    add("X-unr", InducingData::split(GL2Rep::principal_series(F7, unr_symbol("a")),
                                     sc(F7, "tau1", 2, -1)));
    add("X-ram", InducingData::split(GL2Rep::principal_series(F7, ram_char("c", 1, -1, false)),
                                     sc(F7, "tau1", 3, 1)));

    add("Va-unr-unr", InducingData::split(GL2Rep::steinberg(F7, unr_quad_exact("alpha", 1)),
                                          GL2Rep::steinberg(F7, unr_quad_exact("beta", -1))));
    add("Va-unr-ram", InducingData::split(GL2Rep::steinberg(F7, unr_quad_symbol("a")),
                                          GL2Rep::steinberg(F7, ram_char("bq", 1, -1, true, 1))),
        {"a"});
    add("Va-ram-unr", InducingData::split(GL2Rep::steinberg(F7, ram_char("bq", 1, -1, true, 1)),
                                          GL2Rep::steinberg(F7, unr_quad_symbol("a"))),
        {"a"});
    add("Va-ram-ram",
        InducingData::split(GL2Rep::steinberg(F7, ram_char("c1", 1, -1, true, 1)),
                            GL2Rep::steinberg(F7, ram_char("c2", 2, -1, true, -1))));

    add("Va|VIa-unr-unr", InducingData::split(GL2Rep::steinberg(F7, unr_quad_symbol("a")),
                                              GL2Rep::steinberg(F7, unr_quad_symbol("b"))),
        {"a", "b"});
    add("VIa-unr", InducingData::split(GL2Rep::steinberg(F7, unr_quad_exact("alpha", -1)),
                                       GL2Rep::steinberg(F7, unr_quad_exact("alpha", -1))));
    add("VIa-ram", InducingData::split(GL2Rep::steinberg(F7, ram_char("c1", 1, -1, true, 1)),
                                       GL2Rep::steinberg(F7, ram_char("c1", 1, -1, true, 1))));

    add("XIa-unr", InducingData::split(GL2Rep::steinberg(F7, unr_quad_symbol("a")),
                                       sc(F7, "tau1", 2, 1)),
        {"a"});
    add("XIa-ram", InducingData::split(GL2Rep::steinberg(F7, ram_char("c", 1, 1, true, -1)),
                                       sc(F7, "tau1", 2, -1)));

    add("VIIIa", InducingData::split(sc(F7, "tau1", 2, -1), sc(F7, "tau1", 2, -1)));
    add("XIIa*", InducingData::split(sc(F7, "tau1", 2, -1), sc(F7, "tau2", 3, 1)));

    // -- non-split ----------------------------------------------------------
    const PlaceData in = inert_place();
    const PlaceData rp = ramified_place_plus();
    const PlaceData rm = ramified_place_minus();

    add("VII-ps", InducingData::non_split(
                      in, GL2Rep::principal_series(
                              ext_field(in), with_galois(ram_char("a", 1, -1, false), false, false))));
    add("VIIIa-ps", InducingData::non_split(
                        in, GL2Rep::principal_series(
                                ext_field(in), with_galois(ram_char("a", 1, 1, false), false, true))));

    add("I-ns-unr-inert",
        InducingData::non_split(
            in, GL2Rep::principal_series(
                    ext_field(in),
                    with_galois(unr_symbol("a"), true, std::nullopt,
                                DescentData{RingElt::variable("ah"), 0,
                                            CharSquare::Trivial}))));
    {
        DescentData de;
        de.value_at_unif = RingElt::variable("a");
        de.cond = 0;
        add("I-ns-unr-ram",
            InducingData::non_split(rp, GL2Rep::principal_series(
                                            ext_field(rp),
                                            with_galois(unr_symbol("a"), true, std::nullopt, de))));
    }
    add("I-ns-ram", InducingData::non_split(
                        in, GL2Rep::principal_series(
                                ext_field(in),
                                with_galois(ram_char("a", 2, 1, false), true, std::nullopt,
                                            DescentData{RingElt::variable("ah"), 2,
                                                        CharSquare::Trivial}))));

    add("IXa", InducingData::non_split(
                   in, GL2Rep::steinberg(ext_field(in),
                                         with_galois(ram_char("a", 1, -1, true, 1), false, false))));

    add("Va-ns-unr-inert",
        InducingData::non_split(
            in, GL2Rep::steinberg(ext_field(in),
                                  with_galois(unr_quad_exact("a", 1), true, std::nullopt,
                                              DescentData{RingElt::from_int(1), 0,
                                                          CharSquare::Trivial}))));
    {
        DescentData de;
        de.value_at_unif = RingElt::variable("i");
        de.cond = 0;
        de.square_is = CharSquare::OmegaEF;
        add("IIIa-unr",
            InducingData::non_split(in, GL2Rep::steinberg(ext_field(in),
                                                          with_galois(unr_quad_exact("a", -1), true,
                                                                      std::nullopt, de))));
    }
    add("Va|IIIa-ns-unr-inert",
        InducingData::non_split(in, GL2Rep::steinberg(ext_field(in),
                                                      with_galois(unr_quad_symbol("t"), true))),
        {"t"});
    add("Va-ns-unr-ram",
        InducingData::non_split(
            rm, GL2Rep::steinberg(ext_field(rm),
                                  with_galois(unr_quad_symbol("t"), true, std::nullopt,
                                              DescentData{RingElt::variable("t"), 0,
                                                          CharSquare::Trivial}))),
        {"t"});
    add("Va-ns-ram", InducingData::non_split(
                         rp, GL2Rep::steinberg(
                                 ext_field(rp),
                                 with_galois(ram_char("a", 1, 1, true, 1), true, std::nullopt,
                                             DescentData{RingElt::from_int(1), 1,
                                                         CharSquare::Trivial}))));
    {
        auto& rc = add("IIIa-ram",
                       InducingData::non_split(
                           rp, GL2Rep::steinberg(
                                   ext_field(rp),
                                   with_galois(ram_char("a", 1, 1, true, 1), true, std::nullopt,
                                               DescentData{RingElt::from_int(1), 1,
                                                           CharSquare::OmegaEF}))));
        rc.expect_four_a_hat = 1; // N = 2d + 2 f a(alpha) = 4 a(alpha_hat)
    }

    add("XIII*", InducingData::non_split(in, sc_over_E(in, "sigma0", 2, -1, false)));
    add("XIIa*-ns", InducingData::non_split(
                        rm, sc_over_E(rm, "sigma0", 2, 1, true,
                                      BaseChangeData{CharSquare::Trivial, 1})));
    {
        auto& rc = add("VII-bc", InducingData::non_split(
                                     in, sc_over_E(in, "sigma0", 2, 1, true,
                                                   BaseChangeData{CharSquare::OmegaEF, 2})));
        rc.expect_two_a_hat = 2; // N = 2d + f a(pi0) = 2 a(pi0_hat)
    }

    return rows;
}

bool all_ok(const std::vector<CheckResult>& rs) {
    for (const auto& r : rs)
        if (!r.ok) return false;
    return true;
}

namespace {

RingElt reduce_i(const RingElt& e) { return e.reduce_square("i", Rational(-1)); }

/// All +-1 assignments of the listed quadratic symbols.
std::vector<std::map<std::string, RingElt>> quad_assignments(
    const std::vector<std::string>& symbols) {
    std::vector<std::map<std::string, RingElt>> out;
    size_t n = symbols.size();
    for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
        std::map<std::string, RingElt> b;
        for (size_t i = 0; i < n; ++i)
            b[symbols[i]] = RingElt::from_int((mask >> i) & 1 ? -1 : 1);
        out.push_back(std::move(b));
    }
    return out;
}

CheckResult check_row(const RowCase& rc) {
    CheckResult res;
    res.id = rc.id;
    std::ostringstream detail;
    try {
        ParamodularInvariants inv = paramodular_invariants(rc.data);
        bool ok = true;

        LEqualityResult leq = verify_L_equality(rc.data);
        if (!leq.ok) {
            ok = false;
            detail << "[factor identity fails, witness " << leq.witness->str() << "] ";
        }

        if (conductor_formula(rc.data) != inv.N) {
            ok = false;
            detail << "[conductor " << conductor_formula(rc.data) << " != table "
                   << inv.N << "] ";
        }

        RingElt eps_f = reduce_i(epsilon_formula(rc.data));
        if (eps_f != inv.eps) {
            ok = false;
            detail << "[epsilon formula " << eps_f.str() << " != table "
                   << inv.eps.str() << "] ";
        }
        for (const auto& b : quad_assignments(rc.quadratic_symbols)) {
            RingElt lhs = eps_f.substitute(b);
            RingElt rhs = inv.eps.substitute(b);
            if (lhs != rhs) {
                ok = false;
                detail << "[epsilon mismatch under a quadratic assignment] ";
            }
            auto v = lhs.as_rational();
            if (!v || (*v != 1 && *v != -1)) {
                // symbols beyond the declared quadratic ones may remain
                if (lhs.variables().empty()) {
                    ok = false;
                    detail << "[epsilon not +-1 after substitution] ";
                }
            }
        }

        if (!inv.row_id.empty() && inv.row_id.back() == '*') {
            if (!inv.lambda.is_zero() || inv.mu != -sym::q(2)) {
                ok = false;
                detail << "[supercuspidal row with nonzero lambda or mu != -q^2] ";
            }
        }

        if (rc.expect_four_a_hat >= 0 && inv.N != 4 * rc.expect_four_a_hat) {
            ok = false;
            detail << "[level identity N = 4 a(hat) fails] ";
        }
        if (rc.expect_two_a_hat >= 0 && inv.N != 2 * rc.expect_two_a_hat) {
            ok = false;
            detail << "[level identity N = 2 a(hat) fails] ";
        }

        res.ok = ok;
        res.detail = detail.str();
        if (res.ok) res.detail = "row " + inv.row_id;
    } catch (const CalcError& e) {
        res.ok = false;
        res.detail = std::string("error: ") + e.what();
    }
    return res;
}

} // namespace

std::vector<CheckResult> run_table_suite() {
    std::vector<CheckResult> out;
    for (const auto& rc : table_row_cases()) out.push_back(check_row(rc));
    return out;
}

// ---------------------------------------------------------------------------
// Per-prime eigenvalue formulas, branch by branch
// ---------------------------------------------------------------------------

namespace {

struct BranchCase {
    std::string id;
    InducingData data;
    RingElt lambda_expected; // from the per-prime formulas
    RingElt mu_expected;
};

RingElt hecke(const GL2Rep& rep) { return hecke_eigenvalue(rep); }

std::vector<BranchCase> formula_branches() {
    std::vector<BranchCase> out;
    auto add = [&out](std::string id, InducingData d, RingElt lam, RingElt mu) {
        out.push_back({std::move(id), std::move(d), reduce_i(lam), reduce_i(mu)});
    };

    const PlaceData in = inert_place();
    const PlaceData rp = ramified_place_plus();

    // (a) level valuation 0
    {
        GL2Rep p1 = GL2Rep::principal_series(F7, unr_symbol("a"));
        GL2Rep p2 = GL2Rep::principal_series(F7, unr_symbol("b"));
        RingElt l1 = hecke(p1), l2 = hecke(p2);
        add("formula-a-split", InducingData::split(p1, p2), q() * (l1 + l2),
            q(2) + q() * l1 * l2 - RingElt::one());
    }
    {
        GL2Rep p0 = GL2Rep::principal_series(
            ext_field(in), with_galois(unr_symbol("a"), true));
        RingElt lw = hecke(p0);
        add("formula-a-inert", InducingData::non_split(in, p0), RingElt::zero(),
            -(q(2) + q() * lw + RingElt::one()));
    }
    // (b) level valuation 1: weight p on the unramified place, p+1 on the
    // Steinberg place
    {
        GL2Rep st = GL2Rep::steinberg(F7, unr_quad_symbol("b"));
        GL2Rep ps = GL2Rep::principal_series(F7, unr_symbol("a"));
        RingElt l_st = hecke(st), l_ps = hecke(ps);
        add("formula-b-split", InducingData::split(st, ps),
            q() * l_ps + (q() + RingElt::one()) * l_st, q() * l_st * l_ps);
    }
    // (c) inert
    {
        GL2Rep st = GL2Rep::steinberg(ext_field(in), with_galois(unr_quad_symbol("t"), true));
        RingElt lw = hecke(st);
        add("formula-c-inert-st", InducingData::non_split(in, st), RingElt::zero(),
            -q(2) - q() * lw);
    }
    {
        GL2Rep ps = GL2Rep::principal_series(
            ext_field(in), with_galois(ram_char("a", 1, -1, false), false, false));
        add("formula-c-inert-ps-ram", InducingData::non_split(in, ps), RingElt::zero(), -q(2));
    }
    {
        add("formula-c-inert-sc", InducingData::non_split(in, sc_over_E(in, "sigma0", 2, -1, false)),
            RingElt::zero(), -q(2));
    }
    // (c) ramified
    {
        DescentData de;
        de.value_at_unif = RingElt::variable("a");
        GL2Rep ps = GL2Rep::principal_series(
            ext_field(rp), with_galois(unr_symbol("a"), true, std::nullopt, de));
        add("formula-c-ram-val0", InducingData::non_split(rp, ps), q() * hecke(ps),
            RingElt::zero());
    }
    {
        GL2Rep st = GL2Rep::steinberg(ext_field(rp), with_galois(unr_quad_symbol("t"), true));
        add("formula-c-ram-val1", InducingData::non_split(rp, st), q() * hecke(st), -q(2));
    }
    {
        GL2Rep st = GL2Rep::steinberg(
            ext_field(rp), with_galois(ram_char("a", 1, 1, true, 1), true, std::nullopt,
                                       DescentData{RingElt::from_int(1), 1, CharSquare::Trivial}));
        add("formula-c-ram-val2", InducingData::non_split(rp, st), q() * hecke(st), -q(2));
    }
    // (c) split, val_{w1} <= val_{w2}
    {
        GL2Rep ps = GL2Rep::principal_series(F7, unr_symbol("a"));
        GL2Rep s2 = sc(F7, "tau1", 2, 1);
        add("formula-c-split-0-2", InducingData::split(ps, s2), q() * (hecke(ps) + hecke(s2)),
            RingElt::zero());
    }
    {
        GL2Rep st = GL2Rep::steinberg(F7, unr_quad_symbol("b"));
        GL2Rep s2 = sc(F7, "tau1", 2, 1);
        add("formula-c-split-1-2", InducingData::split(st, s2), q() * (hecke(st) + hecke(s2)),
            -q(2) + q() * hecke(st) * hecke(s2));
    }
    {
        GL2Rep r1 = GL2Rep::principal_series(F7, ram_char("c1", 1, -1, false));
        GL2Rep r2 = GL2Rep::principal_series(F7, ram_char("c2", 2, 1, false));
        add("formula-c-split-2-2", InducingData::split(r1, r2), RingElt::zero(), -q(2));
    }
    {
        // both valuations 1: the corrected reading mu = -p^2 + p l1 l2
        GL2Rep s1 = GL2Rep::steinberg(F7, unr_quad_symbol("a"));
        GL2Rep s2 = GL2Rep::steinberg(F7, unr_quad_symbol("b"));
        add("formula-c-split-1-1", InducingData::split(s1, s2),
            q() * (hecke(s1) + hecke(s2)), -q(2) + q() * hecke(s1) * hecke(s2));
    }
    return out;
}

} // namespace

std::vector<CheckResult> run_formula_suite() {
    std::vector<CheckResult> out;
    for (const auto& bc : formula_branches()) {
        CheckResult res;
        res.id = bc.id;
        try {
            ParamodularInvariants inv = paramodular_invariants(bc.data);
            bool ok = inv.lambda == bc.lambda_expected && inv.mu == bc.mu_expected;
            res.ok = ok;
            if (!ok) {
                std::ostringstream os;
                os << "table (" << inv.lambda.str() << ", " << inv.mu.str()
                   << ") vs formulas (" << bc.lambda_expected.str() << ", "
                   << bc.mu_expected.str() << ")";
                res.detail = os.str();
            } else {
                res.detail = "row " + inv.row_id;
            }
        } catch (const CalcError& e) {
            res.ok = false;
            res.detail = std::string("error: ") + e.what();
        }
        out.push_back(res);
    }
    // Atkin-Lehner branch: split product and non-split omega twist
    {
        CheckResult res;
        res.id = "formula-eps-split";
        GL2Rep st = GL2Rep::steinberg(F7, unr_quad_symbol("b"));
        GL2Rep s2 = sc(F7, "tau1", 2, -1);
        InducingData d = InducingData::split(st, s2);
        res.ok = reduce_i(epsilon_formula(d)) == paramodular_invariants(d).eps;
        out.push_back(res);
    }
    {
        CheckResult res;
        res.id = "formula-eps-nonsplit";
        const PlaceData rm = ramified_place_minus();
        InducingData d = InducingData::non_split(rm, sc_over_E(rm, "sigma0", 2, 1, false));
        ParamodularInvariants inv = paramodular_invariants(d);
        res.ok = reduce_i(epsilon_formula(d)) == inv.eps &&
                 inv.eps == RingElt::from_int(-1); // omega(-1) = -1 at p = 3
        out.push_back(res);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Randomized similitude checks
// ---------------------------------------------------------------------------

namespace {

Rational random_rational(std::mt19937& rng, bool nonzero = false) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    int n = num(rng);
    while (nonzero && n == 0) n = num(rng);
    Rational r(n, den(rng));
    r.canonicalize();
    return r;
}

Matrix2 random_matrix_with_det(std::mt19937& rng, const Rational& det) {
    // a d - b c = det with a a nonzero random rational
    Rational a = random_rational(rng, true);
    Rational b = random_rational(rng);
    Rational c = random_rational(rng);
    Rational d = (det + b * c) / a;
    Matrix2 m;
    m.a = {RingElt::from_rational(a), RingElt::from_rational(b), RingElt::from_rational(c),
           RingElt::from_rational(d)};
    return m;
}

} // namespace

std::vector<CheckResult> run_similitude_trials(unsigned seed, int trials) {
    std::mt19937 rng(seed);
    std::vector<CheckResult> out;
    int split_fail = 0, induced_fail = 0;
    for (int t = 0; t < trials; ++t) {
        Rational det = random_rational(rng, true);
        Matrix2 m1 = random_matrix_with_det(rng, det);
        Matrix2 m2 = random_matrix_with_det(rng, det);
        Matrix4 g = build_split_parameter(m1, m2);
        auto lam = check_similitude(g);
        if (!lam || *lam != RingElt::from_rational(det)) ++split_fail;

        Rational dy = random_rational(rng, true);
        Rational e = random_rational(rng, true);
        Matrix2 y = random_matrix_with_det(rng, dy);
        Matrix2 yc = random_matrix_with_det(rng, dy);
        Matrix2 g0sq = random_matrix_with_det(rng, e * e);
        auto [my, mg0] = build_induced_parameter(y, yc, g0sq, RingElt::from_rational(e));
        auto ly = check_similitude(my);
        auto lg = check_similitude(mg0);
        if (!ly || *ly != RingElt::from_rational(dy)) ++induced_fail;
        if (!lg || *lg != RingElt::from_rational(e)) ++induced_fail;
    }
    CheckResult a;
    a.id = "similitude-split";
    a.ok = split_fail == 0;
    a.detail = std::to_string(trials) + " trials";
    out.push_back(a);
    CheckResult b;
    b.id = "similitude-induced";
    b.ok = induced_fail == 0;
    b.detail = std::to_string(trials) + " trials";
    out.push_back(b);
    return out;
}

} // namespace paramodular

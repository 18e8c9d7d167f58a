#include "paramodular/localdata.hpp"

namespace paramodular {

Char Char::unramified(const std::string& name, const RingElt& value, bool quadratic) {
    Char c;
    c.name = name;
    c.cond = 0;
    c.value_at_unif = value;
    c.value_at_minus_one = 1;
    c.quadratic = quadratic;
    return c;
}

Char Char::trivial() {
    Char c = unramified("1", RingElt::one(), true);
    return c;
}

bool same_character(const CharCore& a, const CharCore& b) {
    if (a.cond != b.cond) return false;
    if (a.cond == 0) return a.value_at_unif == b.value_at_unif;
    return a.name == b.name;
}

GL2Rep GL2Rep::principal_series(LocalField fld, Char a) {
    GL2Rep r;
    r.kind = Kind::PrincipalSeries;
    r.field = fld;
    r.alpha = std::move(a);
    return r;
}

GL2Rep GL2Rep::general_principal_series(LocalField fld, Char a1, Char a2) {
    GL2Rep r = principal_series(fld, std::move(a1));
    r.alpha2 = std::move(a2);
    return r;
}

GL2Rep GL2Rep::steinberg(LocalField fld, Char a) {
    GL2Rep r;
    r.kind = Kind::SteinbergTwist;
    r.field = fld;
    r.alpha = std::move(a);
    return r;
}

GL2Rep GL2Rep::one_dim(LocalField fld, Char a) {
    GL2Rep r;
    r.kind = Kind::OneDimTwist;
    r.field = fld;
    r.alpha = std::move(a);
    return r;
}

GL2Rep GL2Rep::supercuspidal(LocalField fld, std::string label, int cond, int eps_half) {
    GL2Rep r;
    r.kind = Kind::Supercuspidal;
    r.field = fld;
    r.label = std::move(label);
    r.sc_cond = cond;
    r.sc_eps_half = eps_half;
    return r;
}

RingElt GL2Rep::satake_sum_value() const {
    if (satake_sum) return *satake_sum;
    if (!alpha)
        raise(ErrorCode::BadInput, "principal series carries no character data");
    const RingElt& a = alpha->value_at_unif;
    return a + a.pow(-1);
}

bool GL2Rep::twist_unramified() const { return alpha && alpha->cond == 0; }

InducingData InducingData::split(GL2Rep a, GL2Rep b) {
    InducingData d;
    d.kind = Kind::Split;
    d.pi1 = std::move(a);
    d.pi2 = std::move(b);
    return d;
}

InducingData InducingData::non_split(PlaceData place, GL2Rep pi0, std::optional<Char> eta) {
    InducingData d;
    d.kind = Kind::NonSplit;
    d.place = place;
    d.pi0 = std::move(pi0);
    d.eta = std::move(eta);
    return d;
}

bool InducingData::eta_is_trivial() const {
    if (!eta) return true;
    return eta->cond == 0 && eta->value_at_unif.is_one();
}

namespace {

void validate_rep(const GL2Rep& rep, const std::string& who,
                  std::vector<std::string>& out) {
    switch (rep.kind) {
        case GL2Rep::Kind::PrincipalSeries:
            if (!rep.alpha && !rep.satake_sum)
                out.push_back(who + ": principal series without character or Satake data");
            break;
        case GL2Rep::Kind::SteinbergTwist:
            if (!rep.alpha) {
                out.push_back(who + ": Steinberg twist without character");
            } else if (!rep.alpha->quadratic) {
                out.push_back(who + ": central character of a Steinberg twist must be "
                                    "trivial (twist character must be quadratic)");
            }
            break;
        case GL2Rep::Kind::OneDimTwist:
            if (!rep.alpha || !rep.alpha->quadratic)
                out.push_back(who + ": one-dimensional twist requires a quadratic character");
            break;
        case GL2Rep::Kind::Supercuspidal:
            if (rep.sc_cond < 2)
                out.push_back(who + ": supercuspidal conductor must be >= 2");
            if (rep.sc_eps_half != 1 && rep.sc_eps_half != -1)
                out.push_back(who + ": epsilon(1/2) of a supercuspidal must be +-1");
            break;
    }
    if (rep.alpha && rep.alpha->quadratic) {
        auto v = rep.alpha->value_at_unif.as_rational();
        if (v && *v != 1 && *v != -1)
            out.push_back(who + ": quadratic character with exact non +-1 value at the uniformizer");
    }
    if (rep.alpha && rep.alpha->cond == 0 && rep.alpha->value_at_minus_one != 1)
        out.push_back(who + ": unramified character must be trivial at -1");
}

} // namespace

std::vector<std::string> validate(const InducingData& data) {
    std::vector<std::string> out;
    if (data.kind == InducingData::Kind::Split) {
        if (!data.pi1 || !data.pi2) {
            out.push_back("split data requires two representations");
            return out;
        }
        if (!(data.pi1->field == data.pi2->field))
            out.push_back("split pair must share the base field");
        if (data.pi1->field.is_extension)
            out.push_back("split pair must live over the ground field");
        validate_rep(*data.pi1, "pi1", out);
        validate_rep(*data.pi2, "pi2", out);
    } else {
        if (!data.place || !data.pi0) {
            out.push_back("non-split data requires a place and a representation");
            return out;
        }
        if (data.place->type == SplitType::Split)
            out.push_back("non-split data over a split prime");
        if (!data.pi0->field.is_extension || data.pi0->field.f != data.place->f)
            out.push_back("pi0 base field inconsistent with the place data");
        if (!data.eta_is_trivial())
            out.push_back("tempered pipeline requires eta = 1");
        validate_rep(*data.pi0, "pi0", out);
    }
    return out;
}

int conductor(const GL2Rep& rep) {
    switch (rep.kind) {
        case GL2Rep::Kind::PrincipalSeries: {
            if (rep.satake_sum && !rep.alpha) return 0;
            int a1 = rep.alpha->cond;
            int a2 = rep.alpha2 ? rep.alpha2->cond : a1;
            return a1 + a2;
        }
        case GL2Rep::Kind::SteinbergTwist:
            return rep.twist_unramified() ? 1 : 2 * rep.alpha->cond;
        case GL2Rep::Kind::OneDimTwist:
            return rep.twist_unramified() ? 0 : 2 * rep.alpha->cond;
        case GL2Rep::Kind::Supercuspidal:
            return rep.sc_cond;
    }
    return 0;
}

RingElt hecke_eigenvalue(const GL2Rep& rep) {
    switch (rep.kind) {
        case GL2Rep::Kind::PrincipalSeries:
            if (conductor(rep) == 0)
                return sym::q_half(rep.field.f) * rep.satake_sum_value();
            return RingElt::zero();
        case GL2Rep::Kind::SteinbergTwist:
            if (rep.twist_unramified()) return rep.alpha->value_at_unif;
            return RingElt::zero();
        default:
            return RingElt::zero();
    }
}

RingElt atkin_lehner_epsilon(const GL2Rep& rep) {
    switch (rep.kind) {
        case GL2Rep::Kind::PrincipalSeries: {
            if (conductor(rep) == 0) return RingElt::one();
            if (rep.alpha2)
                raise(ErrorCode::BadInput,
                      "epsilon(1/2) is only modelled for the trivial-central-character family");
            // epsilon(1/2, alpha) epsilon(1/2, alpha^{-1}) = alpha(-1)
            return RingElt::from_int(rep.alpha->value_at_minus_one);
        }
        case GL2Rep::Kind::SteinbergTwist:
            if (rep.twist_unramified()) return -rep.alpha->value_at_unif;
            return RingElt::from_int(rep.alpha->value_at_minus_one);
        case GL2Rep::Kind::OneDimTwist:
            // not part of the tempered pipeline; value of the twist at -1
            return RingElt::from_int(rep.twist_unramified() ? 1 : rep.alpha->value_at_minus_one);
        case GL2Rep::Kind::Supercuspidal:
            return RingElt::from_int(rep.sc_eps_half);
    }
    return RingElt::one();
}

EulerFactor gl2_euler_factor(const GL2Rep& rep) {
    const int f = rep.field.is_extension ? rep.field.f : 1;
    EulerFactor factor = EulerFactor::constant_one();
    switch (rep.kind) {
        case GL2Rep::Kind::PrincipalSeries:
            if (conductor(rep) == 0) {
                // (1 - alpha u)(1 - alpha^{-1} u) = 1 - (alpha+alpha^{-1}) u + u^2
                factor = EulerFactor({RingElt::one(), -rep.satake_sum_value(), RingElt::one()});
            }
            break;
        case GL2Rep::Kind::SteinbergTwist:
            if (rep.twist_unramified())
                factor = EulerFactor::linear(rep.alpha->value_at_unif * sym::q_half(-f));
            break;
        default:
            break;
    }
    return factor.embed_base_change(f);
}

} // namespace paramodular

#include "paramodular/packets.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace paramodular {

Matrix2 Matrix2::identity() {
    Matrix2 m;
    m.a = {RingElt::one(), RingElt::zero(), RingElt::zero(), RingElt::one()};
    return m;
}

Matrix2 Matrix2::diag(const RingElt& x, const RingElt& y) {
    Matrix2 m;
    m.a = {x, RingElt::zero(), RingElt::zero(), y};
    return m;
}

Matrix4 Matrix4::identity() {
    Matrix4 m;
    for (int i = 0; i < 4; ++i) m.at(i, i) = RingElt::one();
    return m;
}

Matrix4 symplectic_form() {
    Matrix4 j;
    j.at(0, 2) = RingElt::one();
    j.at(1, 3) = RingElt::one();
    j.at(2, 0) = -RingElt::one();
    j.at(3, 1) = -RingElt::one();
    return j;
}

namespace {

Matrix4 mat_mul(const Matrix4& x, const Matrix4& y) {
    Matrix4 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            RingElt s;
            for (int k = 0; k < 4; ++k) s += x.at(r, k) * y.at(k, c);
            out.at(r, c) = s;
        }
    return out;
}

Matrix4 mat_transpose(const Matrix4& x) {
    Matrix4 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out.at(r, c) = x.at(c, r);
    return out;
}

} // namespace

std::optional<RingElt> check_similitude(const Matrix4& g) {
    Matrix4 j = symplectic_form();
    Matrix4 m = mat_mul(mat_mul(mat_transpose(g), j), g);
    RingElt lambda = m.at(0, 2);
    if (lambda.is_zero()) return std::nullopt;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (m.at(r, c) != lambda * j.at(r, c)) return std::nullopt;
    return lambda;
}

Matrix4 build_split_parameter(const Matrix2& m1, const Matrix2& m2) {
    if (m1.det() != m2.det())
        raise(ErrorCode::DeterminantMismatch,
              "split parameter requires equal determinants (shared central character)");
    Matrix4 g;
    g.at(0, 0) = m1.a[0];
    g.at(0, 2) = m1.a[1];
    g.at(2, 0) = m1.a[2];
    g.at(2, 2) = m1.a[3];
    g.at(1, 1) = m2.a[0];
    g.at(1, 3) = m2.a[1];
    g.at(3, 1) = m2.a[2];
    g.at(3, 3) = m2.a[3];
    g.similitude = m1.det();
    return g;
}

std::pair<Matrix4, Matrix4> build_induced_parameter(const Matrix2& phi0_y,
                                                    const Matrix2& phi0_conj,
                                                    const Matrix2& phi0_g0sq,
                                                    const RingElt& eta_g0) {
    if (!eta_g0.is_monomial())
        raise(ErrorCode::NonInvertibleEta, "eta(g0) must be invertible");
    RingElt eta_inv = eta_g0.pow(-1);

    Matrix4 y;
    y.at(0, 0) = phi0_y.a[0];
    y.at(0, 2) = eta_inv * phi0_y.a[1];
    y.at(2, 0) = eta_g0 * phi0_y.a[2];
    y.at(2, 2) = phi0_y.a[3];
    y.at(1, 1) = phi0_conj.a[0];
    y.at(1, 3) = phi0_conj.a[1];
    y.at(3, 1) = phi0_conj.a[2];
    y.at(3, 3) = phi0_conj.a[3];
    y.similitude = phi0_y.det();

    Matrix4 g0;
    g0.at(0, 1) = RingElt::one();
    g0.at(1, 0) = phi0_g0sq.a[0];
    g0.at(1, 2) = eta_inv * phi0_g0sq.a[1];
    g0.at(2, 3) = eta_g0;
    g0.at(3, 0) = phi0_g0sq.a[2];
    g0.at(3, 2) = eta_inv * phi0_g0sq.a[3];
    g0.similitude = eta_g0;

    return {y, g0};
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

namespace {

bool char_is_structurally_trivial(const CharCore& c) {
    return c.cond == 0 && c.value_at_unif.is_one();
}

struct CharFactor {
    const CharCore* chr;
    int exp;
};

std::string render_factors(const std::vector<CharFactor>& factors) {
    std::ostringstream os;
    bool first = true;
    for (const auto& f : factors) {
        if (f.exp == 0 || char_is_structurally_trivial(*f.chr)) continue;
        if (!first) os << "*";
        os << f.chr->name;
        if (f.exp != 1) os << "^" << f.exp;
        first = false;
    }
    if (first) return "1";
    return os.str();
}

/// Structural product of characters: ramified names are treated as
/// multiplicatively independent identities.
struct CharValue {
    bool unramified = true;
    RingElt value = RingElt::one();
    bool unitary = true;
};

CharValue char_product(const std::vector<CharFactor>& factors) {
    CharValue cv;
    std::map<std::string, int> ram;
    for (const auto& f : factors) {
        if (f.exp == 0) continue;
        cv.value = cv.value * f.chr->value_at_unif.pow(f.exp);
        cv.unitary = cv.unitary && f.chr->unitary;
        if (f.chr->cond > 0) ram[f.chr->name] += f.exp;
    }
    for (const auto& [name, e] : ram)
        if (e != 0) cv.unramified = false;
    return cv;
}

bool value_is_exactish(const RingElt& v) {
    for (const auto& var : v.variables())
        if (var != "r" && var != "i") return false;
    return true;
}

RingElt normal_value(const RingElt& v, long p) {
    return v.reduce_sqrt(p).reduce_square("i", Rational(-1));
}

/// Decide chi = nu^{s2/2} for the structural product chi.  s2 is twice the
/// exponent.  Tempered (unitary) data decides every s2 != 0 comparison.
bool is_nu_power(const CharValue& cv, int s2, long p) {
    if (!cv.unramified) return false;
    RingElt lhs = normal_value(cv.value, p);
    RingElt target = normal_value(sym::q_half(-s2), p);
    if (lhs == target) return true;
    if (value_is_exactish(lhs)) return false;
    if (cv.unitary && s2 != 0) return false;
    raise(ErrorCode::UndecidableWithSymbolicData,
          "nu-comparison against a free symbolic character value");
}

bool chars_equal_decide(const CharCore& a, const CharCore& b) {
    if (a.cond != b.cond) return false;
    if (a.cond > 0) return a.name == b.name;
    if (a.value_at_unif == b.value_at_unif) return true;
    if (value_is_exactish(a.value_at_unif) && value_is_exactish(b.value_at_unif)) return false;
    raise(ErrorCode::UndecidableWithSymbolicData,
          "equality of unramified characters with free symbolic values");
}

enum class NuCmp { Neither, Plus, Minus };

NuCmp compare_nu_pm(const std::vector<CharFactor>& factors, int s2, long p) {
    CharValue cv = char_product(factors);
    if (is_nu_power(cv, s2, p)) return NuCmp::Plus;
    if (is_nu_power(cv, -s2, p)) return NuCmp::Minus;
    return NuCmp::Neither;
}

const std::set<std::string>& generic_labels() {
    static const std::set<std::string> g = {"I",  "IIa", "IIIa", "IVa",  "Va",   "VIa",  "VII",
                                            "VIIIa", "IXa", "X",   "XIa", "XIIa*", "XIII*"};
    return g;
}

PacketDescriptor make_packet(std::vector<std::string> labels,
                             std::vector<std::string> constituents) {
    PacketDescriptor pd;
    pd.group_labels = std::move(labels);
    pd.constituents = std::move(constituents);
    for (size_t i = 0; i < pd.group_labels.size(); ++i) {
        if (generic_labels().count(pd.group_labels[i])) {
            pd.generic_index = i;
            break;
        }
    }
    return pd;
}

std::string nu(const char* exp = nullptr) {
    return exp ? std::string("v^(") + exp + ")" : std::string("v");
}

std::string sc_name(const GL2Rep& rep) { return rep.label.empty() ? "pi" : rep.label; }

int variant_rank(const GL2Rep& r) {
    switch (r.kind) {
        case GL2Rep::Kind::PrincipalSeries: return 0;
        case GL2Rep::Kind::OneDimTwist: return 1;
        case GL2Rep::Kind::SteinbergTwist: return 2;
        case GL2Rep::Kind::Supercuspidal: return 3;
    }
    return 0;
}

// "alpha2 of pi1" as a factor: the stored second character or the inverse
// of the first (trivial central character form).
std::pair<const CharCore*, int> second_char(const GL2Rep& ps) {
    if (ps.alpha2) return {&*ps.alpha2, 1};
    return {&*ps.alpha, -1};
}
std::pair<const CharCore*, int> first_char(const GL2Rep& ps) { return {&*ps.alpha, 1}; }

PacketDescriptor classify_split(const GL2Rep& pi1_in, const GL2Rep& pi2_in) {
    const GL2Rep* pi1 = &pi1_in;
    const GL2Rep* pi2 = &pi2_in;
    if (variant_rank(*pi1) > variant_rank(*pi2)) std::swap(pi1, pi2);
    const long p = pi1->field.p;

    using K = GL2Rep::Kind;
    const K k1 = pi1->kind, k2 = pi2->kind;

    if (k1 == K::PrincipalSeries && k2 == K::PrincipalSeries) {
        auto a1 = first_char(*pi1), a2 = second_char(*pi1);
        auto b1 = first_char(*pi2), b2 = second_char(*pi2);
        auto inv = [](std::pair<const CharCore*, int> f) {
            return std::make_pair(f.first, -f.second);
        };
        auto P = [&](std::initializer_list<std::pair<const CharCore*, int>> fs) {
            std::vector<CharFactor> v;
            for (const auto& f : fs) v.push_back({f.first, f.second});
            return v;
        };
        NuCmp x = compare_nu_pm(P({b1, inv(a2)}), 2, p);
        NuCmp y = compare_nu_pm(P({b2, inv(a2)}), 2, p);
        auto R = render_factors;
        if (x == NuCmp::Neither && y == NuCmp::Neither)
            return make_packet({"I"}, {R(P({b1, inv(a2)})) + " x " + R(P({b2, inv(a2)})) +
                                       " |x " + R(P({a2}))});
        if (x == NuCmp::Neither && y == NuCmp::Plus)
            return make_packet({"IIIb"}, {R(P({b1, inv(a2)})) + " |x " + nu("1/2") + "*" +
                                          R(P({a2})) + "*1(GSp2)"});
        if (x == NuCmp::Neither && y == NuCmp::Minus)
            return make_packet({"IIIb"}, {R(P({b2, inv(a1)})) + " |x " + nu("1/2") + "*" +
                                          R(P({a1})) + "*1(GSp2)"});
        if (x == NuCmp::Plus && y == NuCmp::Neither)
            return make_packet({"IIIb"}, {R(P({b2, inv(a2)})) + " |x " + nu("1/2") + "*" +
                                          R(P({a2})) + "*1(GSp2)"});
        if (x == NuCmp::Plus && y == NuCmp::Plus)
            return make_packet({"IIIb"}, {nu() + " |x " + nu("1/2") + "*" + R(P({a2})) + "*1(GSp2)"});
        if (x == NuCmp::Plus && y == NuCmp::Minus)
            return make_packet({"IIIb"}, {nu() + " |x " + nu("-1/2") + "*" + R(P({a1})) + "*1(GSp2)"});
        if (x == NuCmp::Minus && y == NuCmp::Neither)
            return make_packet({"IIIb"}, {R(P({b1, inv(a1)})) + " |x " + nu("1/2") + "*" +
                                          R(P({a1})) + "*1(GSp2)"});
        if (x == NuCmp::Minus && y == NuCmp::Plus)
            return make_packet({"IIIb"}, {nu() + " |x " + nu("-1/2") + "*" + R(P({a1})) + "*1(GSp2)"});
        return make_packet({"IIIb"}, {nu() + " |x " + nu("1/2") + "*" + R(P({a1})) + "*1(GSp2)"});
    }

    if (k1 == K::PrincipalSeries && (k2 == K::OneDimTwist || k2 == K::SteinbergTwist)) {
        auto a2 = second_char(*pi1);
        const CharCore* t = &*pi2->alpha;
        std::vector<CharFactor> prod = {{t, 1}, {a2.first, -a2.second}};
        NuCmp c = compare_nu_pm(prod, 3, p);
        bool is_one_dim = (k2 == K::OneDimTwist);
        if (c == NuCmp::Neither) {
            std::string head = render_factors(prod) + (is_one_dim ? "*1(GL2)" : "*St(GL2)");
            std::string tail = render_factors({{a2.first, a2.second}});
            return make_packet({is_one_dim ? "IIb" : "IIa"}, {head + " |x " + tail});
        }
        if (is_one_dim) return make_packet({"IVd"}, {t->name + "*1(GSp4)"});
        return make_packet({"IVc"}, {"L(" + nu("3/2") + "*St(GL2), " + nu("-3/2") + "*" +
                                     t->name + ")"});
    }

    if (k1 == K::PrincipalSeries && k2 == K::Supercuspidal) {
        auto a2 = second_char(*pi1);
        std::string inv = render_factors({{a2.first, -a2.second}});
        std::string dir = render_factors({{a2.first, a2.second}});
        return make_packet({"X"}, {inv + "*" + sc_name(*pi2) + " |x " + dir});
    }

    if (k1 == K::OneDimTwist && k2 == K::OneDimTwist) {
        const CharCore *a = &*pi1->alpha, *b = &*pi2->alpha;
        if (chars_equal_decide(*a, *b))
            return make_packet({"VId"}, {"L(" + nu() + ", 1 |x " + nu("-1/2") + "*" + a->name + ")"});
        std::string ab = render_factors({{a, -1}, {b, 1}});
        return make_packet({"Vd"}, {"L(" + nu() + "*" + ab + ", " + ab + " |x " + nu("-1/2") +
                                    "*" + a->name + ")"});
    }

    if (k1 == K::OneDimTwist && k2 == K::SteinbergTwist) {
        const CharCore *a = &*pi1->alpha, *b = &*pi2->alpha;
        if (chars_equal_decide(*a, *b))
            return make_packet({"VIc"}, {"L(" + nu("1/2") + "*St(GL2), " + nu("-1/2") + "*" +
                                         a->name + ")"});
        std::string ab = render_factors({{a, -1}, {b, 1}});
        return make_packet({"Vb"}, {"L(" + nu("1/2") + "*" + ab + "*St(GL2), " + nu("-1/2") +
                                    "*" + a->name + ")"});
    }

    if (k1 == K::OneDimTwist && k2 == K::Supercuspidal) {
        const CharCore* a = &*pi1->alpha;
        return make_packet({"XIb"}, {"L(" + nu("1/2") + "*" + a->name + "^-1*" + sc_name(*pi2) +
                                     ", " + nu("-1/2") + "*" + a->name + ")"});
    }

    if (k1 == K::SteinbergTwist && k2 == K::SteinbergTwist) {
        const CharCore *a = &*pi1->alpha, *b = &*pi2->alpha;
        if (chars_equal_decide(*a, *b))
            return make_packet({"VIa", "VIb"}, {"tau(S, " + nu("-1/2") + "*" + a->name + ")",
                                                "tau(T, " + nu("-1/2") + "*" + a->name + ")"});
        std::string ab = render_factors({{a, -1}, {b, 1}});
        return make_packet({"Va", "Vb*"},
                           {"delta([" + ab + ", " + nu() + "*" + ab + "], " + nu("-1/2") + "*" +
                                a->name + ")",
                            "supercuspidal"});
    }

    if (k1 == K::SteinbergTwist && k2 == K::Supercuspidal) {
        const CharCore* a = &*pi1->alpha;
        return make_packet({"XIa", "XIb*"},
                           {"delta(" + nu("1/2") + "*" + a->name + "^-1*" + sc_name(*pi2) + ", " +
                                nu("-1/2") + "*" + a->name + ")",
                            "supercuspidal"});
    }

    // both supercuspidal
    if (pi1->label == pi2->label && !pi1->label.empty())
        return make_packet({"VIIIa", "VIIIb"},
                           {"tau(S, " + sc_name(*pi1) + ")", "tau(T, " + sc_name(*pi1) + ")"});
    return make_packet({"XIIa*", "XIIb*"}, {"supercuspidal", "supercuspidal"});
}

CharCore omega_char(const PlaceData& place) {
    CharCore w;
    w.name = "w(E/F)";
    w.quadratic = true;
    w.unitary = true;
    if (place.type == SplitType::Inert) {
        w.cond = 0;
        w.value_at_unif = RingElt::from_int(-1);
        w.value_at_minus_one = 1;
    } else {
        w.cond = place.d;
        w.value_at_unif = RingElt::variable("w_pi"); // value at varpi not pinned by place data
        w.value_at_minus_one = place.omega_minus_one;
    }
    return w;
}

const GaloisData& galois_of(const Char& c) {
    if (!c.galois)
        raise(ErrorCode::BadInput,
              "character " + c.name + " of E_w lacks Galois data required by the tables");
    return *c.galois;
}

PacketDescriptor classify_non_split(const InducingData& data, const std::optional<Char>& xi) {
    const GL2Rep& pi0 = *data.pi0;
    const PlaceData& place = *data.place;
    const long p = place.p;
    CharCore omega = omega_char(place);
    const Char eta = data.eta ? *data.eta : Char::trivial();
    const bool eta_trivial = data.eta_is_trivial();

    using K = GL2Rep::Kind;
    switch (pi0.kind) {
        case K::PrincipalSeries: {
            const Char& alpha1 = *pi0.alpha;
            const GaloisData& g = galois_of(alpha1);
            if (!g.sigma_invariant) {
                // chi = omega * eta^{-1} * alpha2|_{F^x}; alpha2 = alpha1^{-1}
                // in the trivial-central-character form.
                bool chi_trivial;
                std::optional<CharCore> restr2; // restriction of alpha2
                if (pi0.alpha2) {
                    const GaloisData& g2 = galois_of(*pi0.alpha2);
                    if (g2.restriction) restr2 = *g2.restriction;
                } else if (g.restriction) {
                    restr2 = *g.restriction; // will be used with exponent -1
                }
                int restr_exp = pi0.alpha2 ? 1 : -1;
                if (restr2) {
                    CharValue cv = char_product(
                        {{&omega, 1}, {&eta, -1}, {&*restr2, restr_exp}});
                    chi_trivial = cv.unramified && normal_value(cv.value, p) == RingElt::one();
                    if (!chi_trivial && xi) {
                        const CharCore& x = *xi;
                        CharValue cvx = char_product(
                            {{&omega, 1}, {&eta, -1}, {&*restr2, restr_exp}, {&x, -1}});
                        std::string a1n = alpha1.name;
                        std::string a2n = pi0.alpha2 ? pi0.alpha2->name : alpha1.name + "^-1";
                        if (is_nu_power(cvx, 2, p))
                            return make_packet({"IXb"},
                                               {"L(" + x.name + "*" + nu() + ", pi(" + a1n + "))"});
                        if (is_nu_power(cvx, -2, p))
                            return make_packet({"IXb"},
                                               {"L(" + x.name + "*" + nu() + ", pi(" + a2n + "))"});
                    }
                } else if (g.restriction_is_omega.has_value() && eta_trivial) {
                    // alpha2| = omega  <=>  alpha1| = omega for the trivial form
                    chi_trivial = *g.restriction_is_omega;
                } else {
                    raise(ErrorCode::UndecidableWithSymbolicData,
                          "restriction data of " + alpha1.name + " to F^x not supplied");
                }
                std::string a1n = alpha1.name;
                std::string a2n = pi0.alpha2 ? pi0.alpha2->name : a1n + "^-1";
                if (chi_trivial)
                    return make_packet({"VIIIa", "VIIIb"},
                                       {"tau(S, pi(" + a2n + "))", "tau(T, pi(" + a2n + "))"});
                std::string chi = "w(E/F)" + std::string(eta_trivial ? "" : "*eta^-1") + "*" +
                                  a2n + "|F";
                return make_packet({"VII"}, {chi + " |x pi(" + a1n + ")"});
            }
            if (!g.descends)
                raise(ErrorCode::BadInput,
                      "sigma-invariant " + alpha1.name + " lacks descent data");
            std::string ah = alpha1.name + "_hat";
            return make_packet(
                {"I"}, {"w(E/F)" + std::string(eta_trivial ? "" : "*eta^-1") + "*" + ah +
                        "^2 x w(E/F) |x " + (eta_trivial ? "" : "eta*") + ah + "^-1"});
        }
        case K::OneDimTwist:
        case K::SteinbergTwist: {
            const Char& alpha = *pi0.alpha;
            const GaloisData& g = galois_of(alpha);
            const bool st = pi0.kind == K::SteinbergTwist;
            if (!g.sigma_invariant) {
                std::string chi = "v*w(E/F)" + std::string(eta_trivial ? "" : "*eta^-1") + "*" +
                                  alpha.name + "|F";
                if (st)
                    return make_packet({"IXa"},
                                       {"delta(" + chi + ", " + nu("-1/2") + "*pi(" + alpha.name +
                                        "))"});
                return make_packet({"IXb"}, {"L(" + chi + ", " + nu("-1/2") + "*pi(" + alpha.name +
                                             "))"});
            }
            if (!g.descends)
                raise(ErrorCode::BadInput,
                      "sigma-invariant " + alpha.name + " lacks descent data");
            std::string ah = alpha.name + "_hat";
            if (g.descends->square_is == CharSquare::Trivial) {
                if (st)
                    return make_packet({"Va", "Vb*"},
                                       {"delta([w(E/F), " + nu() + "*w(E/F)], " + nu("-1/2") +
                                            "*" + ah + ")",
                                        "supercuspidal"});
                return make_packet({"Vd"}, {"L(" + nu() + "*w(E/F), w(E/F) |x " + nu("-1/2") +
                                            "*" + ah + ")"});
            }
            if (st) return make_packet({"IIIa"}, {"w(E/F) |x " + ah + "*St(GSp2)"});
            return make_packet({"IIIb"}, {"w(E/F) |x " + ah + "*1(GSp2)"});
        }
        case K::Supercuspidal: {
            if (!pi0.galois_invariant.has_value())
                raise(ErrorCode::BadInput,
                      "supercuspidal over E_w lacks the Galois-invariance flag");
            if (!*pi0.galois_invariant)
                return make_packet({"XIII*"}, {"supercuspidal"});
            if (!pi0.base_change)
                raise(ErrorCode::BadInput,
                      "Galois-invariant supercuspidal lacks base-change data");
            if (pi0.base_change->central_char_of_descent == CharSquare::OmegaEF)
                return make_packet({"VII"}, {"w(E/F) |x " + sc_name(pi0) + "_hat"});
            return make_packet({"XIIa*", "XIIb*"}, {"supercuspidal", "supercuspidal"});
        }
    }
    raise(ErrorCode::NoRowMatched, "input outside the two parameter families");
}

} // namespace

bool PacketDescriptor::has_supercuspidal_member() const {
    return std::any_of(group_labels.begin(), group_labels.end(),
                       [](const std::string& l) { return !l.empty() && l.back() == '*'; });
}

PacketDescriptor classify_packet(const InducingData& data, const std::optional<Char>& xi) {
    if (data.kind == InducingData::Kind::Split) {
        if (!data.pi1 || !data.pi2)
            raise(ErrorCode::NoRowMatched, "split data requires two representations");
        return classify_split(*data.pi1, *data.pi2);
    }
    if (!data.pi0 || !data.place)
        raise(ErrorCode::NoRowMatched, "non-split data requires a place and a representation");
    return classify_non_split(data, xi);
}

std::string render_packet(const PacketDescriptor& pd) {
    std::ostringstream os;
    for (size_t i = 0; i < pd.group_labels.size(); ++i) {
        if (i) os << "; ";
        os << pd.group_labels[i] << ": " << pd.constituents[i];
        if (pd.generic_index && *pd.generic_index == i) os << " (generic)";
    }
    return os.str();
}

} // namespace paramodular

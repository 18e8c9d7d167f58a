#include "paramodular/io.hpp"

#include <json.hpp>

#include <set>
#include <sstream>

namespace paramodular::io {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
    raise(ErrorCode::BadInput, path + ": " + msg);
}

const json& need(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) bad(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(path + "." + key, "missing required field");
    return *it;
}

std::string need_string(const json& j, const std::string& key, const std::string& path) {
    const json& v = need(j, key, path);
    if (!v.is_string()) bad(path + "." + key, "expected a string");
    return v.get<std::string>();
}

long need_int(const json& j, const std::string& key, const std::string& path) {
    const json& v = need(j, key, path);
    if (!v.is_number_integer()) bad(path + "." + key, "expected an integer");
    return v.get<long>();
}

long get_int(const json& j, const std::string& key, long dflt) {
    if (!j.is_object() || !j.contains(key)) return dflt;
    return j.at(key).get<long>();
}

bool get_bool(const json& j, const std::string& key, bool dflt) {
    if (!j.is_object() || !j.contains(key)) return dflt;
    return j.at(key).get<bool>();
}

struct SymbolTable {
    std::set<std::string> declared;

    RingElt parse_value(const json& v, const std::string& path) const {
        if (!v.is_string()) bad(path, "ring elements are written as canonical strings");
        RingElt e;
        try {
            e = RingElt::parse(v.get<std::string>());
        } catch (const CalcError& err) {
            bad(path, err.what());
        }
        for (const auto& var : e.variables()) {
            if (var == "r" || var == "i") continue;
            if (!declared.count(var))
                bad(path, "symbol '" + var + "' used before declaration in \"symbols\"");
        }
        return e;
    }
};

CharSquare parse_square(const json& v, const std::string& path) {
    if (!v.is_string()) bad(path, "expected \"trivial\" or \"omega_EF\"");
    std::string s = v.get<std::string>();
    if (s == "trivial") return CharSquare::Trivial;
    if (s == "omega_EF") return CharSquare::OmegaEF;
    bad(path, "expected \"trivial\" or \"omega_EF\", got \"" + s + "\"");
}

std::string square_name(CharSquare s) {
    return s == CharSquare::Trivial ? "trivial" : "omega_EF";
}

Char parse_char(const json& j, const SymbolTable& syms, const std::string& path) {
    Char c;
    c.name = need_string(j, "name", path);
    c.cond = static_cast<int>(get_int(j, "cond", 0));
    if (j.contains("value_at_unif"))
        c.value_at_unif = syms.parse_value(j.at("value_at_unif"), path + ".value_at_unif");
    c.value_at_minus_one = static_cast<int>(get_int(j, "value_at_minus_one", 1));
    if (c.value_at_minus_one != 1 && c.value_at_minus_one != -1)
        bad(path + ".value_at_minus_one", "expected +1 or -1");
    c.quadratic = get_bool(j, "quadratic", false);
    c.unitary = get_bool(j, "unitary", true);
    if (j.contains("galois")) {
        const json& g = j.at("galois");
        GaloisData gd;
        gd.sigma_invariant = get_bool(g, "sigma_invariant", false);
        if (g.contains("restriction_is_omega"))
            gd.restriction_is_omega = g.at("restriction_is_omega").get<bool>();
        if (g.contains("descends")) {
            const json& d = g.at("descends");
            DescentData de;
            de.value_at_unif =
                syms.parse_value(need(d, "value_at_unif", path + ".galois.descends"),
                                 path + ".galois.descends.value_at_unif");
            de.cond = static_cast<int>(get_int(d, "cond", 0));
            if (d.contains("square_is"))
                de.square_is = parse_square(d.at("square_is"), path + ".galois.descends.square_is");
            gd.descends = std::move(de);
        }
        c.galois = std::move(gd);
    }
    return c;
}

json char_to_json(const Char& c) {
    json j;
    j["name"] = c.name;
    j["cond"] = c.cond;
    j["value_at_unif"] = c.value_at_unif.str();
    j["value_at_minus_one"] = c.value_at_minus_one;
    j["quadratic"] = c.quadratic;
    j["unitary"] = c.unitary;
    if (c.galois) {
        json g;
        g["sigma_invariant"] = c.galois->sigma_invariant;
        if (c.galois->restriction_is_omega)
            g["restriction_is_omega"] = *c.galois->restriction_is_omega;
        if (c.galois->descends) {
            json d;
            d["value_at_unif"] = c.galois->descends->value_at_unif.str();
            d["cond"] = c.galois->descends->cond;
            d["square_is"] = square_name(c.galois->descends->square_is);
            g["descends"] = d;
        }
        j["galois"] = g;
    }
    return j;
}

GL2Rep parse_rep(const json& j, const SymbolTable& syms, const LocalField& fld,
                 const std::string& path) {
    GL2Rep rep;
    rep.field = fld;
    std::string kind = need_string(j, "kind", path);
    if (kind == "principal_series") {
        rep.kind = GL2Rep::Kind::PrincipalSeries;
        if (j.contains("alpha")) rep.alpha = parse_char(j.at("alpha"), syms, path + ".alpha");
        if (j.contains("alpha2"))
            rep.alpha2 = parse_char(j.at("alpha2"), syms, path + ".alpha2");
        if (j.contains("satake_sum"))
            rep.satake_sum = syms.parse_value(j.at("satake_sum"), path + ".satake_sum");
        if (!rep.alpha && !rep.satake_sum)
            bad(path, "principal series needs \"alpha\" or \"satake_sum\"");
    } else if (kind == "steinberg") {
        rep.kind = GL2Rep::Kind::SteinbergTwist;
        rep.alpha = parse_char(need(j, "alpha", path), syms, path + ".alpha");
    } else if (kind == "one_dim") {
        rep.kind = GL2Rep::Kind::OneDimTwist;
        rep.alpha = parse_char(need(j, "alpha", path), syms, path + ".alpha");
    } else if (kind == "supercuspidal") {
        rep.kind = GL2Rep::Kind::Supercuspidal;
        rep.label = need_string(j, "label", path);
        rep.sc_cond = static_cast<int>(need_int(j, "cond", path));
        rep.sc_eps_half = static_cast<int>(need_int(j, "eps_half", path));
        if (j.contains("galois_invariant"))
            rep.galois_invariant = j.at("galois_invariant").get<bool>();
        if (j.contains("base_change")) {
            const json& b = j.at("base_change");
            BaseChangeData bc;
            bc.central_char_of_descent = parse_square(
                need(b, "central_char_of_descent", path + ".base_change"),
                path + ".base_change.central_char_of_descent");
            bc.descended_cond = static_cast<int>(get_int(b, "descended_cond", 0));
            rep.base_change = bc;
        }
    } else {
        bad(path + ".kind", "unknown representation kind \"" + kind + "\"");
    }
    return rep;
}

json rep_to_json(const GL2Rep& rep) {
    json j;
    switch (rep.kind) {
        case GL2Rep::Kind::PrincipalSeries: j["kind"] = "principal_series"; break;
        case GL2Rep::Kind::SteinbergTwist: j["kind"] = "steinberg"; break;
        case GL2Rep::Kind::OneDimTwist: j["kind"] = "one_dim"; break;
        case GL2Rep::Kind::Supercuspidal: j["kind"] = "supercuspidal"; break;
    }
    if (rep.alpha) j["alpha"] = char_to_json(*rep.alpha);
    if (rep.alpha2) j["alpha2"] = char_to_json(*rep.alpha2);
    if (rep.satake_sum) j["satake_sum"] = rep.satake_sum->str();
    if (rep.kind == GL2Rep::Kind::Supercuspidal) {
        j["label"] = rep.label;
        j["cond"] = rep.sc_cond;
        j["eps_half"] = rep.sc_eps_half;
        if (rep.galois_invariant) j["galois_invariant"] = *rep.galois_invariant;
        if (rep.base_change) {
            json b;
            b["central_char_of_descent"] =
                square_name(rep.base_change->central_char_of_descent);
            b["descended_cond"] = rep.base_change->descended_cond;
            j["base_change"] = b;
        }
    }
    return j;
}

SymbolTable parse_symbols(const json& j, const std::string& path) {
    SymbolTable syms;
    if (!j.contains("symbols")) return syms;
    const json& arr = j.at("symbols");
    if (!arr.is_array()) bad(path + ".symbols", "expected an array of names");
    for (const auto& s : arr) {
        if (!s.is_string()) bad(path + ".symbols", "expected an array of names");
        std::string name = s.get<std::string>();
        if (name == "r" || name == "i" || name == "q" || name == "u")
            bad(path + ".symbols", "'" + name + "' is reserved");
        syms.declared.insert(name);
    }
    return syms;
}

json symbols_to_json(const std::set<std::string>& used) {
    json arr = json::array();
    for (const auto& s : used)
        if (s != "r" && s != "i") arr.push_back(s);
    return arr;
}

void collect_symbols(const RingElt& e, std::set<std::string>& out) {
    for (const auto& v : e.variables()) out.insert(v);
}

void collect_symbols(const Char& c, std::set<std::string>& out) {
    collect_symbols(c.value_at_unif, out);
    if (c.galois && c.galois->descends)
        collect_symbols(c.galois->descends->value_at_unif, out);
}

void collect_symbols(const GL2Rep& rep, std::set<std::string>& out) {
    if (rep.alpha) collect_symbols(*rep.alpha, out);
    if (rep.alpha2) collect_symbols(*rep.alpha2, out);
    if (rep.satake_sum) collect_symbols(*rep.satake_sum, out);
}

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) raise(ErrorCode::BadInput, "input is not valid JSON");
    return j;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

} // namespace

InducingFile parse_inducing(const std::string& json_text) {
    json j = parse_text(json_text);
    SymbolTable syms = parse_symbols(j, "$");
    InducingFile out;
    for (const auto& s : syms.declared) out.symbols.push_back(s);

    std::string kind = need_string(j, "kind", "$");
    if (kind == "split") {
        long p = need_int(j, "p", "$");
        LocalField fld = LocalField::ground(p);
        GL2Rep r1 = parse_rep(need(j, "pi1", "$"), syms, fld, "$.pi1");
        GL2Rep r2 = parse_rep(need(j, "pi2", "$"), syms, fld, "$.pi2");
        out.data = InducingData::split(std::move(r1), std::move(r2));
    } else if (kind == "nonsplit") {
        const json& pj = need(j, "place", "$");
        long p = need_int(pj, "p", "$.place");
        PlaceData pd;
        if (pj.contains("D")) {
            long D = pj.at("D").get<long>();
            pd = splitting_type(QuadField::make(D), p);
            if (pd.type == SplitType::Split)
                bad("$.place", "p = " + std::to_string(p) + " splits in Q(sqrt(" +
                                   std::to_string(D) + "))");
        } else {
            // serialized local form: the place data given directly
            std::string type = need_string(pj, "type", "$.place");
            if (type == "inert") {
                pd = PlaceData{p, SplitType::Inert, 2, 1, 0, 1, 1};
            } else if (type == "ramified") {
                pd.p = p;
                pd.type = SplitType::Ramified;
                pd.f = 1;
                pd.e = 2;
                pd.d = static_cast<int>(need_int(pj, "d", "$.place"));
                pd.num_places = 1;
                pd.omega_minus_one =
                    static_cast<int>(need_int(pj, "omega_minus_one", "$.place"));
            } else {
                bad("$.place.type", "expected \"inert\" or \"ramified\"");
            }
        }
        LocalField fld = LocalField::extension(p, pd.f);
        out.data = InducingData::non_split(
            pd, parse_rep(need(j, "pi0", "$"), syms, fld, "$.pi0"));
        if (j.contains("eta"))
            out.data.eta = parse_char(j.at("eta"), syms, "$.eta");
    } else {
        bad("$.kind", "expected \"split\" or \"nonsplit\"");
    }
    if (j.contains("xi")) out.xi = parse_char(j.at("xi"), syms, "$.xi");
    return out;
}

std::string serialize_inducing(const InducingFile& file) {
    json j;
    std::set<std::string> used;
    if (file.data.kind == InducingData::Kind::Split) {
        j["kind"] = "split";
        j["p"] = file.data.pi1->field.p;
        j["pi1"] = rep_to_json(*file.data.pi1);
        j["pi2"] = rep_to_json(*file.data.pi2);
        collect_symbols(*file.data.pi1, used);
        collect_symbols(*file.data.pi2, used);
    } else {
        j["kind"] = "nonsplit";
        json pj;
        // the place is reconstructed from (D, p); D is not stored in
        // PlaceData, so serialize the local data directly
        pj["p"] = file.data.place->p;
        pj["type"] = split_type_name(file.data.place->type);
        pj["f"] = file.data.place->f;
        pj["d"] = file.data.place->d;
        pj["omega_minus_one"] = file.data.place->omega_minus_one;
        j["place"] = pj;
        j["pi0"] = rep_to_json(*file.data.pi0);
        collect_symbols(*file.data.pi0, used);
        if (file.data.eta) j["eta"] = char_to_json(*file.data.eta);
    }
    if (file.xi) {
        j["xi"] = char_to_json(*file.xi);
        collect_symbols(file.xi->value_at_unif, used);
    }
    j["symbols"] = symbols_to_json(used);
    return dump_canonical(j);
}

HilbertFormInput parse_hilbert_input(const std::string& json_text) {
    json j = parse_text(json_text);
    SymbolTable syms = parse_symbols(j, "$");
    HilbertFormInput input;
    const json& fj = need(j, "field", "$");
    input.field = QuadField::make(need_int(fj, "D", "$.field"));
    input.n = static_cast<int>(need_int(j, "n", "$"));
    if (input.n < 0) bad("$.n", "infinity type requires n >= 0");
    input.not_galois_invariant = get_bool(j, "not_galois_invariant", true);
    if (j.contains("places")) {
        const json& arr = j.at("places");
        if (!arr.is_array()) bad("$.places", "expected an array");
        size_t idx = 0;
        for (const auto& e : arr) {
            std::string path = "$.places[" + std::to_string(idx++) + "]";
            PlaceInput pl;
            pl.p = need_int(e, "p", path);
            pl.index = static_cast<int>(get_int(e, "index", 1));
            pl.val_level = static_cast<int>(need_int(e, "val_level", path));
            if (pl.val_level < 0) bad(path + ".val_level", "expected a non-negative integer");
            PlaceData pd = splitting_type(input.field, pl.p);
            if (e.contains("rep")) {
                LocalField fld = pd.type == SplitType::Split
                                     ? LocalField::ground(pl.p)
                                     : LocalField::extension(pl.p, pd.f);
                pl.rep = parse_rep(e.at("rep"), syms, fld, path + ".rep");
            }
            if (e.contains("lambda"))
                pl.lambda = syms.parse_value(e.at("lambda"), path + ".lambda");
            if (pl.rep && pl.lambda)
                bad(path, "give either \"rep\" or \"lambda\", not both");
            input.places.push_back(std::move(pl));
        }
    }
    return input;
}

std::string serialize_hilbert_input(const HilbertFormInput& input) {
    json j;
    j["field"] = json{{"D", input.field.D}};
    j["n"] = input.n;
    j["not_galois_invariant"] = input.not_galois_invariant;
    json arr = json::array();
    std::set<std::string> used;
    for (const auto& pl : input.places) {
        json e;
        e["p"] = pl.p;
        e["index"] = pl.index;
        e["val_level"] = pl.val_level;
        if (pl.rep) {
            e["rep"] = rep_to_json(*pl.rep);
            collect_symbols(*pl.rep, used);
        }
        if (pl.lambda) {
            e["lambda"] = pl.lambda->str();
            collect_symbols(*pl.lambda, used);
        }
        arr.push_back(std::move(e));
    }
    j["places"] = arr;
    j["symbols"] = symbols_to_json(used);
    return dump_canonical(j);
}

namespace {

json euler_to_json(const EulerFactor& f) {
    json j;
    json coeffs = json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(c.str());
    j["coeffs"] = coeffs;
    if (f.q_spec().is_symbolic()) {
        j["q"] = "symbolic";
    } else {
        j["q"] = json{{"p", *f.q_spec().p}, {"f", f.q_spec().f}};
    }
    return j;
}

EulerFactor euler_from_json(const json& j, const std::string& path) {
    const json& coeffs = need(j, "coeffs", path);
    if (!coeffs.is_array()) bad(path + ".coeffs", "expected an array");
    std::vector<RingElt> cs;
    for (const auto& c : coeffs) cs.push_back(RingElt::parse(c.get<std::string>()));
    QSpec qs = QSpec::symbolic();
    const json& qj = need(j, "q", path);
    if (qj.is_object())
        qs = QSpec::concrete(qj.at("p").get<long>(), qj.at("f").get<int>());
    return EulerFactor(std::move(cs), qs);
}

} // namespace

std::string report_to_json(const SiegelFormReport& report) {
    json j;
    j["k"] = report.k;
    j["N"] = report.N;
    json level;
    for (const auto& [p, e] : report.level) level[std::to_string(p)] = e;
    j["level"] = level;
    json pp;
    for (const auto& [p, r] : report.per_prime) {
        json e;
        e["p"] = r.p;
        e["val_N"] = r.val_N;
        e["row_id"] = r.row_id;
        e["lambda_p"] = r.lambda_p.str();
        e["mu_p"] = r.mu_p.str();
        if (r.eps_p) e["eps_p"] = r.eps_p->str();
        e["euler"] = euler_to_json(r.euler);
        e["classical_lambda"] = r.classical_lambda.str();
        e["classical_mu"] = r.classical_mu.str();
        e["classical_euler"] = euler_to_json(r.classical_euler);
        pp[std::to_string(p)] = std::move(e);
    }
    j["per_prime"] = pp;
    json g;
    g["sign"] = report.global.sign.str();
    g["functional_equation"] = report.global.functional_equation;
    g["epsilon_chain"] = report.global.epsilon_chain;
    g["archimedean_factor"] = report.global.archimedean_factor;
    g["sign_consistent"] = report.global.sign_consistent;
    g["archimedean_ok"] = report.global.archimedean_ok;
    g["archimedean_constant"] = report.global.archimedean_constant;
    g["notes"] = report.global.notes;
    j["global"] = g;
    return dump_canonical(j);
}

SiegelFormReport report_from_json(const std::string& json_text) {
    json j = parse_text(json_text);
    SiegelFormReport rep;
    rep.k = static_cast<int>(need_int(j, "k", "$"));
    rep.N = need_string(j, "N", "$");
    for (const auto& [key, v] : need(j, "level", "$").items())
        rep.level[std::stol(key)] = v.get<int>();
    for (const auto& [key, v] : need(j, "per_prime", "$").items()) {
        std::string path = "$.per_prime." + key;
        PrimeInvariantsReport r;
        r.p = need_int(v, "p", path);
        r.val_N = static_cast<int>(need_int(v, "val_N", path));
        r.row_id = need_string(v, "row_id", path);
        r.lambda_p = RingElt::parse(need_string(v, "lambda_p", path));
        r.mu_p = RingElt::parse(need_string(v, "mu_p", path));
        if (v.contains("eps_p")) r.eps_p = RingElt::parse(v.at("eps_p").get<std::string>());
        r.euler = euler_from_json(need(v, "euler", path), path + ".euler");
        r.classical_lambda = RingElt::parse(need_string(v, "classical_lambda", path));
        r.classical_mu = RingElt::parse(need_string(v, "classical_mu", path));
        r.classical_euler =
            euler_from_json(need(v, "classical_euler", path), path + ".classical_euler");
        rep.per_prime[std::stol(key)] = std::move(r);
    }
    const json& g = need(j, "global", "$");
    rep.global.sign = RingElt::parse(need_string(g, "sign", "$.global"));
    rep.global.functional_equation = need_string(g, "functional_equation", "$.global");
    rep.global.epsilon_chain = need_string(g, "epsilon_chain", "$.global");
    rep.global.archimedean_factor = need_string(g, "archimedean_factor", "$.global");
    rep.global.sign_consistent = need(g, "sign_consistent", "$.global").get<bool>();
    rep.global.archimedean_ok = need(g, "archimedean_ok", "$.global").get<bool>();
    rep.global.archimedean_constant =
        need(g, "archimedean_constant", "$.global").get<double>();
    if (g.contains("notes"))
        rep.global.notes = g.at("notes").get<std::vector<std::string>>();
    return rep;
}

std::string report_to_text(const SiegelFormReport& report) {
    std::ostringstream os;
    os << "Siegel paramodular newform report\n";
    os << "  weight k = " << report.k << "\n";
    os << "  level  N = " << report.N << " =";
    for (const auto& [p, e] : report.level) os << " " << p << "^" << e;
    os << "\n\n";
    for (const auto& [p, r] : report.per_prime) {
        os << "  p = " << p << "  (val_p(N) = " << r.val_N << ", row " << r.row_id << ")\n";
        os << "    lambda_p = " << r.lambda_p.str() << "\n";
        os << "    mu_p     = " << r.mu_p.str() << "\n";
        if (r.eps_p) os << "    eps_p    = " << r.eps_p->str() << "\n";
        os << "    L_p(s,F)^-1 (normalized, u = " << p << "^-s): " << r.euler.str() << "\n";
        os << "    classical lambda = " << r.classical_lambda.str()
           << ", classical mu = " << r.classical_mu.str() << "\n";
        os << "    L_p(s,F)^-1 (classical): " << r.classical_euler.str() << "\n";
    }
    os << "\n  functional equation: " << report.global.functional_equation << "\n";
    os << "  epsilon chain:       " << report.global.epsilon_chain << "\n";
    os << "  archimedean factor:  " << report.global.archimedean_factor << "\n";
    os << "  sign consistency ((-1)^k = (-1)^n): "
       << (report.global.sign_consistent ? "ok" : "FAIL") << "\n";
    os << "  archimedean ratio-constancy: "
       << (report.global.archimedean_ok ? "ok" : "FAIL")
       << " (constant " << report.global.archimedean_constant << ")\n";
    for (const auto& note : report.global.notes) os << "  note: " << note << "\n";
    return os.str();
}

} // namespace paramodular::io

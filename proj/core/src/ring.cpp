#include "paramodular/ring.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace paramodular {

namespace {

Rational rational_pow(const Rational& base, int e) {
    if (e == 0) return Rational(1);
    bool neg = e < 0;
    unsigned long ue = neg ? static_cast<unsigned long>(-(long)e) : static_cast<unsigned long>(e);
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), ue);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), ue);
    out.canonicalize();
    if (neg) {
        if (out == 0)
            raise(ErrorCode::NonInvertibleSubstitution, "negative power of zero");
        out = Rational(1) / out;
    }
    return out;
}

int floordiv2(int m) { return (m >= 0) ? m / 2 : -((-m + 1) / 2); }

} // namespace

RingElt RingElt::from_rational(const Rational& c) {
    RingElt e;
    e.add_term(Monomial{}, c);
    return e;
}

RingElt RingElt::variable(const std::string& name, int exp) {
    RingElt e;
    Monomial m;
    if (exp != 0) m[name] = exp;
    e.add_term(m, Rational(1));
    return e;
}

RingElt RingElt::monomial(const Rational& c, const Monomial& m) {
    Monomial clean;
    for (const auto& [v, k] : m)
        if (k != 0) clean[v] = k;
    RingElt e;
    e.add_term(clean, c);
    return e;
}

void RingElt::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool RingElt::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() &&
           terms_.begin()->second == 1;
}

std::optional<Rational> RingElt::as_rational() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first.empty())
        return terms_.begin()->second;
    return std::nullopt;
}

std::set<std::string> RingElt::variables() const {
    std::set<std::string> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, k] : m) vars.insert(v);
    return vars;
}

RingElt RingElt::operator+(const RingElt& o) const {
    RingElt out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

RingElt RingElt::operator-(const RingElt& o) const { return *this + (-o); }

RingElt RingElt::operator-() const {
    RingElt out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

RingElt RingElt::operator*(const RingElt& o) const {
    RingElt out;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m = m1;
            for (const auto& [v, k] : m2) {
                int e = (m.count(v) ? m[v] : 0) + k;
                if (e == 0)
                    m.erase(v);
                else
                    m[v] = e;
            }
            out.add_term(m, c1 * c2);
        }
    }
    return out;
}

RingElt RingElt::pow(int e) const {
    if (e == 0) return one();
    if (e < 0) {
        if (terms_.size() != 1)
            raise(ErrorCode::NegativePowerOfNonMonomial,
                  "cannot invert a ring element with " +
                      std::to_string(terms_.size()) + " terms");
        const auto& [m, c] = *terms_.begin();
        Monomial mi;
        for (const auto& [v, k] : m) mi[v] = -k;
        return monomial(rational_pow(c, -1), mi).pow(-e);
    }
    RingElt base = *this, out = one();
    int k = e;
    while (k > 0) {
        if (k & 1) out = out * base;
        base = base * base;
        k >>= 1;
    }
    return out;
}

RingElt RingElt::substitute(const std::map<std::string, RingElt>& bindings) const {
    RingElt out;
    for (const auto& [m, c] : terms_) {
        RingElt term = from_rational(c);
        for (const auto& [v, k] : m) {
            auto it = bindings.find(v);
            if (it == bindings.end()) {
                term = term * variable(v, k);
            } else if (k >= 0) {
                term = term * it->second.pow(k);
            } else {
                if (!it->second.is_monomial())
                    raise(ErrorCode::NonInvertibleSubstitution,
                          "variable " + v +
                              " occurs with negative exponent but its binding is not invertible");
                term = term * it->second.pow(k);
            }
        }
        out += term;
    }
    return out;
}

RingElt RingElt::reduce_square(const std::string& var, const Rational& val) const {
    RingElt out;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(var);
        if (it == m.end()) {
            out.add_term(m, c);
            continue;
        }
        int e = it->second;
        int half = floordiv2(e);
        int rem = e - 2 * half; // 0 or 1
        Monomial nm = m;
        if (rem == 0)
            nm.erase(var);
        else
            nm[var] = rem;
        out.add_term(nm, c * rational_pow(val, half));
    }
    return out;
}

double RingElt::evaluate_numeric(const std::map<std::string, double>& bindings) const {
    double sum = 0.0;
    for (const auto& [m, c] : terms_) {
        double t = c.get_d();
        for (const auto& [v, k] : m) {
            auto it = bindings.find(v);
            if (it == bindings.end())
                raise(ErrorCode::UnboundVariable, "unbound variable " + v);
            t *= std::pow(it->second, k);
        }
        sum += t;
    }
    return sum;
}

std::string RingElt::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool need_coeff = m.empty() || mag != 1;
        if (need_coeff) os << mag.get_str();
        bool sep = need_coeff;
        for (const auto& [v, k] : m) {
            if (sep) os << "*";
            os << v;
            if (k != 1) os << "^" << k;
            sep = true;
        }
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
};

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

long parse_integer(Cursor& cur) {
    cur.skip_ws();
    size_t start = cur.i;
    bool neg = false;
    if (cur.i < cur.s.size() && (cur.s[cur.i] == '-' || cur.s[cur.i] == '+')) {
        neg = cur.s[cur.i] == '-';
        ++cur.i;
    }
    std::string digits;
    while (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i])))
        digits += cur.s[cur.i++];
    if (digits.empty())
        raise(ErrorCode::BadInput, "expected integer at offset " + std::to_string(start));
    long v = std::stol(digits);
    return neg ? -v : v;
}

std::string parse_name(Cursor& cur) {
    cur.skip_ws();
    std::string name;
    name += cur.s[cur.i++];
    while (cur.i < cur.s.size() && is_name_char(cur.s[cur.i])) name += cur.s[cur.i++];
    return name;
}

// term := rational ['*' varpow ('*' varpow)*] | varpow ('*' varpow)*
RingElt parse_term(Cursor& cur) {
    Rational coeff(1);
    Monomial mono;
    bool saw_coeff = false;

    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        long num = parse_integer(cur);
        long den = 1;
        if (cur.peek() == '/') {
            ++cur.i;
            den = parse_integer(cur);
            if (den == 0) raise(ErrorCode::BadInput, "zero denominator");
        }
        coeff = Rational(num, den);
        coeff.canonicalize();
        saw_coeff = true;
    }

    bool expect_var = !saw_coeff;
    while (true) {
        if (saw_coeff || !expect_var) {
            if (cur.peek() != '*') break;
            ++cur.i;
        }
        if (!is_name_start(cur.peek()))
            raise(ErrorCode::BadInput,
                  "expected variable name at offset " + std::to_string(cur.i));
        std::string name = parse_name(cur);
        int exp = 1;
        if (cur.peek() == '^') {
            ++cur.i;
            exp = static_cast<int>(parse_integer(cur));
        }
        mono[name] += exp;
        if (mono[name] == 0) mono.erase(name);
        saw_coeff = true; // subsequent factors need '*'
        expect_var = false;
    }
    return RingElt::monomial(coeff, mono);
}

} // namespace

RingElt RingElt::parse(const std::string& text) {
    Cursor cur{text};
    if (cur.done()) raise(ErrorCode::BadInput, "empty ring-element literal");
    if (cur.peek() == '0') {
        size_t save = cur.i;
        ++cur.i;
        if (cur.done()) return RingElt::zero();
        cur.i = save;
    }
    RingElt out;
    bool negate = false;
    if (cur.peek() == '-') {
        negate = true;
        ++cur.i;
    } else if (cur.peek() == '+') {
        ++cur.i;
    }
    while (true) {
        RingElt term = parse_term(cur);
        out += negate ? -term : term;
        if (cur.done()) break;
        char c = cur.peek();
        if (c == '+')
            negate = false;
        else if (c == '-')
            negate = true;
        else
            raise(ErrorCode::BadInput,
                  std::string("unexpected character '") + c + "' at offset " +
                      std::to_string(cur.i));
        ++cur.i;
    }
    return out;
}

std::optional<RingElt> equals_witness(const RingElt& a, const RingElt& b) {
    RingElt diff = a - b;
    if (diff.is_zero()) return std::nullopt;
    return diff;
}

} // namespace paramodular

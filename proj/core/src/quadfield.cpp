#include "paramodular/quadfield.hpp"

#include <set>
#include <vector>

namespace paramodular {

namespace {

long mod_pow(long base, long exp, long mod) {
    unsigned __int128 acc = 1, b = static_cast<unsigned __int128>(((base % mod) + mod) % mod);
    while (exp > 0) {
        if (exp & 1) acc = acc * b % static_cast<unsigned __int128>(mod);
        b = b * b % static_cast<unsigned __int128>(mod);
        exp >>= 1;
    }
    return static_cast<long>(acc);
}

// Legendre symbol (a/p) for odd prime p, via Euler's criterion.
int legendre(long a, long p) {
    a = ((a % p) + p) % p;
    if (a == 0) return 0;
    long t = mod_pow(a, (p - 1) / 2, p);
    return t == 1 ? 1 : -1;
}

} // namespace

const char* split_type_name(SplitType t) {
    switch (t) {
        case SplitType::Split: return "split";
        case SplitType::Inert: return "inert";
        case SplitType::Ramified: return "ramified";
    }
    return "?";
}

long discriminant(long D) {
    if (D <= 1)
        raise(ErrorCode::NotRealQuadratic, "D must be a squarefree integer > 1");
    for (long f = 2; f * f <= D; ++f)
        if (D % (f * f) == 0)
            raise(ErrorCode::NotSquarefree, "D = " + std::to_string(D) + " is not squarefree");
    return (D % 4 == 1) ? D : 4 * D;
}

QuadField QuadField::make(long D) { return QuadField{D, discriminant(D)}; }

PlaceData splitting_type(const QuadField& field, long p) {
    PlaceData pd;
    pd.p = p;
    long d_E = field.d_E;
    if (d_E % p == 0) {
        pd.type = SplitType::Ramified;
        pd.f = 1;
        pd.e = 2;
        pd.num_places = 1;
        int d = 0;
        long t = d_E;
        while (t % p == 0) {
            t /= p;
            ++d;
        }
        pd.d = d;
        pd.omega_minus_one = omega_minus_one(field, p);
        return pd;
    }
    bool split;
    if (p == 2) {
        // d_E odd here; mod-8 rule for the unramified prime 2
        long m = ((d_E % 8) + 8) % 8;
        split = (m == 1);
    } else {
        split = legendre(d_E, p) == 1;
    }
    if (split) {
        pd.type = SplitType::Split;
        pd.f = 1;
        pd.e = 1;
        pd.d = 0;
        pd.num_places = 2;
        pd.omega_minus_one = 0;
    } else {
        pd.type = SplitType::Inert;
        pd.f = 2;
        pd.e = 1;
        pd.d = 0;
        pd.num_places = 1;
        pd.omega_minus_one = 1;
    }
    return pd;
}

int omega_minus_one(const QuadField& field, long p) {
    long d_E = field.d_E;
    if (d_E % p != 0) {
        // Unramified: trivial on units if inert; undefined in this role if split.
        PlaceData pd;
        bool split;
        if (p == 2) {
            long m = ((d_E % 8) + 8) % 8;
            split = (m == 1);
        } else {
            split = legendre(d_E, p) == 1;
        }
        if (split)
            raise(ErrorCode::SplitPrime,
                  "omega_{E_w/Q_p}(-1) is requested at a split prime p = " + std::to_string(p));
        return 1;
    }
    if (p != 2) {
        // (-1, d_E)_p with val_p(d_E) = 1: equals the Legendre symbol (-1/p).
        return (p % 4 == 1) ? 1 : -1;
    }
    // Two-adic Hilbert symbol (-1, d_E)_2 = (-1)^{(d'-1)/2}, d' the odd part.
    long t = d_E;
    while (t % 2 == 0) t /= 2;
    long m = ((t % 4) + 4) % 4;
    return (m == 1) ? 1 : -1;
}

bool norm_search_oracle(const QuadField& field, long p, int modulus_exponent) {
    if (modulus_exponent < 4)
        raise(ErrorCode::BadInput, "norm search oracle requires modulus exponent >= 4");
    long mod = 1;
    for (int i = 0; i < modulus_exponent; ++i) mod *= p;

    // squares[t]: t is a square mod p^k; unit_squares[t]: with a unit root.
    std::vector<bool> squares(static_cast<size_t>(mod), false);
    std::vector<bool> unit_squares(static_cast<size_t>(mod), false);
    for (long x = 0; x < mod; ++x) {
        long sq = static_cast<long>(static_cast<unsigned __int128>(x) * x % mod);
        squares[static_cast<size_t>(sq)] = true;
        if (x % p != 0) unit_squares[static_cast<size_t>(sq)] = true;
    }
    long D = ((field.D % mod) + mod) % mod;
    for (long y = 0; y < mod; ++y) {
        long target = static_cast<long>(
            (static_cast<unsigned __int128>(D) * (static_cast<unsigned __int128>(y) * y % mod) +
             mod - 1) % mod);
        bool y_unit = (y % p) != 0;
        if (y_unit ? squares[static_cast<size_t>(target)]
                   : unit_squares[static_cast<size_t>(target)])
            return true;
    }
    return false;
}

std::map<long, int> paramodular_level(const QuadField& field,
                                      const std::vector<PlaceLevel>& level_vals) {
    std::map<long, int> val;
    std::set<std::pair<long, int>> seen;
    for (const auto& lv : level_vals) {
        if (lv.val < 0)
            raise(ErrorCode::BadInput, "negative local level valuation");
        PlaceData pd = splitting_type(field, lv.p);
        if (lv.index < 1 || lv.index > pd.num_places)
            raise(ErrorCode::InconsistentPlaces,
                  "place index " + std::to_string(lv.index) + " invalid over " +
                      split_type_name(pd.type) + " prime " + std::to_string(lv.p));
        if (!seen.insert({lv.p, lv.index}).second)
            raise(ErrorCode::InconsistentPlaces,
                  "duplicate place over p = " + std::to_string(lv.p));
        val[lv.p] += pd.f * lv.val;
    }
    // discriminant contribution (also at primes with no local level)
    long t = field.d_E;
    for (long p = 2; t > 1; ++p) {
        if (t % p != 0) continue;
        int e = 0;
        while (t % p == 0) {
            t /= p;
            ++e;
        }
        val[p] += 2 * e;
    }
    // drop zero entries (possible when val_w = 0 was supplied explicitly)
    for (auto it = val.begin(); it != val.end();)
        it = (it->second == 0) ? val.erase(it) : std::next(it);
    return val;
}

} // namespace paramodular

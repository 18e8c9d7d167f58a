#pragma once

#include <map>
#include <vector>

#include "paramodular/errors.hpp"

namespace paramodular {

enum class SplitType { Split, Inert, Ramified };

const char* split_type_name(SplitType t);

/// Real quadratic field Q(sqrt(D)), D squarefree > 1.
struct QuadField {
    long D = 0;
    long d_E = 0; // discriminant: D if D = 1 mod 4, else 4D

    static QuadField make(long D);
};

long discriminant(long D);

/// Local behaviour of a rational prime p in the field.
struct PlaceData {
    long p = 0;
    SplitType type = SplitType::Split;
    int f = 1;          // residue degree
    int e = 1;          // ramification index
    int d = 0;          // val_p(d_E)
    int num_places = 1; // 2 for split, else 1
    int omega_minus_one = 0; // omega_{E_w/Q_p}(-1); 0 when split (not defined)

    bool operator==(const PlaceData&) const = default;
};

PlaceData splitting_type(const QuadField& field, long p);

/// omega_{E_w/Q_p}(-1) for a non-split prime; SplitPrime error otherwise.
int omega_minus_one(const QuadField& field, long p);

/// Exhaustive check that x^2 - D y^2 = -1 mod p^k has a solution with at
/// least one of x, y a unit.  Test oracle for omega_minus_one; k >= 4.
bool norm_search_oracle(const QuadField& field, long p, int modulus_exponent);

/// One local level contribution: place index is 1, or 2 for the second
/// place over a split prime.
struct PlaceLevel {
    long p = 0;
    int index = 1;
    int val = 0;
};

/// val_p(N) for every relevant p, N = d_E^2 * Norm(level ideal):
/// val_p(N) = 2 val_p(d_E) + sum_w f(w) val_w.
std::map<long, int> paramodular_level(const QuadField& field,
                                      const std::vector<PlaceLevel>& level_vals);

} // namespace paramodular

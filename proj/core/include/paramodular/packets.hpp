#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paramodular/localdata.hpp"
#include "paramodular/ring.hpp"

namespace paramodular {

struct Matrix2 {
    std::array<RingElt, 4> a{}; // row-major

    static Matrix2 identity();
    static Matrix2 diag(const RingElt& x, const RingElt& y);
    RingElt det() const { return a[0] * a[3] - a[1] * a[2]; }
};

struct Matrix4 {
    std::array<RingElt, 16> a{}; // row-major
    std::optional<RingElt> similitude;

    static Matrix4 identity();
    RingElt& at(int r, int c) { return a[static_cast<size_t>(4 * r + c)]; }
    const RingElt& at(int r, int c) const { return a[static_cast<size_t>(4 * r + c)]; }
    bool operator==(const Matrix4& o) const { return a == o.a; }
};

/// The defining alternating form, in 2x2 blocks [[0, 1], [-1, 0]].
Matrix4 symplectic_form();

/// Returns the multiplier x with tgJg = xJ, when one exists exactly.
std::optional<RingElt> check_similitude(const Matrix4& g);

/// Symplectic direct sum of two 2x2 blocks, interleaved on the symplectic
/// basis; requires equal determinants (shared central character).
Matrix4 build_split_parameter(const Matrix2& m1, const Matrix2& m2);

/// Induced parameter sample images: the matrix of y in W'_E given
/// phi0(y), phi0(g0 y g0^{-1}), and the matrix of g0 given phi0(g0^2)
/// and eta(g0).
std::pair<Matrix4, Matrix4> build_induced_parameter(const Matrix2& phi0_y,
                                                    const Matrix2& phi0_conj,
                                                    const Matrix2& phi0_g0sq,
                                                    const RingElt& eta_g0);

struct PacketDescriptor {
    std::vector<std::string> group_labels;
    std::vector<std::string> constituents;   // rendered members, same order
    std::optional<size_t> generic_index;     // set when a member is generic

    bool has_supercuspidal_member() const;
};

/// The packet classifier.  xi is the auxiliary quadratic character some
/// non-split rows need; it is caller-supplied and not verified.
PacketDescriptor classify_packet(const InducingData& data,
                                 const std::optional<Char>& xi = std::nullopt);

std::string render_packet(const PacketDescriptor& pd);

} // namespace paramodular

#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "borel/errors.hpp"

namespace borel {

enum class VarKind : uint8_t { R = 0, S = 1, I = 2, J = 3, T = 4, Aux = 5 };

/// Identifier of one coordinate function.
///
/// Phase-space coordinates are r_{ab} (a <= b, r upper-triangular), s_{ab}
/// (a >= b for the lower-triangular representative of g/u+; a < b only through
/// the explicit full-lift constructor), i_a, j_a. `t` is the one-parameter
/// subgroup variable. Aux indices carry torus-restriction variables a_m/b_m
/// and the symbolic group-entry variables used in equivariance proofs.
///
/// The comparison operator realizes the global variable order used everywhere:
/// all r_{ab} (lex by (a,b)), then s_{ab}, then i_a, then j_a, then t, then
/// auxiliaries.
class VarId {
public:
    static VarId r(int a, int b) {
        require(a >= 1 && b >= a, "VarId: r_{a,b} requires 1 <= a <= b");
        return VarId(VarKind::R, a, b);
    }
    static VarId s(int a, int b) {
        require(a >= 1 && b >= 1 && a >= b, "VarId: s_{a,b} requires a >= b >= 1");
        return VarId(VarKind::S, a, b);
    }
    /// Strict-upper s coordinate of the full lift of s to g. Kept separate so
    /// that accidental construction of u+ coordinates is impossible.
    static VarId s_upper(int a, int b) {
        require(a >= 1 && b > a, "VarId: full-lift s_{a,b} requires a < b");
        return VarId(VarKind::S, a, b);
    }
    static VarId i(int a) {
        require(a >= 1, "VarId: i_a requires a >= 1");
        return VarId(VarKind::I, a, 0);
    }
    static VarId j(int a) {
        require(a >= 1, "VarId: j_a requires a >= 1");
        return VarId(VarKind::J, a, 0);
    }
    static VarId t() { return VarId(VarKind::T, 1, 0); }
    static VarId aux(int k) {
        require(k >= 1 && k < (1 << 14), "VarId: aux index out of range");
        return VarId(VarKind::Aux, k, 0);
    }

    // Torus-restriction variables: a_m, b_m in the substituted polynomials.
    static VarId torus_a(int m) { return aux(2 * m - 1); }
    static VarId torus_b(int m) { return aux(2 * m); }

    // Symbolic group-element entries g_{a,b} and inverted diagonals gd_a = 1/g_{a,a},
    // used in the polynomial-level equivariance checks.
    static VarId grp(int a, int b) {
        require(a >= 1 && b >= a && b <= 16, "VarId: g_{a,b} requires 1 <= a <= b <= 16");
        return aux(kGrpBase + (a - 1) * 16 + (b - 1));
    }
    static VarId grp_dinv(int a) {
        require(a >= 1 && a <= 16, "VarId: gd_a requires 1 <= a <= 16");
        return aux(kDinvBase + a - 1);
    }

    struct GrpIndex {
        int a, b;
    };
    /// Inverse of grp(); requires an aux id in the group block.
    static GrpIndex decode_grp(VarId v) {
        require(v.kind() == VarKind::Aux, "decode_grp: not an aux variable");
        int k = v.a() - kGrpBase;
        require(k >= 0 && k < 256, "decode_grp: not a group variable");
        return GrpIndex{k / 16 + 1, k % 16 + 1};
    }

    static VarId from_code(uint32_t code) {
        VarId v(VarKind::R, 1, 1);
        v.code_ = code;
        return v;
    }

    VarKind kind() const { return static_cast<VarKind>(code_ >> 28); }
    int a() const { return static_cast<int>((code_ >> 14) & 0x3fffu); }
    int b() const { return static_cast<int>(code_ & 0x3fffu); }
    uint32_t code() const { return code_; }

    bool is_strict_upper_s() const { return kind() == VarKind::S && a() < b(); }

    friend bool operator==(VarId x, VarId y) { return x.code_ == y.code_; }
    friend auto operator<=>(VarId x, VarId y) { return x.code_ <=> y.code_; }

    /// Canonical name: r_1_2, s_2_1, i_1, j_1, t, a_1, b_1, g_1_2, gd_1, aux_K.
    std::string name() const;
    /// Inverse of name(); throws ParseError.
    static VarId parse(const std::string& s);

private:
    static constexpr int kGrpBase = 1024;
    static constexpr int kDinvBase = 2048;

    VarId(VarKind k, int a, int b)
        : code_((static_cast<uint32_t>(k) << 28) | (static_cast<uint32_t>(a) << 14) |
                static_cast<uint32_t>(b)) {}
    static void require(bool ok, const char* msg) {
        if (!ok) throw Error(msg);
    }

    uint32_t code_;
};

} // namespace borel

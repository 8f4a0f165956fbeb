#include "borel/varid.hpp"

#include <cctype>

namespace borel {

namespace {

int parse_index(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("VarId: expected index in '" + s + "'");
    return std::stoi(s.substr(start, pos - start));
}

} // namespace

std::string VarId::name() const {
    switch (kind()) {
        case VarKind::R: return "r_" + std::to_string(a()) + "_" + std::to_string(b());
        case VarKind::S: return "s_" + std::to_string(a()) + "_" + std::to_string(b());
        case VarKind::I: return "i_" + std::to_string(a());
        case VarKind::J: return "j_" + std::to_string(a());
        case VarKind::T: return "t";
        case VarKind::Aux: {
            int k = a();
            if (k >= kDinvBase) return "gd_" + std::to_string(k - kDinvBase + 1);
            if (k >= kGrpBase) {
                int off = k - kGrpBase;
                return "g_" + std::to_string(off / 16 + 1) + "_" + std::to_string(off % 16 + 1);
            }
            // Torus variables interleave: odd -> a_m, even -> b_m.
            if (k % 2 == 1) return "a_" + std::to_string((k + 1) / 2);
            return "b_" + std::to_string(k / 2);
        }
    }
    throw Error("VarId: corrupt kind");
}

VarId VarId::parse(const std::string& s) {
    if (s == "t") return t();
    if (s.size() < 3) throw ParseError("VarId: bad name '" + s + "'");
    std::size_t pos;
    auto two_indices = [&](std::size_t start) {
        pos = start;
        int x = parse_index(s, pos);
        if (pos >= s.size() || s[pos] != '_') throw ParseError("VarId: bad name '" + s + "'");
        ++pos;
        int y = parse_index(s, pos);
        if (pos != s.size()) throw ParseError("VarId: bad name '" + s + "'");
        return std::pair<int, int>(x, y);
    };
    auto one_index = [&](std::size_t start) {
        pos = start;
        int x = parse_index(s, pos);
        if (pos != s.size()) throw ParseError("VarId: bad name '" + s + "'");
        return x;
    };
    if (s.rfind("r_", 0) == 0) {
        auto [x, y] = two_indices(2);
        return r(x, y);
    }
    if (s.rfind("s_", 0) == 0) {
        auto [x, y] = two_indices(2);
        return x >= y ? VarId::s(x, y) : VarId::s_upper(x, y);
    }
    if (s.rfind("i_", 0) == 0) return i(one_index(2));
    if (s.rfind("j_", 0) == 0) return j(one_index(2));
    if (s.rfind("a_", 0) == 0) return torus_a(one_index(2));
    if (s.rfind("b_", 0) == 0) return torus_b(one_index(2));
    if (s.rfind("gd_", 0) == 0) return grp_dinv(one_index(3));
    if (s.rfind("g_", 0) == 0) {
        auto [x, y] = two_indices(2);
        return grp(x, y);
    }
    if (s.rfind("aux_", 0) == 0) return aux(one_index(4));
    throw ParseError("VarId: bad name '" + s + "'");
}

} // namespace borel

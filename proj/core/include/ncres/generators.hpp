#pragma once
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ncres {

// Free letters for endomorphisms of the twisting bundle. Axis 6 is the normal direction.
enum class GenKind : std::uint8_t {
    A,          // skew part of the connection
    AStar,      // its formal adjoint (an unrelated letter)
    SigmaF,     // connection coefficient on F
    SigmaFe,    // connection coefficient, form-bundle variant
    Omega,      // omega(F, g^F)(e_j)
    OmegaStar,  // adjoint variant
    CurvatureF  // reserved; must never reach a boundary value
};

struct FGenerator {
    GenKind kind{GenKind::A};
    std::uint8_t axis{1};    // 1..6
    std::uint8_t axis2{0};   // second index, curvature only

    friend auto operator<=>(const FGenerator&, const FGenerator&) = default;
    friend bool operator==(const FGenerator&, const FGenerator&) = default;

    std::string name() const;  // e.g. "A_n", "As_2", "sig_3", "RF_1_2"
    static FGenerator parse(std::string_view text);
};

using FWord = std::vector<FGenerator>;

inline FGenerator gen(GenKind k, int axis) { return FGenerator{k, static_cast<std::uint8_t>(axis), 0}; }

std::string word_str(const FWord& w);          // letters joined by '.'
FWord parse_word(std::string_view text);

// Lexicographically minimal rotation.
FWord minimal_rotation(const FWord& w);

bool word_has_curvature(const FWord& w);

}  // namespace ncres

#include "ncres/generators.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "ncres/errors.hpp"

namespace ncres {

namespace {

constexpr std::array<std::pair<GenKind, std::string_view>, 7> kPrefixes{{
    {GenKind::A, "A"},
    {GenKind::AStar, "As"},
    {GenKind::SigmaF, "sig"},
    {GenKind::SigmaFe, "sige"},
    {GenKind::Omega, "w"},
    {GenKind::OmegaStar, "ws"},
    {GenKind::CurvatureF, "RF"},
}};

std::string axis_name(int a) { return a == 6 ? "n" : std::to_string(a); }

int parse_axis(std::string_view s) {
    if (s == "n" || s == "6") return 6;
    if (s.size() == 1 && s[0] >= '1' && s[0] <= '5') return s[0] - '0';
    throw ParseError("bad axis: " + std::string(s));
}

}  // namespace

std::string FGenerator::name() const {
    std::string out;
    for (auto& [k, p] : kPrefixes)
        if (k == kind) out = p;
    out += "_" + axis_name(axis);
    if (kind == GenKind::CurvatureF) out += "_" + axis_name(axis2);
    return out;
}

FGenerator FGenerator::parse(std::string_view text) {
    auto us = text.find('_');
    if (us == std::string_view::npos) throw ParseError("bad generator: " + std::string(text));
    std::string_view prefix = text.substr(0, us);
    std::string_view rest = text.substr(us + 1);
    for (auto& [k, p] : kPrefixes) {
        if (p != prefix) continue;
        FGenerator g{k, 0, 0};
        if (k == GenKind::CurvatureF) {
            auto us2 = rest.find('_');
            if (us2 == std::string_view::npos) throw ParseError("bad curvature letter: " + std::string(text));
            g.axis = static_cast<std::uint8_t>(parse_axis(rest.substr(0, us2)));
            g.axis2 = static_cast<std::uint8_t>(parse_axis(rest.substr(us2 + 1)));
        } else {
            g.axis = static_cast<std::uint8_t>(parse_axis(rest));
        }
        return g;
    }
    throw ParseError("unknown generator: " + std::string(text));
}

std::string word_str(const FWord& w) {
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) out += '.';
        out += w[k].name();
    }
    return out;
}

FWord parse_word(std::string_view text) {
    FWord w;
    while (!text.empty()) {
        auto dot = text.find('.');
        w.push_back(FGenerator::parse(text.substr(0, dot)));
        if (dot == std::string_view::npos) break;
        text.remove_prefix(dot + 1);
    }
    return w;
}

FWord minimal_rotation(const FWord& w) {
    FWord best = w;
    FWord rot = w;
    for (std::size_t k = 1; k < w.size(); ++k) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

bool word_has_curvature(const FWord& w) {
    return std::any_of(w.begin(), w.end(), [](const FGenerator& g) { return g.kind == GenKind::CurvatureF; });
}

}  // namespace ncres

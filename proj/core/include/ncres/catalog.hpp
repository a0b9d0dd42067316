#pragma once
#include <array>
#include <map>
#include <string>
#include <utility>

#include "ncres/clifford.hpp"
#include "ncres/geometry.hpp"
#include "ncres/symbol.hpp"

namespace ncres {

enum class Family { Dirac, Signature };
std::string family_name(Family f);
Family parse_family(const std::string& s);

struct CatalogOptions {
    int jet_order = 1;
    std::array<int, 6> spin_permutation{0, 1, 2, 3, 4, 5};
    bool trivial_bundle = false;  // drop every bundle letter
    bool trivial_f = false;       // f == 1
};

// coeff * f^f_power * Q^q_power * c(xi)
struct LeadingSymbol {
    GaussianRational coeff{1};
    int f_power = 0;
    int q_power = 0;
};

class SymbolCatalog {
public:
    SymbolCatalog(Family family, const CatalogOptions& opts);

    Family family() const { return family_; }
    const CatalogOptions& options() const { return opts_; }
    const CliffordRep& rep() const { return rep_; }
    const CollarGeometry& geometry() const { return geom_; }
    int dim() const { return rep_.rep_dim; }

    // Building blocks.
    ScalarJet f_jet(int power) const;            // f^power along the normal coordinate
    ScalarExpr f_base(int power) const;          // f^power at the base point
    PreSymbol scalar(const ScalarJet& s) const;  // s * id
    PreSymbol endo(const EndoElement& e, int jet_order) const;
    PreSymbol xi(int axis) const;                // axis 0..5
    PreSymbol c_xi() const { return c_xi_; }
    PreSymbol q_norm() const { return q_; }      // Q(x) = h |xi'|^2 + xi_n^2
    PreSymbol inv_q(int m) const;                // Q(x)^-m
    PreSymbol inv_q0(int m) const;               // Q^-m at the base point
    EndoElement c(int axis) const;
    EndoElement c_df() const;                    // sum_j DF_j c_j

    // Order-zero blocks keyed by role: "spin", "lambda", "mu", "theta", "p", "vartheta", "vartheta_star".
    const std::map<std::string, EndoElement>& blocks() const { return blocks_; }
    const EndoElement& sigma0() const { return sigma0_; }

    // Parametrix of f * D^{-1}.
    const PreSymbol& sigma_m1() const { return sigma_m1_; }
    const PreSymbol& sigma_m2() const { return sigma_m2_; }
    // Third-order f-conjugated product and its inverse.
    const PreSymbol& sigma_3() const { return sigma_3_; }
    const PreSymbol& sigma_2() const { return sigma_2_; }
    const PreSymbol& sigma_2_plain() const { return sigma_2_plain_; }
    const PreSymbol& sigma_m3() const { return sigma_m3_; }
    const PreSymbol& sigma_m4_base() const { return sigma_m4_base_; }
    const PreSymbol& sigma_m4_df() const { return sigma_m4_df_; }
    const PreSymbol& sigma_m4_dfinv() const { return sigma_m4_dfinv_; }
    PreSymbol sigma_m4() const { return sigma_m4_base_ + sigma_m4_df_ + sigma_m4_dfinv_; }
    LeadingSymbol leading() const { return {GaussianRational::i(), 1, 1}; }

    PreSymbol leading_symbol(const LeadingSymbol& l) const;
    PreSymbol leading_inverse(const LeadingSymbol& l) const;

    // Named catalog entries for debug dumps.
    std::map<std::string, PreSymbol> named() const;

private:
    void build_blocks();
    void build_symbols();

    Family family_;
    CatalogOptions opts_;
    CliffordRep rep_;
    CollarGeometry geom_;
    std::map<std::string, EndoElement> blocks_;
    EndoElement sigma0_;
    PreSymbol c_xi_, q_;
    PreSymbol sigma_m1_, sigma_m2_, sigma_3_, sigma_2_, sigma_2_plain_, sigma_m3_;
    PreSymbol sigma_m4_base_, sigma_m4_df_, sigma_m4_dfinv_;
};

// q_{-3} = p3^{-1}; q_{-4} = -p3^{-1} [p2 p3^{-1} + sum_j d_{xi_j} p3 D_{x_j}(p3^{-1})], D = -i d.
std::pair<PreSymbol, PreSymbol> inverse_symbol_recursion(const SymbolCatalog& cat, const LeadingSymbol& p3,
                                                         const PreSymbol& p2);

// Order -1 part of (p3 + p2) o (q3 + q4) at the base point.
PreSymbol composition_order_minus1(const PreSymbol& p3, const PreSymbol& p2, const PreSymbol& q3, const PreSymbol& q4);

}  // namespace ncres

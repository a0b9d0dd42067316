#pragma once
#include <map>
#include <string>
#include <vector>

#include "ncres/catalog.hpp"
#include "ncres/integrator.hpp"

namespace ncres {

struct CaseSpec {
    Family family{Family::Dirac};
    int r = -1;
    int l = -3;
    int j = 0;
    int k = 0;
    TangentialExponents alpha{};
    std::string group;

    int alpha_abs() const;
    std::string str() const;
};

// Index groups in report order.
const std::vector<std::string>& case_groups();

// Group label of a tuple; the two mixed-order groups swap labels between families.
std::string group_label(Family family, int r, int l, int j, int k, int alpha_abs);

// All tuples with r in {-1,-2}, l in {-3,-4} and r + l - k - j - |alpha| - 1 = -6.
std::vector<CaseSpec> enumerate_cases(Family family);

// Normal derivatives each side of a tuple needs; checked against the catalog jets.
struct DerivativeBudget {
    int left_normal = 0;
    int right_normal = 0;
    bool fits = true;
};
DerivativeBudget derivative_budget(const SymbolCatalog& cat, const CaseSpec& spec);

struct PipelineOptions {
    int pi_plus_sign = 1;  // -1 evaluates the opposite sign convention for the projection
};

// value = prefactor * integral of trace(left * right).
struct CaseIntegrand {
    CaseSpec spec;
    std::string part;
    GaussianRational prefactor;
    RestrictedSymbol left;
    RestrictedSymbol right;
};

std::vector<CaseIntegrand> build_integrands(const SymbolCatalog& cat, const CaseSpec& spec, const PipelineOptions& opts);

struct CaseResult {
    Family family{Family::Dirac};
    std::string case_id;
    ScalarExpr value;
    std::map<std::string, ScalarExpr> parts;  // by symbol part ("main", "base", "df", "dfinv")
    std::vector<CaseSpec> tuples;
    std::vector<CaseIntegrand> integrands;
};

// Term kinds used for component selection: "h1", "trace", "f", "const".
std::string term_kind(const Monomial& m);
ScalarExpr select_kind(const ScalarExpr& e, const std::string& kind);  // kind "all" keeps everything

CaseResult compute_case(const SymbolCatalog& cat, const std::string& case_id, const PipelineOptions& opts = {});

// Asserts the structural invariants every case value must satisfy.
void check_case_invariants(const CaseResult& r);

struct BoundaryTotal {
    Family family{Family::Dirac};
    ScalarExpr total;
    std::vector<CaseResult> cases;
    GaussianRational h1_coefficient;     // coefficient of pi*h1*Omega4*dimF
    GaussianRational fjet_coefficient;   // coefficient of pi*f^-1*df_n*Omega4*dimF
};

// Sums cases in canonical group order regardless of input order.
BoundaryTotal assemble_total(Family family, std::vector<CaseResult> cases);

// Evaluates the requested groups, optionally in parallel; output order is canonical.
std::vector<CaseResult> compute_cases(const SymbolCatalog& cat, const std::vector<std::string>& ids, int jobs,
                                      const PipelineOptions& opts = {});

Monomial unit_monomial(std::initializer_list<std::pair<Param, int>> powers);

}  // namespace ncres

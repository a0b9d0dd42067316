#include "ncres/catalog.hpp"

#include "ncres/errors.hpp"

namespace ncres {

std::string family_name(Family f) { return f == Family::Dirac ? "dirac" : "signature"; }

Family parse_family(const std::string& s) {
    if (s == "dirac") return Family::Dirac;
    if (s == "signature") return Family::Signature;
    throw Error("unknown family: " + s);
}

namespace {

ScalarJet jet_power(const ScalarJet& base, int e, int order) {
    ScalarJet out = ScalarJet::constant(ScalarExpr(1), order);
    for (int k = 0; k < e; ++k) out = out * base;
    return out;
}

}  // namespace

SymbolCatalog::SymbolCatalog(Family family, const CatalogOptions& opts)
    : family_(family),
      opts_(opts),
      rep_(family == Family::Dirac ? build_spin_rep(opts.spin_permutation) : build_exterior_rep()),
      geom_(collar_geometry()) {
    if (opts_.jet_order < 0) throw Error("jet order must be nonnegative");
    build_blocks();
    build_symbols();
}

ScalarJet SymbolCatalog::f_jet(int power) const {
    int ord = std::min(opts_.jet_order, 1);  // f carries first derivatives only
    if (opts_.trivial_f) return ScalarJet::constant(ScalarExpr(1), opts_.jet_order);
    std::vector<ScalarExpr> t{ScalarExpr::param(Param::F, power),
                              ScalarExpr::param(Param::F, power - 1) * ScalarExpr::param(Param::DF6) * GaussianRational(power)};
    t.resize(static_cast<std::size_t>(ord) + 1);
    return ScalarJet::from_taylor(std::move(t));
}

ScalarExpr SymbolCatalog::f_base(int power) const {
    return opts_.trivial_f ? ScalarExpr(1) : ScalarExpr::param(Param::F, power);
}

PreSymbol SymbolCatalog::scalar(const ScalarJet& s) const {
    return PreSymbol::monomial(SymKey{}, lift(s, EndoElement::identity(dim())));
}

PreSymbol SymbolCatalog::endo(const EndoElement& e, int jet_order) const { return PreSymbol::constant(e, jet_order); }

PreSymbol SymbolCatalog::xi(int axis) const {
    return PreSymbol::monomial(xi_key(axis), EndoJet::constant(EndoElement::identity(dim()), opts_.jet_order));
}

EndoElement SymbolCatalog::c(int axis) const { return EndoElement::from_matrix(rep_.c[axis]); }

EndoElement SymbolCatalog::c_df() const {
    EndoElement out;
    if (opts_.trivial_f) return out;
    for (int j = 0; j < 6; ++j) out += c(j) * ScalarExpr::param(df_param(j + 1));
    return out;
}

PreSymbol SymbolCatalog::inv_q(int m) const {
    // Q(x)^-m = sum_k C(-m, k) (h - 1)^k |xi'|^(2k) / Q0^(m+k)
    int ord = opts_.jet_order;
    ScalarJet h = collar_h(ord);
    ScalarJet delta = h - ScalarJet::constant(ScalarExpr(1), ord);
    PreSymbol out;
    for (int k = 0; k <= ord; ++k) {
        SymKey key;
        key.s = static_cast<std::int16_t>(k);
        key.q = static_cast<std::int16_t>(m + k);
        ScalarJet w = jet_power(delta, k, ord).scaled(GaussianRational(binomial(mpq_class(-m), static_cast<unsigned>(k))));
        out += PreSymbol::monomial(key, lift(w, EndoElement::identity(dim())));
    }
    return out;
}

PreSymbol SymbolCatalog::inv_q0(int m) const {
    SymKey key;
    key.q = static_cast<std::int16_t>(m);
    return PreSymbol::monomial(key, EndoJet::constant(EndoElement::identity(dim()), 0));
}

void SymbolCatalog::build_blocks() {
    const bool bundle = !opts_.trivial_bundle;
    auto letters = [&](bool hat, GenKind k) { return bundle ? clifford_with_letters(rep_, hat, k) : EndoElement(); };
    auto spin_terms = spin_connection_terms(geom_, rep_);
    EndoElement spin;
    for (int k = 0; k < 6; ++k) spin += c(k) * spin_terms[k];
    blocks_["spin"] = spin;
    if (family_ == Family::Dirac) {
        blocks_["mu"] = letters(false, GenKind::SigmaF) + letters(false, GenKind::A);
        blocks_["lambda"] = letters(false, GenKind::SigmaF) - letters(false, GenKind::AStar);
        blocks_["c_A"] = letters(false, GenKind::A);
        blocks_["c_Astar"] = letters(false, GenKind::AStar);
        sigma0_ = spin + blocks_["mu"];
    } else {
        const GaussianRational half = GaussianRational::from_fraction(1, 2);
        EndoElement p = p_term(geom_, rep_);
        blocks_["p"] = p;
        blocks_["theta"] = spin + p;
        blocks_["chat_omega"] = letters(true, GenKind::Omega);
        blocks_["chat_omega_star"] = letters(true, GenKind::OmegaStar);
        blocks_["vartheta"] = letters(false, GenKind::SigmaFe) - blocks_["chat_omega"] * half;
        blocks_["vartheta_star"] = letters(false, GenKind::SigmaFe) - blocks_["chat_omega_star"] * half;
        sigma0_ = blocks_["theta"] + blocks_["vartheta"];
    }
}

void SymbolCatalog::build_symbols() {
    const int ord = opts_.jet_order;
    const GaussianRational i = GaussianRational::i();
    ScalarJet sqrt_h = unit_jet_power(collar_h(ord), mpq_class(1, 2), ScalarExpr(1));

    c_xi_ = PreSymbol();
    for (int k = 0; k < 5; ++k) c_xi_ += PreSymbol::monomial(xi_key(k), lift(sqrt_h, c(k)));
    c_xi_ += PreSymbol::monomial(xi_key(5), EndoJet::constant(c(5), ord));

    {
        SymKey ks;
        ks.s = 1;
        SymKey kn;
        kn.n = 2;
        q_ = PreSymbol::monomial(ks, lift(collar_h(ord), EndoElement::identity(dim()))) +
             PreSymbol::monomial(kn, EndoJet::constant(EndoElement::identity(dim()), ord));
    }

    sigma_m1_ = (scalar(f_jet(1)) * c_xi_ * inv_q(1)).scaled(i);
    sigma_m3_ = (c_xi_ * scalar(f_jet(-1)) * inv_q(2)).scaled(i);

    // Base-point pieces.
    const PreSymbol c0 = c_xi_.at_base();
    const PreSymbol q0 = q_.at_base();
    const PreSymbol cn = endo(c(5), 0);
    const PreSymbol dc = symbol_derivative(c_xi_, {VarKind::XN}).at_base();
    const PreSymbol dq = symbol_derivative(q_, {VarKind::XN}).at_base();

    sigma_m2_ = (c0 * endo(sigma0_, 0) * c0 * inv_q0(2) + c0 * inv_q0(3) * cn * (dc * q0 - c0 * dq)).scaled(f_base(1));

    // Second-order part of the untwisted third-order operator.
    auto spin_terms = spin_connection_terms(geom_, rep_);
    PreSymbol drift;
    for (int k = 0; k < 6; ++k) {
        EndoElement w = spin_terms[k] * GaussianRational(4) -
                        EndoElement::scalar(dim(), geom_.christoffel_contracted[k] * GaussianRational(2));
        drift += xi(k).at_base() * endo(w, 0);
    }
    PreSymbol g = c0 * drift -
                  (q0 * cn).scaled(ScalarExpr::param(Param::H1) * GaussianRational::from_fraction(1, 4));
    if (family_ == Family::Dirac) {
        sigma_2_plain_ = g + endo(blocks_.at("lambda"), 0) * q0 - (c0 * endo(blocks_.at("c_A"), 0) * c0).scaled(GaussianRational(2)) -
                         (q0 * endo(blocks_.at("c_Astar"), 0)).scaled(GaussianRational(2));
    } else {
        EndoElement mid = blocks_.at("p") + blocks_.at("vartheta_star") - blocks_.at("chat_omega_star");
        sigma_2_plain_ = g + q0 * endo(mid, 0) + c0 * endo(blocks_.at("chat_omega"), 0) * c0;
    }
    sigma_2_ = sigma_2_plain_.scaled(f_base(1)) + (endo(c_df(), 0) * q0).scaled(GaussianRational(2));
    sigma_3_ = (c_xi_ * q_ * scalar(f_jet(1))).scaled(i);

    // Order -4 part of the inverse, split by origin.
    PreSymbol base = c0 * sigma_2_plain_ * c0 * inv_q0(4);
    PreSymbol sum_df;
    PreSymbol sum_dfinv;
    const ScalarExpr finv = f_base(-1);
    for (int j = 0; j < 6; ++j) {
        PreSymbol lead = endo(c(j), 0) * q0 + (xi(j).at_base() * c0).scaled(GaussianRational(2));
        Var var = j == 5 ? Var{VarKind::XN} : Var{VarKind::X, j};
        PreSymbol dcj = j == 5 ? dc : symbol_derivative(c_xi_, var).at_base();
        PreSymbol dqj = j == 5 ? dq : symbol_derivative(q_, var).at_base();
        sum_df += lead * (dcj * q0 - (c0 * dqj).scaled(GaussianRational(2)));
        if (!opts_.trivial_f) {
            ScalarExpr d_finv = laurent_f_derivative(finv, j + 1) * (-i);
            sum_dfinv += lead.scaled(d_finv);
        }
    }
    base += c0 * inv_q0(5) * sum_df;
    sigma_m4_base_ = base.scaled(finv);
    sigma_m4_df_ = (c0 * endo(c_df(), 0) * c0 * inv_q0(3)).scaled(f_base(-2) * GaussianRational(2));
    sigma_m4_dfinv_ = (c0 * sum_dfinv * c0 * inv_q0(4)).scaled(i);
}

PreSymbol SymbolCatalog::leading_symbol(const LeadingSymbol& l) const {
    PreSymbol q = scalar(ScalarJet::constant(ScalarExpr(1), opts_.jet_order));
    for (int k = 0; k < l.q_power; ++k) q = q * q_;
    return (c_xi_ * q * scalar(f_jet(l.f_power))).scaled(l.coeff);
}

PreSymbol SymbolCatalog::leading_inverse(const LeadingSymbol& l) const {
    if (l.coeff.is_zero()) throw Error("non-invertible leading symbol");
    // c(xi)^-1 = -c(xi)/Q
    return (c_xi_ * scalar(f_jet(-l.f_power)) * inv_q(l.q_power + 1)).scaled(-l.coeff.inverse());
}

std::map<std::string, PreSymbol> SymbolCatalog::named() const {
    return {{"c_xi", c_xi_},          {"sigma_m1", sigma_m1_},         {"sigma_m2", sigma_m2_},
            {"sigma_3", sigma_3_},    {"sigma_2", sigma_2_},           {"sigma_2_plain", sigma_2_plain_},
            {"sigma_m3", sigma_m3_},  {"sigma_m4_base", sigma_m4_base_}, {"sigma_m4_df", sigma_m4_df_},
            {"sigma_m4_dfinv", sigma_m4_dfinv_}};
}

namespace {

PreSymbol d_x(const PreSymbol& p, int axis) {
    Var v = axis == 5 ? Var{VarKind::XN} : Var{VarKind::X, axis};
    return symbol_derivative(p, v).scaled(-GaussianRational::i());
}

PreSymbol d_xi(const PreSymbol& p, int axis) {
    Var v = axis == 5 ? Var{VarKind::XiN} : Var{VarKind::Xi, axis};
    return symbol_derivative(p, v);
}

}  // namespace

std::pair<PreSymbol, PreSymbol> inverse_symbol_recursion(const SymbolCatalog& cat, const LeadingSymbol& p3,
                                                         const PreSymbol& p2) {
    PreSymbol lead = cat.leading_symbol(p3);
    PreSymbol q3 = cat.leading_inverse(p3);
    PreSymbol q3b = q3.at_base();
    PreSymbol inner = p2.at_base() * q3b;
    for (int j = 0; j < 6; ++j) inner += d_xi(lead, j).at_base() * d_x(q3, j).at_base();
    PreSymbol q4 = (q3b * inner).scaled(GaussianRational(-1));
    return {q3, q4};
}

PreSymbol composition_order_minus1(const PreSymbol& p3, const PreSymbol& p2, const PreSymbol& q3, const PreSymbol& q4) {
    PreSymbol out = p3.at_base() * q4.at_base() + p2.at_base() * q3.at_base();
    for (int j = 0; j < 6; ++j) out += d_xi(p3, j).at_base() * d_x(q3, j).at_base();
    return out;
}

}  // namespace ncres

#include "ncres/clifford.hpp"

#include <bit>
#include <sstream>

#include "ncres/errors.hpp"

namespace ncres {

namespace {

using Dense = std::vector<std::vector<GaussianRational>>;

Dense pauli(int which) {
    const GaussianRational i = GaussianRational::i();
    switch (which) {
        case 0: return {{0, 0}, {0, 0}};
        case 1: return {{0, 1}, {1, 0}};
        case 2: return {{0, -i}, {i, 0}};
        case 3: return {{1, 0}, {0, -1}};
        default: return {{1, 0}, {0, 1}};
    }
}

Dense kron(const Dense& a, const Dense& b) {
    std::size_t n = a.size(), m = b.size();
    Dense out(n * m, std::vector<GaussianRational>(n * m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l) out[i * m + k][j * m + l] = a[i][j] * b[k][l];
    return out;
}

ExactMatrix to_sparse(const Dense& d, const GaussianRational& scale) {
    ExactMatrix out(static_cast<int>(d.size()));
    for (std::size_t r = 0; r < d.size(); ++r)
        for (std::size_t c = 0; c < d.size(); ++c)
            if (!d[r][c].is_zero()) out.push_back_unchecked(static_cast<int>(r), static_cast<int>(c), d[r][c] * scale);
    return out;
}

long choose4(int k) {
    static constexpr long t[5] = {1, 4, 6, 4, 1};
    return (k < 0 || k > 4) ? 0 : t[k];
}

}  // namespace

std::string CliffordRep::dump() const {
    std::ostringstream os;
    auto put = [&](const char* tag, const std::array<ExactMatrix, 6>& ms) {
        for (int k = 0; k < 6; ++k) {
            os << tag << (k + 1) << ":\n";
            for (int r = 0; r < ms[k].dim(); ++r)
                for (auto& [c, v] : ms[k].row(r)) os << "  " << r << ' ' << c << ' ' << v.str() << '\n';
        }
    };
    os << name() << " rep, dim " << rep_dim << '\n';
    put("c", c);
    if (has_chat()) put("chat", chat);
    return os.str();
}

CliffordRep build_spin_rep(const std::array<int, 6>& perm) {
    // gamma_k are Hermitian and square to 1; c = i*gamma squares to -1.
    const Dense x = pauli(1), y = pauli(2), z = pauli(3), one = pauli(4);
    const std::array<Dense, 6> gammas{
        kron(kron(x, one), one), kron(kron(y, one), one), kron(kron(z, x), one),
        kron(kron(z, y), one),   kron(kron(z, z), x),     kron(kron(z, z), y),
    };
    CliffordRep rep;
    rep.kind = RepKind::Spin;
    rep.rep_dim = 8;
    rep.permutation = perm;
    for (int k = 0; k < 6; ++k) rep.c[k] = to_sparse(gammas[perm[k]], GaussianRational::i());
    return rep;
}

ExactMatrix exterior_mult(int j) {
    ExactMatrix m(64);
    for (int s = 0; s < 64; ++s) {
        if (s & (1 << j)) continue;
        int sign = (std::popcount(static_cast<unsigned>(s & ((1 << j) - 1))) % 2) ? -1 : 1;
        m.add(s | (1 << j), s, GaussianRational(sign));
    }
    return m;
}

ExactMatrix interior_mult(int j) {
    ExactMatrix m(64);
    for (int s = 0; s < 64; ++s) {
        if (!(s & (1 << j))) continue;
        int sign = (std::popcount(static_cast<unsigned>(s & ((1 << j) - 1))) % 2) ? -1 : 1;
        m.add(s & ~(1 << j), s, GaussianRational(sign));
    }
    return m;
}

CliffordRep build_exterior_rep() {
    CliffordRep rep;
    rep.kind = RepKind::Exterior;
    rep.rep_dim = 64;
    for (int j = 0; j < 6; ++j) {
        ExactMatrix e = exterior_mult(j), i = interior_mult(j);
        rep.c[j] = e - i;
        rep.chat[j] = e + i;
    }
    return rep;
}

GaussianRational rep_trace(const CliffordRep& rep, const ExactMatrix& m) {
    if (m.dim() != rep.rep_dim) throw ShapeError("trace: matrix does not match representation");
    return m.trace();
}

GaussianRational degree_block_trace(const ExactMatrix& m, int degree) {
    if (m.dim() != 64) throw ShapeError("degree trace needs the 64-dim form space");
    GaussianRational t;
    for (int s = 0; s < 64; ++s)
        if (std::popcount(static_cast<unsigned>(s)) == degree) t += m.at(s, s);
    return t;
}

mpq_class b_coefficient(int m) {
    if (m < 0 || m > 6) throw Error("b_coefficient: degree out of range");
    return mpq_class(choose4(m - 2) + choose4(m) - 2 * choose4(m - 1));
}

}  // namespace ncres

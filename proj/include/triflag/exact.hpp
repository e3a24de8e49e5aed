// Exact linear algebra over Q (GMP): fraction-free rank, null vectors, and
// limits of spans of vectors that depend polynomially on a parameter.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <vector>

namespace triflag {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

inline Vec zero_vec(int n) { return Vec(static_cast<std::size_t>(n), Rational(0)); }

inline Vec unit_vec(int n, int k) {
    Vec v = zero_vec(n);
    v[static_cast<std::size_t>(k)] = 1;
    return v;
}

inline bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

inline void axpy(Vec& y, const Rational& a, const Vec& x) {
    for (std::size_t k = 0; k < y.size(); ++k) y[k] += a * x[k];
}

// Rank of a list of row vectors of length dim. Each row is scaled to integers
// and reduced by Bareiss elimination, so no fractions appear.
inline int rank(const std::vector<Vec>& rows, int dim) {
    std::vector<std::vector<mpz_class>> a;
    for (const auto& v : rows) {
        mpz_class l = 1;
        for (const auto& x : v) l = lcm(l, x.get_den());
        std::vector<mpz_class> row(static_cast<std::size_t>(dim));
        for (int k = 0; k < dim; ++k) row[k] = v[k].get_num() * (l / v[k].get_den());
        a.push_back(std::move(row));
    }
    const int m = static_cast<int>(a.size());
    int rk = 0;
    mpz_class prev = 1;
    for (int col = 0; col < dim && rk < m; ++col) {
        int piv = -1;
        for (int i = rk; i < m; ++i)
            if (sgn(a[i][col]) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rk]);
        for (int i = rk + 1; i < m; ++i) {
            for (int k = col + 1; k < dim; ++k) {
                a[i][k] = a[rk][col] * a[i][k] - a[i][col] * a[rk][k];
                mpz_divexact(a[i][k].get_mpz_t(), a[i][k].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[rk][col];
        ++rk;
    }
    return rk;
}

// A nonzero c with sum_k c_k v_k = 0, if the vectors are dependent.
inline std::optional<Vec> null_combination(const std::vector<Vec>& vs, int dim) {
    const int k = static_cast<int>(vs.size());
    // Rows are coordinates, columns are the vectors.
    std::vector<Vec> a(static_cast<std::size_t>(dim), zero_vec(k));
    for (int c = 0; c < k; ++c)
        for (int i = 0; i < dim; ++i) a[i][c] = vs[c][i];
    std::vector<int> pivcol;
    int row = 0;
    for (int c = 0; c < k && row < dim; ++c) {
        int piv = -1;
        for (int i = row; i < dim; ++i)
            if (sgn(a[i][c]) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[row]);
        const Rational inv = 1 / a[row][c];
        for (auto& x : a[row]) x *= inv;
        for (int i = 0; i < dim; ++i)
            if (i != row && sgn(a[i][c]) != 0) {
                const Rational f = a[i][c];
                axpy(a[i], -f, a[row]);
            }
        pivcol.push_back(c);
        ++row;
    }
    std::vector<char> is_piv(static_cast<std::size_t>(k), 0);
    for (int c : pivcol) is_piv[c] = 1;
    for (int f = 0; f < k; ++f) {
        if (is_piv[f]) continue;
        Vec c = zero_vec(k);
        c[f] = 1;
        for (std::size_t r = 0; r < pivcol.size(); ++r) c[pivcol[r]] = -a[r][f];
        return c;
    }
    return std::nullopt;
}

// Vector whose entries are polynomials in tau: coeffs[d] is the tau^d part.
struct PolyVec {
    std::vector<Vec> coeffs;

    static PolyVec constant(const Vec& v) { return PolyVec{{v}}; }
    int dim() const { return coeffs.empty() ? 0 : static_cast<int>(coeffs[0].size()); }

    void add(int degree, const Rational& a, const Vec& v) {
        while (static_cast<int>(coeffs.size()) <= degree) coeffs.push_back(zero_vec(static_cast<int>(v.size())));
        axpy(coeffs[degree], a, v);
    }
    void add(const Rational& a, const PolyVec& p) {
        for (int d = 0; d < static_cast<int>(p.coeffs.size()); ++d) add(d, a, p.coeffs[d]);
    }
    bool identically_zero() const {
        for (const auto& c : coeffs)
            if (!is_zero(c)) return false;
        return true;
    }
    Vec at(const Rational& tau) const {
        Vec out = zero_vec(dim());
        Rational pw = 1;
        for (const auto& c : coeffs) {
            axpy(out, pw, c);
            pw *= tau;
        }
        return out;
    }
};

// Basis of lim_{tau->0} span{v(tau)}. While the constant terms are dependent,
// a vanishing combination is divided by tau and replaces one member; each
// replacement lowers the tau-order of the Pluecker vector, so this ends.
inline std::vector<Vec> limit_at_zero(std::vector<PolyVec> gens, int dim) {
    for (int guard = 0; guard < 10000; ++guard) {
        std::erase_if(gens, [](const PolyVec& p) { return p.identically_zero(); });
        std::vector<Vec> g0;
        for (const auto& p : gens) g0.push_back(p.coeffs.empty() ? zero_vec(dim) : p.coeffs[0]);
        auto c = null_combination(g0, dim);
        if (!c) return g0;
        std::size_t pick = 0;
        while (sgn((*c)[pick]) == 0) ++pick;
        PolyVec comb;
        comb.coeffs.assign(1, zero_vec(dim));
        for (std::size_t k = 0; k < gens.size(); ++k)
            if (sgn((*c)[k]) != 0) comb.add((*c)[k], gens[k]);
        if (comb.identically_zero()) {
            gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(pick));
            continue;
        }
        comb.coeffs.erase(comb.coeffs.begin());  // constant term vanishes by construction
        gens[pick] = std::move(comb);
    }
    throw std::logic_error("limit computation did not terminate");
}

}  // namespace triflag

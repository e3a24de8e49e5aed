// Decorated matrices: delta and rbar tables, the decorated rank order, orbit
// enumeration and the full-flag dimension count.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"
#include "twoflags.hpp"

namespace triflag {

// delta(i,j) = 0 exactly when (i+1,j+1) lies below the decoration.
inline Table delta_table(const DecoratedMatrix& x) {
    const int q = x.q(), r = x.r();
    Table d(q, r);
    for (int i = 0; i <= q; ++i)
        for (int j = 0; j <= r; ++j) {
            const int below = pos_leq_set({i + 1, j + 1}, x.delta) ? 0 : 1;
            bool all_escape = true;
            for (Position p : x.delta)
                if (!(p.i <= i || p.j <= j)) all_escape = false;
            if ((below == 1) != all_escape) throw std::logic_error("delta characterizations disagree");
            d(i, j) = below;
        }
    return d;
}

struct RBarTable {
    Table values;
    Table delta_values;
    bool operator==(const RBarTable&) const = default;
};

inline RBarTable rbar_table(const DecoratedMatrix& x) {
    RBarTable t{rank_table(x.matrix), delta_table(x)};
    for (std::size_t k = 0; k < t.values.v.size(); ++k) t.values.v[k] += t.delta_values.v[k];
    return t;
}

inline bool rk_leq_dec(const DecoratedMatrix& x, const DecoratedMatrix& y) {
    require_same_shape(x.matrix, y.matrix);
    return table_geq(rank_table(x.matrix), rank_table(y.matrix)) && table_geq(rbar_table(x).values, rbar_table(y).values);
}

enum class Verdict { Less, Greater, Equal, Incomparable };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Less: return "<";
        case Verdict::Greater: return ">";
        case Verdict::Equal: return "=";
        case Verdict::Incomparable: return "incomparable";
    }
    return "?";
}

struct Witness {
    std::string table;  // "r" or "rbar"
    int i = 0, j = 0;
    int lhs = 0, rhs = 0;
};

struct Comparison {
    Verdict verdict = Verdict::Equal;
    std::optional<Witness> forward;   // first entry where lhs <= rhs fails, or a strict entry when "<"
    std::optional<Witness> backward;  // first entry where rhs <= lhs fails, or a strict entry when ">"
};

namespace detail {

// First entry (r before rbar, row-major) where pred(lhs, rhs) holds.
template <class Pred>
std::optional<Witness> first_entry(const Table& r1, const Table& rb1, const Table& r2, const Table& rb2, Pred pred) {
    for (int pass = 0; pass < 2; ++pass) {
        const Table& a = pass == 0 ? r1 : rb1;
        const Table& b = pass == 0 ? r2 : rb2;
        for (int i = 0; i <= a.q; ++i)
            for (int j = 0; j <= a.r; ++j)
                if (pred(a(i, j), b(i, j))) return Witness{pass == 0 ? "r" : "rbar", i, j, a(i, j), b(i, j)};
    }
    return std::nullopt;
}

}  // namespace detail

// Orientation: "<" means lhs is the more special orbit (larger rank numbers).
inline Comparison compare(const DecoratedMatrix& x, const DecoratedMatrix& y) {
    require_same_shape(x.matrix, y.matrix);
    const Table r1 = rank_table(x.matrix), r2 = rank_table(y.matrix);
    const Table b1 = rbar_table(x).values, b2 = rbar_table(y).values;
    Comparison out;
    auto fails_fwd = detail::first_entry(r1, b1, r2, b2, [](int a, int b) { return a < b; });
    auto fails_bwd = detail::first_entry(r1, b1, r2, b2, [](int a, int b) { return a > b; });
    if (!fails_fwd && !fails_bwd) {
        out.verdict = Verdict::Equal;
    } else if (!fails_fwd) {
        out.verdict = Verdict::Less;
        out.forward = fails_bwd;  // a strictly larger entry of lhs
    } else if (!fails_bwd) {
        out.verdict = Verdict::Greater;
        out.backward = fails_fwd;
    } else {
        out.verdict = Verdict::Incomparable;
        out.forward = fails_fwd;
        out.backward = fails_bwd;
    }
    return out;
}

// Inverse of (r, rbar): the matrix from second differences of r, the
// decoration as the maximal elements of {(i,j) : delta(i-1,j-1) = 0}.
inline std::optional<DecoratedMatrix> decode_tables(const Table& r, const Table& rbar) {
    if (r.q != rbar.q || r.r != rbar.r || r.q < 1 || r.r < 1) return std::nullopt;
    for (int i = 0; i <= r.q; ++i)
        if (r(i, 0) != 0) return std::nullopt;
    for (int j = 0; j <= r.r; ++j)
        if (r(0, j) != 0) return std::nullopt;
    DecoratedMatrix x{matrix_from_ranks(r), {}};
    if (validate(x.matrix)) return std::nullopt;
    PositionSet down;
    for (int i = 1; i <= r.q; ++i)
        for (int j = 1; j <= r.r; ++j) {
            const int d = rbar(i - 1, j - 1) - r(i - 1, j - 1);
            if (d != 0 && d != 1) return std::nullopt;
            if (d == 0) down.push_back({i, j});
        }
    if (down.empty()) return std::nullopt;
    x.delta = normalize_decoration(down);
    if (validate(x)) return std::nullopt;
    if (!(rbar_table(x).values == rbar)) return std::nullopt;
    return x;
}

// Every nonempty NE to SW staircase on the positive entries, sorted.
inline std::vector<Decoration> enumerate_decorations(const TransportMatrix& mat) {
    std::vector<Position> pos = support(mat);
    std::sort(pos.begin(), pos.end(), [](Position a, Position b) { return a.i != b.i ? a.i < b.i : a.j > b.j; });
    std::vector<Decoration> out;
    Decoration cur;
    auto extend = [&](auto&& self, std::size_t from) -> void {
        for (std::size_t k = from; k < pos.size(); ++k) {
            if (!cur.empty() && !(cur.back().i < pos[k].i && cur.back().j > pos[k].j)) continue;
            cur.push_back(pos[k]);
            out.push_back(cur);
            self(self, k + 1);
            cur.pop_back();
        }
    };
    extend(extend, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<DecoratedMatrix> enumerate_orbits(const Composition& b, const Composition& c) {
    std::vector<DecoratedMatrix> out;
    for (const auto& mat : enumerate_matrices(b, c))
        for (auto& d : enumerate_decorations(mat)) out.push_back({mat, std::move(d)});
    std::sort(out.begin(), out.end());
    return out;
}

inline int inversions(const std::vector<int>& w) {
    int inv = 0;
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b)
            if (w[a] > w[b]) ++inv;
    return inv;
}

// C(n,2) + (n-1) + l(w) - #{j : every k in dcols has k < j or w(k) < w(j)}.
inline int dimension_full_flags(const std::vector<int>& w, const std::vector<int>& dcols) {
    from_permutation(w, dcols);  // validates w and dcols
    const int n = static_cast<int>(w.size());
    int free_cols = 0;
    for (int j = 1; j <= n; ++j) {
        bool all = true;
        for (int k : dcols)
            if (!(k < j || w[k - 1] < w[j - 1])) all = false;
        if (all) ++free_cols;
    }
    return n * (n - 1) / 2 + (n - 1) + inversions(w) - free_cols;
}

inline int dimension_full_flags(const DecoratedMatrix& x) {
    if (!is_full_flag(x.matrix)) throw Error(ErrorCode::NotFullFlag, "dimension is only defined for full flags");
    std::vector<int> dcols;
    for (Position p : x.delta) dcols.push_back(p.j);
    return dimension_full_flags(permutation_of(x.matrix), dcols);
}

// Compact text form: '.' for zero, parentheses around decorated entries.
inline std::string show(const DecoratedMatrix& x) {
    std::string s;
    for (int i = 1; i <= x.q(); ++i) {
        if (i > 1) s += " / ";
        for (int j = 1; j <= x.r(); ++j) {
            if (j > 1) s += ' ';
            const int v = x.matrix.at(i, j);
            std::string cell = v == 0 ? std::string(".") : std::to_string(v);
            if (contains(x.delta, {i, j})) cell = "(" + cell + ")";
            s += cell;
        }
    }
    return s;
}

}  // namespace triflag

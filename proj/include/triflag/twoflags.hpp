// Two flags without a line: rank numbers, the rank order, simple rectangle
// moves and the constructive progress move.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "core.hpp"
#include "order.hpp"

namespace triflag {

// Integer table over the bordered index range [0,q] x [0,r].
struct Table {
    int q = 0;
    int r = 0;
    std::vector<int> v;

    Table() = default;
    Table(int q_, int r_, int fill = 0) : q(q_), r(r_), v(static_cast<std::size_t>((q_ + 1) * (r_ + 1)), fill) {}

    int& operator()(int i, int j) { return v[static_cast<std::size_t>(i * (r + 1) + j)]; }
    int operator()(int i, int j) const { return v[static_cast<std::size_t>(i * (r + 1) + j)]; }
    bool operator==(const Table&) const = default;
};

using RankTable = Table;

inline RankTable rank_table(const TransportMatrix& mat) {
    RankTable t(mat.q(), mat.r());
    for (int i = 1; i <= mat.q(); ++i)
        for (int j = 1; j <= mat.r(); ++j) t(i, j) = mat.at(i, j) + t(i - 1, j) + t(i, j - 1) - t(i - 1, j - 1);
    return t;
}

// Second differences of a rank table; margins read off the last row/column.
inline TransportMatrix matrix_from_ranks(const RankTable& t) {
    Composition b(t.q), c(t.r);
    for (int i = 1; i <= t.q; ++i) b[i - 1] = t(i, t.r) - t(i - 1, t.r);
    for (int j = 1; j <= t.r; ++j) c[j - 1] = t(t.q, j) - t(t.q, j - 1);
    TransportMatrix mat = zero_matrix(b, c);
    for (int i = 1; i <= t.q; ++i)
        for (int j = 1; j <= t.r; ++j) mat.at(i, j) = t(i, j) - t(i - 1, j) - t(i, j - 1) + t(i - 1, j - 1);
    return mat;
}

inline bool table_geq(const Table& x, const Table& y) {
    for (std::size_t k = 0; k < x.v.size(); ++k)
        if (x.v[k] < y.v[k]) return false;
    return true;
}

inline bool rk_leq(const TransportMatrix& x, const TransportMatrix& y) {
    require_same_shape(x, y);
    return table_geq(rank_table(x), rank_table(y));
}

struct Rectangle {
    int i0 = 0, i1 = 0, j0 = 0, j1 = 0;
    auto operator<=>(const Rectangle&) const = default;
};

inline TransportMatrix rectangle_move(const TransportMatrix& mat, const Rectangle& R) {
    TransportMatrix out = mat;
    out.at(R.i0, R.j0) -= 1;
    out.at(R.i1, R.j1) -= 1;
    out.at(R.i0, R.j1) += 1;
    out.at(R.i1, R.j0) += 1;
    return out;
}

// Corners positive, everything else in R zero except the two off-corners.
inline bool rectangle_move_applies(const TransportMatrix& mat, const Rectangle& R) {
    if (!(R.i0 < R.i1 && R.j0 < R.j1)) return false;
    if (mat.at(R.i0, R.j0) == 0 || mat.at(R.i1, R.j1) == 0) return false;
    for (int i = R.i0; i <= R.i1; ++i)
        for (int j = R.j0; j <= R.j1; ++j) {
            bool corner = (i == R.i0 || i == R.i1) && (j == R.j0 || j == R.j1);
            if (!corner && mat.at(i, j) != 0) return false;
        }
    return true;
}

struct SimpleMove {
    Rectangle rect;
    TransportMatrix result;
};

// Row-major in (i0,j0), then in (i1,j1).
inline std::vector<SimpleMove> simple_moves(const TransportMatrix& mat) {
    std::vector<SimpleMove> out;
    for (int i0 = 1; i0 <= mat.q(); ++i0)
        for (int j0 = 1; j0 <= mat.r(); ++j0)
            for (int i1 = i0 + 1; i1 <= mat.q(); ++i1)
                for (int j1 = j0 + 1; j1 <= mat.r(); ++j1) {
                    Rectangle R{i0, i1, j0, j1};
                    if (rectangle_move_applies(mat, R)) out.push_back({R, rectangle_move(mat, R)});
                }
    return out;
}

// One simple move from x that stays rank-below y, following the
// lexicographically-first-difference construction. Ties in the maximal
// rectangle are broken by growing rows first, then columns.
inline SimpleMove progress_move(const TransportMatrix& x, const TransportMatrix& y) {
    require_same_shape(x, y);
    const RankTable r = rank_table(x), rp = rank_table(y);
    if (x == y || !table_geq(r, rp)) throw Error(ErrorCode::NotStrictlyLess, "progress_move needs x strictly below y");
    int k0 = 0, l0 = 0;
    for (int i = 1; i <= x.q() && k0 == 0; ++i)
        for (int j = 1; j <= x.r(); ++j)
            if (x.at(i, j) != y.at(i, j)) {
                k0 = i;
                l0 = j;
                break;
            }
    int last_row = k0;
    while (last_row + 1 <= x.q() && r(last_row + 1, l0) > rp(last_row + 1, l0)) ++last_row;
    int last_col = l0;
    auto column_strict = [&](int j) {
        for (int i = k0; i <= last_row; ++i)
            if (r(i, j) <= rp(i, j)) return false;
        return true;
    };
    while (last_col + 1 <= x.r() && column_strict(last_col + 1)) ++last_col;
    const int k1 = last_row + 1, l1 = last_col + 1;

    // The lexicographically first positive entry of the shifted block is <=-minimal.
    int i1 = 0, j1 = 0;
    for (int i = k0 + 1; i <= k1 && i1 == 0; ++i)
        for (int j = l0 + 1; j <= l1; ++j)
            if (x.at(i, j) > 0) {
                i1 = i;
                j1 = j;
                break;
            }
    if (i1 == 0) throw Error(ErrorCode::NotStrictlyLess, "rank tables are inconsistent with the margins");

    // Slide the NW corner right along row k0 if possible, otherwise down column l0.
    int i0 = k0, j0 = l0;
    for (int j = j1 - 1; j > l0; --j)
        if (x.at(k0, j) > 0) {
            j0 = j;
            break;
        }
    if (j0 == l0)
        for (int i = i1 - 1; i > k0; --i)
            if (x.at(i, l0) > 0) {
                i0 = i;
                break;
            }
    Rectangle R{i0, i1, j0, j1};
    if (!rectangle_move_applies(x, R)) throw Error(ErrorCode::PreconditionFailed, "progress rectangle is not a simple move");
    return {R, rectangle_move(x, R)};
}

// All transport matrices with margins (b,c), sorted canonically.
inline std::vector<TransportMatrix> enumerate_matrices(const Composition& b, const Composition& c) {
    std::vector<TransportMatrix> out;
    if (total(b) != total(c)) return out;
    TransportMatrix cur = zero_matrix(b, c);
    std::vector<int> colleft = c;
    const int q = static_cast<int>(b.size()), r = static_cast<int>(c.size());
    auto fill = [&](auto&& self, int i, int j, int rowleft) -> void {
        if (i == q) {
            out.push_back(cur);
            return;
        }
        if (j == r - 1) {
            if (rowleft > colleft[j]) return;
            cur.m[i][j] = rowleft;
            colleft[j] -= rowleft;
            if (i + 1 < q) self(self, i + 1, 0, b[i + 1]);
            else self(self, q, 0, 0);
            colleft[j] += rowleft;
            cur.m[i][j] = 0;
            return;
        }
        for (int v = 0; v <= std::min(rowleft, colleft[j]); ++v) {
            cur.m[i][j] = v;
            colleft[j] -= v;
            self(self, i, j + 1, rowleft - v);
            colleft[j] += v;
        }
        cur.m[i][j] = 0;
    };
    fill(fill, 0, 0, b[0]);
    std::sort(out.begin(), out.end());
    return out;
}

struct TwoFlagReport {
    int elements = 0;
    int covers = 0;          // edges of the transitive reduction of the rank order
    int move_edges = 0;      // distinct (M, M') pairs joined by one simple move
    bool reachability_matches = false;
    bool moves_are_covers = false;
    std::vector<std::string> failures;
    bool ok() const { return reachability_matches && moves_are_covers && failures.empty(); }
};

inline std::string show(const TransportMatrix& mat) {
    std::string s;
    for (int i = 1; i <= mat.q(); ++i) {
        if (i > 1) s += " / ";
        for (int j = 1; j <= mat.r(); ++j) {
            if (j > 1) s += ' ';
            s += mat.at(i, j) == 0 ? std::string(".") : std::to_string(mat.at(i, j));
        }
    }
    return s;
}

// Brute-force check that simple-move reachability equals the rank order and
// that each simple move is a cover.
inline TwoFlagReport verify_two_flag_theorem(const Composition& b, const Composition& c) {
    TwoFlagReport rep;
    const auto mats = enumerate_matrices(b, c);
    const int n = static_cast<int>(mats.size());
    rep.elements = n;
    std::map<TransportMatrix, int> index;
    std::vector<RankTable> ranks;
    for (int k = 0; k < n; ++k) {
        index[mats[k]] = k;
        ranks.push_back(rank_table(mats[k]));
    }
    std::vector<Edge> edges;
    for (int k = 0; k < n; ++k)
        for (const auto& mv : simple_moves(mats[k])) edges.emplace_back(k, index.at(mv.result));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    rep.move_edges = static_cast<int>(edges.size());

    const Relation strict = strict_from(n, [&](int a, int x) { return table_geq(ranks[a], ranks[x]); });
    const auto covers = cover_edges(strict);
    rep.covers = static_cast<int>(covers.size());
    rep.reachability_matches = reachability(n, edges) == strict;
    if (!rep.reachability_matches) rep.failures.push_back("simple-move reachability differs from the rank order");
    rep.moves_are_covers = edges == covers;
    if (!rep.moves_are_covers) {
        for (auto e : edges)
            if (!std::binary_search(covers.begin(), covers.end(), e))
                rep.failures.push_back("move " + show(mats[e.first]) + " -> " + show(mats[e.second]) + " is not a cover");
        for (auto e : covers)
            if (!std::binary_search(edges.begin(), edges.end(), e))
                rep.failures.push_back("cover " + show(mats[e.first]) + " -> " + show(mats[e.second]) + " is not a move");
    }
    return rep;
}

}  // namespace triflag

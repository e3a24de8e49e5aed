// The simple moves on decorated matrices, the move poset, cover verification
// and chain construction.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "decorated.hpp"
#include "order.hpp"
#include "twoflags.hpp"

namespace triflag {

enum class MoveKind { I, II, IIIa, IIIb, IVa, IVb, IVc, V };

inline const char* to_string(MoveKind k) {
    switch (k) {
        case MoveKind::I: return "I";
        case MoveKind::II: return "II";
        case MoveKind::IIIa: return "IIIa";
        case MoveKind::IIIb: return "IIIb";
        case MoveKind::IVa: return "IVa";
        case MoveKind::IVb: return "IVb";
        case MoveKind::IVc: return "IVc";
        case MoveKind::V: return "V";
    }
    return "?";
}

inline std::optional<MoveKind> move_kind_from_string(const std::string& s) {
    for (MoveKind k : {MoveKind::I, MoveKind::II, MoveKind::IIIa, MoveKind::IIIb, MoveKind::IVa, MoveKind::IVb,
                       MoveKind::IVc, MoveKind::V})
        if (s == to_string(k)) return k;
    return std::nullopt;
}

// Anchors by kind:
//   I            (i1,j1)
//   II, IIIa/b   (i0,j0), (i1,j1)
//   IVa          (i0,j0), (i1,j1), (i2,j2) with (i2,j2) decorated, i0<i2<i1, j2<j0
//   IVb          (i0,j0), (i1,j1), (i2,j0)
//   IVc          (i0,j0), (i1,j1), (i0,j2)
//   V            (i0,j0), then the chain (i1,j1) ... (it,jt)
struct Move {
    MoveKind kind = MoveKind::I;
    std::vector<Position> anchors;
    auto operator<=>(const Move&) const = default;
};

inline std::string show(const Move& mv) {
    std::string s = to_string(mv.kind);
    for (Position p : mv.anchors) s += " (" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
    return s;
}

struct AppliedMove {
    Move move;
    DecoratedMatrix result;
};

namespace detail {

struct MoveContext {
    const DecoratedMatrix& x;
    int m(Position p) const { return x.matrix.at(p); }
    bool in_delta(Position p) const { return contains(x.delta, p); }
    bool below_delta(Position p) const { return pos_leq_set(p, x.delta); }

    // m vanishes on every grid position satisfying pred.
    bool zero_where(const std::function<bool(Position)>& pred) const {
        for (int i = 1; i <= x.q(); ++i)
            for (int j = 1; j <= x.r(); ++j)
                if (pred({i, j}) && x.matrix.at(i, j) != 0) return false;
        return true;
    }
    // m vanishes strictly inside p0 < y < p1 except at the listed positions.
    bool inner_zero_except(Position p0, Position p1, std::initializer_list<Position> allowed) const {
        return zero_where([&](Position y) {
            if (!(pos_lt(p0, y) && pos_lt(y, p1))) return false;
            for (Position a : allowed)
                if (y == a) return false;
            return true;
        });
    }
};

inline std::optional<std::string> fail(const std::string& why) { return why; }

// Index of the chain's first element in the decoration, or -1 if the chain
// is not a consecutive run of it.
inline int chain_start(const Decoration& delta, const std::vector<Position>& chain) {
    for (std::size_t a = 0; a + chain.size() <= delta.size(); ++a)
        if (std::equal(chain.begin(), chain.end(), delta.begin() + static_cast<std::ptrdiff_t>(a))) return static_cast<int>(a);
    return -1;
}

}  // namespace detail

// First violated condition of the move at its anchors, or nullopt if it applies.
inline std::optional<std::string> move_violation(const DecoratedMatrix& x, const Move& mv) {
    using detail::fail;
    const detail::MoveContext ctx{x};
    const auto& a = mv.anchors;
    auto in_grid = [&](Position p) { return p.i >= 1 && p.i <= x.q() && p.j >= 1 && p.j <= x.r(); };
    for (Position p : a)
        if (!in_grid(p)) return fail("anchor outside the matrix");

    if (mv.kind == MoveKind::I) {
        if (a.size() != 1) return fail("move I takes one anchor");
        const Position p1 = a[0];
        if (ctx.below_delta(p1)) return fail("(i1,j1) must not lie below the decoration");
        if (ctx.m(p1) == 0) return fail("m(i1,j1) must be positive");
        if (!ctx.zero_where([&](Position y) { return pos_lt(y, p1) && !ctx.below_delta(y); }))
            return fail("positions below (i1,j1) and outside the decoration must be zero");
        return std::nullopt;
    }

    if (mv.kind == MoveKind::V) {
        if (a.size() < 2) return fail("move V takes (i0,j0) and a nonempty chain");
        const Position p0 = a[0];
        const std::vector<Position> chain(a.begin() + 1, a.end());
        if (ctx.m(p0) == 0) return fail("m(i0,j0) must be positive");
        const int start = detail::chain_start(x.delta, chain);
        if (start < 0) return fail("chain must be consecutive decoration entries");
        for (Position c : chain)
            if (!(c.i > p0.i && c.j > p0.j)) return fail("chain entries must lie strictly SE of (i0,j0)");
        if (!ctx.zero_where([&](Position y) {
                if (!pos_lt(p0, y)) return false;
                for (Position c : chain)
                    if (pos_leq(y, {c.i - 1, c.j - 1})) return true;
                return false;
            }))
            return fail("region between (i0,j0) and the chain must be zero");
        const int last = start + static_cast<int>(chain.size()) - 1;
        // A neighbouring decoration entry must not reabsorb a new circle.
        if (last + 1 < static_cast<int>(x.delta.size())) {
            const Position nxt = x.delta[static_cast<std::size_t>(last + 1)];
            for (int j = p0.j + 1; j <= nxt.j; ++j)
                if (ctx.m({chain.back().i, j}) != 0) return fail("row of (it,jt) must be zero up to the next circle");
        }
        if (start > 0) {
            const Position prv = x.delta[static_cast<std::size_t>(start - 1)];
            for (int i = p0.i + 1; i <= prv.i; ++i)
                if (ctx.m({i, chain.front().j}) != 0) return fail("column of (i1,j1) must be zero up to the previous circle");
        }
        return std::nullopt;
    }

    if (a.size() < 2) return fail("move needs (i0,j0) and (i1,j1)");
    const Position p0 = a[0], p1 = a[1];
    const Position ne{p0.i, p1.j}, sw{p1.i, p0.j};
    if (!(p0.i < p1.i && p0.j < p1.j)) return fail("(i0,j0) must be strictly NW of (i1,j1)");
    if (ctx.m(p0) == 0 || ctx.m(p1) == 0) return fail("corner entries must be positive");

    switch (mv.kind) {
        case MoveKind::II:
            if (a.size() != 2) return fail("move II takes two anchors");
            if (!ctx.inner_zero_except(p0, p1, {ne, sw})) return fail("rectangle interior must be zero");
            if (ctx.in_delta(p1)) return fail("(i1,j1) must not be circled");
            if (ctx.in_delta(p0) && ctx.m(p0) == 1) return fail("circled (i0,j0) needs multiplicity above 1");
            if (ctx.in_delta(ne) && ctx.in_delta(sw)) return fail("off-corners may not both be circled");
            if (!ctx.below_delta(p1) && ctx.below_delta(ne) && ctx.below_delta(sw))
                return fail("off-corners below the decoration with (i1,j1) outside it do not give a cover");
            return std::nullopt;
        case MoveKind::IIIa:
        case MoveKind::IIIb: {
            if (a.size() != 2) return fail("move III takes two anchors");
            if (!ctx.in_delta(p0) || ctx.m(p0) != 1) return fail("(i0,j0) must be circled with multiplicity 1");
            const bool ta = mv.kind == MoveKind::IIIa;
            const Position keep = ta ? sw : ne, target = ta ? ne : sw;
            if (!ctx.inner_zero_except(p0, p1, {keep})) return fail("rectangle interior must be zero");
            if (!ctx.zero_where([&](Position y) { return pos_leq(y, target) && !ctx.below_delta(y); }))
                return fail("uncircled region below the new circle must be zero");
            return std::nullopt;
        }
        case MoveKind::IVb:
        case MoveKind::IVc: {
            if (a.size() != 3) return fail("move IV takes three anchors");
            const Position p2 = a[2];
            const bool tb = mv.kind == MoveKind::IVb;
            if (tb ? !(p2.j == p0.j && p0.i < p2.i && p2.i < p1.i) : !(p2.i == p0.i && p0.j < p2.j && p2.j < p1.j))
                return fail("third anchor misplaced");
            if (!ctx.in_delta(p2) || ctx.m(p2) != 1) return fail("third anchor must be circled with multiplicity 1");
            if (ctx.below_delta(tb ? ne : sw)) return fail("free off-corner must not lie below the decoration");
            if (!ctx.inner_zero_except(p0, p1, {ne, sw, p2})) return fail("rectangle interior must be zero");
            return std::nullopt;
        }
        case MoveKind::IVa: {
            if (a.size() != 3) return fail("move IVa takes three anchors");
            const Position p2 = a[2];
            if (!(p0.i < p2.i && p2.i < p1.i && p2.j < p0.j)) return fail("(i2,j2) misplaced");
            if (!ctx.in_delta(p0) || ctx.m(p0) != 1) return fail("(i0,j0) must be circled with multiplicity 1");
            if (!ctx.in_delta(p2) || ctx.m(p2) != 1) return fail("(i2,j2) must be circled with multiplicity 1");
            const Position corner{p0.i, p2.j}, b1{p1.i, p2.j};
            if (!ctx.zero_where([&](Position y) {
                    return pos_lt(corner, y) && pos_lt(y, p1) && !ctx.below_delta(y) && y != ne && y != b1;
                }))
                return fail("uncircled region of the rectangle must be zero");
            return std::nullopt;
        }
        default: break;
    }
    return fail("unknown move kind");
}

// The move's formulas for (M', Delta'). Preconditions are not checked here.
inline DecoratedMatrix move_target(const DecoratedMatrix& x, const Move& mv) {
    DecoratedMatrix y = x;
    auto& M = y.matrix;
    const auto& a = mv.anchors;
    auto with = [&](std::initializer_list<Position> extra) {
        PositionSet s = x.delta;
        s.insert(s.end(), extra);
        return normalize_decoration(s);
    };
    switch (mv.kind) {
        case MoveKind::I: y.delta = with({a[0]}); break;
        case MoveKind::II:
        case MoveKind::IVb:
        case MoveKind::IVc:
            M = rectangle_move(M, {a[0].i, a[1].i, a[0].j, a[1].j});
            break;
        case MoveKind::IIIa:
            M = rectangle_move(M, {a[0].i, a[1].i, a[0].j, a[1].j});
            y.delta = with({{a[0].i, a[1].j}});
            break;
        case MoveKind::IIIb:
            M = rectangle_move(M, {a[0].i, a[1].i, a[0].j, a[1].j});
            y.delta = with({{a[1].i, a[0].j}});
            break;
        case MoveKind::IVa: {
            const Position p0 = a[0], p1 = a[1], p2 = a[2];
            M.at(p0) -= 1;
            M.at(p1) -= 1;
            M.at(p2) -= 1;
            M.at(p1.i, p2.j) += 1;
            M.at(p2.i, p0.j) += 1;
            M.at(p0.i, p1.j) += 1;
            y.delta = with({{p2.i, p0.j}});
            break;
        }
        case MoveKind::V: {
            const Position p0 = a[0];
            const std::vector<Position> chain(a.begin() + 1, a.end());
            M.at(p0) -= 1;
            for (Position c : chain) M.at(c) -= 1;
            M.at(p0.i, chain.front().j) += 1;
            M.at(chain.back().i, p0.j) += 1;
            for (std::size_t s = 0; s + 1 < chain.size(); ++s) M.at(chain[s].i, chain[s + 1].j) += 1;
            PositionSet s;
            for (Position d : x.delta)
                if (!contains(chain, d)) s.push_back(d);
            s.push_back({p0.i, chain.front().j});
            s.push_back({chain.back().i, p0.j});
            y.delta = normalize_decoration(s);
            break;
        }
    }
    return y;
}

inline DecoratedMatrix apply_move(const DecoratedMatrix& x, const Move& mv) {
    require_valid(x);
    if (auto why = move_violation(x, mv))
        throw Error(ErrorCode::PreconditionFailed, std::string(to_string(mv.kind)) + ": " + *why);
    DecoratedMatrix y = move_target(x, mv);
    if (auto v = validate(y)) throw std::logic_error("move produced an invalid element: " + v->message);
    return y;
}

// Candidate anchor lists; move_violation does the filtering.
inline std::vector<Move> candidate_moves(const DecoratedMatrix& x) {
    std::vector<Move> out;
    const int q = x.q(), r = x.r();
    for (int i = 1; i <= q; ++i)
        for (int j = 1; j <= r; ++j) out.push_back({MoveKind::I, {{i, j}}});
    for (int i0 = 1; i0 <= q; ++i0)
        for (int j0 = 1; j0 <= r; ++j0)
            for (int i1 = i0 + 1; i1 <= q; ++i1)
                for (int j1 = j0 + 1; j1 <= r; ++j1) {
                    const Position p0{i0, j0}, p1{i1, j1};
                    for (MoveKind k : {MoveKind::II, MoveKind::IIIa, MoveKind::IIIb}) out.push_back({k, {p0, p1}});
                    for (int i2 = i0 + 1; i2 < i1; ++i2) out.push_back({MoveKind::IVb, {p0, p1, {i2, j0}}});
                    for (int j2 = j0 + 1; j2 < j1; ++j2) out.push_back({MoveKind::IVc, {p0, p1, {i0, j2}}});
                    for (Position p2 : x.delta)
                        if (i0 < p2.i && p2.i < i1 && p2.j < j0) out.push_back({MoveKind::IVa, {p0, p1, p2}});
                }
    const std::size_t t = x.delta.size();
    for (int i0 = 1; i0 <= q; ++i0)
        for (int j0 = 1; j0 <= r; ++j0)
            for (std::size_t s = 0; s < t; ++s)
                for (std::size_t e = s; e < t; ++e) {
                    Move mv{MoveKind::V, {{i0, j0}}};
                    mv.anchors.insert(mv.anchors.end(), x.delta.begin() + static_cast<std::ptrdiff_t>(s),
                                      x.delta.begin() + static_cast<std::ptrdiff_t>(e + 1));
                    out.push_back(std::move(mv));
                }
    return out;
}

inline std::vector<AppliedMove> applicable_moves(const DecoratedMatrix& x) {
    std::vector<AppliedMove> out;
    for (auto& mv : candidate_moves(x))
        if (!move_violation(x, mv)) {
            DecoratedMatrix y = move_target(x, mv);
            if (auto v = validate(y)) throw std::logic_error("move produced an invalid element: " + v->message);
            out.push_back({std::move(mv), std::move(y)});
        }
    std::sort(out.begin(), out.end(), [](const AppliedMove& u, const AppliedMove& v) { return u.move < v.move; });
    return out;
}

struct CoverEdge {
    int from = 0;
    int to = 0;
    Move move;  // canonically smallest move realizing the edge
};

struct Poset {
    Composition b, c;
    std::vector<DecoratedMatrix> elements;
    std::vector<CoverEdge> covers;
    std::map<DecoratedMatrix, int> index;
    std::vector<std::vector<AppliedMove>> moves;  // per element, all move records

    int id(const DecoratedMatrix& x) const {
        auto it = index.find(x);
        return it == index.end() ? -1 : it->second;
    }
    std::vector<Edge> edge_list() const {
        std::vector<Edge> e;
        for (const auto& c : covers) e.emplace_back(c.from, c.to);
        return e;
    }
};

// Elements are the enumerated orbits, edges the distinct single-move relations.
inline Poset build_poset(const Composition& b, const Composition& c) {
    Poset P{b, c, enumerate_orbits(b, c), {}, {}, {}};
    for (int k = 0; k < static_cast<int>(P.elements.size()); ++k) P.index[P.elements[k]] = k;
    P.moves.resize(P.elements.size());
    std::map<Edge, Move> edges;
    for (int k = 0; k < static_cast<int>(P.elements.size()); ++k) {
        P.moves[k] = applicable_moves(P.elements[k]);
        for (const auto& am : P.moves[k]) {
            const Edge e{k, P.index.at(am.result)};
            auto it = edges.find(e);
            if (it == edges.end() || am.move < it->second) edges[e] = am.move;
        }
    }
    for (auto& [e, mv] : edges) P.covers.push_back({e.first, e.second, mv});
    return P;
}

// Greedy chain of moves from x to y: at each step take the canonically
// smallest move whose result stays below y.
inline std::vector<Move> find_chain(const DecoratedMatrix& x, const DecoratedMatrix& y,
                                    const std::function<std::vector<AppliedMove>(const DecoratedMatrix&)>& moves_of = applicable_moves) {
    require_same_shape(x.matrix, y.matrix);
    if (!rk_leq_dec(x, y)) throw Error(ErrorCode::NotComparable, "source is not below target");
    std::vector<Move> chain;
    DecoratedMatrix cur = x;
    while (!(cur == y)) {
        bool stepped = false;
        for (const auto& am : moves_of(cur))
            if (rk_leq_dec(am.result, y)) {
                chain.push_back(am.move);
                cur = am.result;
                stepped = true;
                break;
            }
        if (!stepped) throw std::logic_error("no move makes progress toward the target from " + show(cur));
    }
    return chain;
}

struct EquivalenceReport {
    int elements = 0;
    int rank_covers = 0;       // transitive reduction of the decorated rank order
    int move_edges = 0;        // distinct single-move relations
    long comparable_pairs = 0;
    long chains_checked = 0;
    bool reachability_matches = false;
    bool moves_are_covers = false;
    bool covers_are_moves = false;
    bool chains_ok = false;
    std::vector<std::string> failures;
    bool ok() const {
        return reachability_matches && moves_are_covers && covers_are_moves && chains_ok && failures.empty();
    }
};

inline EquivalenceReport verify_equivalence(const Poset& P) {
    EquivalenceReport rep;
    const int n = static_cast<int>(P.elements.size());
    rep.elements = n;
    std::vector<Table> r, rb;
    for (const auto& e : P.elements) {
        r.push_back(rank_table(e.matrix));
        rb.push_back(rbar_table(e).values);
    }
    const Relation strict = strict_from(n, [&](int a, int b) { return table_geq(r[a], r[b]) && table_geq(rb[a], rb[b]); });
    const auto covers = cover_edges(strict);
    const auto edges = P.edge_list();
    rep.rank_covers = static_cast<int>(covers.size());
    rep.move_edges = static_cast<int>(edges.size());
    rep.reachability_matches = reachability(n, edges) == strict;
    if (!rep.reachability_matches) rep.failures.push_back("move reachability differs from the rank order");
    rep.moves_are_covers = true;
    for (auto e : edges)
        if (!std::binary_search(covers.begin(), covers.end(), e)) {
            rep.moves_are_covers = false;
            rep.failures.push_back("move edge " + show(P.elements[e.first]) + " -> " + show(P.elements[e.second]) +
                                   " has an intermediate element");
        }
    rep.covers_are_moves = true;
    for (auto e : covers)
        if (!std::binary_search(edges.begin(), edges.end(), e)) {
            rep.covers_are_moves = false;
            rep.failures.push_back("cover " + show(P.elements[e.first]) + " -> " + show(P.elements[e.second]) +
                                   " is not a single move");
        }

    auto cached = [&](const DecoratedMatrix& x) -> std::vector<AppliedMove> { return P.moves[P.index.at(x)]; };
    rep.chains_ok = true;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a != b && !strict.get(a, b)) continue;
            if (a != b) ++rep.comparable_pairs;
            try {
                DecoratedMatrix cur = P.elements[a];
                for (const auto& mv : find_chain(cur, P.elements[b], cached)) {
                    cur = apply_move(cur, mv);
                    if (!rk_leq_dec(cur, P.elements[b])) throw std::logic_error("chain overshoots the target");
                }
                if (!(cur == P.elements[b])) throw std::logic_error("chain does not end at the target");
                ++rep.chains_checked;
            } catch (const std::exception& ex) {
                rep.chains_ok = false;
                rep.failures.push_back("chain " + show(P.elements[a]) + " -> " + show(P.elements[b]) + ": " + ex.what());
            }
        }
    return rep;
}

inline EquivalenceReport verify_equivalence(const Composition& b, const Composition& c) {
    return verify_equivalence(build_poset(b, c));
}

}  // namespace triflag

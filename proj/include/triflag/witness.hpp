// Explicit subspace configurations with rational coordinates: geometric rank
// tables, orbit identification, uncircling, and one-parameter degeneration
// families realizing each move.
#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "core.hpp"
#include "decorated.hpp"
#include "exact.hpp"
#include "moves.hpp"
#include "twoflags.hpp"

namespace triflag {

// A line A and flags B_1 < ... < B_q, C_1 < ... < C_r in Q^n, each given by
// generators; the generators of B_{i-1} are a prefix of those of B_i.
struct Configuration {
    int n = 0;
    std::vector<Vec> A;
    std::vector<std::vector<Vec>> B;
    std::vector<std::vector<Vec>> C;
};

// Coordinates e_{ijk}, k <= m_ij, numbered in (i,j,k) order.
class BasisIndex {
public:
    explicit BasisIndex(const TransportMatrix& mat) : n_(0) {
        for (int i = 1; i <= mat.q(); ++i)
            for (int j = 1; j <= mat.r(); ++j)
                for (int k = 1; k <= mat.at(i, j); ++k) idx_[{i, j, k}] = n_++;
    }
    int dim() const { return n_; }
    int operator()(Position p, int k) const {
        auto it = idx_.find({p.i, p.j, k});
        if (it == idx_.end()) throw std::out_of_range("no basis vector at this index");
        return it->second;
    }
    Vec e(Position p, int k) const { return unit_vec(n_, (*this)(p, k)); }

private:
    int n_;
    std::map<std::tuple<int, int, int>, int> idx_;
};

// Vectors attached to the slots (i,j,k), k <= m_ij, of a transport matrix,
// arranged into flags: B_i from rows <= i, C_j from columns <= j, A from the
// sum of the k = 1 slots over a position set.
template <class V>
struct SlotVectors {
    TransportMatrix shape;
    std::map<std::tuple<int, int, int>, V> v;

    const V& at(Position p, int k) const { return v.at({p.i, p.j, k}); }
};

namespace detail {

template <class V>
void arrange_flags(const SlotVectors<V>& s, std::vector<std::vector<V>>& B, std::vector<std::vector<V>>& C) {
    const auto& M = s.shape;
    B.assign(M.q(), {});
    C.assign(M.r(), {});
    for (int top = 1; top <= M.q(); ++top)
        for (int i = 1; i <= top; ++i)
            for (int j = 1; j <= M.r(); ++j)
                for (int k = 1; k <= M.at(i, j); ++k) B[top - 1].push_back(s.at({i, j}, k));
    for (int top = 1; top <= M.r(); ++top)
        for (int j = 1; j <= top; ++j)
            for (int i = 1; i <= M.q(); ++i)
                for (int k = 1; k <= M.at(i, j); ++k) C[top - 1].push_back(s.at({i, j}, k));
}

}  // namespace detail

inline Configuration standard_configuration(const TransportMatrix& mat, const PositionSet& s) {
    if (auto v = validate(mat)) throw Error(v->code, v->message);
    if (s.empty()) throw Error(ErrorCode::EmptyInput, "line needs a nonempty position set");
    for (Position p : s)
        if (p.i < 1 || p.i > mat.q() || p.j < 1 || p.j > mat.r() || mat.at(p) == 0)
            throw Error(ErrorCode::ZeroEntryPosition, "line position (" + std::to_string(p.i) + "," +
                                                          std::to_string(p.j) + ") is not a positive entry");
    const BasisIndex e(mat);
    SlotVectors<Vec> slots{mat, {}};
    for (int i = 1; i <= mat.q(); ++i)
        for (int j = 1; j <= mat.r(); ++j)
            for (int k = 1; k <= mat.at(i, j); ++k) slots.v[{i, j, k}] = e.e({i, j}, k);
    Configuration X;
    X.n = e.dim();
    detail::arrange_flags<Vec>(slots, X.B, X.C);
    Vec a = zero_vec(X.n);
    for (Position p : s) axpy(a, 1, e.e(p, 1));
    X.A = {a};
    return X;
}

inline Configuration standard_configuration(const DecoratedMatrix& x) {
    return standard_configuration(x.matrix, x.delta);
}

namespace detail {

inline std::vector<Vec> concat(std::initializer_list<const std::vector<Vec>*> parts) {
    std::vector<Vec> out;
    for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
    return out;
}

}  // namespace detail

struct GeometricTables {
    RankTable r;
    RBarTable rbar;
};

// r_ij = dim(B_i cap C_j) and rbar_ij = r_ij + dim(A cap (B_i + C_j)),
// with B_0 = C_0 = 0.
inline GeometricTables geometric_rank_tables(const Configuration& X) {
    const int q = static_cast<int>(X.B.size()), r = static_cast<int>(X.C.size());
    const std::vector<Vec> none;
    auto Bi = [&](int i) -> const std::vector<Vec>& { return i == 0 ? none : X.B[i - 1]; };
    auto Cj = [&](int j) -> const std::vector<Vec>& { return j == 0 ? none : X.C[j - 1]; };
    const int dimA = rank(X.A, X.n);
    GeometricTables t{Table(q, r), {Table(q, r), Table(q, r)}};
    for (int i = 0; i <= q; ++i)
        for (int j = 0; j <= r; ++j) {
            const int dB = rank(Bi(i), X.n), dC = rank(Cj(j), X.n);
            const int dBC = rank(detail::concat({&Bi(i), &Cj(j)}), X.n);
            const int dABC = rank(detail::concat({&X.A, &Bi(i), &Cj(j)}), X.n);
            t.r(i, j) = dB + dC - dBC;
            t.rbar.delta_values(i, j) = dimA + dBC - dABC;
            t.rbar.values(i, j) = t.r(i, j) + t.rbar.delta_values(i, j);
        }
    return t;
}

// Kernel dimension of B_i x C_j -> V/A, (u, w) -> u + w mod A.
inline int kernel_dimension(const Configuration& X, int i, int j) {
    const std::vector<Vec> none;
    const auto& Bi = i == 0 ? none : X.B[i - 1];
    const auto& Cj = j == 0 ? none : X.C[j - 1];
    const int image = rank(detail::concat({&X.A, &Bi, &Cj}), X.n) - rank(X.A, X.n);
    return rank(Bi, X.n) + rank(Cj, X.n) - image;
}

inline DecoratedMatrix identify_orbit(const Configuration& X) {
    const auto t = geometric_rank_tables(X);
    auto x = decode_tables(t.r, t.rbar.values);
    if (!x) throw Error(ErrorCode::NotAnOrbitInvariant, "geometric rank tables match no decorated matrix");
    return *x;
}

inline bool uncircling_check(const TransportMatrix& mat, const PositionSet& s) {
    const DecoratedMatrix expect{mat, normalize_decoration(s)};
    return identify_orbit(standard_configuration(mat, s)) == expect;
}

// g applied to every generator.
inline Configuration transform(const Configuration& X, const std::vector<Vec>& g) {
    auto apply = [&](const Vec& v) {
        Vec out = zero_vec(X.n);
        for (int a = 0; a < X.n; ++a)
            for (int b = 0; b < X.n; ++b) out[a] += g[a][b] * v[b];
        return out;
    };
    Configuration Y{X.n, {}, {}, {}};
    for (const auto& v : X.A) Y.A.push_back(apply(v));
    for (const auto& gens : X.B) {
        Y.B.emplace_back();
        for (const auto& v : gens) Y.B.back().push_back(apply(v));
    }
    for (const auto& gens : X.C) {
        Y.C.emplace_back();
        for (const auto& v : gens) Y.C.back().push_back(apply(v));
    }
    return Y;
}

// Invertible matrix with small integer and half-integer entries.
inline std::vector<Vec> random_invertible(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 2);
    for (;;) {
        std::vector<Vec> g(static_cast<std::size_t>(n), zero_vec(n));
        for (auto& row : g)
            for (auto& x : row) {
                x = Rational(num(rng), den(rng));
                x.canonicalize();
            }
        if (rank(g, n) == n) return g;
    }
}

// ---- degeneration families ----

// Slot vectors v_{ijk}(tau) indexed by the target matrix, written in the
// e-basis of the source matrix, plus the position set whose k = 1 slots sum
// to the line.
struct Family {
    DecoratedMatrix source;
    DecoratedMatrix target;
    Move move;
    SlotVectors<PolyVec> slots;
    PositionSet line;
};

namespace detail {

class FamilyBuilder {
public:
    FamilyBuilder(const DecoratedMatrix& x, const DecoratedMatrix& y) : x_(x), y_(y), e_(x.matrix) {}

    int n() const { return e_.dim(); }
    int m(Position p) const { return x_.matrix.at(p); }        // source multiplicity
    int m2(Position p) const { return y_.matrix.at(p); }       // target multiplicity
    Vec e(Position p, int k) const { return e_.e(p, k); }
    Vec emax(Position p) const { return e_.e(p, m(p)); }

    // v_{p,k} := sum of (degree, coefficient, vector) terms.
    void set(Position p, int k, std::initializer_list<std::tuple<int, Rational, Vec>> terms) {
        PolyVec pv;
        pv.coeffs.assign(1, zero_vec(n()));
        for (const auto& [d, a, v] : terms) pv.add(d, a, v);
        set(p, k, std::move(pv));
    }
    void set(Position p, int k, PolyVec pv) {
        if (k < 1 || k > m2(p)) throw std::logic_error("family slot outside the target matrix");
        explicit_[{p.i, p.j, k}] = std::move(pv);
    }
    // New vector in slot 1 of p, existing vectors move up one slot.
    void set_first_shifting(Position p, PolyVec pv) {
        set(p, 1, std::move(pv));
        for (int k = 2; k <= m2(p); ++k) set(p, k, PolyVec::constant(e(p, k - 1)));
    }
    PolyVec sum_first(const PositionSet& s, int degree = 0) const {
        PolyVec pv;
        pv.coeffs.assign(1, zero_vec(n()));
        for (Position p : s) pv.add(degree, 1, e(p, 1));
        return pv;
    }

    SlotVectors<PolyVec> finish() const {
        SlotVectors<PolyVec> out{y_.matrix, {}};
        for (int i = 1; i <= y_.q(); ++i)
            for (int j = 1; j <= y_.r(); ++j)
                for (int k = 1; k <= y_.matrix.at(i, j); ++k) {
                    auto it = explicit_.find({i, j, k});
                    if (it != explicit_.end()) {
                        out.v[{i, j, k}] = it->second;
                    } else {
                        if (k > x_.matrix.at(i, j)) throw std::logic_error("unspecified family slot without a source vector");
                        out.v[{i, j, k}] = PolyVec::constant(e({i, j}, k));
                    }
                }
        return out;
    }

private:
    const DecoratedMatrix& x_;
    const DecoratedMatrix& y_;
    BasisIndex e_;
    std::map<std::tuple<int, int, int>, PolyVec> explicit_;
};

inline PositionSet minus(const PositionSet& a, const PositionSet& b) {
    PositionSet out;
    for (Position p : a)
        if (!contains(b, p)) out.push_back(p);
    return out;
}

inline PositionSet strictly_below(const Decoration& d, Position p) {
    PositionSet out;
    for (Position x : d)
        if (pos_lt(x, p)) out.push_back(x);
    return out;
}

}  // namespace detail

// Literal keeps the tau^2 terms in the move V slots v_{i_s j_{s+1} max};
// those make the slot vectors dependent at tau = 1 once the chain has two or
// more entries. Reduced drops them: the transition matrix becomes triangular
// with determinant +-tau^t and every limit is unchanged.
enum class FamilyVariant { Reduced, Literal };

// The family for one move. Unspecified slots carry the matching source
// vector; e_max refers to the source matrix and v_max to the target.
inline Family make_family(const DecoratedMatrix& x, const Move& mv, FamilyVariant variant = FamilyVariant::Reduced) {
    const DecoratedMatrix y = apply_move(x, mv);
    detail::FamilyBuilder fb(x, y);
    PositionSet line = x.delta;
    const auto& a = mv.anchors;
    using T = std::tuple<int, Rational, Vec>;
    switch (mv.kind) {
        case MoveKind::I: {
            const Position p1 = a[0];
            const PositionSet S = detail::strictly_below(x.delta, p1);
            PolyVec v = fb.sum_first(S);
            v.add(1, 1, fb.e(p1, 1));
            fb.set(p1, 1, v);
            line = detail::minus(x.delta, S);
            line.push_back(p1);
            break;
        }
        case MoveKind::II:
        case MoveKind::IVb:
        case MoveKind::IVc: {
            const Position p0 = a[0], p1 = a[1], ne{p0.i, p1.j}, sw{p1.i, p0.j};
            fb.set(ne, fb.m2(ne), {T{0, 1, fb.emax(p0)}, T{1, 1, fb.emax(p1)}});
            fb.set(sw, fb.m2(sw), {T{0, 1, fb.emax(p0)}});
            break;
        }
        case MoveKind::IIIa:
        case MoveKind::IIIb: {
            const Position p0 = a[0], p1 = a[1], ne{p0.i, p1.j}, sw{p1.i, p0.j};
            const bool ta = mv.kind == MoveKind::IIIa;
            const Position fresh = ta ? ne : sw, other = ta ? sw : ne;
            const PositionSet S = detail::strictly_below(x.delta, fresh);
            fb.set(other, fb.m2(other), {T{0, 1, fb.e(p0, 1)}});
            PolyVec v = fb.sum_first(S);
            v.add(1, 1, fb.emax(p1));
            fb.set_first_shifting(fresh, v);
            line = detail::minus(x.delta, S);
            line.push_back(fresh);
            break;
        }
        case MoveKind::IVa: {
            const Position p0 = a[0], p1 = a[1], p2 = a[2];
            const Position fresh{p2.i, p0.j}, ne{p0.i, p1.j}, low{p1.i, p2.j};
            const PositionSet S = detail::strictly_below(x.delta, fresh);
            fb.set(low, fb.m2(low), {T{0, 1, fb.e(p2, 1)}, T{1, 1, fb.emax(p1)}});
            fb.set(ne, fb.m2(ne), {T{0, 1, fb.e(p0, 1)}, T{1, 1, fb.emax(p1)}});
            fb.set_first_shifting(fresh, fb.sum_first(S));
            line = detail::minus(x.delta, S);
            line.push_back(fresh);
            break;
        }
        case MoveKind::V: {
            const Position p0 = a[0];
            const std::vector<Position> chain(a.begin() + 1, a.end());
            const std::size_t t = chain.size();
            const Position ne{p0.i, chain.front().j}, sw{chain.back().i, p0.j};
            const PositionSet S = detail::minus(x.delta, chain);
            for (Position s : S) fb.set(s, 1, {T{1, 1, fb.e(s, 1)}});
            for (Position c : chain)
                for (int k = 1; k <= fb.m2(c); ++k) fb.set(c, k, PolyVec::constant(fb.e(c, k + 1)));
            PolyVec top = PolyVec::constant(fb.emax(p0));
            top.add(1, fb.sum_first(chain, 1));
            fb.set_first_shifting(ne, top);
            PolyVec bottom;
            bottom.coeffs.assign(1, zero_vec(fb.n()));
            bottom.add(0, -1, fb.emax(p0));
            fb.set_first_shifting(sw, bottom);
            for (std::size_t s = 0; s + 1 < t; ++s) {
                const Position slot{chain[s].i, chain[s + 1].j};
                PolyVec v = PolyVec::constant(fb.emax(p0));
                for (std::size_t u = 0; u < t; ++u) {
                    if (u > s) v.add(1, 1, fb.e(chain[u], 1));
                    else if (variant == FamilyVariant::Literal) v.add(2, 1, fb.e(chain[u], 1));
                }
                fb.set(slot, fb.m2(slot), v);
            }
            line = S;
            line.push_back(ne);
            line.push_back(sw);
            break;
        }
    }
    return Family{x, y, mv, fb.finish(), line};
}

// Configuration at a nonzero tau by evaluation; at tau = 0 the limit of each
// subspace as tau -> 0.
inline Configuration configuration_at(const Family& f, const Rational& tau) {
    const int n = f.source.matrix.n();
    std::vector<std::vector<PolyVec>> B, C;
    detail::arrange_flags<PolyVec>(f.slots, B, C);
    PolyVec a;
    a.coeffs.assign(1, zero_vec(n));
    for (Position p : f.line) a.add(1, f.slots.at(p, 1));

    Configuration X;
    X.n = n;
    if (sgn(tau) != 0) {
        auto eval = [&](const std::vector<PolyVec>& gens) {
            std::vector<Vec> out;
            for (const auto& g : gens) out.push_back(g.at(tau));
            return out;
        };
        X.A = {a.at(tau)};
        for (const auto& g : B) X.B.push_back(eval(g));
        for (const auto& g : C) X.C.push_back(eval(g));
        return X;
    }
    // Limits of nested families are nested; extend generators so that each
    // list is a prefix of the next.
    auto nested_limits = [&](const std::vector<std::vector<PolyVec>>& flag) {
        std::vector<std::vector<Vec>> out;
        std::vector<Vec> acc;
        for (const auto& gens : flag) {
            for (auto& v : limit_at_zero(gens, n)) {
                acc.push_back(v);
                if (rank(acc, n) < static_cast<int>(acc.size())) acc.pop_back();
            }
            out.push_back(acc);
        }
        return out;
    };
    X.A = limit_at_zero({a}, n);
    X.B = nested_limits(B);
    X.C = nested_limits(C);
    return X;
}

inline Configuration degeneration_family(const DecoratedMatrix& x, const Move& mv, const Rational& tau,
                                         FamilyVariant variant = FamilyVariant::Reduced) {
    return configuration_at(make_family(x, mv, variant), tau);
}

struct DegenerationReport {
    Move move;
    int samples = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

inline const std::vector<Rational>& nonzero_samples() {
    static const std::vector<Rational> s{Rational(1), Rational(2), Rational(1, 3)};
    return s;
}

// identify_orbit lands on the target at the nonzero samples and on the
// source at tau = 0; the slot vectors must form a basis at each nonzero sample.
inline DegenerationReport verify_family(const Family& f) {
    DegenerationReport rep{f.move, 0, {}};
    const int n = f.source.matrix.n();
    auto check = [&](const Rational& tau, const DecoratedMatrix& expect) {
        ++rep.samples;
        try {
            const Configuration X = configuration_at(f, tau);
            if (sgn(tau) != 0) {
                std::vector<Vec> all;
                for (const auto& [key, pv] : f.slots.v) all.push_back(pv.at(tau));
                if (rank(all, n) != n) {
                    rep.failures.push_back("tau=" + tau.get_str() + ": slot vectors are not a basis");
                    return;
                }
            }
            const DecoratedMatrix got = identify_orbit(X);
            if (!(got == expect))
                rep.failures.push_back("tau=" + tau.get_str() + ": landed in " + show(got) + ", expected " + show(expect));
        } catch (const Error& ex) {
            rep.failures.push_back("tau=" + tau.get_str() + ": " + ex.what());
        }
    };
    for (const auto& tau : nonzero_samples()) check(tau, f.target);
    check(Rational(0), f.source);
    return rep;
}

inline DegenerationReport verify_move_degeneration(const DecoratedMatrix& x, const Move& mv,
                                                   FamilyVariant variant = FamilyVariant::Reduced) {
    return verify_family(make_family(x, mv, variant));
}

}  // namespace triflag

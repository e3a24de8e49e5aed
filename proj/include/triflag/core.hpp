// Domain types for a line plus two flags: compositions, transport matrices,
// decorations, validation, the position order and decoration normalization.
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace triflag {

enum class ErrorCode {
    BadShape,
    BadRowSum,
    BadColSum,
    NotStaircase,
    ZeroEntryDecorated,
    EmptyDecoration,
    EmptyInput,
    NotDescending,
    ShapeMismatch,
    NotStrictlyLess,
    NotFullFlag,
    PreconditionFailed,
    NotComparable,
    NotAnOrbitInvariant,
    ZeroEntryPosition,
};

inline const char* to_string(ErrorCode c) {
    switch (c) {
        case ErrorCode::BadShape: return "BadShape";
        case ErrorCode::BadRowSum: return "BadRowSum";
        case ErrorCode::BadColSum: return "BadColSum";
        case ErrorCode::NotStaircase: return "NotStaircase";
        case ErrorCode::ZeroEntryDecorated: return "ZeroEntryDecorated";
        case ErrorCode::EmptyDecoration: return "EmptyDecoration";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::NotDescending: return "NotDescending";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::NotStrictlyLess: return "NotStrictlyLess";
        case ErrorCode::NotFullFlag: return "NotFullFlag";
        case ErrorCode::PreconditionFailed: return "PreconditionFailed";
        case ErrorCode::NotComparable: return "NotComparable";
        case ErrorCode::NotAnOrbitInvariant: return "NotAnOrbitInvariant";
        case ErrorCode::ZeroEntryPosition: return "ZeroEntryPosition";
    }
    return "?";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

using Composition = std::vector<int>;

inline int total(const Composition& parts) {
    int n = 0;
    for (int p : parts) n += p;
    return n;
}

inline bool is_composition(const Composition& parts) {
    return !parts.empty() && std::all_of(parts.begin(), parts.end(), [](int p) { return p >= 1; });
}

// 1-based matrix position.
struct Position {
    int i = 0;
    int j = 0;
    auto operator<=>(const Position&) const = default;
};

using Decoration = std::vector<Position>;
using PositionSet = std::vector<Position>;

struct TransportMatrix {
    Composition b;
    Composition c;
    std::vector<std::vector<int>> m;  // q rows of r entries

    int q() const { return static_cast<int>(b.size()); }
    int r() const { return static_cast<int>(c.size()); }
    int n() const { return total(b); }
    int at(int i, int j) const { return m[i - 1][j - 1]; }
    int at(Position p) const { return at(p.i, p.j); }
    int& at(int i, int j) { return m[i - 1][j - 1]; }
    int& at(Position p) { return at(p.i, p.j); }

    auto operator<=>(const TransportMatrix&) const = default;
};

struct DecoratedMatrix {
    TransportMatrix matrix;
    Decoration delta;

    int q() const { return matrix.q(); }
    int r() const { return matrix.r(); }
    bool operator==(const DecoratedMatrix&) const = default;
};

// Canonical total order: flattened m, then the sorted decoration list.
// The margins come first so that elements of different shapes still sort.
inline std::strong_ordering operator<=>(const DecoratedMatrix& x, const DecoratedMatrix& y) {
    if (auto c = x.matrix.b <=> y.matrix.b; c != 0) return c;
    if (auto c = x.matrix.c <=> y.matrix.c; c != 0) return c;
    if (auto c = x.matrix.m <=> y.matrix.m; c != 0) return c;
    return x.delta <=> y.delta;
}

inline bool same_shape(const TransportMatrix& x, const TransportMatrix& y) {
    return x.b == y.b && x.c == y.c;
}

inline bool same_shape(const DecoratedMatrix& x, const DecoratedMatrix& y) {
    return same_shape(x.matrix, y.matrix);
}

inline void require_same_shape(const TransportMatrix& x, const TransportMatrix& y) {
    if (!same_shape(x, y)) throw Error(ErrorCode::ShapeMismatch, "elements have different margins (b,c)");
}

inline TransportMatrix zero_matrix(const Composition& b, const Composition& c) {
    return TransportMatrix{b, c, std::vector<std::vector<int>>(b.size(), std::vector<int>(c.size(), 0))};
}

// ---- position order ----

inline bool pos_leq(Position p, Position p2) { return p.i <= p2.i && p.j <= p2.j; }
inline bool pos_lt(Position p, Position p2) { return pos_leq(p, p2) && p != p2; }

// p <= S: some element of S dominates p.
inline bool pos_leq_set(Position p, const PositionSet& s) {
    return std::any_of(s.begin(), s.end(), [&](Position d) { return pos_leq(p, d); });
}

inline bool set_leq(const PositionSet& s, const PositionSet& s2) {
    return std::all_of(s.begin(), s.end(), [&](Position p) { return pos_leq_set(p, s2); });
}

inline bool contains(const PositionSet& s, Position p) { return std::find(s.begin(), s.end(), p) != s.end(); }

// [S]: the maximal elements of S, sorted by increasing row.
inline Decoration normalize_decoration(const PositionSet& s) {
    if (s.empty()) throw Error(ErrorCode::EmptyInput, "cannot normalize an empty position set");
    std::set<Position> uniq(s.begin(), s.end());
    Decoration out;
    for (Position p : uniq) {
        bool dominated = std::any_of(uniq.begin(), uniq.end(), [&](Position d) { return pos_lt(p, d); });
        if (!dominated) out.push_back(p);
    }
    return out;
}

// ---- validation ----

struct Violation {
    ErrorCode code;
    int first = 0;   // row, column, or decoration index depending on code
    int second = 0;
    std::string message;
};

inline std::optional<Violation> validate(const TransportMatrix& mat) {
    if (!is_composition(mat.b) || !is_composition(mat.c))
        return Violation{ErrorCode::BadShape, 0, 0, "margins must be nonempty lists of positive integers"};
    if (mat.n() != total(mat.c)) return Violation{ErrorCode::BadShape, 0, 0, "b and c have different totals"};
    if (static_cast<int>(mat.m.size()) != mat.q())
        return Violation{ErrorCode::BadShape, 0, 0, "matrix must have one row per part of b"};
    for (int i = 1; i <= mat.q(); ++i) {
        if (static_cast<int>(mat.m[i - 1].size()) != mat.r())
            return Violation{ErrorCode::BadShape, i, 0, "row " + std::to_string(i) + " has the wrong length"};
        for (int j = 1; j <= mat.r(); ++j)
            if (mat.at(i, j) < 0)
                return Violation{ErrorCode::BadShape, i, j,
                                 "negative entry at (" + std::to_string(i) + "," + std::to_string(j) + ")"};
    }
    for (int i = 1; i <= mat.q(); ++i) {
        int s = 0;
        for (int j = 1; j <= mat.r(); ++j) s += mat.at(i, j);
        if (s != mat.b[i - 1]) return Violation{ErrorCode::BadRowSum, i, 0, "row " + std::to_string(i) + " does not sum to b"};
    }
    for (int j = 1; j <= mat.r(); ++j) {
        int s = 0;
        for (int i = 1; i <= mat.q(); ++i) s += mat.at(i, j);
        if (s != mat.c[j - 1])
            return Violation{ErrorCode::BadColSum, j, 0, "column " + std::to_string(j) + " does not sum to c"};
    }
    return std::nullopt;
}

inline std::optional<Violation> validate(const TransportMatrix& mat, const Decoration& delta) {
    if (auto v = validate(mat)) return v;
    if (delta.empty()) return Violation{ErrorCode::EmptyDecoration, 0, 0, "decoration is empty"};
    for (std::size_t k = 0; k < delta.size(); ++k) {
        Position p = delta[k];
        if (p.i < 1 || p.i > mat.q() || p.j < 1 || p.j > mat.r())
            return Violation{ErrorCode::BadShape, static_cast<int>(k + 1), 0, "decoration position out of range"};
        if (k > 0 && !(delta[k - 1].i < p.i && delta[k - 1].j > p.j))
            return Violation{ErrorCode::NotStaircase, static_cast<int>(k + 1), 0,
                             "decoration entry " + std::to_string(k + 1) + " breaks the NE to SW staircase"};
    }
    for (Position p : delta)
        if (mat.at(p) == 0)
            return Violation{ErrorCode::ZeroEntryDecorated, p.i, p.j,
                             "decorated position (" + std::to_string(p.i) + "," + std::to_string(p.j) + ") is zero"};
    return std::nullopt;
}

inline std::optional<Violation> validate(const DecoratedMatrix& x) { return validate(x.matrix, x.delta); }

inline void require_valid(const DecoratedMatrix& x) {
    if (auto v = validate(x)) throw Error(v->code, v->message);
}

// Full-flag decorated matrix of a permutation w (one-line notation, values
// 1..n) with decorated columns dcols.
inline DecoratedMatrix from_permutation(const std::vector<int>& w, const std::vector<int>& dcols) {
    const int n = static_cast<int>(w.size());
    std::vector<int> seen(n + 1, 0);
    for (int v : w) {
        if (v < 1 || v > n || seen[v]++) throw Error(ErrorCode::BadShape, "w is not a permutation");
    }
    std::vector<int> cols = dcols;
    std::sort(cols.begin(), cols.end());
    if (cols.empty()) throw Error(ErrorCode::NotDescending, "decorated column set is empty");
    for (std::size_t k = 0; k < cols.size(); ++k) {
        if (cols[k] < 1 || cols[k] > n) throw Error(ErrorCode::BadShape, "decorated column out of range");
        if (k > 0 && !(w[cols[k - 1] - 1] > w[cols[k] - 1]))
            throw Error(ErrorCode::NotDescending, "decorated columns are not a descending subsequence of w");
    }
    Composition ones(n, 1);
    DecoratedMatrix x{zero_matrix(ones, ones), {}};
    for (int j = 1; j <= n; ++j) x.matrix.at(w[j - 1], j) = 1;
    for (int j : cols) x.delta.push_back({w[j - 1], j});
    std::sort(x.delta.begin(), x.delta.end());
    return x;
}

inline bool is_full_flag(const TransportMatrix& mat) {
    return std::all_of(mat.b.begin(), mat.b.end(), [](int p) { return p == 1; }) &&
           std::all_of(mat.c.begin(), mat.c.end(), [](int p) { return p == 1; });
}

// Inverse of from_permutation for full flags: w(j) is the row of the 1 in column j.
inline std::vector<int> permutation_of(const TransportMatrix& mat) {
    if (!is_full_flag(mat)) throw Error(ErrorCode::NotFullFlag, "permutation requested for a partial flag");
    std::vector<int> w(mat.r(), 0);
    for (int i = 1; i <= mat.q(); ++i)
        for (int j = 1; j <= mat.r(); ++j)
            if (mat.at(i, j) == 1) w[j - 1] = i;
    return w;
}

// Positive positions in row-major order.
inline std::vector<Position> support(const TransportMatrix& mat) {
    std::vector<Position> out;
    for (int i = 1; i <= mat.q(); ++i)
        for (int j = 1; j <= mat.r(); ++j)
            if (mat.at(i, j) > 0) out.push_back({i, j});
    return out;
}

// Compositions of n in lexicographic order.
inline std::vector<Composition> compositions(int n) {
    std::vector<Composition> out;
    Composition cur;
    auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = 1; p <= left; ++p) {
            cur.push_back(p);
            self(self, left - p);
            cur.pop_back();
        }
    };
    if (n > 0) rec(rec, n);
    return out;
}

inline Composition ones(int n) { return Composition(static_cast<std::size_t>(n), 1); }

}  // namespace triflag

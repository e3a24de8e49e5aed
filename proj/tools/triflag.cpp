// Command-line front end: enum | hasse | compare | verify | chain.
#include <CLI11.hpp>
#include <triflag/triflag.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace triflag;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kNotComparable = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Composition parse_composition(const std::string& s, const char* flag) {
    Composition parts;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw UsageError(std::string(flag) + ": '" + tok + "' is not an integer");
        }
    }
    if (!is_composition(parts)) throw UsageError(std::string(flag) + " must be a comma-separated list of positive integers");
    return parts;
}

std::pair<Composition, Composition> parse_shape(const std::string& b, const std::string& c) {
    auto pb = parse_composition(b, "--b"), pc = parse_composition(c, "--c");
    if (total(pb) != total(pc)) throw UsageError("--b and --c must have the same total");
    return {pb, pc};
}

DecoratedMatrix read_element(const std::string& path) {
    json j;
    try {
        if (path == "-") {
            j = json::parse(std::cin);
        } else {
            std::ifstream f(path);
            if (!f) throw UsageError("cannot open " + path);
            j = json::parse(f);
        }
    } catch (const json::exception& ex) {
        throw UsageError("invalid JSON in " + path + ": " + ex.what());
    }
    return decorated_from_json(j);
}

std::string pos(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

int cmd_enum(const Composition& b, const Composition& c, const std::string& format, std::ostream& out) {
    const auto els = enumerate_orbits(b, c);
    if (format == "json") {
        json a = json::array();
        for (const auto& e : els) a.push_back(to_json(e));
        out << a.dump(1) << "\n";
    } else {
        for (const auto& e : els) out << show(e) << "\n";
    }
    return kOk;
}

int cmd_hasse(const Composition& b, const Composition& c, const std::string& format, std::ostream& out) {
    const Poset P = build_poset(b, c);
    if (format == "json") {
        out << to_json(P).dump(1) << "\n";
    } else if (format == "text") {
        out << P.elements.size() << " elements, " << P.covers.size() << " covers\n";
        for (std::size_t k = 0; k < P.elements.size(); ++k) out << k << ": " << show(P.elements[k]) << "\n";
        for (const auto& e : P.covers) out << e.from << " -> " << e.to << " " << show(e.move) << "\n";
    } else {
        out << "digraph bruhat {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
        for (std::size_t k = 0; k < P.elements.size(); ++k)
            out << "  n" << k << " [label=\"" << dot_escape(show(P.elements[k])) << "\"];\n";
        for (const auto& e : P.covers)
            out << "  n" << e.from << " -> n" << e.to << " [label=\"" << to_string(e.move.kind) << "\"];\n";
        out << "}\n";
    }
    return kOk;
}

json witness_json(const std::optional<Witness>& w) {
    if (!w) return nullptr;
    return json{{"table", w->table}, {"i", w->i}, {"j", w->j}, {"lhs", w->lhs}, {"rhs", w->rhs}};
}

std::string witness_text(const Witness& w) {
    return w.table + pos(w.i, w.j) + " lhs=" + std::to_string(w.lhs) + " rhs=" + std::to_string(w.rhs);
}

int cmd_compare(const DecoratedMatrix& x, const DecoratedMatrix& y, const std::string& format, std::ostream& out) {
    if (!same_shape(x, y)) throw UsageError("elements have different margins (b,c)");
    const Comparison cmp = compare(x, y);
    if (format == "json") {
        out << json{{"verdict", to_string(cmp.verdict)},
                    {"forward", witness_json(cmp.forward)},
                    {"backward", witness_json(cmp.backward)}}
                   .dump(1)
            << "\n";
        return kOk;
    }
    out << to_string(cmp.verdict) << "\n";
    switch (cmp.verdict) {
        case Verdict::Equal: break;
        case Verdict::Less: out << "strict at " << witness_text(*cmp.forward) << "\n"; break;
        case Verdict::Greater: out << "strict at " << witness_text(*cmp.backward) << "\n"; break;
        case Verdict::Incomparable:
            out << "lhs <= rhs fails at " << witness_text(*cmp.forward) << "\n";
            out << "rhs <= lhs fails at " << witness_text(*cmp.backward) << "\n";
            break;
    }
    return kOk;
}

int cmd_chain(const DecoratedMatrix& x, const DecoratedMatrix& y, const std::string& format, std::ostream& out) {
    if (!same_shape(x, y)) throw UsageError("elements have different margins (b,c)");
    if (!rk_leq_dec(x, y)) {
        if (format == "json") out << json{{"comparable", false}}.dump() << "\n";
        else out << "not comparable\n";
        return kNotComparable;
    }
    const auto moves = find_chain(x, y);
    if (format == "json") {
        json a = json::array();
        DecoratedMatrix cur = x;
        for (const auto& mv : moves) {
            cur = apply_move(cur, mv);
            json step = to_json(mv);
            step["result"] = to_json(cur);
            a.push_back(step);
        }
        out << json{{"comparable", true}, {"moves", a}}.dump(1) << "\n";
        return kOk;
    }
    out << moves.size() << " moves\n";
    DecoratedMatrix cur = x;
    for (const auto& mv : moves) {
        cur = apply_move(cur, mv);
        out << show(mv) << "  ->  " << show(cur) << "\n";
    }
    return kOk;
}

int cmd_verify(const Composition& b, const Composition& c, bool witness, const std::string& format, std::ostream& out) {
    const Poset P = build_poset(b, c);
    const EquivalenceReport eq = verify_equivalence(P);
    const TwoFlagReport two = verify_two_flag_theorem(b, c);
    json rep{{"b", b},
             {"c", c},
             {"elements", eq.elements},
             {"covers", eq.rank_covers},
             {"move_edges", eq.move_edges},
             {"order_equivalence", eq.reachability_matches},
             {"moves_are_covers", eq.moves_are_covers},
             {"covers_are_moves", eq.covers_are_moves},
             {"chains", eq.chains_ok},
             {"comparable_pairs", eq.comparable_pairs},
             {"two_flag", two.ok()},
             {"failures", eq.failures}};
    for (const auto& f : two.failures) rep["failures"].push_back("two-flag: " + f);
    bool ok = eq.ok() && two.ok();
    int verified = 0;
    if (witness) {
        int geometric_bad = 0, uncircle_bad = 0;
        for (const auto& e : P.elements) {
            const auto t = geometric_rank_tables(standard_configuration(e));
            if (!(t.r == rank_table(e.matrix)) || !(t.rbar == rbar_table(e))) ++geometric_bad;
            if (!uncircling_check(e.matrix, support(e.matrix))) ++uncircle_bad;
        }
        for (const auto& edge : P.covers) {
            const auto d = verify_move_degeneration(P.elements[edge.from], edge.move);
            if (d.ok()) ++verified;
            for (const auto& f : d.failures)
                rep["failures"].push_back("degeneration " + show(P.elements[edge.from]) + " " + show(edge.move) + ": " + f);
        }
        rep["geometric_table_mismatches"] = geometric_bad;
        rep["uncircling_failures"] = uncircle_bad;
        rep["edges_geometrically_verified"] = verified;
        ok = ok && geometric_bad == 0 && uncircle_bad == 0 && verified == static_cast<int>(P.covers.size());
    }
    rep["pass"] = ok;
    if (format == "json") {
        out << rep.dump(1) << "\n";
        return ok ? kOk : kFailed;
    }
    auto pf = [](bool v) { return v ? "pass" : "FAIL"; };
    out << eq.elements << " elements, " << eq.rank_covers << " covers\n";
    out << "order equivalence (rank <=> move): " << pf(eq.reachability_matches) << "\n";
    out << "cover minimality of moves: " << pf(eq.moves_are_covers) << "\n";
    out << "covers realized by single moves: " << pf(eq.covers_are_moves) << "\n";
    out << "chains for " << eq.comparable_pairs << " comparable pairs: " << pf(eq.chains_ok) << "\n";
    out << "two-flag baseline (" << two.elements << " matrices, " << two.covers << " covers): " << pf(two.ok()) << "\n";
    if (witness) {
        out << "geometric rank tables: " << pf(rep["geometric_table_mismatches"] == 0) << "\n";
        out << "uncircling on full supports: " << pf(rep["uncircling_failures"] == 0) << "\n";
        out << verified << " of " << P.covers.size() << " edges geometrically verified\n";
    }
    for (const auto& f : rep["failures"]) out << "failure: " << f.get<std::string>() << "\n";
    out << (ok ? "pass" : "FAIL") << "\n";
    return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bruhat order on orbits of a line and two flags"};
    app.require_subcommand(1);
    std::string b, c, format, out_path, lhs, rhs;
    bool witness = false;

    auto add_shape = [&](CLI::App* sub) {
        sub->add_option("--b", b, "row composition, e.g. 1,1,1")->required();
        sub->add_option("--c", c, "column composition, e.g. 2,1")->required();
    };
    auto add_common = [&](CLI::App* sub, const std::string& def, std::vector<std::string> allowed) {
        format = def;
        sub->add_option("--format", format, "output format")->check(CLI::IsMember(allowed));
        sub->add_option("--out", out_path, "write output to this file");
    };

    auto* s_enum = app.add_subcommand("enum", "list all orbits for (b,c)");
    add_shape(s_enum);
    add_common(s_enum, "text", {"text", "json"});
    auto* s_hasse = app.add_subcommand("hasse", "emit the Hasse diagram");
    add_shape(s_hasse);
    add_common(s_hasse, "dot", {"dot", "json", "text"});
    auto* s_compare = app.add_subcommand("compare", "compare two elements (JSON files, '-' for stdin)");
    s_compare->add_option("lhs", lhs)->required();
    s_compare->add_option("rhs", rhs)->required();
    add_common(s_compare, "text", {"text", "json"});
    auto* s_verify = app.add_subcommand("verify", "brute-force verification report");
    add_shape(s_verify);
    s_verify->add_flag("--witness", witness, "also run the exact linear-algebra checks");
    add_common(s_verify, "text", {"text", "json"});
    auto* s_chain = app.add_subcommand("chain", "move sequence from lhs up to rhs");
    s_chain->add_option("lhs", lhs)->required();
    s_chain->add_option("rhs", rhs)->required();
    add_common(s_chain, "text", {"text", "json"});

    // Each subcommand registers --format with its own default; reset per parse.
    for (auto* sub : {s_enum, s_hasse, s_compare, s_verify, s_chain}) {
        sub->preparse_callback([&, sub](std::size_t) {
            format = sub == s_hasse ? "dot" : "text";
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kUsage;
        }
    }
    std::ostream& out = out_path.empty() ? std::cout : file;

    try {
        if (*s_enum) {
            auto [pb, pc] = parse_shape(b, c);
            return cmd_enum(pb, pc, format, out);
        }
        if (*s_hasse) {
            auto [pb, pc] = parse_shape(b, c);
            return cmd_hasse(pb, pc, format, out);
        }
        if (*s_verify) {
            auto [pb, pc] = parse_shape(b, c);
            return cmd_verify(pb, pc, witness, format, out);
        }
        if (lhs == "-" && rhs == "-") throw UsageError("only one element can be read from stdin");
        const DecoratedMatrix x = read_element(lhs), y = read_element(rhs);
        if (*s_compare) return cmd_compare(x, y, format, out);
        return cmd_chain(x, y, format, out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}

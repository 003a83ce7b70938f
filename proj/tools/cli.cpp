#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hyperlattice/bruhat.hpp"
#include "hyperlattice/core.hpp"
#include "hyperlattice/enumerate.hpp"
#include "hyperlattice/io.hpp"
#include "hyperlattice/lattice.hpp"
#include "hyperlattice/rank.hpp"
#include "hyperlattice/triangles.hpp"
#include "json.hpp"

namespace hl = hyperlattice;
using nlohmann::json;

namespace {

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool has_suffix(const std::string& s, const std::string& suf) {
    return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

// Format inferred from the extension: .latin is the plain text square,
// anything else is tagged JSON.
hl::ParsedObject load(const std::string& path, const std::string& format) {
    std::string text = read_all(path);
    if (format == "latin" || (format.empty() && has_suffix(path, ".latin")))
        return hl::read_latin_text(text);
    return hl::from_json(json::parse(text));
}

hl::Hypermatrix as_hypermatrix(const hl::ParsedObject& obj) {
    if (const auto* l = std::get_if<hl::LatinSquare>(&obj)) return l->to_hypermatrix();
    if (const auto* h = std::get_if<hl::Hypermatrix>(&obj)) return *h;
    if (const auto* c = std::get_if<hl::CornerGrid3>(&obj)) return hl::xi_inverse(*c);
    throw std::invalid_argument("expected a latin, hypermatrix, or corner_sum object");
}

hl::CornerSumHypermatrix as_corner_sum(const hl::ParsedObject& obj) {
    if (const auto* c = std::get_if<hl::CornerGrid3>(&obj)) return hl::CornerSumHypermatrix(*c);
    return hl::CornerSumHypermatrix(hl::xi(as_hypermatrix(obj)));
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << text;
}

std::string grid_text(const hl::Hypermatrix& h) {
    hl::CellFormalSum g = hl::grid_notation(h);
    std::ostringstream out;
    for (int i = 1; i <= h.order(); ++i) {
        for (int j = 1; j <= h.order(); ++j) {
            if (j > 1) out << '\t';
            out << hl::format_cell(g.cell(i, j));
        }
        out << '\n';
    }
    return out.str();
}

std::optional<std::string> latin_violation(const hl::Matrix& m) {
    if (!m.square()) return "not a square grid";
    int n = m.rows();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int v = m.at(i, j);
            if (v < 1 || v > n)
                return "cell (" + std::to_string(i) + "," + std::to_string(j) +
                       ") holds out-of-range symbol " + std::to_string(v);
            for (int t = 1; t < j; ++t)
                if (m.at(i, t) == v)
                    return "cell (" + std::to_string(i) + "," + std::to_string(j) + ") repeats symbol " +
                           std::to_string(v) + " of cell (" + std::to_string(i) + "," +
                           std::to_string(t) + ") in its row";
            for (int t = 1; t < i; ++t)
                if (m.at(t, j) == v)
                    return "cell (" + std::to_string(i) + "," + std::to_string(j) + ") repeats symbol " +
                           std::to_string(v) + " of cell (" + std::to_string(t) + "," +
                           std::to_string(j) + ") in its column";
        }
    return std::nullopt;
}

hl::Matrix matrix_from_json_entries(const json& e) {
    std::vector<std::vector<int>> grid;
    for (const auto& row : e) grid.push_back(row.get<std::vector<int>>());
    return hl::Matrix(grid);
}

int cmd_check(const std::string& path, const std::string& format, bool as_json) {
    std::string text = read_all(path);
    json report;
    bool ok = true;
    std::string kind;
    if (format == "latin" || (format.empty() && has_suffix(path, ".latin"))) {
        kind = "latin";
        std::istringstream in(text);
        std::vector<std::vector<int>> grid;
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream row(line);
            std::vector<int> values;
            int v;
            while (row >> v) values.push_back(v);
            if (!values.empty()) grid.push_back(values);
        }
        if (grid.empty()) throw std::invalid_argument("empty square");
        auto viol = latin_violation(hl::Matrix(grid));
        ok = !viol.has_value();
        report["valid"] = ok;
        if (viol) report["violation"] = *viol;
    } else {
        json j = json::parse(text);
        kind = j.value("kind", "");
        if (kind == "latin") {
            auto viol = latin_violation(matrix_from_json_entries(j.at("entries")));
            ok = !viol.has_value();
            report["valid"] = ok;
            if (viol) report["violation"] = *viol;
        } else if (kind == "matrix") {
            hl::Matrix m = matrix_from_json_entries(j.at("entries"));
            report["is_asm"] = hl::is_asm(m);
            report["is_permutation_matrix"] = hl::is_permutation_matrix(m);
            report["is_latin"] = hl::is_latin(m);
        } else if (kind == "hypermatrix") {
            hl::Hypermatrix h = std::get<hl::Hypermatrix>(hl::from_json(j));
            report["is_permutation_hypermatrix"] = hl::is_permutation_hypermatrix(h);
            report["is_ashm"] = hl::is_ashm(h);
            report["is_pashm"] = hl::is_pashm(h);
            report["in_lattice_preimage"] = hl::is_in_xi_preimage(h);
            report["partial_sum_bounds"] = hl::check_partial_sum_bounds(h);
        } else if (kind == "corner_sum") {
            hl::CornerGrid3 c = std::get<hl::CornerGrid3>(hl::from_json(j));
            ok = hl::is_corner_sum_hypermatrix(c);
            report["valid"] = ok;
        } else {
            throw std::invalid_argument("unknown kind: " + kind);
        }
    }
    report["kind"] = kind;
    if (as_json)
        std::cout << report.dump(2) << "\n";
    else
        for (auto& [key, value] : report.items()) std::cout << key << ": " << value.dump() << "\n";
    return ok ? 0 : 1;
}

int cmd_verify_all(int n) {
    bool all_ok = true;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS  " : "FAIL  ") << name << "\n";
        all_ok = all_ok && ok;
    };

    check("counts: latin 1,2,12", hl::enumerate_latin(1).size() == 1 &&
                                      hl::enumerate_latin(2).size() == 2 &&
                                      hl::enumerate_latin(3).size() == 12);
    check("counts: asm 1,2,7", hl::enumerate_asm(3).size() == 7);
    check("counts: ashm 1,2,14", hl::enumerate_ashm(3).size() == 14);
    check("counts: pashm 1,2,18", hl::enumerate_pashm(3).size() == 18);
    auto c3 = hl::enumerate_corner_sum(3);
    check("counts: corner-sum 35", c3.size() == 35);
    check("counts: triangles 35", hl::enumerate_monotone_hypertriangles(3).size() == 35);

    bool lattice_ok = true, distributive = true;
    for (const auto& a : c3)
        for (const auto& b : c3) {
            auto j = hl::join(a, b), m = hl::meet(a, b);
            lattice_ok = lattice_ok && hl::bruhat_leq(a, j) && hl::bruhat_leq(b, j) &&
                         hl::bruhat_leq(m, a) && hl::bruhat_leq(m, b);
            for (const auto& z : c3)
                distributive = distributive && hl::is_distributive_triple(a, b, z);
        }
    check("lattice: meet/join bounds on all pairs", lattice_ok);
    check("lattice: distributivity on all triples", distributive);

    check("rank: m(3) = 76", hl::m_closed_form(3) == 76);
    check("rank: lattice rank 8", hl::lattice_rank(3) == 8);
    hl::HasseGraph h3 = hl::build_hasse(c3);
    auto depth = hl::hasse_ranks(h3);
    bool ranks_ok = true;
    for (size_t t = 0; t < c3.size(); ++t)
        ranks_ok = ranks_ok && hl::rank_of(c3[t]) == depth[t];
    check("rank: equals Hasse depth on all 35 elements", ranks_ok);

    bool identities = true;
    for (const auto& c : c3)
        identities = identities && hl::sigma_sum_identity_check(hl::xi_inverse(c.grid()));
    for (const auto& l : hl::enumerate_latin(3))
        identities = identities && hl::rank_sum_identity_check(l);
    check("identities: weight and plane-rank sums", identities);

    bool equiv = true;
    for (const auto& a : c3)
        for (const auto& b : c3) {
            bool dom = hl::bruhat_leq(a, b);
            hl::Hypermatrix pa = hl::xi_inverse(a.grid()), pb = hl::xi_inverse(b.grid());
            equiv = equiv && dom == hl::tblock_witness(pa, pb).ok &&
                    dom == hl::triangle_leq(hl::to_triangle(pa), hl::to_triangle(pb));
        }
    check("order: domination == witness == triangle order", equiv);

    bool roundtrip = true;
    for (const auto& c : c3) {
        hl::Hypermatrix pre = hl::xi_inverse(c.grid());
        roundtrip = roundtrip && hl::from_triangle(hl::to_triangle(pre)) == pre;
    }
    check("triangles: round trip on all 35 preimages", roundtrip);

    check("completion: holds at order 3",
          hl::dm_witness_report(3)["completion_holds"] == true);

    hl::HasseGraph l3h = hl::build_hasse(
        static_cast<int>(hl::enumerate_latin(3).size()),
        [ls = hl::enumerate_latin(3)](int a, int b) { return hl::bruhat_leq(ls[a], ls[b]); },
        "latin", 3);
    check("structure: order-3 square poset has 12 nodes, 24 edges",
          l3h.node_count == 12 && l3h.edges.size() == 24);

    if (n >= 4) {
        check("counts: latin 576", hl::enumerate_latin(4).size() == 576);
        check("counts: ashm 924", hl::enumerate_ashm(4).size() == 924);
        check("counts: pashm 2424", hl::enumerate_pashm(4).size() == 2424);
        check("counts: corner-sum 62858", hl::enumerate_corner_sum(4).size() == 62858);
        json r = hl::dm_witness_report(4);
        check("completion: order-4 witness",
              r["completion_holds"] == false && r["witness_covers_only_minimum"] == true &&
                  r["preimage_is_latin"] == false);
    }
    std::cout << (all_ok ? "all checks passed\n" : "FAILURES present\n");
    return all_ok ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"Bruhat order and lattice operations on Latin squares and "
                 "alternating sign hypermatrices"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    int threads = 1;
    app.add_flag("--json", as_json, "machine-readable output and errors");
    app.add_option("--threads", threads, "worker threads for Hasse construction (0 = auto)");

    std::string in_a, in_b, out_path, format, to_kind, kind = "latin";
    int n = 3;
    bool count_only = false, dot = false;

    auto* convert = app.add_subcommand("convert", "convert between object forms");
    convert->add_option("input", in_a)->required();
    convert->add_option("--to", to_kind, "latin|hypermatrix|corner-sum|grid|text")->required();
    convert->add_option("--out", out_path);
    convert->add_option("--format", format, "override input format (latin|json)");

    auto* check = app.add_subcommand("check", "validity predicates with violation report");
    check->add_option("input", in_a)->required();
    check->add_option("--format", format);

    auto* compare = app.add_subcommand("compare", "order verdict with T-block witness");
    compare->add_option("a", in_a)->required();
    compare->add_option("b", in_b)->required();
    compare->add_option("--format", format);

    auto* meet_cmd = app.add_subcommand("meet", "greatest lower bound");
    meet_cmd->add_option("a", in_a)->required();
    meet_cmd->add_option("b", in_b)->required();
    auto* join_cmd = app.add_subcommand("join", "least upper bound");
    join_cmd->add_option("a", in_a)->required();
    join_cmd->add_option("b", in_b)->required();

    auto* extremes = app.add_subcommand("extremes", "minimum and maximum lattice elements");
    extremes->add_option("n", n)->required();

    auto* rank_cmd = app.add_subcommand("rank", "rank profile of an element");
    rank_cmd->add_option("input", in_a)->required();
    rank_cmd->add_option("--format", format);

    auto* enumerate = app.add_subcommand("enumerate", "exhaustive enumeration");
    enumerate->add_option("--kind", kind, "latin|asm|ashm|pashm|corner-sum|triangle")->required();
    enumerate->add_option("--n", n)->required();
    enumerate->add_flag("--count-only", count_only);

    auto* hasse = app.add_subcommand("hasse", "cover graph of an enumerated poset");
    hasse->add_option("--kind", kind, "latin|ashm|corner-sum")->required();
    hasse->add_option("--n", n)->required();
    hasse->add_flag("--dot", dot, "emit DOT instead of JSON");
    hasse->add_option("--out", out_path);

    auto* dm = app.add_subcommand("dm-witness", "Dedekind-MacNeille completion report");
    dm->add_option("n", n)->required();

    auto* verify = app.add_subcommand("verify-all", "run the built-in verification matrix");
    verify->add_option("--n", n, "also run the order-4 checks when >= 4");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2
    }
    if (threads == 0) threads = 4;

    if (convert->parsed()) {
        hl::ParsedObject obj = load(in_a, format);
        if (to_kind == "latin") {
            auto l = hl::to_latin_square(as_hypermatrix(obj));
            if (!l) throw std::invalid_argument("object is not a permutation hypermatrix");
            emit(as_json ? hl::to_json(*l).dump(2) : hl::write_latin_text(*l), out_path);
        } else if (to_kind == "text") {
            auto l = hl::to_latin_square(as_hypermatrix(obj));
            if (!l) throw std::invalid_argument("object is not a permutation hypermatrix");
            emit(hl::write_latin_text(*l), out_path);
        } else if (to_kind == "hypermatrix") {
            emit(hl::to_json(as_hypermatrix(obj)).dump(2), out_path);
        } else if (to_kind == "corner-sum") {
            emit(hl::to_json(as_corner_sum(obj).grid()).dump(2), out_path);
        } else if (to_kind == "grid") {
            emit(grid_text(as_hypermatrix(obj)), out_path);
        } else {
            throw CLI::ValidationError("--to", "unknown target form: " + to_kind);
        }
        return 0;
    }
    if (check->parsed()) return cmd_check(in_a, format, as_json);
    if (compare->parsed()) {
        hl::Hypermatrix a = as_hypermatrix(load(in_a, format));
        hl::Hypermatrix b = as_hypermatrix(load(in_b, format));
        bool ab = hl::bruhat_leq(a, b), ba = hl::bruhat_leq(b, a);
        json out;
        out["a_below_b"] = ab;
        out["b_below_a"] = ba;
        out["relation"] = ab && ba ? "equal" : ab ? "a < b" : ba ? "b < a" : "incomparable";
        if (ab && !ba) out["witness"] = hl::to_json(hl::tblock_witness(a, b).blocks);
        if (ba && !ab) out["witness"] = hl::to_json(hl::tblock_witness(b, a).blocks);
        std::cout << (as_json ? out.dump(2) : "relation: " + out["relation"].get<std::string>() +
                                                  (out.contains("witness")
                                                       ? "\nwitness blocks: " + out["witness"].dump()
                                                       : ""))
                  << "\n";
        return 0;
    }
    if (meet_cmd->parsed() || join_cmd->parsed()) {
        hl::CornerSumHypermatrix a = as_corner_sum(load(in_a, format));
        hl::CornerSumHypermatrix b = as_corner_sum(load(in_b, format));
        auto r = meet_cmd->parsed() ? hl::meet(a, b) : hl::join(a, b);
        emit(hl::to_json(r.grid()).dump(2), out_path);
        return 0;
    }
    if (extremes->parsed()) {
        json out = {{"minimum", hl::to_json(hl::minimum_element(n).grid())},
                    {"maximum", hl::to_json(hl::maximum_element(n).grid())}};
        emit(out.dump(2), out_path);
        return 0;
    }
    if (rank_cmd->parsed()) {
        hl::RankProfile p = hl::rank_profile(as_corner_sum(load(in_a, format)));
        json out = {{"n", p.n}, {"rho", p.rho}, {"rank", p.rank}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (enumerate->parsed()) {
        auto dump_lines = [&](auto&& items, auto&& to_j) {
            if (count_only) {
                std::cout << items.size() << "\n";
                return;
            }
            for (const auto& e : items) std::cout << to_j(e).dump() << "\n";
        };
        if (kind == "latin")
            dump_lines(hl::enumerate_latin(n), [](const hl::LatinSquare& l) { return hl::to_json(l); });
        else if (kind == "asm")
            dump_lines(hl::enumerate_asm(n), [](const hl::Matrix& m) { return hl::to_json(m); });
        else if (kind == "ashm")
            dump_lines(hl::enumerate_ashm(n), [](const hl::Hypermatrix& a) { return hl::to_json(a); });
        else if (kind == "pashm")
            dump_lines(hl::enumerate_pashm(n), [](const hl::Hypermatrix& a) { return hl::to_json(a); });
        else if (kind == "corner-sum")
            dump_lines(hl::enumerate_corner_sum(n),
                       [](const hl::CornerSumHypermatrix& c) { return hl::to_json(c.grid()); });
        else if (kind == "triangle")
            dump_lines(hl::enumerate_monotone_hypertriangles(n), [](const hl::MonotoneHypertriangle& t) {
                return hl::to_json(hl::from_triangle(t));
            });
        else
            throw CLI::ValidationError("--kind", "unknown kind: " + kind);
        return 0;
    }
    if (hasse->parsed()) {
        hl::HasseGraph g{"", 0, 0, {}};
        std::vector<std::string> labels;
        if (kind == "corner-sum") {
            auto elems = hl::enumerate_corner_sum(n);
            g = hl::build_hasse(elems, threads);
            for (const auto& e : elems) labels.push_back(grid_text(hl::xi_inverse(e.grid())));
        } else if (kind == "latin") {
            auto elems = hl::enumerate_latin(n);
            g = hl::build_hasse(
                static_cast<int>(elems.size()),
                [&](int a, int b) { return hl::bruhat_leq(elems[a], elems[b]); }, "latin", n);
            for (const auto& e : elems) labels.push_back(hl::write_latin_text(e));
        } else if (kind == "ashm") {
            auto elems = hl::enumerate_ashm(n);
            g = hl::build_hasse(
                static_cast<int>(elems.size()),
                [&](int a, int b) { return hl::bruhat_leq(elems[a], elems[b]); }, "ashm", n);
            for (const auto& e : elems) labels.push_back(grid_text(e));
        } else {
            throw CLI::ValidationError("--kind", "unknown kind: " + kind);
        }
        emit(dot ? hl::hasse_to_dot(g, labels) : hl::hasse_to_json(g, labels), out_path);
        return 0;
    }
    if (dm->parsed()) {
        std::cout << hl::dm_witness_report(n).dump(2) << "\n";
        return 0;
    }
    if (verify->parsed()) return cmd_verify_all(n);
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    bool as_json = false;
    for (int t = 1; t < argc; ++t)
        if (std::string(argv[t]) == "--json") as_json = true;
    try {
        return run(argc, argv);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        if (as_json)
            std::cerr << json{{"error", e.what()}}.dump() << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        if (as_json)
            std::cerr << json{{"error", e.what()}}.dump() << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

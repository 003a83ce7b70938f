#include "hyperlattice/io.hpp"

#include <sstream>
#include <stdexcept>

namespace hyperlattice {

namespace {

nlohmann::json matrix_entries(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 1; i <= m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 1; j <= m.cols(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_entries(const nlohmann::json& e) {
    std::vector<std::vector<int>> grid;
    for (const auto& row : e) grid.push_back(row.get<std::vector<int>>());
    return Matrix(grid);
}

}  // namespace

nlohmann::json to_json(const Matrix& m) {
    return {{"kind", "matrix"}, {"n", m.rows()}, {"entries", matrix_entries(m)}};
}

nlohmann::json to_json(const LatinSquare& l) {
    return {{"kind", "latin"}, {"n", l.order()}, {"entries", matrix_entries(l.cells())}};
}

nlohmann::json to_json(const Hypermatrix& a) {
    int n = a.order();
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 1; i <= n; ++i) {
        nlohmann::json plane = nlohmann::json::array();
        for (int j = 1; j <= n; ++j) {
            nlohmann::json line = nlohmann::json::array();
            for (int k = 1; k <= n; ++k) line.push_back(a.at(i, j, k));
            plane.push_back(std::move(line));
        }
        entries.push_back(std::move(plane));
    }
    return {{"kind", "hypermatrix"}, {"n", n}, {"entries", entries}};
}

nlohmann::json to_json(const CornerGrid3& c) {
    int n = c.order();
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 0; i <= n; ++i) {
        nlohmann::json plane = nlohmann::json::array();
        for (int j = 0; j <= n; ++j) {
            nlohmann::json line = nlohmann::json::array();
            for (int k = 0; k <= n; ++k) line.push_back(c.at(i, j, k));
            plane.push_back(std::move(line));
        }
        entries.push_back(std::move(plane));
    }
    return {{"kind", "corner_sum"}, {"n", n}, {"entries", entries}};
}

ParsedObject from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("n") || !j.contains("entries"))
        throw std::invalid_argument("expected an object with kind, n, entries");
    std::string kind = j["kind"];
    int n = j["n"];
    const nlohmann::json& e = j["entries"];
    try {
        if (kind == "matrix") {
            Matrix m = matrix_from_entries(e);
            if (m.rows() != n) throw std::invalid_argument("n does not match entries");
            return m;
        }
        if (kind == "latin") return LatinSquare(matrix_from_entries(e));
        if (kind == "hypermatrix" || kind == "corner_sum") {
            bool corner = kind == "corner_sum";
            int lo = corner ? 0 : 1;
            size_t want = static_cast<size_t>(n + (corner ? 1 : 0));
            if (e.size() != want) throw std::invalid_argument("n does not match entries");
            if (corner) {
                CornerGrid3 c(n);
                for (int i = lo; i <= n; ++i)
                    for (int j = lo; j <= n; ++j)
                        for (int k = lo; k <= n; ++k) c.at(i, j, k) = e.at(i).at(j).at(k);
                return c;
            }
            Hypermatrix a(n);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    for (int k = 1; k <= n; ++k) a.at(i, j, k) = e.at(i - 1).at(j - 1).at(k - 1);
            return a;
        }
    } catch (const nlohmann::json::exception&) {
        throw std::invalid_argument("malformed entries for kind " + kind);
    }
    throw std::invalid_argument("unknown kind: " + kind);
}

std::string write_latin_text(const LatinSquare& l) {
    std::ostringstream out;
    for (int i = 1; i <= l.order(); ++i) {
        for (int j = 1; j <= l.order(); ++j) {
            if (j > 1) out << ' ';
            out << l.at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

LatinSquare read_latin_text(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::vector<int>> grid;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::vector<int> values;
        int v;
        while (row >> v) values.push_back(v);
        std::string tail;
        if (row.clear(), row >> tail) throw std::invalid_argument("non-numeric token: " + tail);
        if (!values.empty()) grid.push_back(std::move(values));
    }
    if (grid.empty()) throw std::invalid_argument("empty square");
    return LatinSquare(grid);
}

nlohmann::json to_json(const TBlock3D& t) {
    return {{"i1", t.i1}, {"i2", t.i2}, {"j1", t.j1},
            {"j2", t.j2}, {"k1", t.k1}, {"k2", t.k2}, {"sign", t.sign}};
}

nlohmann::json to_json(const std::vector<TBlock3D>& blocks) {
    nlohmann::json out = nlohmann::json::array();
    for (const TBlock3D& t : blocks) out.push_back(to_json(t));
    return out;
}

std::vector<TBlock3D> tblocks_from_json(const nlohmann::json& j) {
    std::vector<TBlock3D> out;
    for (const auto& e : j)
        out.push_back({e.at("i1"), e.at("i2"), e.at("j1"), e.at("j2"), e.at("k1"), e.at("k2"),
                       e.value("sign", 1)});
    return out;
}

}  // namespace hyperlattice

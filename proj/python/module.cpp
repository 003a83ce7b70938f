#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "hyperlattice/bruhat.hpp"
#include "hyperlattice/core.hpp"
#include "hyperlattice/enumerate.hpp"
#include "hyperlattice/io.hpp"
#include "hyperlattice/lattice.hpp"
#include "hyperlattice/rank.hpp"
#include "hyperlattice/triangles.hpp"
#include "hyperlattice/types.hpp"

namespace py = pybind11;
using namespace hyperlattice;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null:
            return py::none();
        case nlohmann::json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer:
        case nlohmann::json::value_t::number_unsigned:
            return py::int_(j.get<long long>());
        case nlohmann::json::value_t::number_float:
            return py::float_(j.get<double>());
        case nlohmann::json::value_t::string:
            return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& e : j) out.append(json_to_py(e));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default:
            throw std::runtime_error("unsupported json value");
    }
}

Matrix matrix_from_lists(const std::vector<std::vector<int>>& grid) { return Matrix(grid); }

std::vector<std::vector<int>> matrix_to_lists(const Matrix& m) {
    std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols()));
    for (int i = 1; i <= m.rows(); ++i)
        for (int j = 1; j <= m.cols(); ++j) out[i - 1][j - 1] = m.at(i, j);
    return out;
}

Hypermatrix hyper_from_lists(const std::vector<std::vector<std::vector<int>>>& grid) {
    int n = static_cast<int>(grid.size());
    Hypermatrix a(n);
    for (int i = 1; i <= n; ++i) {
        if (static_cast<int>(grid[i - 1].size()) != n)
            throw std::invalid_argument("hypermatrix rows must have length n");
        for (int j = 1; j <= n; ++j) {
            if (static_cast<int>(grid[i - 1][j - 1].size()) != n)
                throw std::invalid_argument("hypermatrix fibers must have length n");
            for (int k = 1; k <= n; ++k) a.at(i, j, k) = grid[i - 1][j - 1][k - 1];
        }
    }
    return a;
}

std::vector<std::vector<std::vector<int>>> hyper_to_lists(const Hypermatrix& a) {
    int n = a.order();
    std::vector<std::vector<std::vector<int>>> out(
        n, std::vector<std::vector<int>>(n, std::vector<int>(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) out[i - 1][j - 1][k - 1] = a.at(i, j, k);
    return out;
}

CornerSumHypermatrix corner_from_lists(const std::vector<std::vector<std::vector<int>>>& grid) {
    int n = static_cast<int>(grid.size()) - 1;
    if (n < 1) throw std::invalid_argument("corner-sum grid must span indices 0..n");
    CornerGrid3 g(n);
    for (int i = 0; i <= n; ++i) {
        if (static_cast<int>(grid[i].size()) != n + 1)
            throw std::invalid_argument("corner-sum grid must be (n+1)^3");
        for (int j = 0; j <= n; ++j) {
            if (static_cast<int>(grid[i][j].size()) != n + 1)
                throw std::invalid_argument("corner-sum grid must be (n+1)^3");
            for (int k = 0; k <= n; ++k) g.at(i, j, k) = grid[i][j][k];
        }
    }
    return CornerSumHypermatrix(std::move(g));
}

std::vector<std::vector<std::vector<int>>> corner_to_lists(const CornerSumHypermatrix& c) {
    int n = c.order();
    std::vector<std::vector<std::vector<int>>> out(
        n + 1, std::vector<std::vector<int>>(n + 1, std::vector<int>(n + 1)));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            for (int k = 0; k <= n; ++k) out[i][j][k] = c.at(i, j, k);
    return out;
}

std::vector<std::vector<int>> corner_sum_matrix_to_lists(const CornerSumMatrix& c) {
    int n = c.order();
    std::vector<std::vector<int>> out(n + 1, std::vector<int>(n + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) out[i][j] = c.at(i, j);
    return out;
}

CornerSumMatrix corner_sum_matrix_from_lists(const std::vector<std::vector<int>>& grid) {
    return CornerSumMatrix(grid);
}

}  // namespace

PYBIND11_MODULE(_hyperlattice, m) {
    m.doc() = "Bruhat order on Latin squares and alternating sign hypermatrices";

    py::register_exception<cap_exceeded>(m, "CapExceeded", PyExc_RuntimeError);

    py::class_<LatinSquare>(m, "LatinSquare")
        .def(py::init<const std::vector<std::vector<int>>&>(), py::arg("grid"))
        .def_property_readonly("order", &LatinSquare::order)
        .def("at", [](const LatinSquare& l, int i, int j) { return l.at(i, j); },
             py::arg("i"), py::arg("j"))
        .def("to_list", [](const LatinSquare& l) { return matrix_to_lists(l.cells()); })
        .def("to_hypermatrix", &LatinSquare::to_hypermatrix)
        .def(py::self == py::self)
        .def("__repr__", [](const LatinSquare& l) {
            return "LatinSquare(" + py::repr(py::cast(matrix_to_lists(l.cells()))).cast<std::string>() + ")";
        });

    py::class_<Matrix>(m, "Matrix")
        .def(py::init(&matrix_from_lists), py::arg("grid"))
        .def_property_readonly("rows", &Matrix::rows)
        .def_property_readonly("cols", &Matrix::cols)
        .def("at", [](const Matrix& mm, int i, int j) { return mm.at(i, j); },
             py::arg("i"), py::arg("j"))
        .def("to_list", &matrix_to_lists)
        .def(py::self == py::self);

    py::class_<Hypermatrix>(m, "Hypermatrix")
        .def(py::init(&hyper_from_lists), py::arg("grid"))
        .def_property_readonly("order", &Hypermatrix::order)
        .def("at", [](const Hypermatrix& a, int i, int j, int k) { return a.at(i, j, k); },
             py::arg("i"), py::arg("j"), py::arg("k"))
        .def("to_list", &hyper_to_lists)
        .def("plane", [](const Hypermatrix& a, int k) { return matrix_to_lists(a.plane(k)); },
             py::arg("k"), "Symbol plane k as a list of lists.")
        .def(py::self == py::self);

    py::class_<CornerSumHypermatrix>(m, "CornerSumHypermatrix")
        .def(py::init(&corner_from_lists), py::arg("grid"),
             "Grid is indexed [0..n]^3 and validated on construction.")
        .def_property_readonly("order", &CornerSumHypermatrix::order)
        .def("at", [](const CornerSumHypermatrix& c, int i, int j, int k) { return c.at(i, j, k); },
             py::arg("i"), py::arg("j"), py::arg("k"))
        .def("to_list", &corner_to_lists)
        .def(py::self == py::self)
        .def("__hash__", [](const CornerSumHypermatrix& c) {
            size_t h = 1469598103934665603ull;
            for (int v : c.grid().data()) h = (h ^ static_cast<size_t>(v)) * 1099511628211ull;
            return h;
        });

    py::class_<MonotoneHypertriangle>(m, "MonotoneHypertriangle")
        .def_property_readonly("order", &MonotoneHypertriangle::order)
        .def("row", &MonotoneHypertriangle::row, py::arg("i"), py::arg("k"),
             "Weakly increasing symbol list of row (i, k).")
        .def("mult", [](const MonotoneHypertriangle& t, int i, int j, int k) { return t.mult(i, j, k); },
             py::arg("i"), py::arg("j"), py::arg("k"))
        .def("render", &render_triangle)
        .def(py::self == py::self);

    py::class_<TBlock3D>(m, "TBlock")
        .def(py::init([](int i1, int i2, int j1, int j2, int k1, int k2, int sign) {
                 return TBlock3D{i1, i2, j1, j2, k1, k2, sign};
             }),
             py::arg("i1"), py::arg("i2"), py::arg("j1"), py::arg("j2"), py::arg("k1"),
             py::arg("k2"), py::arg("sign") = 1)
        .def_readwrite("i1", &TBlock3D::i1)
        .def_readwrite("i2", &TBlock3D::i2)
        .def_readwrite("j1", &TBlock3D::j1)
        .def_readwrite("j2", &TBlock3D::j2)
        .def_readwrite("k1", &TBlock3D::k1)
        .def_readwrite("k2", &TBlock3D::k2)
        .def_readwrite("sign", &TBlock3D::sign)
        .def(py::self == py::self);

    // Transforms.
    m.def("sigma", [](const LatinSquare& l) { return corner_sum_matrix_to_lists(sigma(l)); },
          py::arg("latin"), "2-D corner-sum matrix of a Latin square, as (n+1)^2 lists.");
    m.def("sigma_inverse",
          [](const std::vector<std::vector<int>>& grid) {
              return matrix_to_lists(sigma_inverse(corner_sum_matrix_from_lists(grid)));
          },
          py::arg("grid"), "Square recovered by differencing an (n+1)^2 corner-sum grid.");
    m.def("xi", [](const LatinSquare& l) { return CornerSumHypermatrix(xi(l)); }, py::arg("latin"));
    m.def("xi", [](const Hypermatrix& a) { return CornerSumHypermatrix(xi(a)); },
          py::arg("hypermatrix"));
    m.def("xi_inverse", [](const CornerSumHypermatrix& c) { return xi_inverse(c.grid()); },
          py::arg("corner_sum"));
    m.def("plane_sum",
          [](const CornerSumHypermatrix& c) { return corner_sum_matrix_to_lists(plane_sum(c)); },
          py::arg("corner_sum"), "Sum over symbol planes, an (n+1)^2 grid.");
    m.def("to_latin_square",
          [](const Hypermatrix& a) -> py::object {
              auto l = to_latin_square(a);
              return l ? py::cast(*l) : py::none();
          },
          py::arg("hypermatrix"));

    // Predicates.
    m.def("is_latin", [](const std::vector<std::vector<int>>& g) { return is_latin(Matrix(g)); },
          py::arg("grid"));
    m.def("is_asm", [](const Matrix& a) { return is_asm(a); }, py::arg("matrix"));
    m.def("is_ashm", [](const Hypermatrix& a) { return is_ashm(a); }, py::arg("hypermatrix"));
    m.def("is_pashm", [](const Hypermatrix& a) { return is_pashm(a); }, py::arg("hypermatrix"));
    m.def("is_in_xi_preimage", &is_in_xi_preimage, py::arg("hypermatrix"));

    // Order and lattice operations.
    m.def("bruhat_leq",
          [](const LatinSquare& a, const LatinSquare& b) { return bruhat_leq(a, b); },
          py::arg("a"), py::arg("b"));
    m.def("bruhat_leq",
          [](const Hypermatrix& a, const Hypermatrix& b) { return bruhat_leq(a, b); },
          py::arg("a"), py::arg("b"));
    m.def("bruhat_leq",
          [](const CornerSumHypermatrix& a, const CornerSumHypermatrix& b) {
              return bruhat_leq(a, b);
          },
          py::arg("a"), py::arg("b"));
    m.def("meet", &meet, py::arg("a"), py::arg("b"));
    m.def("join", &join, py::arg("a"), py::arg("b"));
    m.def("covers_in_lattice", &covers_in_lattice, py::arg("a"), py::arg("b"),
          "True when b covers a.");
    m.def("covered_elements", &covered_elements, py::arg("c"));
    m.def("minimum_element", &minimum_element, py::arg("n"));
    m.def("maximum_element", &maximum_element, py::arg("n"));
    m.def("construct_un", &construct_un, py::arg("n"));
    m.def("is_distributive_triple", &is_distributive_triple, py::arg("x"), py::arg("y"),
          py::arg("z"));
    m.def("join_irreducibles", &join_irreducibles, py::arg("elements"));
    m.def("dm_witness_report", [](int n) { return json_to_py(dm_witness_report(n)); },
          py::arg("n"));

    // Witnesses.
    m.def("tblock_witness",
          [](const Hypermatrix& lower, const Hypermatrix& upper) {
              auto w = tblock_witness(lower, upper);
              py::dict out;
              out["ok"] = w.ok;
              out["blocks"] = py::cast(w.blocks);
              out["intermediates_valid"] = w.intermediates_valid;
              return out;
          },
          py::arg("lower"), py::arg("upper"));
    m.def("apply_tblock", &apply_tblock, py::arg("hypermatrix"), py::arg("block"));

    // Ranks.
    m.def("rho", [](const Hypermatrix& a) { return rho(a); }, py::arg("hypermatrix"));
    m.def("rho", [](const CornerSumHypermatrix& c) { return rho(c); }, py::arg("corner_sum"));
    m.def("rank_of", [](const Hypermatrix& a) { return rank_of(a); }, py::arg("hypermatrix"));
    m.def("rank_of", [](const CornerSumHypermatrix& c) { return rank_of(c); },
          py::arg("corner_sum"));
    m.def("rank_profile",
          [](const CornerSumHypermatrix& c) {
              auto p = rank_profile(c);
              py::dict out;
              out["n"] = p.n;
              out["rho"] = p.rho;
              out["rank"] = p.rank;
              return out;
          },
          py::arg("corner_sum"));
    m.def("m_closed_form", &m_closed_form, py::arg("n"));
    m.def("lattice_rank", &lattice_rank, py::arg("n"));
    m.def("asm_rank", &asm_rank, py::arg("matrix"));

    // Triangles.
    m.def("to_triangle", &to_triangle, py::arg("hypermatrix"));
    m.def("from_triangle", &from_triangle, py::arg("triangle"));
    m.def("triangle_leq", &triangle_leq, py::arg("a"), py::arg("b"));
    m.def("is_monotone_hypertriangle", &is_monotone_hypertriangle, py::arg("triangle"));

    // Enumeration and cover graphs.
    m.def("enumerate_latin", &enumerate_latin, py::arg("n"));
    m.def("enumerate_ashm", [](int n) { return enumerate_ashm(n); }, py::arg("n"));
    m.def("enumerate_pashm", [](int n) { return enumerate_pashm(n); }, py::arg("n"));
    m.def("enumerate_corner_sum", &enumerate_corner_sum, py::arg("n"));
    m.def("enumerate_monotone_hypertriangles", &enumerate_monotone_hypertriangles, py::arg("n"));
    m.def("hasse",
          [](const std::vector<CornerSumHypermatrix>& elements, int threads) {
              auto h = build_hasse(elements, threads);
              py::dict out;
              out["kind"] = h.kind;
              out["n"] = h.n;
              out["node_count"] = h.node_count;
              out["edges"] = py::cast(h.edges);
              return out;
          },
          py::arg("elements"), py::arg("threads") = 1,
          "Cover graph of the full corner-sum lattice; edge (a, b) means b covers a.");
}

#include "bianchik/fixtures.hpp"

#include <filesystem>
#include <fstream>

namespace bianchik {

namespace {

// Vertex-ring basis blocks: b (4), u (4), a (2), v (3).
// Edge-ring basis blocks: ba (2), vv1 (3), a3u (2), ub (2), u1b (2), av (1), as (1).
const std::vector<std::vector<long long>> kD1Rows = {
    {-1, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0},
    {0, -1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0},
    {-1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0},
    {0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, -1, 0, -1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 0, -1, -1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, -1, 0, 0, -1, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, -1, 0, -1, 0, 0},
    {1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, -1, -1},
    {0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
};

// Source layout is 3 rows (faces) by 13 columns (edges); the differential d2
// itself is its transpose.
const std::vector<std::vector<long long>> kD2Transposed = {
    {-1, -1, -1, -1, -1, -1, -1, 0, 0, -1, -1, 0, 0},
    {1, 1, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
};

}  // namespace

MatrixDocument m5_matrix_document() {
    MatrixDocument doc;
    doc.m = 5;
    doc.class_number = 2;
    doc.d1 = IntMatrix::from_rows(kD1Rows);
    doc.d2 = IntMatrix::from_rows(kD2Transposed).transposed();
    DocLabels labels;
    labels.vertices = {"b", "b", "b", "b", "u", "u", "u", "u", "a", "a", "v", "v", "v"};
    labels.edges = {"(b, a)", "(b, a)", "(v, v_1)", "(v, v_1)", "(v, v_1)", "(a_3, u)",
                    "(a_3, u)", "(u, b)", "(u, b)", "(u_1, b)", "(u_1, b)", "(a, v)", "(a, s)"};
    labels.faces = {"large cell", "mid-size cell", "small cell"};
    doc.labels = labels;
    return doc;
}

ComplexDocument toy_edge_document() {
    ComplexDocument doc;
    doc.complex.class_number_k = 1;
    doc.complex.cells = {
        CellOrbit{"p", "p", 0, GroupType::Trivial, false},
        CellOrbit{"e", "e", 1, GroupType::Trivial, true},
    };
    doc.complex.incidences = {
        IncidenceEntry{"e", "p", Int(-1), std::string("Trivial-in-Trivial")},
    };
    return doc;
}

ComplexDocument unpruned_edge_document() {
    ComplexDocument doc;
    doc.complex.class_number_k = 1;
    doc.complex.cells = {
        CellOrbit{"p", "p", 0, GroupType::Trivial, false},
        CellOrbit{"q", "q", 0, GroupType::Trivial, false},
        CellOrbit{"e", "e", 1, GroupType::Trivial, false},
    };
    doc.complex.incidences = {
        IncidenceEntry{"e", "p", Int(-1), std::string("Trivial-in-Trivial")},
        IncidenceEntry{"e", "q", Int(1), std::string("Trivial-in-Trivial")},
    };
    return doc;
}

HintsDocument m5_hints_document() {
    HintsDocument doc;
    doc.arrow_ranks = {{0, 0}, {1, 6}, {2, 0}, {3, 4}, {4, 0}, {5, 4}};
    doc.note =
        "Arrow ranks for the boundary six-term sequence (arrow i: node i -> node i+1; "
        "nodes: corner, RK_0, K0(halfspace), corner, RK_1, K1(halfspace)). This is the "
        "assignment that pins the known K-homology of PSL_2(O_-5); the solver reports "
        "all alternatives when run without it.";
    return doc;
}

EmittedFixtures emit_fixtures(const std::string& outdir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(outdir, ec);
    if (ec) throw std::runtime_error("emit_fixtures: cannot create directory " + outdir);

    const auto write = [&](const std::string& name, const std::string& content) {
        const std::string path = (fs::path(outdir) / name).string();
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("emit_fixtures: cannot open " + path);
        out << content;
        if (!out) throw std::runtime_error("emit_fixtures: write failed for " + path);
        return path;
    };

    EmittedFixtures paths;
    paths.matrix_path = write("m5_matrices.json", serialize_matrix_document(m5_matrix_document()));
    paths.toy_edge_path = write("toy_edge.json", serialize_complex_document(toy_edge_document()));
    paths.hints_path = write("m5_hints.json", serialize_hints_document(m5_hints_document()));
    return paths;
}

}  // namespace bianchik

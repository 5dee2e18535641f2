#include "bianchik/gamma_cw.hpp"

#include <map>
#include <sstream>

namespace bianchik {

namespace {

std::string violation(const std::string& what) { return what; }

// Resolve an incidence map to an induction matrix from R(stab(cell)) to
// R(stab(face)), validating explicit matrices against the induction-matrix
// invariants (nonnegative entries, index * dimension column identity).
IntMatrix resolve_map(const IncidenceEntry& inc, GroupType cell_stab, GroupType face_stab,
                      std::vector<std::string>* report) {
    if (std::holds_alternative<std::string>(inc.map)) {
        const std::string& name = std::get<std::string>(inc.map);
        const auto& reg = canonical_embeddings();
        auto it = reg.find(name);
        if (it == reg.end()) {
            if (report)
                report->push_back(violation("incidence " + inc.cell + " -> " + inc.face +
                                            ": unknown canonical embedding '" + name + "'"));
            return IntMatrix();
        }
        const EmbeddingSpec& e = it->second;
        if (e.sub != cell_stab || e.sup != face_stab) {
            if (report)
                report->push_back(violation(
                    "incidence " + inc.cell + " -> " + inc.face + ": embedding '" + name +
                    "' does not match stabilizers " + to_string(cell_stab) + " -> " +
                    to_string(face_stab)));
            return IntMatrix();
        }
        return induction_matrix(e).matrix;
    }

    const IntMatrix& m = std::get<IntMatrix>(inc.map);
    const CharacterTable sub = character_table(cell_stab);
    const CharacterTable sup = character_table(face_stab);
    if (m.rows != sup.num_irreducibles() || m.cols != sub.num_irreducibles()) {
        if (report)
            report->push_back(violation("incidence " + inc.cell + " -> " + inc.face +
                                        ": explicit matrix has wrong shape"));
        return IntMatrix();
    }
    if (group_order(face_stab) % group_order(cell_stab) != 0) {
        if (report)
            report->push_back(violation("incidence " + inc.cell + " -> " + inc.face +
                                        ": stabilizer order does not divide face stabilizer order"));
        return IntMatrix();
    }
    const Int index = Int(group_order(face_stab) / group_order(cell_stab));
    for (const Int& v : m.entries)
        if (v < 0) {
            if (report)
                report->push_back(violation("incidence " + inc.cell + " -> " + inc.face +
                                            ": explicit matrix has a negative entry"));
            return IntMatrix();
        }
    for (std::size_t i = 0; i < m.cols; ++i) {
        Int total = 0;
        for (std::size_t j = 0; j < m.rows; ++j) total += sup.dimension(j) * m.at(j, i);
        if (total != index * sub.dimension(i)) {
            if (report) {
                std::ostringstream os;
                os << "incidence " << inc.cell << " -> " << inc.face << ": column " << i
                   << " violates the induced-dimension identity";
                report->push_back(os.str());
            }
            return IntMatrix();
        }
    }
    return m;
}

}  // namespace

std::vector<std::string> validate(const PrunedComplex& c) {
    std::vector<std::string> report;
    std::map<std::string, const CellOrbit*> by_id;

    for (const CellOrbit& cell : c.cells) {
        if (cell.dim < 0 || cell.dim > 2)
            report.push_back(violation("cell " + cell.id + ": dimension out of range"));
        if (cell.dim == 0 && cell.touches_singular)
            report.push_back(violation("vertex " + cell.id + ": vertices cannot touch singular points"));
        if (!by_id.emplace(cell.id, &cell).second)
            report.push_back(violation("duplicate cell id " + cell.id));
    }

    std::map<std::string, std::size_t> vertex_incidences;  // per edge id
    for (const IncidenceEntry& inc : c.incidences) {
        auto cell_it = by_id.find(inc.cell);
        auto face_it = by_id.find(inc.face);
        if (cell_it == by_id.end()) {
            report.push_back(violation("incidence references unknown cell " + inc.cell));
            continue;
        }
        if (face_it == by_id.end()) {
            report.push_back(violation("incidence references unknown face " + inc.face));
            continue;
        }
        const CellOrbit& cell = *cell_it->second;
        const CellOrbit& face = *face_it->second;
        if (cell.dim != face.dim + 1) {
            report.push_back(violation("incidence " + inc.cell + " -> " + inc.face +
                                       ": face dimension is not one less"));
            continue;
        }
        if (cell.dim == 1) vertex_incidences[cell.id] += 1;
        resolve_map(inc, cell.stabilizer, face.stabilizer, &report);
    }

    for (const CellOrbit& cell : c.cells) {
        if (cell.dim != 1) continue;
        const std::size_t n = vertex_incidences.count(cell.id) ? vertex_incidences[cell.id] : 0;
        if (cell.touches_singular && n != 1) {
            std::ostringstream os;
            os << "edge " << cell.id << " touches a singular point but has " << n
               << " vertex incidences (expected exactly 1)";
            report.push_back(os.str());
        }
        if (!cell.touches_singular && (n < 1 || n > 2)) {
            std::ostringstream os;
            os << "edge " << cell.id << " has " << n << " vertex incidences (expected 1 or 2)";
            report.push_back(os.str());
        }
    }

    return report;
}

BredonComplex assemble_bredon(const PrunedComplex& c) {
    {
        auto report = validate(c);
        if (!report.empty())
            throw std::invalid_argument("assemble_bredon: invalid complex: " + report.front());
    }

    // Block offsets per cell, in declaration order within each dimension.
    std::map<std::string, std::size_t> offset;
    std::map<std::string, const CellOrbit*> by_id;
    std::size_t total[3] = {0, 0, 0};
    BredonComplex out;
    for (const CellOrbit& cell : c.cells) {
        by_id[cell.id] = &cell;
        offset[cell.id] = total[cell.dim];
        const std::size_t r = irreducible_count(cell.stabilizer);
        total[cell.dim] += r;
        auto& labels = cell.dim == 0 ? out.vertex_labels
                     : cell.dim == 1 ? out.edge_labels
                                     : out.face_labels;
        for (std::size_t i = 0; i < r; ++i) labels.push_back(cell.name.empty() ? cell.id : cell.name);
    }

    out.d1 = IntMatrix(total[0], total[1]);
    out.d2 = IntMatrix(total[1], total[2]);

    for (const IncidenceEntry& inc : c.incidences) {
        const CellOrbit& cell = *by_id[inc.cell];
        const CellOrbit& face = *by_id[inc.face];
        IntMatrix block = resolve_map(inc, cell.stabilizer, face.stabilizer, nullptr);
        IntMatrix& d = cell.dim == 1 ? out.d1 : out.d2;
        const std::size_t r0 = offset[inc.face];
        const std::size_t c0 = offset[inc.cell];
        for (std::size_t i = 0; i < block.rows; ++i)
            for (std::size_t j = 0; j < block.cols; ++j)
                d.at(r0 + i, c0 + j) += inc.coefficient * block.at(i, j);
    }

    if (!(out.d1 * out.d2).is_zero())
        throw IncidenceDataInconsistent(
            "assemble_bredon: d1 * d2 != 0; incidence coefficients or embeddings are wrong");
    return out;
}

bool euler_check(const PrunedComplex& c, const FgAbelianGroup& h0, const FgAbelianGroup& h1,
                 const FgAbelianGroup& h2) {
    long long cells = 0;
    for (const CellOrbit& cell : c.cells) {
        const long long r = static_cast<long long>(irreducible_count(cell.stabilizer));
        cells += (cell.dim % 2 == 0) ? r : -r;
    }
    const long long homology = static_cast<long long>(h0.free_rank) -
                               static_cast<long long>(h1.free_rank) +
                               static_cast<long long>(h2.free_rank);
    return cells == homology;
}

}  // namespace bianchik

#pragma once

// Data model and validator for a pruned 2-dimensional equivariant cell
// complex, and assembly of its modified Bredon chain complex.  Cells are
// orbit representatives; only stabilizer types and class-map data enter the
// differentials, never the group itself.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "bianchik/exact_linalg.hpp"
#include "bianchik/rep_theory.hpp"

namespace bianchik {

struct CellOrbit {
    std::string id;
    std::string name;  // display only
    int dim = 0;       // 0, 1 or 2
    GroupType stabilizer = GroupType::Trivial;
    // An edge whose missing endpoint was pruned away keeps a single vertex
    // incidence; vertices themselves are never marked (pruned vertices are
    // simply absent from the complex).
    bool touches_singular = false;
};

struct IncidenceEntry {
    std::string cell;  // id of the p-cell
    std::string face;  // id of the (p-1)-cell
    Int coefficient;   // incidence number, orientation signs included
    // Either a canonical embedding name or an explicit induction matrix
    // (rows irr(face stabilizer), columns irr(cell stabilizer)).
    std::variant<std::string, IntMatrix> map;
};

struct PrunedComplex {
    std::vector<CellOrbit> cells;
    std::vector<IncidenceEntry> incidences;
    std::size_t class_number_k = 1;
};

// Lists every violated invariant with the offending cell ids; empty <=> valid.
std::vector<std::string> validate(const PrunedComplex& c);

// Differentials of the modified Bredon complex over the orbit bases, ordered
// by cell declaration order.  Basis labels are kept for reports.
struct BredonComplex {
    IntMatrix d1;  // rows: vertex representation rings, cols: edge rings
    IntMatrix d2;  // rows: edge rings, cols: face rings
    std::vector<std::string> vertex_labels;
    std::vector<std::string> edge_labels;
    std::vector<std::string> face_labels;
};

// Requires validate(c) to be empty.  Repeated (cell, face) pairs are summed
// after scaling.  Throws IncidenceDataInconsistent when d1 * d2 != 0.
BredonComplex assemble_bredon(const PrunedComplex& c);

// Alternating sum of representation-ring ranks equals the alternating sum of
// homology free ranks.
bool euler_check(const PrunedComplex& c, const FgAbelianGroup& h0, const FgAbelianGroup& h1,
                 const FgAbelianGroup& h2);

}  // namespace bianchik

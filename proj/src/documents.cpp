#include "bianchik/documents.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

namespace bianchik {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

Int int_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s.empty()) throw DocumentError(where + ": empty integer string");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) throw DocumentError(where + ": bad integer '" + s + "'");
        for (std::size_t i = start; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw DocumentError(where + ": bad integer '" + s + "'");
        return Int(s);
    }
    throw DocumentError(where + ": expected an integer (number or decimal string)");
}

// Integers that fit a double-exact range stay JSON numbers; larger values are
// emitted as decimal strings.
ordered_json int_to_json(const Int& v) {
    static const Int lo = -(Int(1) << 53), hi = Int(1) << 53;
    if (v > lo && v < hi) return ordered_json(static_cast<std::int64_t>(v));
    return ordered_json(v.str());
}

void reject_unknown_keys(const json& obj, const std::vector<std::string>& allowed,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
            throw DocumentError(where + ": unknown key '" + it.key() + "'");
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw DocumentError("malformed JSON");
    return j;
}

// Type errors from field accessors become DocumentError so the CLI maps them
// to the input-error exit code.
template <typename F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw DocumentError(std::string(what) + ": " + e.what());
    }
}

IntMatrix matrix_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw DocumentError(where + ": expected an array of rows");
    std::vector<std::vector<Int>> rows;
    for (const json& row : j) {
        if (!row.is_array()) throw DocumentError(where + ": expected an array of rows");
        std::vector<Int> r;
        for (const json& v : row) r.push_back(int_from_json(v, where));
        rows.push_back(std::move(r));
    }
    IntMatrix m;
    m.rows = rows.size();
    m.cols = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows) {
        if (r.size() != m.cols) throw DocumentError(where + ": ragged rows");
        for (const Int& v : r) m.entries.push_back(v);
    }
    return m;
}

ordered_json matrix_to_json(const IntMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(int_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json group_to_json(const FgAbelianGroup& g) {
    ordered_json j;
    j["free_rank"] = g.free_rank;
    ordered_json torsion = ordered_json::array();
    for (const Int& t : g.torsion) torsion.push_back(int_to_json(t));
    j["torsion"] = std::move(torsion);
    j["pretty"] = to_string(g);
    return j;
}

ordered_json divisors_to_json(const std::vector<Int>& divisors) {
    ordered_json arr = ordered_json::array();
    for (const Int& d : divisors) arr.push_back(int_to_json(d));
    return arr;
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
    if (!j.is_array()) throw DocumentError(where + ": expected an array of strings");
    std::vector<std::string> out;
    for (const json& v : j) {
        if (!v.is_string()) throw DocumentError(where + ": expected an array of strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

}  // namespace

MatrixDocument parse_matrix_document(const std::string& text) {
    return guarded("matrix document", [&] {
    const json j = parse_json(text);
    if (!j.is_object()) throw DocumentError("matrix document: expected a JSON object");
    reject_unknown_keys(j, {"d1", "d2", "m", "class_number", "labels"}, "matrix document");
    if (!j.contains("d1") || !j.contains("d2"))
        throw DocumentError("matrix document: keys 'd1' and 'd2' are required");

    MatrixDocument doc;
    doc.d1 = matrix_from_json(j["d1"], "d1");
    doc.d2 = matrix_from_json(j["d2"], "d2");
    if (doc.d1.cols != doc.d2.rows)
        throw DocumentError("matrix document: d1 and d2 dimensions do not compose");
    if (j.contains("m")) doc.m = j["m"].get<std::uint64_t>();
    if (j.contains("class_number")) doc.class_number = j["class_number"].get<std::size_t>();
    if (j.contains("labels")) {
        const json& l = j["labels"];
        reject_unknown_keys(l, {"vertices", "edges", "faces"}, "labels");
        DocLabels labels;
        if (l.contains("vertices")) labels.vertices = string_list(l["vertices"], "labels.vertices");
        if (l.contains("edges")) labels.edges = string_list(l["edges"], "labels.edges");
        if (l.contains("faces")) labels.faces = string_list(l["faces"], "labels.faces");
        doc.labels = std::move(labels);
    }
    return doc;
    });
}

std::string serialize_matrix_document(const MatrixDocument& doc) {
    ordered_json j;
    if (doc.m) j["m"] = *doc.m;
    if (doc.class_number) j["class_number"] = *doc.class_number;
    j["d1"] = matrix_to_json(doc.d1);
    j["d2"] = matrix_to_json(doc.d2);
    if (doc.labels) {
        ordered_json l;
        l["vertices"] = doc.labels->vertices;
        l["edges"] = doc.labels->edges;
        l["faces"] = doc.labels->faces;
        j["labels"] = std::move(l);
    }
    return j.dump(2) + "\n";
}

ComplexDocument parse_complex_document(const std::string& text) {
    return guarded("complex document", [&] {
    const json j = parse_json(text);
    if (!j.is_object()) throw DocumentError("complex document: expected a JSON object");
    reject_unknown_keys(j, {"m", "class_number", "cells", "incidences"}, "complex document");
    if (!j.contains("class_number"))
        throw DocumentError("complex document: key 'class_number' is required");
    if (!j.contains("cells") || !j.contains("incidences"))
        throw DocumentError("complex document: keys 'cells' and 'incidences' are required");

    ComplexDocument doc;
    if (j.contains("m")) doc.m = j["m"].get<std::uint64_t>();
    doc.complex.class_number_k = j["class_number"].get<std::size_t>();

    if (!j["cells"].is_array()) throw DocumentError("complex document: 'cells' must be an array");
    for (const json& c : j["cells"]) {
        reject_unknown_keys(c, {"id", "name", "dim", "stabilizer", "touches_singular"}, "cell");
        for (const char* key : {"id", "dim", "stabilizer"})
            if (!c.contains(key))
                throw DocumentError(std::string("cell: key '") + key + "' is required");
        CellOrbit cell;
        cell.id = c["id"].get<std::string>();
        cell.name = c.contains("name") ? c["name"].get<std::string>() : cell.id;
        cell.dim = c["dim"].get<int>();
        try {
            cell.stabilizer = group_type_from_string(c["stabilizer"].get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw DocumentError(std::string("cell ") + cell.id + ": " + e.what());
        }
        cell.touches_singular =
            c.contains("touches_singular") && c["touches_singular"].get<bool>();
        doc.complex.cells.push_back(std::move(cell));
    }

    if (!j["incidences"].is_array())
        throw DocumentError("complex document: 'incidences' must be an array");
    for (const json& inc : j["incidences"]) {
        reject_unknown_keys(inc, {"cell", "face", "coefficient", "embedding"}, "incidence");
        for (const char* key : {"cell", "face", "coefficient", "embedding"})
            if (!inc.contains(key))
                throw DocumentError(std::string("incidence: key '") + key + "' is required");
        IncidenceEntry entry;
        entry.cell = inc["cell"].get<std::string>();
        entry.face = inc["face"].get<std::string>();
        entry.coefficient = int_from_json(inc["coefficient"], "incidence coefficient");
        const json& e = inc["embedding"];
        if (!e.is_object()) throw DocumentError("incidence: 'embedding' must be an object");
        reject_unknown_keys(e, {"canonical", "matrix"}, "embedding");
        if (e.contains("canonical") == e.contains("matrix"))
            throw DocumentError("incidence: embedding needs exactly one of 'canonical'/'matrix'");
        if (e.contains("canonical"))
            entry.map = e["canonical"].get<std::string>();
        else
            entry.map = matrix_from_json(e["matrix"], "embedding matrix");
        doc.complex.incidences.push_back(std::move(entry));
    }
    return doc;
    });
}

std::string serialize_complex_document(const ComplexDocument& doc) {
    ordered_json j;
    if (doc.m) j["m"] = *doc.m;
    j["class_number"] = doc.complex.class_number_k;
    ordered_json cells = ordered_json::array();
    for (const CellOrbit& cell : doc.complex.cells) {
        ordered_json c;
        c["id"] = cell.id;
        c["name"] = cell.name;
        c["dim"] = cell.dim;
        c["stabilizer"] = to_string(cell.stabilizer);
        c["touches_singular"] = cell.touches_singular;
        cells.push_back(std::move(c));
    }
    j["cells"] = std::move(cells);
    ordered_json incidences = ordered_json::array();
    for (const IncidenceEntry& entry : doc.complex.incidences) {
        ordered_json inc;
        inc["cell"] = entry.cell;
        inc["face"] = entry.face;
        inc["coefficient"] = int_to_json(entry.coefficient);
        ordered_json e;
        if (std::holds_alternative<std::string>(entry.map))
            e["canonical"] = std::get<std::string>(entry.map);
        else
            e["matrix"] = matrix_to_json(std::get<IntMatrix>(entry.map));
        inc["embedding"] = std::move(e);
        incidences.push_back(std::move(inc));
    }
    j["incidences"] = std::move(incidences);
    return j.dump(2) + "\n";
}

HintsDocument parse_hints_document(const std::string& text) {
    return guarded("hints document", [&] {
    const json j = parse_json(text);
    if (!j.is_object()) throw DocumentError("hints document: expected a JSON object");
    reject_unknown_keys(j, {"arrow_ranks", "note"}, "hints document");
    if (!j.contains("arrow_ranks"))
        throw DocumentError("hints document: key 'arrow_ranks' is required");
    HintsDocument doc;
    const json& ranks = j["arrow_ranks"];
    if (!ranks.is_object()) throw DocumentError("hints document: 'arrow_ranks' must be an object");
    for (auto it = ranks.begin(); it != ranks.end(); ++it) {
        std::size_t arrow = 0;
        try {
            arrow = static_cast<std::size_t>(std::stoul(it.key()));
        } catch (...) {
            throw DocumentError("hints document: arrow index '" + it.key() + "' is not a number");
        }
        if (arrow >= 6) throw DocumentError("hints document: arrow index out of range 0..5");
        doc.arrow_ranks[arrow] = it.value().get<std::size_t>();
    }
    if (j.contains("note")) doc.note = j["note"].get<std::string>();
    return doc;
    });
}

std::string serialize_hints_document(const HintsDocument& doc) {
    ordered_json j;
    ordered_json ranks;
    for (const auto& [arrow, r] : doc.arrow_ranks) ranks[std::to_string(arrow)] = r;
    j["arrow_ranks"] = std::move(ranks);
    if (!doc.note.empty()) j["note"] = doc.note;
    return j.dump(2) + "\n";
}

bool looks_like_complex_document(const std::string& text) {
    const json j = parse_json(text);
    return j.is_object() && j.contains("cells");
}

std::string render_divisors(const std::vector<Int>& divisors) {
    if (divisors.empty()) return "(none)";
    std::ostringstream os;
    os << "(";
    std::size_t i = 0;
    bool first = true;
    while (i < divisors.size()) {
        std::size_t j = i;
        while (j < divisors.size() && divisors[j] == divisors[i]) ++j;
        if (!first) os << ", ";
        os << divisors[i] << "x" << (j - i);
        first = false;
        i = j;
    }
    os << ")";
    return os.str();
}

std::string homology_report_text(const HomologyReport& r) {
    std::ostringstream os;
    os << "chain ranks: C0 = " << r.chain_ranks[0] << ", C1 = " << r.chain_ranks[1]
       << ", C2 = " << r.chain_ranks[2] << "\n";
    os << "elementary divisors d1: " << render_divisors(r.d1_divisors) << "\n";
    os << "elementary divisors d2: " << render_divisors(r.d2_divisors) << "\n";
    os << "H0 = " << to_string(r.page.H0) << "\n";
    os << "H1 = " << to_string(r.page.H1) << "\n";
    os << "H2 = " << to_string(r.page.H2) << "\n";
    return os.str();
}

std::string homology_report_json(const HomologyReport& r) {
    ordered_json j;
    j["chain_ranks"] = r.chain_ranks;
    j["d1_divisors"] = divisors_to_json(r.d1_divisors);
    j["d2_divisors"] = divisors_to_json(r.d2_divisors);
    j["H0"] = group_to_json(r.page.H0);
    j["H1"] = group_to_json(r.page.H1);
    j["H2"] = group_to_json(r.page.H2);
    return j.dump(2) + "\n";
}

namespace {

ordered_json kresult_to_json(const KResult& k) {
    ordered_json j;
    ordered_json k0 = ordered_json::array(), k1 = ordered_json::array();
    for (const auto& g : k.k0_candidates) k0.push_back(group_to_json(g));
    for (const auto& g : k.k1_candidates) k1.push_back(group_to_json(g));
    j["K0_candidates"] = std::move(k0);
    j["K1_candidates"] = std::move(k1);
    j["pinned"] = k.pinned;
    return j;
}

std::string candidates_line(const std::vector<FgAbelianGroup>& gs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        if (i) os << " | ";
        os << to_string(gs[i]);
    }
    return os.str();
}

}  // namespace

std::string pipeline_report_text(const PipelineReport& r) {
    std::ostringstream os;
    os << "equivariant K-homology pipeline report\n";
    if (r.m) os << "m = " << *r.m << "\n";
    os << "class number k = " << r.class_number_k << "\n";
    os << "policy = " << to_string(r.policy) << ", hints = " << (r.hints_used ? "yes" : "no")
       << "\n";
    os << "chain ranks: C0 = " << r.chain_ranks[0] << ", C1 = " << r.chain_ranks[1]
       << ", C2 = " << r.chain_ranks[2] << "\n";
    os << "elementary divisors d1: " << render_divisors(r.d1_divisors) << "\n";
    os << "elementary divisors d2: " << render_divisors(r.d2_divisors) << "\n";
    os << "E2 page: H0 = " << to_string(r.page.H0) << ", H1 = " << to_string(r.page.H1)
       << ", H2 = " << to_string(r.page.H2) << "\n";
    os << "Euler check: " << r.chain_ranks[0] << " - " << r.chain_ranks[1] << " + "
       << r.chain_ranks[2] << " = " << r.euler_cells << " vs " << r.page.H0.free_rank << " - "
       << r.page.H1.free_rank << " + " << r.page.H2.free_rank << " = " << r.euler_homology
       << (r.euler_ok ? " : OK" : " : MISMATCH") << "\n";
    os << "K of pruned complex: K0 = " << candidates_line(r.k_pruned.k0_candidates)
       << ", K1 = " << candidates_line(r.k_pruned.k1_candidates) << "\n";
    if (r.k0_pruned_all.size() > 1)
        os << "  K0 extension classes: " << candidates_line(r.k0_pruned_all) << "\n";
    os << "K of half-space: K0 = " << candidates_line(r.k_halfspace.k0_candidates)
       << ", K1 = " << candidates_line(r.k_halfspace.k1_candidates) << "\n";
    os << "boundary corners: " << to_string(r.corner_k0) << " in both degrees\n";
    os << "six-term candidates:\n";
    for (const SixTermCandidate& cand : r.six_term.candidates) {
        os << "  RK_0 = " << to_string(cand.first) << ", RK_1 = " << to_string(cand.second)
           << "  [arrow ranks";
        for (std::size_t i = 0; i < 6; ++i) os << " " << cand.arrow_ranks[i];
        os << "]";
        if (!cand.torsion_pinned) os << " (torsion-ambiguous)";
        if (!cand.note.empty()) os << " -- " << cand.note;
        os << "\n";
    }
    for (const std::string& note : r.notes) os << "note: " << note << "\n";
    if (r.six_term.pinned) {
        const SixTermCandidate& cand = r.six_term.candidates.front();
        os << "RK_0 = " << to_string(cand.first) << ", RK_1 = " << to_string(cand.second) << "\n";
    } else {
        os << "result not pinned: " << r.six_term.candidates.size()
           << " candidate pairs (supply --hints to pin)\n";
    }
    return os.str();
}

std::string pipeline_report_json(const PipelineReport& r) {
    ordered_json j;
    if (r.m) j["m"] = *r.m;
    j["class_number"] = r.class_number_k;
    j["policy"] = to_string(r.policy);
    j["hints_used"] = r.hints_used;
    j["chain_ranks"] = r.chain_ranks;
    j["d1_divisors"] = divisors_to_json(r.d1_divisors);
    j["d2_divisors"] = divisors_to_json(r.d2_divisors);
    ordered_json page;
    page["H0"] = group_to_json(r.page.H0);
    page["H1"] = group_to_json(r.page.H1);
    page["H2"] = group_to_json(r.page.H2);
    j["e2_page"] = std::move(page);
    ordered_json euler;
    euler["cells"] = r.euler_cells;
    euler["homology"] = r.euler_homology;
    euler["ok"] = r.euler_ok;
    j["euler_check"] = std::move(euler);
    j["k_pruned"] = kresult_to_json(r.k_pruned);
    ordered_json all = ordered_json::array();
    for (const auto& g : r.k0_pruned_all) all.push_back(group_to_json(g));
    j["k0_pruned_extension_classes"] = std::move(all);
    j["k_halfspace"] = kresult_to_json(r.k_halfspace);
    ordered_json corners;
    corners["K0"] = group_to_json(r.corner_k0);
    corners["K1"] = group_to_json(r.corner_k1);
    j["boundary_corners"] = std::move(corners);
    ordered_json six;
    ordered_json cands = ordered_json::array();
    for (const SixTermCandidate& cand : r.six_term.candidates) {
        ordered_json c;
        c["RK0"] = group_to_json(cand.first);
        c["RK1"] = group_to_json(cand.second);
        c["arrow_ranks"] = cand.arrow_ranks;
        c["torsion_pinned"] = cand.torsion_pinned;
        if (!cand.note.empty()) c["note"] = cand.note;
        cands.push_back(std::move(c));
    }
    six["candidates"] = std::move(cands);
    six["pinned"] = r.six_term.pinned;
    j["six_term"] = std::move(six);
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j.dump(2) + "\n";
}

}  // namespace bianchik

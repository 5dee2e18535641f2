#pragma once

// JSON document formats (complex, matrix, hints) and report rendering.
// Field names are an external contract; unknown keys are rejected so typos
// fail loudly.  All output is deterministic: identical inputs give
// byte-identical machine-readable output.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bianchik/gamma_cw.hpp"
#include "bianchik/kk_pipeline.hpp"

namespace bianchik {

struct DocLabels {
    std::vector<std::string> vertices;
    std::vector<std::string> edges;
    std::vector<std::string> faces;
};

struct MatrixDocument {
    IntMatrix d1;
    IntMatrix d2;
    std::optional<std::uint64_t> m;
    std::optional<std::size_t> class_number;
    std::optional<DocLabels> labels;
};

struct ComplexDocument {
    PrunedComplex complex;
    std::optional<std::uint64_t> m;
};

struct HintsDocument {
    std::map<std::size_t, std::size_t> arrow_ranks;
    std::string note;
};

// Parsers throw DocumentError on malformed JSON or schema violations.
MatrixDocument parse_matrix_document(const std::string& text);
ComplexDocument parse_complex_document(const std::string& text);
HintsDocument parse_hints_document(const std::string& text);

// True when the JSON object carries "cells" (complex form) rather than "d1".
bool looks_like_complex_document(const std::string& text);

std::string serialize_matrix_document(const MatrixDocument& doc);
std::string serialize_complex_document(const ComplexDocument& doc);
std::string serialize_hints_document(const HintsDocument& doc);

// Reports.  Groups render canonically ("Z^r + Z/d1 + Z/d2"), injectively on
// isomorphism classes; divisor lists render grouped by multiplicity.
std::string render_divisors(const std::vector<Int>& divisors);

struct HomologyReport {
    std::vector<Int> d1_divisors;
    std::vector<Int> d2_divisors;
    std::array<std::size_t, 3> chain_ranks{};
    SpectralPage page;
};

std::string homology_report_text(const HomologyReport& r);
std::string homology_report_json(const HomologyReport& r);

std::string pipeline_report_text(const PipelineReport& r);
std::string pipeline_report_json(const PipelineReport& r);

}  // namespace bianchik

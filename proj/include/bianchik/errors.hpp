#pragma once

#include <stdexcept>
#include <string>

namespace bianchik {

// A pair of matrices handed to a chain-complex operation does not compose to zero.
struct CompositionNonzero : std::domain_error {
    explicit CompositionNonzero(const std::string& what) : std::domain_error(what) {}
};

// Assembled differentials of a cell complex fail d1*d2 = 0 (bad coefficients or embeddings).
struct IncidenceDataInconsistent : std::domain_error {
    explicit IncidenceDataInconsistent(const std::string& what) : std::domain_error(what) {}
};

struct InvalidEmbedding : std::domain_error {
    explicit InvalidEmbedding(const std::string& what) : std::domain_error(what) {}
};

struct NotSquarefree : std::domain_error {
    explicit NotSquarefree(const std::string& what) : std::domain_error(what) {}
};

struct InvalidClassNumber : std::domain_error {
    explicit InvalidClassNumber(const std::string& what) : std::domain_error(what) {}
};

// Extension problems are only solved for a torsion-free subgroup.
struct UnsupportedExtension : std::domain_error {
    explicit UnsupportedExtension(const std::string& what) : std::domain_error(what) {}
};

// No arrow-rank assignment satisfies exactness of the six-term sequence.
struct InconsistentHints : std::domain_error {
    explicit InconsistentHints(const std::string& what) : std::domain_error(what) {}
};

// Input document failed to parse or violates the document schema.
struct DocumentError : std::runtime_error {
    explicit DocumentError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bianchik

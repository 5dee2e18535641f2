#include "bianchik/rep_theory.hpp"

#include <numeric>
#include <sstream>

namespace bianchik {

const char* to_string(GroupType g) {
    switch (g) {
        case GroupType::Trivial: return "Trivial";
        case GroupType::C2: return "C2";
        case GroupType::C3: return "C3";
        case GroupType::V4: return "V4";
        case GroupType::S3: return "S3";
        case GroupType::A4: return "A4";
    }
    return "?";
}

GroupType group_type_from_string(const std::string& s) {
    if (s == "Trivial") return GroupType::Trivial;
    if (s == "C2") return GroupType::C2;
    if (s == "C3") return GroupType::C3;
    if (s == "V4") return GroupType::V4;
    if (s == "S3") return GroupType::S3;
    if (s == "A4") return GroupType::A4;
    throw std::invalid_argument("unknown group type: " + s);
}

std::size_t group_order(GroupType g) {
    switch (g) {
        case GroupType::Trivial: return 1;
        case GroupType::C2: return 2;
        case GroupType::C3: return 3;
        case GroupType::V4: return 4;
        case GroupType::S3: return 6;
        case GroupType::A4: return 12;
    }
    return 0;
}

std::size_t irreducible_count(GroupType g) {
    switch (g) {
        case GroupType::Trivial: return 1;
        case GroupType::C2: return 2;
        case GroupType::C3: return 3;
        case GroupType::V4: return 4;
        case GroupType::S3: return 3;
        case GroupType::A4: return 4;
    }
    return 0;
}

CyclotomicInt operator+(const CyclotomicInt& x, const CyclotomicInt& y) {
    return CyclotomicInt(x.a + y.a, x.b + y.b);
}

CyclotomicInt operator-(const CyclotomicInt& x, const CyclotomicInt& y) {
    return CyclotomicInt(x.a - y.a, x.b - y.b);
}

CyclotomicInt operator*(const CyclotomicInt& x, const CyclotomicInt& y) {
    // (a + b w)(c + d w) with w^2 = -1 - w
    return CyclotomicInt(x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b);
}

std::size_t CharacterTable::order() const {
    return std::accumulate(class_sizes.begin(), class_sizes.end(), std::size_t{0});
}

namespace {

const CyclotomicInt W{0, 1};         // zeta3
const CyclotomicInt W2{-1, -1};      // zeta3^2

CharacterTable make_table(GroupType g, std::vector<std::size_t> sizes,
                          std::vector<std::size_t> orders,
                          std::vector<std::vector<CyclotomicInt>> chars) {
    return CharacterTable{g, std::move(sizes), std::move(orders), std::move(chars)};
}

}  // namespace

CharacterTable character_table(GroupType g) {
    switch (g) {
        case GroupType::Trivial:
            return make_table(g, {1}, {1}, {{1}});
        case GroupType::C2:
            return make_table(g, {1, 1}, {1, 2},
                              {{1, 1},
                               {1, -1}});
        case GroupType::C3:
            return make_table(g, {1, 1, 1}, {1, 3, 3},
                              {{1, 1, 1},
                               {1, W, W2},
                               {1, W2, W}});
        case GroupType::V4:
            // classes e, x, y, z
            return make_table(g, {1, 1, 1, 1}, {1, 2, 2, 2},
                              {{1, 1, 1, 1},
                               {1, 1, -1, -1},
                               {1, -1, 1, -1},
                               {1, -1, -1, 1}});
        case GroupType::S3:
            // classes: identity, transpositions (3), 3-cycles (2)
            return make_table(g, {1, 3, 2}, {1, 2, 3},
                              {{1, 1, 1},
                               {1, -1, 1},
                               {2, 0, -1}});
        case GroupType::A4:
            // classes: identity, double transpositions (3), two classes of 3-cycles (4 each)
            return make_table(g, {1, 3, 4, 4}, {1, 2, 3, 3},
                              {{1, 1, 1, 1},
                               {1, 1, W, W2},
                               {1, 1, W2, W},
                               {3, -1, 0, 0}});
    }
    throw std::invalid_argument("character_table: unknown group type");
}

std::vector<std::string> validate_embedding(const EmbeddingSpec& e) {
    std::vector<std::string> report;
    const CharacterTable sub = character_table(e.sub);
    const CharacterTable sup = character_table(e.sup);
    if (group_order(e.sup) % group_order(e.sub) != 0) {
        std::ostringstream os;
        os << "order of " << to_string(e.sub) << " does not divide order of " << to_string(e.sup);
        report.push_back(os.str());
    }
    if (e.class_map.size() != sub.num_classes()) {
        report.push_back("class_map length does not match number of classes of the subgroup");
        return report;  // further checks would index out of range
    }
    for (std::size_t c = 0; c < e.class_map.size(); ++c) {
        if (e.class_map[c] >= sup.num_classes()) {
            std::ostringstream os;
            os << "class_map[" << c << "] out of range";
            report.push_back(os.str());
            return report;
        }
    }
    if (e.class_map[0] != 0)
        report.push_back("class_map does not send the identity class to the identity class");
    for (std::size_t c = 0; c < e.class_map.size(); ++c) {
        if (sub.class_orders[c] != sup.class_orders[e.class_map[c]]) {
            std::ostringstream os;
            os << "class_map[" << c << "] changes element order " << sub.class_orders[c]
               << " -> " << sup.class_orders[e.class_map[c]];
            report.push_back(os.str());
        }
    }
    return report;
}

IntMatrix restriction_matrix(const EmbeddingSpec& e) {
    auto report = validate_embedding(e);
    if (!report.empty()) throw InvalidEmbedding("restriction_matrix: " + report.front());

    const CharacterTable sub = character_table(e.sub);
    const CharacterTable sup = character_table(e.sup);
    const Int order = Int(sub.order());

    IntMatrix m(sub.num_irreducibles(), sup.num_irreducibles());
    for (std::size_t j = 0; j < sup.num_irreducibles(); ++j) {
        for (std::size_t i = 0; i < sub.num_irreducibles(); ++i) {
            // <chi_j o f, phi_i> in the subgroup
            CyclotomicInt acc;
            for (std::size_t c = 0; c < sub.num_classes(); ++c) {
                CyclotomicInt pulled = sup.chars[j][e.class_map[c]];
                CyclotomicInt term = pulled * sub.chars[i][c].conj();
                acc = acc + CyclotomicInt(Int(sub.class_sizes[c]), 0) * term;
            }
            if (!acc.is_rational() || acc.a % order != 0 || acc.a < 0)
                throw InvalidEmbedding(
                    "restriction_matrix: class map is not induced by a group homomorphism "
                    "(non-integral character decomposition)");
            m.at(i, j) = acc.a / order;
        }
    }
    return m;
}

InductionMatrix induction_matrix(const EmbeddingSpec& e) {
    return InductionMatrix{restriction_matrix(e).transposed()};
}

const std::map<std::string, EmbeddingSpec>& canonical_embeddings() {
    static const std::map<std::string, EmbeddingSpec> registry = {
        {"Trivial-in-Trivial", {GroupType::Trivial, GroupType::Trivial, {0}}},
        {"Trivial-in-C2", {GroupType::Trivial, GroupType::C2, {0}}},
        {"Trivial-in-C3", {GroupType::Trivial, GroupType::C3, {0}}},
        {"Trivial-in-V4", {GroupType::Trivial, GroupType::V4, {0}}},
        {"Trivial-in-S3", {GroupType::Trivial, GroupType::S3, {0}}},
        {"Trivial-in-A4", {GroupType::Trivial, GroupType::A4, {0}}},
        {"C2-in-C2", {GroupType::C2, GroupType::C2, {0, 1}}},
        // The three embeddings into the Klein four group are genuinely
        // distinct on representation rings; input data must pick one.
        {"C2-in-V4-x", {GroupType::C2, GroupType::V4, {0, 1}}},
        {"C2-in-V4-y", {GroupType::C2, GroupType::V4, {0, 2}}},
        {"C2-in-V4-z", {GroupType::C2, GroupType::V4, {0, 3}}},
        {"C2-in-S3", {GroupType::C2, GroupType::S3, {0, 1}}},
        {"C2-in-A4", {GroupType::C2, GroupType::A4, {0, 1}}},
        {"C3-in-C3", {GroupType::C3, GroupType::C3, {0, 1, 2}}},
        {"C3-in-C3-inv", {GroupType::C3, GroupType::C3, {0, 2, 1}}},
        {"C3-in-S3", {GroupType::C3, GroupType::S3, {0, 2, 2}}},
        {"C3-in-A4", {GroupType::C3, GroupType::A4, {0, 2, 3}}},
        {"C3-in-A4-inv", {GroupType::C3, GroupType::A4, {0, 3, 2}}},
        {"V4-in-V4", {GroupType::V4, GroupType::V4, {0, 1, 2, 3}}},
        {"V4-in-A4", {GroupType::V4, GroupType::A4, {0, 1, 1, 1}}},
        {"S3-in-S3", {GroupType::S3, GroupType::S3, {0, 1, 2}}},
        {"A4-in-A4", {GroupType::A4, GroupType::A4, {0, 1, 2, 3}}},
    };
    return registry;
}

const EmbeddingSpec& canonical_embedding(const std::string& name) {
    const auto& reg = canonical_embeddings();
    auto it = reg.find(name);
    if (it == reg.end()) throw InvalidEmbedding("unknown canonical embedding: " + name);
    return it->second;
}

}  // namespace bianchik

#pragma once

#include "gridcover/weight_expr.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gridcover {

// Black/white coloring of vertices 0..n-1. Black is the code color.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::vector<bool> black) : black_(std::move(black)) {}

    // "1"/"0" per vertex, vertex 0 first; also accepts UTF-8 bullet glyphs.
    static Coloring from_string(const std::string& s);
    // Mask bits: vertex 0 is the most significant of n bits (enumeration order).
    static Coloring from_mask(std::uint64_t mask, int n);

    int size() const { return static_cast<int>(black_.size()); }
    bool black(int v) const { return black_[v]; }
    int black_count() const;
    bool monochromatic(bool color) const;

    std::string str() const; // "1010"

    friend bool operator==(const Coloring& a, const Coloring& b) { return a.black_ == b.black_; }

private:
    std::vector<bool> black_;
};

Coloring complement_coloring(const Coloring& c);

// Per-vertex weights, one WeightExpr per index.
struct VertexWeighting {
    std::vector<WeightExpr> weights;

    int size() const { return static_cast<int>(weights.size()); }
    WeightExpr total() const;
};

// A vertex permutation; validated to be a bijection.
class Automorphism {
public:
    explicit Automorphism(std::vector<int> perm);
    static Automorphism identity(int n);

    int size() const { return static_cast<int>(perm_.size()); }
    int operator()(int v) const { return perm_[v]; }
    Automorphism then(const Automorphism& next) const; // (next ∘ this)

private:
    std::vector<int> perm_;
};

// The data a constant 2-labelling is judged against: weights, an explicit
// automorphism list, a base vertex, and the declared weight relations.
struct LabellingInstance {
    VertexWeighting weighting;
    std::vector<Automorphism> automorphisms;
    int base_vertex = 0;
    RelationSet relations;

    int size() const { return weighting.size(); }
    void validate() const; // throws std::invalid_argument
};

enum class VerdictKind { TrivialBlack, TrivialWhite, Constant, NotConstant };

const char* verdict_kind_name(VerdictKind k);

struct LabellingVerdict {
    VerdictKind kind = VerdictKind::NotConstant;
    std::optional<WeightExpr> a; // black-base constant, absent if that class is empty
    std::optional<WeightExpr> b; // white-base constant
    // For NotConstant: indices of two automorphisms in the same class with
    // different sums.
    std::optional<std::pair<int, int>> witness;

    bool is_constant() const { return kind != VerdictKind::NotConstant; }
};

// Sum of w(u) over u with coloring(xi(u)) black, relation-reduced.
WeightExpr weighted_black_sum(const Coloring& coloring, const Automorphism& xi,
                              const VertexWeighting& weighting, const RelationSet& relations);

LabellingVerdict classify_labelling(const LabellingInstance& instance, const Coloring& coloring);

inline constexpr int kDefaultEnumerationBound = 24;

// All 2^n colorings in binary-counter order (vertex 0 most significant),
// filtered to constant verdicts. Refuses n above the bound.
std::vector<std::pair<Coloring, LabellingVerdict>>
enumerate_labellings(const LabellingInstance& instance, int bound = kDefaultEnumerationBound);

// Prop. on complete graphs: K_n has a non-trivial constant 2-labelling under
// all automorphisms iff the weights away from the base vertex are all equal.
bool complete_graph_admits_nontrivial(const VertexWeighting& weighting, int base_vertex);

} // namespace gridcover

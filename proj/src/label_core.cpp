#include "gridcover/label_core.hpp"

#include <algorithm>
#include <stdexcept>

namespace gridcover {

Coloring Coloring::from_string(const std::string& s) {
    std::vector<bool> black;
    for (size_t i = 0; i < s.size();) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        if (c == '1') {
            black.push_back(true);
            ++i;
        } else if (c == '0') {
            black.push_back(false);
            ++i;
        } else if (s.compare(i, 3, "\xe2\x80\xa2") == 0) { // U+2022 bullet
            black.push_back(true);
            i += 3;
        } else if (s.compare(i, 3, "\xe2\x88\x98") == 0) { // U+2218 ring
            black.push_back(false);
            i += 3;
        } else {
            throw std::invalid_argument("coloring string: unexpected character at index " +
                                        std::to_string(i));
        }
    }
    if (black.empty()) throw std::invalid_argument("coloring string: empty");
    return Coloring(std::move(black));
}

Coloring Coloring::from_mask(std::uint64_t mask, int n) {
    if (n < 1 || n > 63) throw std::invalid_argument("coloring mask: bad length");
    std::vector<bool> black(n);
    for (int v = 0; v < n; ++v) black[v] = (mask >> (n - 1 - v)) & 1;
    return Coloring(std::move(black));
}

int Coloring::black_count() const {
    return static_cast<int>(std::count(black_.begin(), black_.end(), true));
}

bool Coloring::monochromatic(bool color) const {
    return std::all_of(black_.begin(), black_.end(), [color](bool b) { return b == color; });
}

std::string Coloring::str() const {
    std::string s;
    s.reserve(black_.size());
    for (bool b : black_) s += b ? '1' : '0';
    return s;
}

Coloring complement_coloring(const Coloring& c) {
    std::vector<bool> flipped(c.size());
    for (int v = 0; v < c.size(); ++v) flipped[v] = !c.black(v);
    return Coloring(std::move(flipped));
}

WeightExpr VertexWeighting::total() const {
    WeightExpr sum;
    for (const auto& w : weights) sum += w;
    return sum;
}

Automorphism::Automorphism(std::vector<int> perm) : perm_(std::move(perm)) {
    const int n = static_cast<int>(perm_.size());
    if (n == 0) throw std::invalid_argument("automorphism: empty permutation");
    std::vector<bool> seen(n, false);
    for (int v : perm_) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("automorphism: not a permutation of 0.." +
                                        std::to_string(n - 1));
        seen[v] = true;
    }
}

Automorphism Automorphism::identity(int n) {
    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = v;
    return Automorphism(std::move(perm));
}

Automorphism Automorphism::then(const Automorphism& next) const {
    if (next.size() != size()) throw std::invalid_argument("automorphism: size mismatch");
    std::vector<int> perm(perm_.size());
    for (size_t v = 0; v < perm_.size(); ++v) perm[v] = next.perm_[perm_[v]];
    return Automorphism(std::move(perm));
}

void LabellingInstance::validate() const {
    const int n = size();
    if (n == 0) throw std::invalid_argument("labelling instance: no vertices");
    if (automorphisms.empty()) throw std::invalid_argument("labelling instance: no automorphisms");
    for (const auto& xi : automorphisms)
        if (xi.size() != n) throw std::invalid_argument("labelling instance: automorphism size mismatch");
    if (base_vertex < 0 || base_vertex >= n)
        throw std::invalid_argument("labelling instance: base vertex out of range");
}

const char* verdict_kind_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::TrivialBlack: return "trivial-black";
        case VerdictKind::TrivialWhite: return "trivial-white";
        case VerdictKind::Constant: return "constant";
        case VerdictKind::NotConstant: return "not-constant";
    }
    return "?";
}

WeightExpr weighted_black_sum(const Coloring& coloring, const Automorphism& xi,
                              const VertexWeighting& weighting, const RelationSet& relations) {
    if (coloring.size() != weighting.size() || xi.size() != weighting.size())
        throw std::invalid_argument("weighted_black_sum: dimension mismatch");
    WeightExpr sum;
    for (int u = 0; u < weighting.size(); ++u)
        if (coloring.black(xi(u))) sum += weighting.weights[u];
    return relations.reduce(sum);
}

LabellingVerdict classify_labelling(const LabellingInstance& instance, const Coloring& coloring) {
    instance.validate();
    if (coloring.size() != instance.size())
        throw std::invalid_argument("classify_labelling: coloring size mismatch");

    LabellingVerdict verdict;
    if (coloring.monochromatic(true)) {
        verdict.kind = VerdictKind::TrivialBlack;
        verdict.a = instance.relations.reduce(instance.weighting.total());
        return verdict;
    }
    if (coloring.monochromatic(false)) {
        verdict.kind = VerdictKind::TrivialWhite;
        verdict.b = WeightExpr{};
        return verdict;
    }

    std::optional<WeightExpr> a, b;
    std::optional<int> a_first, b_first;
    for (int i = 0; i < static_cast<int>(instance.automorphisms.size()); ++i) {
        const auto& xi = instance.automorphisms[i];
        const WeightExpr sum =
            weighted_black_sum(coloring, xi, instance.weighting, instance.relations);
        const bool base_black = coloring.black(xi(instance.base_vertex));
        auto& constant = base_black ? a : b;
        auto& first = base_black ? a_first : b_first;
        if (!constant) {
            constant = sum;
            first = i;
        } else if (!(*constant == sum)) {
            verdict.kind = VerdictKind::NotConstant;
            verdict.witness = std::make_pair(*first, i);
            return verdict;
        }
    }
    verdict.kind = VerdictKind::Constant;
    verdict.a = a;
    verdict.b = b;
    return verdict;
}

std::vector<std::pair<Coloring, LabellingVerdict>>
enumerate_labellings(const LabellingInstance& instance, int bound) {
    instance.validate();
    const int n = instance.size();
    if (n > bound)
        throw std::invalid_argument("enumerate_labellings: " + std::to_string(n) +
                                    " vertices exceeds bound " + std::to_string(bound));
    std::vector<std::pair<Coloring, LabellingVerdict>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Coloring c = Coloring::from_mask(mask, n);
        LabellingVerdict v = classify_labelling(instance, c);
        if (v.is_constant()) out.emplace_back(std::move(c), std::move(v));
    }
    return out;
}

bool complete_graph_admits_nontrivial(const VertexWeighting& weighting, int base_vertex) {
    const int n = weighting.size();
    if (n < 2) throw std::invalid_argument("complete graph needs at least 2 vertices");
    if (base_vertex < 0 || base_vertex >= n)
        throw std::invalid_argument("complete graph: base vertex out of range");
    std::optional<WeightExpr> common;
    for (int v = 0; v < n; ++v) {
        if (v == base_vertex) continue;
        if (!common)
            common = weighting.weights[v];
        else if (!(*common == weighting.weights[v]))
            return false;
    }
    return true;
}

} // namespace gridcover

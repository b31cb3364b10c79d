#pragma once

#include "gridcover/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gridcover {

// The four weight symbols a cycle word may use.
enum class Symbol : int { Z = 0, X = 1, Y = 2, T = 3 };

constexpr int kSymbolCount = 4;
const char* symbol_name(Symbol s);

// Exact linear expression c0 + c1*z + c2*x + c3*y + c4*t over the weight
// basis. The constant slot exists so that folded cycles (whose weights are
// plain integers) and symbolic family cycles share one value type.
class WeightExpr {
public:
    WeightExpr() = default;

    static WeightExpr constant(Rational c);
    static WeightExpr symbol(Symbol s);

    Rational constant_term() const { return coeff_[0]; }
    Rational coeff(Symbol s) const { return coeff_[1 + static_cast<int>(s)]; }
    void set_coeff(Symbol s, Rational c) { coeff_[1 + static_cast<int>(s)] = c; }

    bool is_zero() const;
    bool is_constant() const;

    friend WeightExpr operator+(const WeightExpr& a, const WeightExpr& b);
    friend WeightExpr operator-(const WeightExpr& a, const WeightExpr& b);
    friend WeightExpr operator*(Rational k, const WeightExpr& e);
    WeightExpr& operator+=(const WeightExpr& o);
    WeightExpr& operator-=(const WeightExpr& o);

    friend bool operator==(const WeightExpr& a, const WeightExpr& b) { return a.coeff_ == b.coeff_; }
    friend bool operator!=(const WeightExpr& a, const WeightExpr& b) { return !(a == b); }
    friend bool operator<(const WeightExpr& a, const WeightExpr& b);

    // Human/JSON form: "0", "7", "z+2x", "z-1/2y", ...
    std::string str() const;

private:
    std::array<Rational, 1 + kSymbolCount> coeff_{}; // [const, z, x, y, t]
    friend class RelationSet;
};

// Declared linear relations between basis symbols, kept in substitution form
// (each relation eliminates one symbol, highest symbol first: t, then y, ...),
// plus inequations (symbol pairs declared distinct). Reduction through the
// substitutions gives every WeightExpr a canonical form.
class RelationSet {
public:
    RelationSet() = default;

    // Declares lhs = rhs. Throws std::invalid_argument on an inconsistent or
    // vacuous relation.
    void add_relation(const WeightExpr& lhs, const WeightExpr& rhs);
    void add_inequation(Symbol a, Symbol b);

    WeightExpr reduce(WeightExpr e) const;
    bool empty() const;

    const std::vector<std::pair<Symbol, Symbol>>& inequations() const { return inequations_; }

    // Checks the declared inequations against concrete symbol values.
    // Returns the first violated pair, if any.
    std::optional<std::pair<Symbol, Symbol>>
    violated_inequation(const std::array<Rational, kSymbolCount>& values) const;

private:
    std::array<std::optional<WeightExpr>, kSymbolCount> subst_{};
    std::vector<std::pair<Symbol, Symbol>> inequations_;
};

} // namespace gridcover

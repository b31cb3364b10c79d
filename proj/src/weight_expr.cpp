#include "gridcover/weight_expr.hpp"

#include <stdexcept>

namespace gridcover {

const char* symbol_name(Symbol s) {
    switch (s) {
        case Symbol::Z: return "z";
        case Symbol::X: return "x";
        case Symbol::Y: return "y";
        case Symbol::T: return "t";
    }
    return "?";
}

WeightExpr WeightExpr::constant(Rational c) {
    WeightExpr e;
    e.coeff_[0] = c;
    return e;
}

WeightExpr WeightExpr::symbol(Symbol s) {
    WeightExpr e;
    e.coeff_[1 + static_cast<int>(s)] = Rational(1);
    return e;
}

bool WeightExpr::is_zero() const {
    for (const auto& c : coeff_)
        if (!c.is_zero()) return false;
    return true;
}

bool WeightExpr::is_constant() const {
    for (int i = 1; i < 1 + kSymbolCount; ++i)
        if (!coeff_[i].is_zero()) return false;
    return true;
}

WeightExpr operator+(const WeightExpr& a, const WeightExpr& b) {
    WeightExpr r = a;
    r += b;
    return r;
}

WeightExpr operator-(const WeightExpr& a, const WeightExpr& b) {
    WeightExpr r = a;
    r -= b;
    return r;
}

WeightExpr operator*(Rational k, const WeightExpr& e) {
    WeightExpr r = e;
    for (auto& c : r.coeff_) c *= k;
    return r;
}

WeightExpr& WeightExpr::operator+=(const WeightExpr& o) {
    for (size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
    return *this;
}

WeightExpr& WeightExpr::operator-=(const WeightExpr& o) {
    for (size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= o.coeff_[i];
    return *this;
}

bool operator<(const WeightExpr& a, const WeightExpr& b) {
    for (size_t i = 0; i < a.coeff_.size(); ++i) {
        if (a.coeff_[i] != b.coeff_[i]) return a.coeff_[i] < b.coeff_[i];
    }
    return false;
}

std::string WeightExpr::str() const {
    std::string out;
    auto append_term = [&out](Rational c, const std::string& sym) {
        if (c.is_zero()) return;
        const bool neg = c.num < 0;
        Rational mag = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        if (sym.empty()) {
            out += mag.str();
        } else {
            if (!(mag == Rational(1))) out += mag.str();
            out += sym;
        }
    };
    append_term(coeff_[0], "");
    for (int i = 0; i < kSymbolCount; ++i)
        append_term(coeff_[1 + i], symbol_name(static_cast<Symbol>(i)));
    return out.empty() ? "0" : out;
}

void RelationSet::add_relation(const WeightExpr& lhs, const WeightExpr& rhs) {
    WeightExpr e = reduce(lhs - rhs);
    // Eliminate the highest surviving symbol (t before y before x before z).
    int pivot = -1;
    for (int i = kSymbolCount - 1; i >= 0; --i) {
        if (!e.coeff(static_cast<Symbol>(i)).is_zero()) { pivot = i; break; }
    }
    if (pivot < 0) {
        if (e.is_zero())
            throw std::invalid_argument("relation is redundant (reduces to 0 = 0)");
        throw std::invalid_argument("inconsistent relation (reduces to nonzero constant = 0)");
    }
    const Symbol s = static_cast<Symbol>(pivot);
    const Rational c = e.coeff(s);
    e.set_coeff(s, Rational(0));
    WeightExpr repl = (Rational(-1) / c) * e;
    // Fold the new substitution through the ones already recorded.
    for (auto& existing : subst_) {
        if (!existing) continue;
        const Rational k = existing->coeff(s);
        if (k.is_zero()) continue;
        existing->set_coeff(s, Rational(0));
        *existing += k * repl;
    }
    subst_[pivot] = repl;
}

void RelationSet::add_inequation(Symbol a, Symbol b) {
    if (a == b) throw std::invalid_argument("inequation requires two distinct symbols");
    inequations_.emplace_back(a, b);
}

WeightExpr RelationSet::reduce(WeightExpr e) const {
    for (int i = kSymbolCount - 1; i >= 0; --i) {
        if (!subst_[i]) continue;
        const Symbol s = static_cast<Symbol>(i);
        const Rational k = e.coeff(s);
        if (k.is_zero()) continue;
        e.set_coeff(s, Rational(0));
        e += k * *subst_[i];
    }
    return e;
}

bool RelationSet::empty() const {
    for (const auto& s : subst_)
        if (s) return false;
    return inequations_.empty();
}

std::optional<std::pair<Symbol, Symbol>>
RelationSet::violated_inequation(const std::array<Rational, kSymbolCount>& values) const {
    for (const auto& [a, b] : inequations_) {
        if (values[static_cast<int>(a)] == values[static_cast<int>(b)]) return std::make_pair(a, b);
    }
    return std::nullopt;
}

} // namespace gridcover

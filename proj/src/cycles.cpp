#include "gridcover/cycles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gridcover {

const char* family_name(Family f) {
    switch (f) {
        case Family::Type1: return "type1";
        case Family::Type2: return "type2";
        case Family::Type3: return "type3";
        case Family::Type4: return "type4";
        case Family::Type5: return "type5";
        case Family::Type6: return "type6";
        case Family::Type7: return "type7";
        case Family::Type8: return "type8";
    }
    return "?";
}

const char* row_structure_name(RowStructure s) {
    switch (s) {
        case RowStructure::Any: return "any";
        case RowStructure::Periodic: return "periodic";
        case RowStructure::Antiperiodic: return "antiperiodic";
        case RowStructure::Alternate: return "alternate";
        case RowStructure::ThreePeriodic: return "3-periodic";
        case RowStructure::Balanced: return "balanced";
        case RowStructure::BalancedPeriodic: return "balanced-periodic";
        case RowStructure::Psi: return "psi";
        case RowStructure::PsiComplement: return "psi-complement";
    }
    return "?";
}

namespace {

[[noreturn]] void constraint_error(const CycleSpec& spec, const std::string& what) {
    throw std::invalid_argument(std::string(family_name(spec.family)) + " with p=" +
                                std::to_string(spec.p) + ": " + what);
}

Rational special_t_value(int p, Rational x, Rational y) {
    // t = (p/4)x + (1 - p/4)y
    const Rational q(p, 4);
    return q * x + (Rational(1) - q) * y;
}

} // namespace

void CycleSpec::validate() const {
    if (p < 2) constraint_error(*this, "p must be at least 2");
    switch (family) {
        case Family::Type1:
            break;
        case Family::Type2:
        case Family::Type4:
            if (p % 2 != 0 || p < 4) constraint_error(*this, "requires p even, p >= 4");
            break;
        case Family::Type3:
            if (p % 2 != 1 || p < 3) constraint_error(*this, "requires p odd, p >= 3");
            break;
        case Family::Type5:
            if (p % 4 != 1) constraint_error(*this, "requires p = 1 (mod 4)");
            break;
        case Family::Type6:
            if (p % 4 != 3 || p < 7) constraint_error(*this, "requires p = 3 (mod 4), p > 3");
            break;
        case Family::Type7:
            if (p % 4 != 2 || p < 6) constraint_error(*this, "requires p = 2 (mod 4), p > 2");
            break;
        case Family::Type8:
            if (p % 4 != 0 || p < 8) constraint_error(*this, "requires p = 0 (mod 4), p > 4");
            break;
    }
    if (special_t && family != Family::Type8)
        constraint_error(*this, "the special t relation applies to type8 only");
    if (concrete) {
        const auto& v = *concrete;
        for (auto [s1, s2] : inequations()) {
            if (v[static_cast<int>(s1)] == v[static_cast<int>(s2)])
                constraint_error(*this, std::string("weights must differ: ") + symbol_name(s1) +
                                            " = " + symbol_name(s2));
        }
        if (special_t) {
            const Rational want = special_t_value(p, v[static_cast<int>(Symbol::X)],
                                                  v[static_cast<int>(Symbol::Y)]);
            if (v[static_cast<int>(Symbol::T)] != want)
                constraint_error(*this, "concrete t does not satisfy the special t relation");
        }
    }
}

std::vector<std::pair<Symbol, Symbol>> CycleSpec::inequations() const {
    switch (family) {
        case Family::Type1: return {};
        case Family::Type2: return {{Symbol::X, Symbol::T}};
        case Family::Type3:
        case Family::Type4:
        case Family::Type5:
        case Family::Type6: return {{Symbol::X, Symbol::Y}};
        case Family::Type7: return {{Symbol::X, Symbol::Y}, {Symbol::X, Symbol::T}};
        case Family::Type8: return {{Symbol::X, Symbol::Y}, {Symbol::Y, Symbol::T}};
    }
    return {};
}

std::vector<Symbol> CycleSpec::word() const {
    std::vector<Symbol> w;
    w.reserve(p);
    w.push_back(Symbol::Z);
    auto xy = [&w](int reps) {
        for (int i = 0; i < reps; ++i) {
            w.push_back(Symbol::X);
            w.push_back(Symbol::Y);
        }
    };
    auto yx = [&w](int reps) {
        for (int i = 0; i < reps; ++i) {
            w.push_back(Symbol::Y);
            w.push_back(Symbol::X);
        }
    };
    switch (family) {
        case Family::Type1:
            w.insert(w.end(), p - 1, Symbol::X);
            break;
        case Family::Type2:
            w.insert(w.end(), (p - 2) / 2, Symbol::X);
            w.push_back(Symbol::T);
            w.insert(w.end(), (p - 2) / 2, Symbol::X);
            break;
        case Family::Type3:
            xy((p - 1) / 2);
            break;
        case Family::Type4:
            xy((p - 2) / 2);
            w.push_back(Symbol::X);
            break;
        case Family::Type5:
            xy((p - 1) / 4);
            yx((p - 1) / 4);
            break;
        case Family::Type6:
            xy((p - 3) / 4);
            w.push_back(Symbol::X);
            w.push_back(Symbol::X);
            yx((p - 3) / 4);
            break;
        case Family::Type7:
            xy((p - 2) / 4);
            w.push_back(Symbol::T);
            yx((p - 2) / 4);
            break;
        case Family::Type8:
            xy((p - 4) / 4);
            w.push_back(Symbol::X);
            w.push_back(Symbol::T);
            w.push_back(Symbol::X);
            yx((p - 4) / 4);
            break;
    }
    return w;
}

WeightedCycle build_cycle(const CycleSpec& spec) {
    spec.validate();
    WeightedCycle cycle;
    cycle.p = spec.p;
    cycle.origin = spec;
    for (Symbol s : spec.word()) {
        if (spec.concrete)
            cycle.weights.weights.push_back(
                WeightExpr::constant((*spec.concrete)[static_cast<int>(s)]));
        else
            cycle.weights.weights.push_back(WeightExpr::symbol(s));
    }
    return cycle;
}

Automorphism rotation(int p, int k) {
    if (p < 1) throw std::invalid_argument("rotation: p must be positive");
    k = ((k % p) + p) % p;
    std::vector<int> perm(p);
    for (int i = 0; i < p; ++i) perm[i] = (i + k) % p;
    return Automorphism(std::move(perm));
}

namespace {

RelationSet spec_relations(const CycleSpec& spec) {
    RelationSet rel;
    if (!spec.concrete)
        for (auto [s1, s2] : spec.inequations()) rel.add_inequation(s1, s2);
    if (spec.special_t && !spec.concrete) {
        const Rational q(spec.p, 4);
        rel.add_relation(WeightExpr::symbol(Symbol::T),
                         q * WeightExpr::symbol(Symbol::X) +
                             (Rational(1) - q) * WeightExpr::symbol(Symbol::Y));
    }
    return rel;
}

} // namespace

LabellingInstance rotation_instance(const WeightedCycle& cycle) {
    LabellingInstance inst;
    inst.weighting = cycle.weights;
    for (int k = 0; k < cycle.p; ++k) inst.automorphisms.push_back(rotation(cycle.p, k));
    inst.base_vertex = 0;
    if (cycle.origin) inst.relations = spec_relations(*cycle.origin);
    return inst;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

bool is_periodic(const Coloring& c, int m) {
    const int p = c.size();
    for (int i = 0; i < p; ++i)
        if (c.black(i) != c.black((i + m) % p)) return false;
    return true;
}

bool is_antiperiodic(const Coloring& c, int m) {
    const int p = c.size();
    for (int i = 0; i < p; ++i)
        if (c.black(i) == c.black((i + m) % p)) return false;
    return true;
}

bool is_psi_family(const Coloring& c) {
    const int p = c.size();
    if (p % 4 != 0) return false;
    for (int s = 0; s < p; ++s) {
        bool ok = true;
        for (int i = 0; ok && i < p; i += 2)
            if (!c.black((i + s) % p)) ok = false;
        for (int i = 1; ok && i < p; i += 2)
            if (c.black((i + s) % p) == c.black((i + s + p / 2) % p)) ok = false;
        if (ok) return true;
    }
    return false;
}

// Per-rotation count rule shared by the balanced row kinds: with the coloring
// rotated by s, the black x-letter count must exceed the black y-letter count
// by `offset` when the base vertex is black, and match it when white.
bool balanced_rotations(const CycleSpec& spec, const Coloring& c, int offset) {
    const std::vector<Symbol> word = spec.word();
    const int p = spec.p;
    for (int s = 0; s < p; ++s) {
        int cx = 0, cy = 0;
        for (int i = 0; i < p; ++i) {
            if (!c.black((i + s) % p)) continue;
            if (word[i] == Symbol::X) ++cx;
            else if (word[i] == Symbol::Y) ++cy;
        }
        const int want = c.black(s) ? offset : 0;
        if (cx - cy != want) return false;
    }
    return true;
}

} // namespace

bool row_structure_matches(const CycleSpec& spec, const PredictedRow& row, const Coloring& c) {
    if (row.black_count >= 0 && c.black_count() != row.black_count) return false;
    switch (row.structure) {
        case RowStructure::Any: return true;
        case RowStructure::Periodic: return is_periodic(c, row.period);
        case RowStructure::Antiperiodic: return is_antiperiodic(c, row.period);
        case RowStructure::Alternate: return c.size() % 2 == 0 && is_antiperiodic(c, 1);
        case RowStructure::ThreePeriodic: return is_periodic(c, 3);
        case RowStructure::Balanced:
            return !(c.size() % 2 == 0 && is_antiperiodic(c, 1)) && balanced_rotations(spec, c, 1);
        case RowStructure::BalancedPeriodic:
            return is_periodic(c, spec.p / 2) && balanced_rotations(spec, c, 2);
        case RowStructure::Psi: return is_psi_family(c);
        case RowStructure::PsiComplement: return is_psi_family(complement_coloring(c));
    }
    return false;
}

PatternClass pattern_class(const Coloring& c) {
    PatternClass pc;
    const int p = c.size();
    for (int m = 1; m <= p; ++m) {
        if (is_periodic(c, m)) pc.periods.push_back(m);
        if (is_antiperiodic(c, m)) pc.antiperiods.push_back(m);
    }
    pc.is_alternate = p % 2 == 0 && is_antiperiodic(c, 1);
    return pc;
}

namespace {

WeightExpr sym(Symbol s) { return WeightExpr::symbol(s); }
WeightExpr times(long long k, Symbol s) { return Rational(k) * WeightExpr::symbol(s); }

// Counts colorings satisfying the row's structural description by scanning
// all 2^p of them (p is small everywhere this is used).
long long count_by_structure(const CycleSpec& spec, const PredictedRow& row) {
    long long n = 0;
    const int p = spec.p;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << p); ++mask)
        if (row_structure_matches(spec, row, Coloring::from_mask(mask, p))) ++n;
    return n;
}

std::vector<PredictedRow> raw_rows(const CycleSpec& spec) {
    std::vector<PredictedRow> rows;
    const int p = spec.p;
    auto add = [&rows](WeightExpr a, WeightExpr b, std::optional<int> alpha, RowStructure st,
                       int period, int black, long long count, std::string note = "") {
        rows.push_back(PredictedRow{std::move(a), std::move(b), alpha, st, period, black, count,
                                    std::move(note)});
    };
    const WeightExpr z = sym(Symbol::Z), x = sym(Symbol::X), y = sym(Symbol::Y), t = sym(Symbol::T);

    switch (spec.family) {
        case Family::Type1:
            for (int al = 0; al <= p - 2; ++al)
                add(times(al, Symbol::X) + z, times(al + 1, Symbol::X), al, RowStructure::Any, 0,
                    al + 1, binomial(p, al + 1));
            break;
        case Family::Type2:
            for (int al = 0; al <= (p - 4) / 2; ++al)
                add(times(2 * al, Symbol::X) + t + z, times(2 * (al + 1), Symbol::X), al,
                    RowStructure::Periodic, p / 2, 2 * (al + 1), binomial(p / 2, al + 1));
            add(times(p / 2 - 1, Symbol::X) + z, times(p / 2 - 1, Symbol::X) + t, std::nullopt,
                RowStructure::Antiperiodic, p / 2, p / 2, 1LL << (p / 2));
            break;
        case Family::Type3:
            break;
        case Family::Type4:
            for (int al = 0; al <= (p - 4) / 2; ++al)
                add(times(al + 1, Symbol::X) + times(al, Symbol::Y) + z,
                    times(al + 1, Symbol::X) + times(al + 1, Symbol::Y), al, RowStructure::Balanced,
                    0, 2 * al + 2, 0);
            add(times(p / 2 - 1, Symbol::Y) + z, times(p / 2, Symbol::X), std::nullopt,
                RowStructure::Alternate, 0, p / 2, 2);
            break;
        case Family::Type5:
        case Family::Type6: {
            if (p % 3 != 0) break;
            const int n = p / 3;
            const WeightExpr a1 = times(n, Symbol::X) + times(n - 1, Symbol::Y) + z;
            const WeightExpr b1 = spec.family == Family::Type5
                                      ? times(n - 1, Symbol::X) + times(n + 1, Symbol::Y)
                                      : times(n + 1, Symbol::X) + times(n - 1, Symbol::Y);
            WeightExpr omega;
            for (Symbol s : spec.word()) omega += sym(s);
            add(a1, b1, std::nullopt, RowStructure::ThreePeriodic, 3, 2 * n, 3);
            add(omega - b1, omega - a1, std::nullopt, RowStructure::ThreePeriodic, 3, n, 3,
                "complement of the published row; realized but absent from the printed table");
            break;
        }
        case Family::Type7:
            add(times(p / 2 - 1, Symbol::Y) + z, times(p / 2 - 1, Symbol::X) + t, std::nullopt,
                RowStructure::Alternate, 0, p / 2, 2);
            for (int al = 0; al <= p / 2 - 2; ++al)
                add(Rational(al) * (x + y) + t + z, Rational(al + 1) * (x + y), al,
                    RowStructure::Periodic, p / 2, 2 * (al + 1), binomial(p / 2, al + 1),
                    al == 0 ? "alpha capped at p/2-2; the printed p/2-1 is never realized" : "");
            break;
        case Family::Type8:
            add(times(p / 2 - 2, Symbol::Y) + z + t, times(p / 2, Symbol::X), std::nullopt,
                RowStructure::Alternate, 0, p / 2, 2);
            for (int al = 0; al <= p / 4 - 2; ++al)
                add(times(2 * al + 2, Symbol::X) + times(2 * al, Symbol::Y) + z + t,
                    Rational(2 * al + 2) * (x + y), al, RowStructure::BalancedPeriodic, p / 2,
                    4 * al + 4, 0,
                    al == 0 ? "alpha capped at p/4-2; the printed p/4-1 is never realized" : "");
            add(times(p / 4, Symbol::X) + times(p / 4 - 1, Symbol::Y) + z,
                times(p / 4, Symbol::X) + times(p / 4 - 1, Symbol::Y) + t, std::nullopt,
                RowStructure::Antiperiodic, p / 2, p / 2, 1LL << (p / 2));
            if (spec.special_t) {
                add(times(p / 2, Symbol::X) + times(p / 4 - 1, Symbol::Y) + z,
                    times(3 * p / 4, Symbol::X), std::nullopt, RowStructure::Psi, 0, -1, 0);
                add(times(p / 4 - 1, Symbol::Y) + z, times(p / 4, Symbol::X), std::nullopt,
                    RowStructure::PsiComplement, 0, -1, 0);
            }
            break;
    }
    return rows;
}

} // namespace

std::vector<PredictedRow> predicted_rows(const CycleSpec& spec, bool with_counts) {
    spec.validate();
    std::vector<PredictedRow> rows = raw_rows(spec);
    const RelationSet rel = spec_relations(spec);
    for (auto& row : rows) {
        row.a = rel.reduce(row.a);
        row.b = rel.reduce(row.b);
        if (spec.concrete) {
            auto eval = [&](const WeightExpr& e) {
                Rational v = e.constant_term();
                for (int i = 0; i < kSymbolCount; ++i)
                    v += e.coeff(static_cast<Symbol>(i)) * (*spec.concrete)[i];
                return WeightExpr::constant(v);
            };
            row.a = eval(row.a);
            row.b = eval(row.b);
        }
        if (with_counts && row.count == 0) row.count = count_by_structure(spec, row);
    }
    return rows;
}

CrossCheckReport cross_check(const CycleSpec& spec, int bound) {
    CrossCheckReport report;
    report.spec = spec;

    const WeightedCycle cycle = build_cycle(spec);
    const LabellingInstance inst = rotation_instance(cycle);

    using Key = std::pair<WeightExpr, WeightExpr>;
    std::map<Key, std::vector<Coloring>> found;
    for (auto& [coloring, verdict] : enumerate_labellings(inst, bound)) {
        if (verdict.kind != VerdictKind::Constant) continue;
        found[{*verdict.a, *verdict.b}].push_back(coloring);
    }

    const std::vector<PredictedRow> rows = predicted_rows(spec, true);
    std::map<Key, std::pair<long long, std::vector<const PredictedRow*>>> predicted;
    for (const auto& row : rows) {
        auto& slot = predicted[{row.a, row.b}];
        slot.first += row.count;
        slot.second.push_back(&row);
        if (!row.note.empty() &&
            std::find(report.notes.begin(), report.notes.end(), row.note) == report.notes.end())
            report.notes.push_back(row.note);
    }

    std::set<Key> keys;
    for (const auto& [k, v] : found) keys.insert(k);
    for (const auto& [k, v] : predicted) keys.insert(k);

    report.match = true;
    for (const auto& key : keys) {
        CrossCheckEntry entry;
        entry.a = key.first;
        entry.b = key.second;
        const auto fit = found.find(key);
        const auto pit = predicted.find(key);
        entry.found_count = fit == found.end() ? 0 : static_cast<long long>(fit->second.size());
        entry.predicted_count = pit == predicted.end() ? 0 : pit->second.first;
        const std::string pair_str = "(" + entry.a.str() + ", " + entry.b.str() + ")";
        if (entry.found_count != entry.predicted_count) {
            report.match = false;
            report.witnesses.push_back(pair_str + ": enumerated " +
                                       std::to_string(entry.found_count) + ", table predicts " +
                                       std::to_string(entry.predicted_count));
        }
        if (fit != found.end() && pit != predicted.end()) {
            for (const Coloring& c : fit->second) {
                bool ok = false;
                for (const PredictedRow* row : pit->second.second)
                    if (row_structure_matches(spec, *row, c)) { ok = true; break; }
                if (!ok) {
                    entry.structure_ok = false;
                    report.match = false;
                    report.witnesses.push_back(pair_str + ": coloring " + c.str() +
                                               " fits no predicted structure");
                }
            }
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

std::vector<CycleSpec> all_specs_up_to(int p_max, bool include_special_t) {
    std::vector<CycleSpec> specs;
    auto add = [&specs](Family f, int p, bool st = false) {
        specs.push_back(CycleSpec{f, p, std::nullopt, st});
    };
    for (int p = 2; p <= p_max; ++p) add(Family::Type1, p);
    for (int p = 4; p <= p_max; p += 2) add(Family::Type2, p);
    for (int p = 3; p <= p_max; p += 2) add(Family::Type3, p);
    for (int p = 4; p <= p_max; p += 2) add(Family::Type4, p);
    for (int p = 5; p <= p_max; p += 4) add(Family::Type5, p);
    for (int p = 7; p <= p_max; p += 4) add(Family::Type6, p);
    for (int p = 6; p <= p_max; p += 4) add(Family::Type7, p);
    for (int p = 8; p <= p_max; p += 4) {
        add(Family::Type8, p);
        if (include_special_t) add(Family::Type8, p, true);
    }
    return specs;
}

} // namespace gridcover

#include "bck/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace bck {

std::string_view axiom_name(Axiom a) noexcept {
    switch (a) {
        case Axiom::BCK1: return "BCK1";
        case Axiom::BCK2: return "BCK2";
        case Axiom::BCK3: return "BCK3";
        case Axiom::BCK4: return "BCK4";
        case Axiom::BCK5: return "BCK5";
        case Axiom::X0: return "X0";
    }
    return "?";
}

const Violation* AxiomReport::find(Axiom a) const noexcept {
    for (const auto& v : violations)
        if (v.axiom == a) return &v;
    return nullptr;
}

std::string AxiomReport::str() const {
    if (violations.empty()) return "ok";
    std::ostringstream os;
    bool first = true;
    for (const auto& v : violations) {
        if (!first) os << "; ";
        first = false;
        os << axiom_name(v.axiom) << " (";
        for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << v.witness[i];
        os << ")";
    }
    return os.str();
}

namespace {

Cells flatten(std::size_t order, const RawTable& table) {
    if (order == 0) throw MalformedTable("order must be at least 1");
    if (table.size() != order)
        throw MalformedTable("expected " + std::to_string(order) + " rows, got " + std::to_string(table.size()));
    Cells cells;
    cells.reserve(order * order);
    for (std::size_t x = 0; x < order; ++x) {
        if (table[x].size() != order)
            throw MalformedTable("row " + std::to_string(x) + " has " + std::to_string(table[x].size()) +
                                 " entries, expected " + std::to_string(order));
        for (std::size_t y = 0; y < order; ++y) {
            long long v = table[x][y];
            if (v < 0 || static_cast<unsigned long long>(v) >= order)
                throw MalformedTable("entry " + std::to_string(v) + " at (" + std::to_string(x) + "," +
                                     std::to_string(y) + ") is out of range");
            cells.push_back(static_cast<Element>(v));
        }
    }
    return cells;
}

}  // namespace

AxiomReport check_axioms(std::size_t order, const RawTable& table) {
    Cells cells = flatten(order, table);
    return check_axioms(order, cells);
}

AxiomReport check_axioms(std::size_t order, std::span<const Element> t) {
    const std::size_t n = order;
    if (n == 0) throw MalformedTable("order must be at least 1");
    if (t.size() != n * n) throw MalformedTable("cell count does not match order");
    for (Element v : t)
        if (v >= n) throw MalformedTable("entry " + std::to_string(v) + " is out of range");

    auto at = [&](std::size_t x, std::size_t y) -> std::size_t { return t[x * n + y]; };
    auto E = [](std::size_t v) { return static_cast<Element>(v); };
    AxiomReport report;

    // BCK1: ((x.y).(x.z)).(z.y) = 0
    [&] {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                const std::size_t xy = at(x, y);
                for (std::size_t z = 0; z < n; ++z)
                    if (at(at(xy, at(x, z)), at(z, y)) != 0) {
                        report.violations.push_back({Axiom::BCK1, {E(x), E(y), E(z)}});
                        return;
                    }
            }
    }();
    // BCK2: (x.(x.y)).y = 0
    [&] {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (at(at(x, at(x, y)), y) != 0) {
                    report.violations.push_back({Axiom::BCK2, {E(x), E(y)}});
                    return;
                }
    }();
    for (std::size_t x = 0; x < n; ++x)
        if (at(x, x) != 0) {
            report.violations.push_back({Axiom::BCK3, {E(x)}});
            break;
        }
    for (std::size_t x = 0; x < n; ++x)
        if (at(0, x) != 0) {
            report.violations.push_back({Axiom::BCK4, {E(x)}});
            break;
        }
    [&] {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (x != y && at(x, y) == 0 && at(y, x) == 0) {
                    report.violations.push_back({Axiom::BCK5, {E(x), E(y)}});
                    return;
                }
    }();
    // Index 0 must act as the constant: x.0 = x.
    for (std::size_t x = 0; x < n; ++x)
        if (at(x, 0) != x) {
            report.violations.push_back({Axiom::X0, {E(x)}});
            break;
        }
    return report;
}

BckAlgebra::BckAlgebra(std::size_t order, Cells cells) : order_(order), cells_(std::move(cells)) {
    for (Element m = 0; m < order_; ++m) {
        bool top = true;
        for (Element x = 0; x < order_ && top; ++x) top = op(x, m) == 0;
        if (top) {
            bound_ = m;
            break;
        }
    }
}

BckAlgebra BckAlgebra::from_table(std::size_t order, const RawTable& table) {
    return from_cells(order, flatten(order, table));
}

BckAlgebra BckAlgebra::from_cells(std::size_t order, Cells cells) {
    AxiomReport report = check_axioms(order, cells);
    if (!report.ok()) throw InvalidAlgebra(std::move(report));
    return BckAlgebra(order, std::move(cells));
}

RawTable BckAlgebra::table() const {
    RawTable out(order_, std::vector<long long>(order_));
    for (std::size_t x = 0; x < order_; ++x)
        for (std::size_t y = 0; y < order_; ++y) out[x][y] = cells_[x * order_ + y];
    return out;
}

Element BckAlgebra::neg(Element x) const {
    if (!bound_) throw UnboundedAlgebra();
    return op(*bound_, x);
}

Element BckAlgebra::join(Element x, Element y) const { return neg(meet(neg(x), neg(y))); }

bool BckAlgebra::is_linear() const noexcept {
    for (Element x = 0; x < order_; ++x)
        for (Element y = x + 1; y < order_; ++y)
            if (!leq(x, y) && !leq(y, x)) return false;
    return true;
}

std::optional<std::pair<Element, Element>> BckAlgebra::non_commuting_pair() const noexcept {
    for (Element x = 0; x < order_; ++x)
        for (Element y = 0; y < order_; ++y)
            if (meet(x, y) != meet(y, x)) return std::pair{x, y};
    return std::nullopt;
}

bool BckAlgebra::is_commutative() const noexcept { return !non_commuting_pair(); }

bool BckAlgebra::is_positive_implicative() const noexcept {
    for (Element x = 0; x < order_; ++x)
        for (Element y = 0; y < order_; ++y)
            if (op(x, y) != op(op(x, y), y)) return false;
    return true;
}

bool BckAlgebra::is_implicative() const noexcept {
    for (Element x = 0; x < order_; ++x)
        for (Element y = 0; y < order_; ++y)
            if (op(x, op(y, x)) != x) return false;
    return true;
}

std::vector<Element> BckAlgebra::atoms() const {
    std::vector<Element> out;
    for (Element a = 1; a < order_; ++a) {
        bool minimal = true;
        for (Element b = 1; b < order_ && minimal; ++b) minimal = b == a || !leq(b, a);
        if (minimal) out.push_back(a);
    }
    return out;
}

Cells permute_cells(std::size_t order, std::span<const Element> cells, std::span<const Element> perm) {
    Cells out(order * order);
    for (std::size_t x = 0; x < order; ++x)
        for (std::size_t y = 0; y < order; ++y) out[perm[x] * order + perm[y]] = perm[cells[x * order + y]];
    return out;
}

BckAlgebra permuted(const BckAlgebra& a, std::span<const Element> perm) {
    if (perm.size() != a.order() || perm.empty() || perm[0] != 0) throw RangeError("relabeling must fix 0");
    std::vector<bool> seen(a.order());
    for (Element p : perm) {
        if (p >= a.order() || seen[p]) throw RangeError("relabeling is not a permutation");
        seen[p] = true;
    }
    return BckAlgebra::from_cells(a.order(), permute_cells(a.order(), a.cells(), perm));
}

}  // namespace bck

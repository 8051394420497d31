#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bck/errors.hpp"

namespace bck {

/// Index of a carrier element. Index 0 is always the constant 0.
using Element = std::uint32_t;

/// Row-major n*n cells; cell x*n + y holds x.y.
using Cells = std::vector<Element>;

/// Nested table as read from user input; entries are range-checked before use.
using RawTable = std::vector<std::vector<long long>>;

enum class Axiom { BCK1, BCK2, BCK3, BCK4, BCK5, X0 };

std::string_view axiom_name(Axiom a) noexcept;

struct Violation {
    Axiom axiom;
    std::vector<Element> witness;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// One entry per violated axiom class, in the order BCK1..BCK5, X0. Each
/// witness is the lexicographically first failing tuple.
struct AxiomReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    const Violation* find(Axiom a) const noexcept;
    std::string str() const;
};

/// Throws MalformedTable when the table is not square or has out-of-range entries.
AxiomReport check_axioms(std::size_t order, const RawTable& table);
AxiomReport check_axioms(std::size_t order, std::span<const Element> cells);

class InvalidAlgebra : public Error {
public:
    explicit InvalidAlgebra(AxiomReport report)
        : Error("table is not a BCK-algebra: " + report.str()), report_(std::move(report)) {}
    const AxiomReport& report() const noexcept { return report_; }

private:
    AxiomReport report_;
};

/// A finite BCK-algebra given by its Cayley table. Immutable once built.
class BckAlgebra {
public:
    static BckAlgebra from_table(std::size_t order, const RawTable& table);
    static BckAlgebra from_cells(std::size_t order, Cells cells);

    std::size_t order() const noexcept { return order_; }
    std::span<const Element> cells() const noexcept { return cells_; }
    RawTable table() const;

    Element op(Element x, Element y) const noexcept { return cells_[x * order_ + y]; }
    bool leq(Element x, Element y) const noexcept { return op(x, y) == 0; }
    /// x & y := y.(y.x)
    Element meet(Element x, Element y) const noexcept { return op(y, op(y, x)); }

    /// The greatest element, when there is one.
    std::optional<Element> bound() const noexcept { return bound_; }
    /// ~x := 1.x; throws UnboundedAlgebra.
    Element neg(Element x) const;
    /// x | y := ~(~x & ~y), evaluated literally whether or not the algebra is commutative.
    Element join(Element x, Element y) const;

    bool is_linear() const noexcept;
    bool is_commutative() const noexcept;
    bool is_positive_implicative() const noexcept;
    bool is_implicative() const noexcept;
    std::vector<Element> atoms() const;

    /// First pair (x, y) in lexicographic order with x & y != y & x.
    std::optional<std::pair<Element, Element>> non_commuting_pair() const noexcept;

    friend bool operator==(const BckAlgebra& a, const BckAlgebra& b) noexcept {
        return a.order_ == b.order_ && a.cells_ == b.cells_;
    }

private:
    BckAlgebra(std::size_t order, Cells cells);

    std::size_t order_;
    Cells cells_;
    std::optional<Element> bound_;
};

/// Relabels by `perm` (old index -> new index, perm[0] == 0): result[p(x)][p(y)] = p(x.y).
Cells permute_cells(std::size_t order, std::span<const Element> cells, std::span<const Element> perm);
BckAlgebra permuted(const BckAlgebra& a, std::span<const Element> perm);

/// Lexicographically least row-major table over all relabelings fixing 0.
Cells canonical_form(std::size_t order, std::span<const Element> cells);
Cells canonical_form(const BckAlgebra& a);
BckAlgebra canonical(const BckAlgebra& a);

/// An isomorphism a -> b as an index map, if one exists.
std::optional<std::vector<Element>> find_isomorphism(const BckAlgebra& a, const BckAlgebra& b);
bool is_isomorphic(const BckAlgebra& a, const BckAlgebra& b);

}  // namespace bck

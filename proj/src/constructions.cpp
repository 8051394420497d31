#include "bck/constructions.hpp"

#include <algorithm>

namespace bck {

namespace {

BckAlgebra make(std::size_t n, Cells cells) { return BckAlgebra::from_cells(n, std::move(cells)); }

void require(bool ok, const std::string& what) {
    if (!ok) throw RangeError(what);
}

}  // namespace

BckAlgebra trivial() { return make(1, {0}); }
BckAlgebra two() { return make(2, {0, 0, 1, 0}); }
BckAlgebra pi() { return make(3, {0, 0, 0, 1, 0, 0, 2, 2, 0}); }
BckAlgebra tc() { return make(3, {0, 0, 0, 1, 0, 0, 2, 1, 0}); }

BckAlgebra chain(std::size_t n) {
    require(n >= 2, "chain requires n >= 2");
    Cells c(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) c[x * n + y] = static_cast<Element>(x > y ? x - y : 0);
    return make(n, std::move(c));
}

BckAlgebra bck_union(const BckAlgebra& a, const BckAlgebra& b) {
    const std::size_t na = a.order();
    const std::size_t nb = b.order();
    const std::size_t n = na + nb - 1;
    // Index of b's element j in the union.
    auto from_b = [&](std::size_t j) -> std::size_t { return j == 0 ? 0 : na + j - 1; };
    Cells c(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const bool xa = x < na;
            const bool ya = y < na;
            const bool xb = x == 0 || x >= na;
            const bool yb = y == 0 || y >= na;
            std::size_t v;
            if (xa && ya) {
                v = a.op(static_cast<Element>(x), static_cast<Element>(y));
            } else if (xb && yb) {
                auto bx = static_cast<Element>(x == 0 ? 0 : x - na + 1);
                auto by = static_cast<Element>(y == 0 ? 0 : y - na + 1);
                v = from_b(b.op(bx, by));
            } else {
                v = x;
            }
            c[x * n + y] = static_cast<Element>(v);
        }
    return make(n, std::move(c));
}

BckAlgebra iseki_extension(const BckAlgebra& a) {
    const std::size_t m = a.order();
    const std::size_t n = m + 1;
    const auto top = static_cast<Element>(m);
    Cells c(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            Element v;
            if (y == top) v = 0;
            else if (x == top) v = top;
            else v = a.op(static_cast<Element>(x), static_cast<Element>(y));
            c[x * n + y] = v;
        }
    return make(n, std::move(c));
}

BckAlgebra direct_product(const BckAlgebra& a, const BckAlgebra& b) {
    const std::size_t na = a.order();
    const std::size_t nb = b.order();
    const std::size_t n = na * nb;
    Cells c(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            auto xa = static_cast<Element>(x / nb), xb = static_cast<Element>(x % nb);
            auto ya = static_cast<Element>(y / nb), yb = static_cast<Element>(y % nb);
            c[x * n + y] = static_cast<Element>(a.op(xa, ya) * nb + b.op(xb, yb));
        }
    return make(n, std::move(c));
}

BckAlgebra d_algebra(std::size_t n) {
    require(n >= 3, "D_n requires n >= 3");
    const std::size_t m = n + 1;
    Cells c(m * m, 0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) c[x * m + y] = static_cast<Element>(x > y ? x - y : 0);
    // Column n is all zeros; row n:
    c[n * m + 0] = static_cast<Element>(n);
    for (std::size_t k = 1; k + 2 <= n; ++k) c[n * m + k] = static_cast<Element>(n - k - 1);
    c[n * m + (n - 1)] = 1;
    return make(m, std::move(c));
}

BckAlgebra q_algebra(std::size_t n) {
    require(n >= 3, "Q_n requires n >= 3");
    constexpr Element a = 1;
    auto leq = [](std::size_t x, std::size_t y) { return x == 0 || x == y || (x == a && y > a); };
    Cells c(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            Element v;
            if (leq(x, y)) v = 0;
            else if (y == 0) v = static_cast<Element>(x);
            else v = a;  // x = b_i and y = a or y = b_j with j != i
            c[x * n + y] = v;
        }
    return make(n, std::move(c));
}

std::optional<FamilyName> parse_family_name(std::string_view s) {
    if (s == "C") return FamilyName::C;
    if (s == "D") return FamilyName::D;
    if (s == "Q") return FamilyName::Q;
    if (s == "B") return FamilyName::B;
    if (s == "M") return FamilyName::M;
    if (s == "P") return FamilyName::P;
    if (s == "Pprime" || s == "P'") return FamilyName::Pprime;
    return std::nullopt;
}

std::string_view family_label(FamilyName f) noexcept {
    switch (f) {
        case FamilyName::C: return "C";
        case FamilyName::D: return "D";
        case FamilyName::Q: return "Q";
        case FamilyName::B: return "B";
        case FamilyName::M: return "M";
        case FamilyName::P: return "P";
        case FamilyName::Pprime: return "Pprime";
    }
    return "?";
}

BckAlgebra family(const FamilySpec& spec) {
    const std::size_t n = spec.n;
    switch (spec.name) {
        case FamilyName::C: return chain(n);
        case FamilyName::D: return d_algebra(n);
        case FamilyName::Q: return q_algebra(n);
        default: break;
    }
    require(n >= 3, std::string(family_label(spec.name)) + "_n requires n >= 3");
    const bool by_union = spec.name == FamilyName::B || spec.name == FamilyName::P;
    const bool from_pi = spec.name == FamilyName::B || spec.name == FamilyName::M;
    BckAlgebra acc = from_pi ? pi() : tc();
    const BckAlgebra unit = two();
    for (std::size_t k = 4; k <= n; ++k) acc = by_union ? bck_union(acc, unit) : iseki_extension(acc);
    return acc;
}

}  // namespace bck

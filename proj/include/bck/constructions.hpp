#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "bck/algebra.hpp"

namespace bck {

/// The one-element algebra (bounded, with 1 = 0).
BckAlgebra trivial();
/// The unique algebra of order 2: [[0,0],[1,0]].
BckAlgebra two();
/// Positive implicative, not commutative: row 2 is [2,2,0].
BckAlgebra pi();
/// Commutative, not positive implicative: row 2 is [2,1,0].
BckAlgebra tc();

/// C_n on {0..n-1} with x.y = max(x - y, 0). Requires n >= 2.
BckAlgebra chain(std::size_t n);

/// Glues a and b at 0; cross-component products return the left operand.
/// a keeps its indices, the non-zero elements of b follow in order.
BckAlgebra bck_union(const BckAlgebra& a, const BckAlgebra& b);

/// Adjoins a new top T (index |a|) with x.T = 0, T.T = 0, T.x = T.
BckAlgebra iseki_extension(const BckAlgebra& a);

/// Componentwise product; the pair (i, j) gets index i * |b| + j.
BckAlgebra direct_product(const BckAlgebra& a, const BckAlgebra& b);

/// One-point extension of C_n by a top n with n.k = n-k-1 (1 <= k <= n-2),
/// n.(n-1) = 1. Order n + 1; requires n >= 3.
BckAlgebra d_algebra(std::size_t n);

/// Q_n: 0 < a < b_1, ..., b_{n-2}, with b_i.a = a and b_i.b_j = a for i != j.
/// Index layout 0 -> 0, a -> 1, b_i -> i + 1. Requires n >= 3.
BckAlgebra q_algebra(std::size_t n);

enum class FamilyName { C, D, Q, B, M, P, Pprime };

struct FamilySpec {
    FamilyName name;
    std::size_t n;
};

std::optional<FamilyName> parse_family_name(std::string_view s);
std::string_view family_label(FamilyName f) noexcept;

/// Builds a named family member. B and P grow by union with 2 from PI and TC,
/// M and P' by Iseki extension from PI and TC.
BckAlgebra family(const FamilySpec& spec);

}  // namespace bck

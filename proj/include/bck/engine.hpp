#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "bck/algebra.hpp"
#include "bck/degree.hpp"
#include "bck/term.hpp"

namespace bck {

/// Fraction of tuples in A^k that satisfy `eq`, counted exhaustively.
///
/// With jobs > 1 the tuple space is split into contiguous ranges of the
/// row-major tuple index; the result does not depend on the split.
Degree ds(const BckAlgebra& a, const Equation& eq, unsigned jobs = 1);

enum class DegreeKind { emd, dnd, cd, pid, id };

std::string_view kind_label(DegreeKind k) noexcept;
std::optional<DegreeKind> parse_kind(std::string_view s);
Builtin kind_equation(DegreeKind k) noexcept;

/// Excluded-middle degree plus whether the algebra lies outside the
/// bounded commutative setting where the degree is usually studied.
struct EmdResult {
    Degree degree;
    bool outside_hypothesis;
};

EmdResult emd(const BckAlgebra& a);
Degree dnd(const BckAlgebra& a);
Degree cd(const BckAlgebra& a);
Degree pid(const BckAlgebra& a);
Degree id(const BckAlgebra& a);
Degree degree_of(const BckAlgebra& a, DegreeKind k);

/// ds(A x B) == ds(A) * ds(B), exactly.
bool check_multiplicative(const BckAlgebra& a, const BckAlgebra& b, const Equation& eq);

/// [ds(C_2, eq), ..., ds(C_max_n, eq)].
std::vector<Degree> chain_degrees(const Equation& eq, std::size_t max_n, unsigned jobs = 1);

/// Chain-sequence evidence for a satisfiability gap over the computed range.
/// This is a finite sample; it never certifies a gap on its own.
struct GapEvidence {
    Equation equation;
    std::size_t max_n = 0;
    std::vector<Degree> sequence;  // d_2 .. d_max_n
    /// Largest d_m < 1 in range, with the smallest m attaining it.
    std::optional<std::pair<std::size_t, Degree>> sub_one_max;
    /// From the first m with d_m < 1 on, the sequence never increases.
    bool monotone_nonincreasing_after_first_sub_one = true;

    std::optional<Degree> candidate_gap() const;
};

GapEvidence gap_evidence(const Equation& eq, std::size_t max_n, unsigned jobs = 1);

/// Chain lengths (ascending, each >= 2) whose product of chains is
/// isomorphic to the algebra. Empty for the one-element algebra.
struct ChainDecomposition {
    std::vector<std::size_t> chain_lengths;
};

/// Throws NotCommutative, or InternalError if no factorization matches.
ChainDecomposition decompose_commutative(const BckAlgebra& a);
BckAlgebra product_of_chains(const std::vector<std::size_t>& lengths);

}  // namespace bck

#pragma once

#include <random>
#include <set>

#include "bck/algebra.hpp"
#include "bck/degree.hpp"
#include "bck/term.hpp"

// Slow, independent reference computations used to check the fast paths.
namespace oracle {

/// Every table with row 0 zero and column 0 the identity, all other cells free,
/// filtered by the axioms and reduced to canonical form. No pruning at all.
std::set<bck::Cells> brute_force_catalog(std::size_t n);

// Degrees counted straight from the table, without the term language.
bck::Degree cd(const bck::BckAlgebra& a);
bck::Degree pid(const bck::BckAlgebra& a);
bck::Degree id(const bck::BckAlgebra& a);
bck::Degree dnd(const bck::BckAlgebra& a);
bck::Degree emd(const bck::BckAlgebra& a);

/// Canonical form by trying every permutation fixing 0 with no early exit.
bck::Cells slow_canonical(std::size_t n, const bck::Cells& cells);

/// Random term over variables x, y, z and the constants, at most `depth` deep.
bck::Term random_term(std::mt19937& rng, std::size_t depth);

}  // namespace oracle

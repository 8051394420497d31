#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bck/algebra.hpp"
#include "bck/degree.hpp"
#include "bck/engine.hpp"

namespace bck {

struct EnumerationOptions {
    unsigned jobs = 1;
    /// Abort once this many search nodes have been visited; 0 means no limit.
    std::uint64_t node_budget = 0;
    /// Reduce each completed table to canonical form as soon as it is found.
    /// When false, all labeled tables are kept and reduced at the end.
    bool dedup_during_search = true;
    /// Number of leading free cells expanded before work is handed to workers.
    std::size_t split_depth = 3;
};

struct EnumerationStats {
    std::uint64_t nodes = 0;
    std::uint64_t labeled_tables = 0;
};

class EnumerationAborted : public Error {
public:
    EnumerationAborted(std::size_t order, EnumerationStats stats, std::size_t found_so_far)
        : Error("enumeration of order " + std::to_string(order) + " exceeded its node budget after " +
                std::to_string(stats.nodes) + " nodes (" + std::to_string(found_so_far) +
                " algebras found so far)"),
          stats_(stats),
          found_(found_so_far) {}
    const EnumerationStats& stats() const noexcept { return stats_; }
    std::size_t found_so_far() const noexcept { return found_; }

private:
    EnumerationStats stats_;
    std::size_t found_;
};

/// Orders above this are allowed but not expected to finish at desk scale.
inline constexpr std::size_t kPracticalOrderCeiling = 6;

struct CatalogEntry {
    BckAlgebra algebra;
    std::optional<Element> bound;
    bool linear = false;
    bool commutative = false;
    bool positive_implicative = false;
    bool implicative = false;
    Degree cd, pid, id;
    std::optional<Degree> dnd;  // bounded algebras only
    std::optional<Degree> emd;  // bounded algebras only
    bool emd_outside_hypothesis = false;
};

CatalogEntry describe(const BckAlgebra& a);

/// All BCK-algebras of one order up to isomorphism, canonical and sorted.
struct Catalog {
    std::size_t order = 0;
    std::vector<CatalogEntry> entries;
    EnumerationStats stats;
    std::vector<std::string> warnings;
};

/// Canonical tables of every order-n algebra, sorted; the bare search.
std::vector<Cells> enumerate_tables(std::size_t n, const EnumerationOptions& opts = {},
                                    EnumerationStats* stats = nullptr);
Catalog enumerate(std::size_t n, const EnumerationOptions& opts = {});
Catalog catalog_from_tables(std::size_t n, const std::vector<Cells>& tables);

enum class SpectrumFilter { all, bounded, commutative, bounded_commutative };

struct SpectrumReport {
    std::size_t order = 0;
    DegreeKind kind = DegreeKind::cd;
    SpectrumFilter filter = SpectrumFilter::all;
    std::vector<Degree> possible;  // reduced, ascending
    std::vector<Degree> achieved;  // reduced, ascending
    std::vector<Degree> missing;   // possible \ achieved
    std::vector<Degree> unexpected;  // achieved \ possible; non-empty means a bound is broken
    std::map<Degree, BckAlgebra> witnesses;
};

/// Candidate degree values for an order-n algebra of the given kind.
std::vector<Degree> possible_degrees(std::size_t n, DegreeKind kind);

/// dnd and emd always restrict to bounded algebras; emd further to commutative ones.
SpectrumReport spectrum(const Catalog& catalog, DegreeKind kind, SpectrumFilter filter = SpectrumFilter::all);

struct ConjectureReport {
    std::size_t order = 0;
    SpectrumReport dnd;
    SpectrumReport cd;
    bool pass() const noexcept { return dnd.missing.empty() && cd.missing.empty(); }
};

ConjectureReport verify_conjectures(const Catalog& catalog);

struct AuditFailure {
    std::string check;
    BckAlgebra algebra;
    std::string detail;
};

struct AuditReport {
    std::size_t order = 0;
    std::size_t algebras_checked = 0;
    std::size_t decompositions_verified = 0;
    std::vector<std::string> checks;
    std::vector<AuditFailure> failures;
    bool pass() const noexcept { return failures.empty(); }
};

AuditReport audit_bounds(const Catalog& catalog);

/// Persists as <dir>/<hash>.txt per algebra plus <dir>/index.json.
void save_catalog(const Catalog& catalog, const std::string& dir);
Catalog load_catalog(const std::string& dir);
std::string table_hash(std::span<const Element> cells);

}  // namespace bck

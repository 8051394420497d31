#include "bck/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>
#include <mutex>
#include <set>
#include <thread>

namespace bck {

namespace {

constexpr Element kUnset = ~Element{0};

/// Depth-first search over Cayley tables of one order.
///
/// Row 0, column 0 and the diagonal are forced. The free cells are filled
/// row by row; a value v for cell (x, y) must satisfy v <= x as far as the
/// table already says so (x.y <= x holds in every BCK-algebra). After each
/// assignment every axiom instance whose cells are all known is checked.
class TableSearch {
public:
    TableSearch(std::size_t n, const EnumerationOptions& opts, std::atomic<std::uint64_t>& nodes)
        : n_(n), opts_(opts), nodes_(nodes) {
        for (std::size_t x = 1; x < n; ++x)
            for (std::size_t y = 1; y < n; ++y)
                if (x != y) free_.emplace_back(static_cast<Element>(x), static_cast<Element>(y));
    }

    Cells initial() const {
        Cells t(n_ * n_, kUnset);
        for (std::size_t x = 0; x < n_; ++x) {
            t[x] = 0;                              // 0.x = 0
            t[x * n_] = static_cast<Element>(x);  // x.0 = x
            t[x * n_ + x] = 0;                     // x.x = 0
        }
        return t;
    }

    std::size_t free_cells() const noexcept { return free_.size(); }

    /// Partial tables with the first `depth` free cells assigned consistently.
    std::vector<Cells> prefixes(std::size_t depth) {
        std::vector<Cells> out;
        Cells t = initial();
        if (!consistent(t)) return out;
        expand(t, 0, std::min(depth, free_.size()), out);
        return out;
    }

    /// Completes `t` (with its first `depth` free cells set) and reports each
    /// valid table through `emit`.
    template <class Emit>
    void complete(Cells& t, std::size_t depth, Emit&& emit) {
        if (depth == free_.size()) {
            if (check_axioms(n_, t).ok()) emit(t);
            return;
        }
        const auto [x, y] = free_[depth];
        for (Element v = 0; v < n_; ++v) {
            if (!candidate(t, x, v)) continue;
            count_node();
            t[x * n_ + y] = v;
            if (consistent(t)) complete(t, depth + 1, emit);
        }
        t[x * n_ + y] = kUnset;
    }

private:
    void count_node() {
        const auto seen = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (opts_.node_budget && seen > opts_.node_budget) throw BudgetExceeded{};
    }

    bool candidate(const Cells& t, Element x, Element v) const {
        if (v == 0 || v == x) return true;
        const Element vx = t[v * n_ + x];
        return vx == kUnset || vx == 0;
    }

    void expand(Cells& t, std::size_t depth, std::size_t limit, std::vector<Cells>& out) {
        if (depth == limit) {
            out.push_back(t);
            return;
        }
        const auto [x, y] = free_[depth];
        for (Element v = 0; v < n_; ++v) {
            if (!candidate(t, x, v)) continue;
            count_node();
            t[x * n_ + y] = v;
            if (consistent(t)) expand(t, depth + 1, limit, out);
        }
        t[x * n_ + y] = kUnset;
    }

    bool consistent(const Cells& t) const {
        const std::size_t n = n_;
        auto at = [&](Element a, Element b) -> Element {
            return (a == kUnset || b == kUnset) ? kUnset : t[a * n + b];
        };
        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y) {
                const Element xy = t[x * n + y];
                if (xy == kUnset) continue;
                if (x != y && xy == 0 && t[y * n + x] == 0) return false;  // BCK5
                if (Element r = at(xy, x); r != kUnset && r != 0) return false;  // x.y <= x
                if (Element r = at(at(x, xy), y); r != kUnset && r != 0) return false;  // BCK2
                for (Element z = 0; z < n; ++z) {
                    const Element r = at(at(xy, t[x * n + z]), t[z * n + y]);  // BCK1
                    if (r != kUnset && r != 0) return false;
                }
            }
        return true;
    }

public:
    struct BudgetExceeded {};

private:
    std::size_t n_;
    const EnumerationOptions& opts_;
    std::atomic<std::uint64_t>& nodes_;
    std::vector<std::pair<Element, Element>> free_;
};

}  // namespace

std::vector<Cells> enumerate_tables(std::size_t n, const EnumerationOptions& opts, EnumerationStats* stats) {
    if (n == 0) throw RangeError("enumeration requires order >= 1");
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::uint64_t> labeled{0};
    TableSearch search(n, opts, nodes);

    std::set<Cells> merged;
    std::mutex merge_mutex;
    std::atomic<bool> aborted{false};

    auto finish_stats = [&] {
        if (stats) *stats = {nodes.load(), labeled.load()};
    };

    std::vector<Cells> prefixes;
    try {
        prefixes = search.prefixes(opts.split_depth);
    } catch (const TableSearch::BudgetExceeded&) {
        finish_stats();
        throw EnumerationAborted(n, {nodes.load(), labeled.load()}, 0);
    }

    std::atomic<std::size_t> next{0};
    const std::size_t depth = std::min(opts.split_depth, search.free_cells());
    auto worker = [&] {
        TableSearch local(n, opts, nodes);
        std::set<Cells> found;
        try {
            for (std::size_t i; !aborted && (i = next.fetch_add(1)) < prefixes.size();) {
                Cells t = prefixes[i];
                local.complete(t, depth, [&](const Cells& table) {
                    labeled.fetch_add(1, std::memory_order_relaxed);
                    found.insert(opts.dedup_during_search ? canonical_form(n, table) : table);
                });
            }
        } catch (const TableSearch::BudgetExceeded&) {
            aborted = true;
        }
        std::lock_guard lock(merge_mutex);
        merged.insert(found.begin(), found.end());
    };

    const unsigned jobs = std::max(1u, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    if (!opts.dedup_during_search) {
        std::set<Cells> reduced;
        for (const auto& t : merged) reduced.insert(canonical_form(n, t));
        merged.swap(reduced);
    }
    finish_stats();
    if (aborted) throw EnumerationAborted(n, {nodes.load(), labeled.load()}, merged.size());
    return {merged.begin(), merged.end()};
}

CatalogEntry describe(const BckAlgebra& a) {
    CatalogEntry e{a, a.bound(), a.is_linear(), a.is_commutative(), a.is_positive_implicative(),
                   a.is_implicative(), cd(a), pid(a), id(a), std::nullopt, std::nullopt, false};
    if (a.bound()) {
        e.dnd = dnd(a);
        auto r = emd(a);
        e.emd = r.degree;
        e.emd_outside_hypothesis = r.outside_hypothesis;
    }
    return e;
}

Catalog catalog_from_tables(std::size_t n, const std::vector<Cells>& tables) {
    Catalog c;
    c.order = n;
    for (const auto& t : tables) c.entries.push_back(describe(BckAlgebra::from_cells(n, t)));
    std::sort(c.entries.begin(), c.entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        return std::lexicographical_compare(a.algebra.cells().begin(), a.algebra.cells().end(),
                                            b.algebra.cells().begin(), b.algebra.cells().end());
    });
    return c;
}

Catalog enumerate(std::size_t n, const EnumerationOptions& opts) {
    EnumerationStats stats;
    auto tables = enumerate_tables(n, opts, &stats);
    Catalog c = catalog_from_tables(n, tables);
    c.stats = stats;
    if (n > kPracticalOrderCeiling)
        c.warnings.push_back("order " + std::to_string(n) + " is above the practical ceiling of " +
                             std::to_string(kPracticalOrderCeiling));
    return c;
}

// ---------------------------------------------------------------------------
// Spectra

std::vector<Degree> possible_degrees(std::size_t n, DegreeKind kind) {
    std::set<Degree> vals;
    const std::uint64_t nn = static_cast<std::uint64_t>(n) * n;
    switch (kind) {
        case DegreeKind::dnd:
        case DegreeKind::emd:
            for (std::uint64_t k = std::min<std::uint64_t>(2, n); k <= n; ++k) vals.insert(Degree(k, n).reduced());
            break;
        case DegreeKind::cd:
            for (std::uint64_t k = 3 * n - 2; k + 2 <= nn; k += 2) vals.insert(Degree(k, nn).reduced());
            vals.insert(Degree(1, 1));
            break;
        case DegreeKind::pid:
        case DegreeKind::id:
            for (std::uint64_t k = 4 * n - 4; k + 1 <= nn; ++k) vals.insert(Degree(k, nn).reduced());
            vals.insert(Degree(1, 1));
            break;
    }
    return {vals.begin(), vals.end()};
}

namespace {

bool passes(const CatalogEntry& e, DegreeKind kind, SpectrumFilter f) {
    if ((kind == DegreeKind::dnd || kind == DegreeKind::emd) && !e.bound) return false;
    if (kind == DegreeKind::emd && !e.commutative) return false;
    switch (f) {
        case SpectrumFilter::all: return true;
        case SpectrumFilter::bounded: return e.bound.has_value();
        case SpectrumFilter::commutative: return e.commutative;
        case SpectrumFilter::bounded_commutative: return e.bound && e.commutative;
    }
    return true;
}

Degree entry_degree(const CatalogEntry& e, DegreeKind kind) {
    switch (kind) {
        case DegreeKind::emd: return *e.emd;
        case DegreeKind::dnd: return *e.dnd;
        case DegreeKind::cd: return e.cd;
        case DegreeKind::pid: return e.pid;
        case DegreeKind::id: return e.id;
    }
    return e.cd;
}

}  // namespace

SpectrumReport spectrum(const Catalog& catalog, DegreeKind kind, SpectrumFilter filter) {
    SpectrumReport r;
    r.order = catalog.order;
    r.kind = kind;
    r.filter = filter;
    r.possible = possible_degrees(catalog.order, kind);
    for (const auto& e : catalog.entries) {
        if (!passes(e, kind, filter)) continue;
        r.witnesses.try_emplace(entry_degree(e, kind).reduced(), e.algebra);
    }
    for (const auto& [d, _] : r.witnesses) r.achieved.push_back(d);
    std::set_difference(r.possible.begin(), r.possible.end(), r.achieved.begin(), r.achieved.end(),
                        std::back_inserter(r.missing));
    std::set_difference(r.achieved.begin(), r.achieved.end(), r.possible.begin(), r.possible.end(),
                        std::back_inserter(r.unexpected));
    return r;
}

ConjectureReport verify_conjectures(const Catalog& catalog) {
    if (catalog.order < 3) throw RangeError("conjecture checks need order >= 3");
    return {catalog.order, spectrum(catalog, DegreeKind::dnd), spectrum(catalog, DegreeKind::cd)};
}

// ---------------------------------------------------------------------------
// Bound audits

AuditReport audit_bounds(const Catalog& catalog) {
    AuditReport r;
    r.order = catalog.order;
    const std::uint64_t n = catalog.order;
    const std::uint64_t nn = n * n;
    const Degree cd_lo(3 * n - 2, nn);
    const Degree cd_hi(nn >= 2 ? nn - 2 : 0, nn);
    const Degree dnd_lo(std::min<std::uint64_t>(2, n), n);
    const Degree dnd_hi(n - 1, n);
    const Degree p_lo(4 * n - 4, nn);
    const Degree p_hi(nn - 1, nn);
    const Degree lin_lo(nn + 3 * n - 2, 2 * nn);
    const Degree half(1, 2);

    r.checks = {"non-commutative: (3n-2)/n^2 <= cd <= (n^2-2)/n^2",
                "bounded non-commutative: 2/n <= dnd <= (n-1)/n",
                "not positive implicative: (4n-4)/n^2 <= pid <= (n^2-1)/n^2",
                "not implicative: (4n-4)/n^2 <= id <= (n^2-1)/n^2",
                "linear, not positive implicative: (n^2+3n-2)/(2n^2) <= pid <= (n^2-1)/n^2",
                "linear, not implicative: (n^2+3n-2)/(2n^2) <= id <= (n^2-1)/n^2",
                "cd = 1 iff commutative",
                "pid = 1 iff positive implicative",
                "id = 1 iff implicative",
                "implicative iff commutative and positive implicative",
                "bounded commutative: dnd = 1, and emd = 1 iff positive implicative",
                "linear: pid > 1/2 and id > 1/2",
                "commutative: chain decomposition with product isomorphism"};

    for (const auto& e : catalog.entries) {
        ++r.algebras_checked;
        auto fail = [&](std::size_t check, std::string detail) {
            r.failures.push_back({r.checks[check], e.algebra, std::move(detail)});
        };
        auto within = [](const Degree& d, const Degree& lo, const Degree& hi) { return lo <= d && d <= hi; };

        if (!e.commutative && !within(e.cd, cd_lo, cd_hi)) fail(0, "cd = " + e.cd.str());
        if (!e.commutative && e.dnd && !within(*e.dnd, dnd_lo, dnd_hi)) fail(1, "dnd = " + e.dnd->str());
        if (!e.positive_implicative && !within(e.pid, p_lo, p_hi)) fail(2, "pid = " + e.pid.str());
        if (!e.implicative && !within(e.id, p_lo, p_hi)) fail(3, "id = " + e.id.str());
        if (e.linear && !e.positive_implicative && !within(e.pid, lin_lo, p_hi)) fail(4, "pid = " + e.pid.str());
        if (e.linear && !e.implicative && !within(e.id, lin_lo, p_hi)) fail(5, "id = " + e.id.str());
        if (e.cd.is_one() != e.commutative) fail(6, "cd = " + e.cd.str());
        if (e.pid.is_one() != e.positive_implicative) fail(7, "pid = " + e.pid.str());
        if (e.id.is_one() != e.implicative) fail(8, "id = " + e.id.str());
        if (e.implicative != (e.commutative && e.positive_implicative)) fail(9, "flags disagree");
        if (e.bound && e.commutative) {
            if (!e.dnd->is_one()) fail(10, "dnd = " + e.dnd->str());
            if (e.emd->is_one() != e.positive_implicative) fail(10, "emd = " + e.emd->str());
        }
        if (e.linear && !(e.pid > half && e.id > half)) fail(11, "pid = " + e.pid.str() + ", id = " + e.id.str());
        if (e.commutative) {
            try {
                auto dec = decompose_commutative(e.algebra);
                if (!find_isomorphism(product_of_chains(dec.chain_lengths), e.algebra))
                    fail(12, "decomposition does not verify");
                else
                    ++r.decompositions_verified;
            } catch (const Error& ex) {
                fail(12, ex.what());
            }
        }
    }
    return r;
}

}  // namespace bck

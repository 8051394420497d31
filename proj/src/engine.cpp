#include "bck/engine.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "bck/constructions.hpp"

namespace bck {

namespace {

std::uint64_t checked_power(std::uint64_t base, std::size_t exp) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i)
        if (__builtin_mul_overflow(r, base, &r)) throw Error("tuple space exceeds 64 bits");
    return r;
}

std::uint64_t count_range(const CompiledEquation& ce, std::size_t n, std::size_t k, std::uint64_t begin,
                          std::uint64_t end) {
    std::vector<Element> tuple(k);
    // Row-major decode of `begin`: the last variable varies fastest.
    std::uint64_t idx = begin;
    for (std::size_t i = k; i-- > 0;) {
        tuple[i] = static_cast<Element>(idx % n);
        idx /= n;
    }
    std::uint64_t count = 0;
    for (std::uint64_t t = begin; t < end; ++t) {
        if (ce.holds(tuple)) ++count;
        for (std::size_t i = k; i-- > 0;) {
            if (++tuple[i] < n) break;
            tuple[i] = 0;
        }
    }
    return count;
}

}  // namespace

Degree ds(const BckAlgebra& a, const Equation& eq, unsigned jobs) {
    const CompiledEquation ce(a, eq);
    const std::size_t n = a.order();
    const std::size_t k = eq.arity();
    const std::uint64_t total = checked_power(n, k);
    jobs = std::max(1u, jobs);
    if (jobs == 1 || total < 2 * jobs) return Degree(count_range(ce, n, k, 0, total), total);

    std::vector<std::uint64_t> partial(jobs, 0);
    std::vector<std::thread> workers;
    for (unsigned j = 0; j < jobs; ++j) {
        const std::uint64_t b = total * j / jobs;
        const std::uint64_t e = total * (j + 1) / jobs;
        workers.emplace_back([&, j, b, e] { partial[j] = count_range(ce, n, k, b, e); });
    }
    for (auto& w : workers) w.join();
    std::uint64_t count = 0;
    for (auto c : partial) count += c;
    return Degree(count, total);
}

std::string_view kind_label(DegreeKind k) noexcept {
    switch (k) {
        case DegreeKind::emd: return "emd";
        case DegreeKind::dnd: return "dnd";
        case DegreeKind::cd: return "cd";
        case DegreeKind::pid: return "pid";
        case DegreeKind::id: return "id";
    }
    return "";
}

std::optional<DegreeKind> parse_kind(std::string_view s) {
    for (DegreeKind k : {DegreeKind::emd, DegreeKind::dnd, DegreeKind::cd, DegreeKind::pid, DegreeKind::id})
        if (kind_label(k) == s) return k;
    return std::nullopt;
}

Builtin kind_equation(DegreeKind k) noexcept {
    switch (k) {
        case DegreeKind::emd: return Builtin::EM;
        case DegreeKind::dnd: return Builtin::DN;
        case DegreeKind::cd: return Builtin::T;
        case DegreeKind::pid: return Builtin::E1;
        case DegreeKind::id: return Builtin::I;
    }
    return Builtin::T;
}

namespace {

const Equation& cached(Builtin b) {
    static const Equation eqs[] = {builtin(Builtin::DN), builtin(Builtin::EM), builtin(Builtin::T),
                                   builtin(Builtin::E1), builtin(Builtin::I),  builtin(Builtin::X1),
                                   builtin(Builtin::NX1)};
    return eqs[static_cast<int>(b)];
}

}  // namespace

EmdResult emd(const BckAlgebra& a) { return {ds(a, cached(Builtin::EM)), !a.is_commutative()}; }
Degree dnd(const BckAlgebra& a) { return ds(a, cached(Builtin::DN)); }
Degree cd(const BckAlgebra& a) { return ds(a, cached(Builtin::T)); }
Degree pid(const BckAlgebra& a) { return ds(a, cached(Builtin::E1)); }
Degree id(const BckAlgebra& a) { return ds(a, cached(Builtin::I)); }

Degree degree_of(const BckAlgebra& a, DegreeKind k) { return ds(a, cached(kind_equation(k))); }

bool check_multiplicative(const BckAlgebra& a, const BckAlgebra& b, const Equation& eq) {
    return ds(direct_product(a, b), eq) == ds(a, eq) * ds(b, eq);
}

std::vector<Degree> chain_degrees(const Equation& eq, std::size_t max_n, unsigned jobs) {
    if (max_n < 2) throw RangeError("chain_degrees requires max_n >= 2");
    std::vector<Degree> out;
    out.reserve(max_n - 1);
    for (std::size_t n = 2; n <= max_n; ++n) out.push_back(ds(chain(n), eq, jobs));
    return out;
}

std::optional<Degree> GapEvidence::candidate_gap() const {
    if (!sub_one_max) return std::nullopt;
    const Degree& d = sub_one_max->second;
    return Degree(d.total() - d.count(), d.total()).reduced();
}

GapEvidence gap_evidence(const Equation& eq, std::size_t max_n, unsigned jobs) {
    if (max_n < 3) throw RangeError("gap_evidence requires max_n >= 3");
    GapEvidence ev{eq, max_n, chain_degrees(eq, max_n, jobs), std::nullopt, true};
    bool seen_sub_one = false;
    std::optional<Degree> prev;
    for (std::size_t i = 0; i < ev.sequence.size(); ++i) {
        const Degree& d = ev.sequence[i];
        const std::size_t n = i + 2;
        if (seen_sub_one && prev && d > *prev) ev.monotone_nonincreasing_after_first_sub_one = false;
        if (!d.is_one()) {
            seen_sub_one = true;
            if (!ev.sub_one_max || d > ev.sub_one_max->second) ev.sub_one_max = std::pair{n, d};
        }
        if (seen_sub_one) prev = d;
    }
    return ev;
}

BckAlgebra product_of_chains(const std::vector<std::size_t>& lengths) {
    BckAlgebra acc = trivial();
    for (std::size_t len : lengths) acc = acc.order() == 1 ? chain(len) : direct_product(acc, chain(len));
    return acc;
}

namespace {

// Factorizations of n into factors >= 2, each in non-increasing order,
// larger leading factors first.
void factorizations(std::size_t n, std::size_t max_factor, std::vector<std::size_t>& cur,
                    const std::function<bool(const std::vector<std::size_t>&)>& visit, bool& done) {
    if (done) return;
    if (n == 1) {
        done = visit(cur);
        return;
    }
    for (std::size_t f = std::min(n, max_factor); f >= 2 && !done; --f) {
        if (n % f) continue;
        cur.push_back(f);
        factorizations(n / f, f, cur, visit, done);
        cur.pop_back();
    }
}

}  // namespace

ChainDecomposition decompose_commutative(const BckAlgebra& a) {
    if (!a.is_commutative()) throw NotCommutative();
    if (a.order() == 1) return {};
    std::optional<std::vector<std::size_t>> found;
    std::vector<std::size_t> cur;
    bool done = false;
    factorizations(
        a.order(), a.order(), cur,
        [&](const std::vector<std::size_t>& lengths) {
            if (is_isomorphic(product_of_chains(lengths), a)) {
                found = lengths;
                return true;
            }
            return false;
        },
        done);
    if (!found) throw InternalError("no product of chains is isomorphic to this commutative algebra");
    std::sort(found->begin(), found->end());
    return {*found};
}

}  // namespace bck

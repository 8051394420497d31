#include <algorithm>
#include <numeric>

#include "bck/algebra.hpp"

namespace bck {

Cells canonical_form(std::size_t n, std::span<const Element> t) {
    if (n <= 2) return Cells(t.begin(), t.end());

    // q maps new label -> old element, p is its inverse.
    std::vector<Element> q(n), p(n);
    std::iota(q.begin(), q.end(), Element{0});
    Cells best(t.begin(), t.end());
    Cells cur(n * n);
    do {
        for (std::size_t i = 0; i < n; ++i) p[q[i]] = static_cast<Element>(i);
        bool better = false;
        bool worse = false;
        for (std::size_t i = 0; i < n && !worse; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Element v = p[t[q[i] * n + q[j]]];
                cur[i * n + j] = v;
                if (!better) {
                    if (v < best[i * n + j]) {
                        better = true;
                    } else if (v > best[i * n + j]) {
                        worse = true;
                        break;
                    }
                }
            }
        if (better) best = cur;
    } while (std::next_permutation(q.begin() + 1, q.end()));
    return best;
}

Cells canonical_form(const BckAlgebra& a) { return canonical_form(a.order(), a.cells()); }

BckAlgebra canonical(const BckAlgebra& a) { return BckAlgebra::from_cells(a.order(), canonical_form(a)); }

namespace {

struct Signature {
    std::size_t below = 0;  // |{y : y <= x}|
    std::size_t above = 0;  // |{y : x <= y}|
    std::size_t fixed = 0;  // |{y : x.y = x}|

    friend bool operator==(const Signature&, const Signature&) = default;
    friend auto operator<=>(const Signature&, const Signature&) = default;
};

std::vector<Signature> signatures(const BckAlgebra& a) {
    const auto n = static_cast<Element>(a.order());
    std::vector<Signature> sig(n);
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
            if (a.leq(y, x)) ++sig[x].below;
            if (a.leq(x, y)) ++sig[x].above;
            if (a.op(x, y) == x) ++sig[x].fixed;
        }
    return sig;
}

class IsoSearch {
public:
    IsoSearch(const BckAlgebra& a, const BckAlgebra& b)
        : a_(a), b_(b), sa_(signatures(a)), sb_(signatures(b)), map_(a.order(), kNone), used_(a.order(), false) {
        // Assign from the bottom of the order up, so products of assigned
        // elements tend to be assigned already.
        for (Element x = 1; x < a.order(); ++x) order_.push_back(x);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Element x, Element y) { return sa_[x].below < sa_[y].below; });
    }

    std::optional<std::vector<Element>> run() {
        auto ka = sa_, kb = sb_;
        std::sort(ka.begin(), ka.end());
        std::sort(kb.begin(), kb.end());
        if (ka != kb) return std::nullopt;
        map_[0] = 0;
        used_[0] = true;
        if (extend(0)) return map_;
        return std::nullopt;
    }

private:
    static constexpr Element kNone = ~Element{0};

    bool consistent(Element x) const {
        for (Element y : assigned_) {
            for (auto [u, v] : {std::pair{x, y}, std::pair{y, x}, std::pair{x, x}}) {
                Element r = map_[a_.op(u, v)];
                if (r != kNone && r != b_.op(map_[u], map_[v])) return false;
            }
        }
        // Products of earlier pairs that land on x.
        for (Element u : assigned_)
            for (Element v : assigned_)
                if (a_.op(u, v) == x && b_.op(map_[u], map_[v]) != map_[x]) return false;
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == order_.size()) return true;
        const Element x = order_[depth];
        for (Element c = 1; c < b_.order(); ++c) {
            if (used_[c] || !(sa_[x] == sb_[c])) continue;
            map_[x] = c;
            used_[c] = true;
            assigned_.push_back(x);
            if (consistent(x) && extend(depth + 1)) return true;
            assigned_.pop_back();
            used_[c] = false;
            map_[x] = kNone;
        }
        return false;
    }

    const BckAlgebra& a_;
    const BckAlgebra& b_;
    std::vector<Signature> sa_, sb_;
    std::vector<Element> map_;
    std::vector<bool> used_;
    std::vector<Element> order_;
    std::vector<Element> assigned_{0};
};

constexpr std::size_t kCanonicalCompareLimit = 8;

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const BckAlgebra& a, const BckAlgebra& b) {
    if (a.order() != b.order()) return std::nullopt;
    return IsoSearch(a, b).run();
}

bool is_isomorphic(const BckAlgebra& a, const BckAlgebra& b) {
    if (a.order() != b.order()) return false;
    // (n-1)! relabelings stop being cheap past this size.
    if (a.order() <= kCanonicalCompareLimit) return canonical_form(a) == canonical_form(b);
    return find_isomorphism(a, b).has_value();
}

}  // namespace bck

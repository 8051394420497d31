#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "bck/errors.hpp"

namespace bck {

/// Exact degree of satisfiability: `count` satisfying tuples out of `total`.
///
/// The raw pair is kept as computed (total is n^k); comparisons are on the
/// rational value, so 8/9 == 16/18.
class Degree {
public:
    constexpr Degree() = default;
    Degree(std::uint64_t count, std::uint64_t total) : count_(count), total_(total) {
        if (total == 0) throw Error("degree with zero total");
        if (count > total) throw Error("degree count exceeds total");
    }

    std::uint64_t count() const noexcept { return count_; }
    std::uint64_t total() const noexcept { return total_; }

    std::uint64_t numerator() const noexcept { return count_ / std::gcd(count_, total_); }
    std::uint64_t denominator() const noexcept { return total_ / std::gcd(count_, total_); }
    Degree reduced() const { return Degree(numerator(), denominator()); }

    bool is_one() const noexcept { return count_ == total_; }

    /// "p/q" in lowest terms; "1" and "0" are written as "1/1" and "0/1".
    std::string str() const { return std::to_string(numerator()) + "/" + std::to_string(denominator()); }

    friend bool operator==(const Degree& a, const Degree& b) noexcept {
        return static_cast<unsigned __int128>(a.count_) * b.total_ ==
               static_cast<unsigned __int128>(b.count_) * a.total_;
    }
    friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) noexcept {
        return static_cast<unsigned __int128>(a.count_) * b.total_ <=>
               static_cast<unsigned __int128>(b.count_) * a.total_;
    }

    /// Product of independent degrees; the raw pair multiplies componentwise.
    friend Degree operator*(const Degree& a, const Degree& b) {
        std::uint64_t c = 0;
        std::uint64_t t = 0;
        if (__builtin_mul_overflow(a.count_, b.count_, &c) ||
            __builtin_mul_overflow(a.total_, b.total_, &t)) {
            Degree ra = a.reduced();
            Degree rb = b.reduced();
            if (__builtin_mul_overflow(ra.count_, rb.count_, &c) ||
                __builtin_mul_overflow(ra.total_, rb.total_, &t))
                throw Error("degree product overflows 64 bits");
        }
        return Degree(c, t);
    }

    friend std::ostream& operator<<(std::ostream& os, const Degree& d) { return os << d.str(); }

private:
    std::uint64_t count_ = 0;
    std::uint64_t total_ = 1;
};

}  // namespace bck

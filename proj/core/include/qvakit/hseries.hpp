#pragma once

#include <vector>

#include "qvakit/rational.hpp"

namespace qvakit {

// Truncated power series in the formal parameter h: all arithmetic is modulo
// h^H with exact rational coefficients. Two series of the same order are
// equal iff all H coefficients are equal.
class HSeries {
public:
    explicit HSeries(int order) : c_(static_cast<size_t>(check_order(order))) {}

    static HSeries constant(Rat value, int order) {
        HSeries s(order);
        if (order > 0) s.c_[0] = std::move(value);
        return s;
    }
    static HSeries one(int order) { return constant(Rat(1), order); }

    int order() const { return static_cast<int>(c_.size()); }
    const Rat& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
    Rat& operator[](int k) { return c_[static_cast<size_t>(k)]; }

    bool is_zero() const {
        for (const Rat& x : c_)
            if (!qvakit::is_zero(x)) return false;
        return true;
    }
    bool is_one() const;

    // Lowest k with a nonzero coefficient; order() if identically zero.
    int valuation() const {
        for (int k = 0; k < order(); ++k)
            if (!qvakit::is_zero(c_[static_cast<size_t>(k)])) return k;
        return order();
    }

    HSeries& operator+=(const HSeries& o);
    HSeries& operator-=(const HSeries& o);
    HSeries operator-() const;
    friend HSeries operator+(HSeries a, const HSeries& b) { return a += b; }
    friend HSeries operator-(HSeries a, const HSeries& b) { return a -= b; }
    friend HSeries operator*(const HSeries& a, const HSeries& b);
    friend bool operator==(const HSeries& a, const HSeries& b) {
        return a.c_ == b.c_;
    }

    HSeries& operator*=(const Rat& r);
    friend HSeries operator*(HSeries a, const Rat& r) { return a *= r; }

    // Multiplicative inverse; requires a nonzero constant term.
    HSeries inverse() const;

    // Multiplication by h (drops the top coefficient).
    HSeries shift_up() const;

    std::string to_string() const;

private:
    static int check_order(int order);
    std::vector<Rat> c_; // c_[k] is the coefficient of h^k
};

// The h-expansion of 1/(a + b*h): sum_{k<H} (-b)^k a^{-k-1} h^k.
// a = 0 is a pole at the sample point; the caller must resample.
HSeries expand_shifted_inverse(const Rat& a, const Rat& b, int order);

} // namespace qvakit

#include "qvakit/hseries.hpp"

#include <sstream>

namespace qvakit {

int HSeries::check_order(int order) {
    if (order < 0) throw shape_error("negative series order");
    return order;
}

static void require_same_order(const HSeries& a, const HSeries& b) {
    if (a.order() != b.order())
        throw order_mismatch_error("series orders differ: " +
                                   std::to_string(a.order()) + " vs " +
                                   std::to_string(b.order()));
}

bool HSeries::is_one() const {
    if (order() == 0) return true;
    if (c_[0] != 1) return false;
    for (int k = 1; k < order(); ++k)
        if (!qvakit::is_zero(c_[static_cast<size_t>(k)])) return false;
    return true;
}

HSeries& HSeries::operator+=(const HSeries& o) {
    require_same_order(*this, o);
    for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

HSeries& HSeries::operator-=(const HSeries& o) {
    require_same_order(*this, o);
    for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

HSeries HSeries::operator-() const {
    HSeries r(order());
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = -c_[k];
    return r;
}

HSeries operator*(const HSeries& a, const HSeries& b) {
    require_same_order(a, b);
    const int H = a.order();
    HSeries r(H);
    for (int i = 0; i < H; ++i) {
        if (qvakit::is_zero(a.c_[static_cast<size_t>(i)])) continue;
        for (int j = 0; i + j < H; ++j) {
            if (qvakit::is_zero(b.c_[static_cast<size_t>(j)])) continue;
            r.c_[static_cast<size_t>(i + j)] +=
                a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
        }
    }
    return r;
}

HSeries& HSeries::operator*=(const Rat& r) {
    for (Rat& x : c_) x *= r;
    return *this;
}

HSeries HSeries::inverse() const {
    const int H = order();
    if (H == 0) return HSeries(0);
    if (qvakit::is_zero(c_[0]))
        throw non_invertible_error("series with zero constant term");
    HSeries r(H);
    r.c_[0] = 1 / c_[0];
    for (int k = 1; k < H; ++k) {
        Rat acc(0);
        for (int j = 1; j <= k; ++j)
            acc += c_[static_cast<size_t>(j)] * r.c_[static_cast<size_t>(k - j)];
        r.c_[static_cast<size_t>(k)] = -acc / c_[0];
    }
    return r;
}

HSeries HSeries::shift_up() const {
    HSeries r(order());
    for (int k = order() - 1; k >= 1; --k)
        r.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k - 1)];
    return r;
}

std::string HSeries::to_string() const {
    std::ostringstream os;
    for (int k = 0; k < order(); ++k) {
        if (k) os << ' ';
        os << rat_to_string(c_[static_cast<size_t>(k)]);
    }
    return os.str();
}

HSeries expand_shifted_inverse(const Rat& a, const Rat& b, int order) {
    if (is_zero(a))
        throw pole_at_sample_error("1/(a + b h) with a = 0");
    HSeries r(order);
    Rat inv_a = 1 / a;
    Rat term = inv_a; // (-b)^k a^{-k-1}
    for (int k = 0; k < order; ++k) {
        r[k] = term;
        term *= -b;
        term *= inv_a;
    }
    return r;
}

} // namespace qvakit

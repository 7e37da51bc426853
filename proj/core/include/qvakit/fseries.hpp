#pragma once

#include <iosfwd>
#include <vector>

#include "qvakit/algebra_spec.hpp"
#include "qvakit/hseries.hpp"

namespace qvakit {

// Truncated series 1 + c_1 u^{-1} + ... + c_K u^{-K}; coeffs[k] is the
// coefficient of u^{-k}, coeffs[0] = 1.
struct USeries {
    std::vector<Rat> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    const Rat& operator[](int k) const { return coeffs[static_cast<size_t>(k)]; }
};

// The normalizing series f of an R-matrix family, solved order by order from
// its two defining functional equations jointly. Both equations are
// re-verified up to order K after the solve.
//   gl:   f(u) f(u+N)^{-1} = f(u) f(-u) = (1 - u^{-2})^{-1},  f in 1 + u^{-1}C[[u^{-1}]]
//   o/sp: f(u) f(u+kappa)  = f(u) f(-u) = (1 - u^{-2})^{-1},  f in 1 + u^{-2}C[[u^{-1}]]
USeries f_series(const AlgebraSpec& spec, int K);

// f(a/h) truncated: coefficient of h^k is coeffs[k] * a^{-k}. Requires
// a != 0 and f deep enough for the requested order.
HSeries f_at(const USeries& f, const Rat& a, int H);

// f(w/h) for an argument w = base + shift*h (exact; base != 0).
HSeries f_at_arg(const USeries& f, const RArg& w, int H);

// Residuals of the two defining equations at truncation order K; all zero iff
// the series satisfies them. Used by tests and by f_series itself.
std::vector<Rat> f_equation_residual_reflect(const AlgebraSpec& spec, const USeries& f);
std::vector<Rat> f_equation_residual_shift(const AlgebraSpec& spec, const USeries& f);

// Cache file: header "family N K", then K+1 lines "p/q". Bit-exact round-trip.
void write_f_cache(const AlgebraSpec& spec, const USeries& f, std::ostream& os);
USeries read_f_cache(std::istream& is, std::string& family, int& N);

} // namespace qvakit

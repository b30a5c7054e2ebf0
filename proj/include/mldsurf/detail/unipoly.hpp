#ifndef MLDSURF_DETAIL_UNIPOLY_HPP
#define MLDSURF_DETAIL_UNIPOLY_HPP

#include <utility>
#include <vector>

#include "mldsurf/poly.hpp"
#include "mldsurf/rational.hpp"

namespace mldsurf::detail {

/// Dense univariate polynomial over Q. coeffs[i] is the coefficient of u^i;
/// the zero polynomial has an empty coefficient vector.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs);
    static UniPoly constant(const Rat& c);

    const std::vector<Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& leading() const { return coeffs_.back(); }
    Rat coeff(int i) const;
    Rat evaluate(const Rat& v) const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const Rat& s) const;
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    UniPoly derivative() const;
    UniPoly monic() const;

    /// Quotient and remainder over the field Q.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct RationalRoots {
    std::vector<std::pair<Rat, int>> roots; // (root, multiplicity), sorted
    UniPoly rootless;                       // cofactor with no rational roots
};

/// All rational roots with multiplicities (complete, by the rational root
/// theorem on the primitive integer model).
RationalRoots rational_roots(const UniPoly& p);

bool is_squarefree(const UniPoly& p);

/// Restriction of f to a coordinate axis: axis_var = 1 gives f(0, u) as a
/// polynomial in u = x2, axis_var = 2 gives f(u, 0).
UniPoly restrict_to_axis(const Poly& f, int axis_var);

/// The univariate polynomial as a Poly in the given variable.
Poly to_poly(const UniPoly& p, int var);

} // namespace mldsurf::detail

#endif

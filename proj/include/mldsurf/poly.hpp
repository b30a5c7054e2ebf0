#ifndef MLDSURF_POLY_HPP
#define MLDSURF_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mldsurf/rational.hpp"

namespace mldsurf {

/// Exponent pair of a bivariate monomial x1^a * x2^b.
struct Mono {
    int a = 0;
    int b = 0;
    int degree() const { return a + b; }
    friend bool operator==(const Mono& l, const Mono& r) { return l.a == r.a && l.b == r.b; }
};

/// Graded lexicographic order with x1 > x2 (total degree first, then the
/// x1-exponent). Used for term storage, printing and gcd normalization.
struct GrlexLess {
    bool operator()(const Mono& l, const Mono& r) const {
        if (l.degree() != r.degree()) return l.degree() < r.degree();
        return l.a < r.a;
    }
};

/// A pair of positive weights (w1, w2) together with its gcd g and the
/// reduced pair (w1', w2') with w_i = g * w_i'.
struct WeightVector {
    long w1 = 1;
    long w2 = 1;
    long g = 1;
    long w1p = 1;
    long w2p = 1;

    static WeightVector of(long w1, long w2);
    bool reduced() const { return g == 1; }
    WeightVector reduce() const { return of(w1p, w2p); }
    friend bool operator==(const WeightVector& a, const WeightVector& b) {
        return a.w1 == b.w1 && a.w2 == b.w2;
    }
};

/// Sparse exact-rational bivariate polynomial. No zero coefficients are
/// stored; the zero polynomial is the empty term map.
class Poly {
public:
    using TermMap = std::map<Mono, Rat, GrlexLess>;

    Poly() = default;
    explicit Poly(const Rat& constant);
    explicit Poly(long constant);

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(1); }
    static Poly x1() { return monomial(1, 0, 1); }
    static Poly x2() { return monomial(0, 1, 1); }
    static Poly monomial(int a, int b, const Rat& coeff);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Nonzero constant term means the polynomial is a unit in the local ring
    /// at the origin.
    bool is_unit_at_origin() const;
    Rat constant_term() const;
    Rat coeff(int a, int b) const;
    int total_degree() const; // -1 for the zero polynomial
    int degree_in(int var) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rat& scalar);
    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
    friend Poly operator*(Poly lhs, const Rat& scalar) { return lhs *= scalar; }
    friend Poly operator*(const Rat& scalar, Poly rhs) { return rhs *= scalar; }
    friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.terms_ == rhs.terms_; }
    friend bool operator!=(const Poly& lhs, const Poly& rhs) { return !(lhs == rhs); }

    Poly pow(int e) const;
    Rat evaluate(const Rat& v1, const Rat& v2) const;
    Poly derivative(int var) const;

    /// Multiplicity at the origin: the minimum total degree of a term.
    /// Returns -1 for the zero polynomial (order +infinity).
    int multiplicity_at_origin() const;
    int multiplicity_at(const Rat& p1, const Rat& p2) const;

    /// Largest d such that x_var^d divides the polynomial (0 for the zero
    /// polynomial, whose order is infinite; callers must special-case it).
    int divisibility_order(int var) const;
    Poly divide_by_axis_power(int var, int d) const;

    /// Leading coefficient in grlex order; polynomial scaled so it is 1.
    Rat leading_coeff() const;
    Poly monic() const;

    /// Exponent pairs on the compact faces of the Newton polygon (the
    /// lower-left convex hull of the support), sorted by ascending a.
    std::vector<Mono> newton_vertices() const;

    std::string str(const std::string& v1 = "x", const std::string& v2 = "y") const;

    void insert_term(const Mono& m, const Rat& coeff);

private:
    TermMap terms_;
};

Poly substitute(const Poly& f, const std::pair<Poly, Poly>& images);
Poly translate(const Poly& f, const Rat& p1, const Rat& p2);

/// min over nonzero terms of a*w1 + b*w2; +infinity for the zero polynomial.
ExtRat weighted_order(const Poly& f, const WeightVector& w);

/// Sum of the terms of minimal weight. Throws ZeroPolynomial on f = 0.
Poly initial_form(const Poly& f, const WeightVector& w);

/// Decomposition of a weighted-homogeneous polynomial as
///   unit * x1^s1 * x2^s2 * prod (x1^{w2'} + lambda x2^{w1'})^t * residual
/// with pairwise-distinct rational lambda and a residual with no further
/// rational binomial factor.
struct InitialFactorization {
    Rat unit = 1;
    int s1 = 0;
    int s2 = 0;
    std::vector<std::pair<Rat, int>> binomials; // (lambda, multiplicity)
    Poly residual = Poly::one();

    Poly reconstruct(const WeightVector& w) const;
};

/// Requires w reduced and h weighted-homogeneous for w (NotHomogeneous
/// otherwise).
InitialFactorization factor_initial_form(const Poly& h, const WeightVector& w);

/// A gcd in Q[x1,x2], normalized monic in grlex order. gcd(0,0) is an error.
Poly bivariate_gcd(const Poly& f, const Poly& g);

/// Exact division; nullopt when g does not divide f.
std::optional<Poly> divide_exact(const Poly& f, const Poly& g);

/// f = unit * prod factor_i^{mult_i} with squarefree, pairwise-coprime,
/// monic factors. Constant f decomposes to the empty list.
std::vector<std::pair<Poly, int>> squarefree_decompose(const Poly& f);

} // namespace mldsurf

#endif

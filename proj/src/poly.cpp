#include "mldsurf/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mldsurf/detail/unipoly.hpp"
#include "mldsurf/errors.hpp"

namespace mldsurf {

WeightVector WeightVector::of(long w1, long w2) {
    if (w1 <= 0 || w2 <= 0) throw internal_error("weights must be positive");
    WeightVector w;
    w.w1 = w1;
    w.w2 = w2;
    w.g = std::gcd(w1, w2);
    w.w1p = w1 / w.g;
    w.w2p = w2 / w.g;
    return w;
}

Poly::Poly(const Rat& constant) {
    if (constant != 0) terms_[{0, 0}] = constant;
}

Poly::Poly(long constant) : Poly(Rat(constant)) {}

Poly Poly::monomial(int a, int b, const Rat& coeff) {
    Poly p;
    if (coeff != 0) p.terms_[{a, b}] = coeff;
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0});
}

bool Poly::is_unit_at_origin() const { return constant_term() != 0; }

Rat Poly::constant_term() const { return coeff(0, 0); }

Rat Poly::coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Rat(0) : it->second;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.degree();
}

int Poly::degree_in(int var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, var == 1 ? m.a : m.b);
    return d;
}

void Poly::insert_term(const Mono& m, const Rat& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    for (const auto& [m, c] : rhs.terms_) insert_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    for (const auto& [m, c] : rhs.terms_) insert_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
    Poly result;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : rhs.terms_)
            result.insert_term({m1.a + m2.a, m1.b + m2.b}, c1 * c2);
    terms_ = std::move(result.terms_);
    return *this;
}

Poly& Poly::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw internal_error("negative power");
    Poly result = Poly::one();
    Poly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

Rat Poly::evaluate(const Rat& v1, const Rat& v2) const {
    Rat total(0);
    for (const auto& [m, c] : terms_) {
        Rat term = c;
        for (int i = 0; i < m.a; ++i) term *= v1;
        for (int i = 0; i < m.b; ++i) term *= v2;
        total += term;
    }
    return total;
}

Poly Poly::derivative(int var) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        if (var == 1 && m.a > 0) r.insert_term({m.a - 1, m.b}, c * m.a);
        if (var == 2 && m.b > 0) r.insert_term({m.a, m.b - 1}, c * m.b);
    }
    return r;
}

int Poly::multiplicity_at_origin() const {
    int best = -1;
    for (const auto& [m, c] : terms_) {
        if (best < 0 || m.degree() < best) best = m.degree();
    }
    return best;
}

int Poly::multiplicity_at(const Rat& p1, const Rat& p2) const {
    if (p1 == 0 && p2 == 0) return multiplicity_at_origin();
    return translate(*this, p1, p2).multiplicity_at_origin();
}

int Poly::divisibility_order(int var) const {
    int best = -1;
    for (const auto& [m, c] : terms_) {
        int e = var == 1 ? m.a : m.b;
        if (best < 0 || e < best) best = e;
        if (best == 0) break;
    }
    return best < 0 ? 0 : best;
}

Poly Poly::divide_by_axis_power(int var, int d) const {
    if (d == 0) return *this;
    Poly r;
    for (const auto& [m, c] : terms_) {
        int e = var == 1 ? m.a : m.b;
        if (e < d) throw Error(ErrorKind::NotDivisible, "polynomial not divisible by axis power");
        r.terms_[var == 1 ? Mono{m.a - d, m.b} : Mono{m.a, m.b - d}] = c;
    }
    return r;
}

Rat Poly::leading_coeff() const {
    if (terms_.empty()) return Rat(0);
    return terms_.rbegin()->second;
}

Poly Poly::monic() const {
    if (terms_.empty()) return *this;
    Rat lc = leading_coeff();
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c /= lc;
    return r;
}

std::vector<Mono> Poly::newton_vertices() const {
    // Staircase-minimal support points, then the lower-left convex chain.
    std::vector<Mono> pts;
    for (const auto& [m, c] : terms_) pts.push_back(m);
    std::vector<Mono> minimal;
    for (const auto& p : pts) {
        bool dominated = false;
        for (const auto& q : pts)
            if (!(q == p) && q.a <= p.a && q.b <= p.b) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(p);
    }
    std::sort(minimal.begin(), minimal.end(), [](const Mono& l, const Mono& r) {
        return l.a != r.a ? l.a < r.a : l.b < r.b;
    });
    // Convexity sweep: keep points forming a convex decreasing chain in b.
    std::vector<Mono> hull;
    for (const auto& p : minimal) {
        while (hull.size() >= 2) {
            const Mono& o = hull[hull.size() - 2];
            const Mono& q = hull[hull.size() - 1];
            long cross = static_cast<long>(q.a - o.a) * (p.b - o.b) -
                         static_cast<long>(q.b - o.b) * (p.a - o.a);
            if (cross >= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    return hull;
}

namespace {

std::string coeff_string(const Rat& c) { return c.get_str(); }

} // namespace

std::string Poly::str(const std::string& v1, const std::string& v2) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Print leading terms first (descending grlex).
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat abs = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool has_var = m.a > 0 || m.b > 0;
        if (abs != 1 || !has_var) {
            out << coeff_string(abs);
            if (has_var) out << "*";
        }
        if (m.a > 0) {
            out << v1;
            if (m.a > 1) out << "^" << m.a;
        }
        if (m.b > 0) {
            if (m.a > 0) out << "*";
            out << v2;
            if (m.b > 1) out << "^" << m.b;
        }
    }
    return out.str();
}

Poly substitute(const Poly& f, const std::pair<Poly, Poly>& images) {
    // Cache powers of the images; exponents are small at desk scale.
    std::vector<Poly> pow1{Poly::one()}, pow2{Poly::one()};
    auto power = [](std::vector<Poly>& cache, const Poly& base, int e) -> const Poly& {
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
        return cache[e];
    };
    Poly result;
    for (const auto& [m, c] : f.terms()) {
        Poly term = power(pow1, images.first, m.a) * power(pow2, images.second, m.b);
        term *= c;
        result += term;
    }
    return result;
}

Poly translate(const Poly& f, const Rat& p1, const Rat& p2) {
    return substitute(f, {Poly::x1() + Poly(p1), Poly::x2() + Poly(p2)});
}

ExtRat weighted_order(const Poly& f, const WeightVector& w) {
    if (f.is_zero()) return ExtRat::pos_inf();
    long best = 0;
    bool have = false;
    for (const auto& [m, c] : f.terms()) {
        long v = m.a * w.w1 + m.b * w.w2;
        if (!have || v < best) {
            best = v;
            have = true;
        }
    }
    return ExtRat(Rat(best));
}

Poly initial_form(const Poly& f, const WeightVector& w) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "initial form of the zero polynomial");
    long order = weighted_order(f, w).value().get_num().get_si();
    Poly r;
    for (const auto& [m, c] : f.terms())
        if (m.a * w.w1 + m.b * w.w2 == order) r.insert_term(m, c);
    return r;
}

Poly InitialFactorization::reconstruct(const WeightVector& w) const {
    Poly p = Poly::monomial(s1, s2, unit);
    for (const auto& [lambda, t] : binomials) {
        Poly binom = Poly::monomial(static_cast<int>(w.w2p), 0, 1) +
                     Poly::monomial(0, static_cast<int>(w.w1p), lambda);
        p *= binom.pow(t);
    }
    return p * residual;
}

InitialFactorization factor_initial_form(const Poly& h, const WeightVector& w) {
    if (!w.reduced()) throw internal_error("factor_initial_form requires reduced weights");
    if (h.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "factorization of the zero polynomial");
    long order = weighted_order(h, w).value().get_num().get_si();
    for (const auto& [m, c] : h.terms())
        if (m.a * w.w1 + m.b * w.w2 != order)
            throw Error(ErrorKind::NotHomogeneous, "polynomial is not weighted-homogeneous");

    InitialFactorization out;
    int s1 = h.divisibility_order(1);
    int s2 = h.divisibility_order(2);
    out.s1 = s1;
    out.s2 = s2;
    Poly cof = h.divide_by_axis_power(1, s1).divide_by_axis_power(2, s2);

    if (cof.is_constant()) {
        out.unit = cof.constant_term();
        return out;
    }

    // Every exponent pair of the cofactor is ((K-j)w2', j w1'); dehomogenize
    // to Q(u) with u = x2^{w1'} / x1^{w2'}.
    int e1max = cof.degree_in(1);
    int K = e1max / static_cast<int>(w.w2p);
    std::vector<Rat> q(K + 1, Rat(0));
    for (const auto& [m, c] : cof.terms()) {
        int j = m.b / static_cast<int>(w.w1p);
        q[j] = c;
    }
    detail::UniPoly Q{std::move(q)};
    auto rr = detail::rational_roots(Q);

    Rat unit(1);
    for (const auto& [rho, t] : rr.roots) {
        // (u - rho) corresponds to -rho (x1^{w2'} + lambda x2^{w1'}) with
        // lambda = -1/rho; rho != 0 because the monomial part was extracted.
        Rat lambda = Rat(-1) / rho;
        out.binomials.emplace_back(lambda, t);
        Rat f = -rho;
        for (int i = 0; i < t; ++i) unit *= f;
    }
    std::sort(out.binomials.begin(), out.binomials.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });

    if (rr.rootless.degree() <= 0) {
        unit *= rr.rootless.is_zero() ? Rat(0) : rr.rootless.coeff(0);
        out.residual = Poly::one();
    } else {
        int d = rr.rootless.degree();
        Poly residual;
        for (int j = 0; j <= d; ++j) {
            Rat c = rr.rootless.coeff(j);
            if (c != 0)
                residual.insert_term({(d - j) * static_cast<int>(w.w2p),
                                      j * static_cast<int>(w.w1p)},
                                     c);
        }
        out.residual = residual;
    }
    out.unit = unit;
    return out;
}

namespace {

// Coefficient of x1^k viewed as a polynomial in x2 alone.
Poly coeff_in_x1(const Poly& f, int k) {
    Poly r;
    for (const auto& [m, c] : f.terms())
        if (m.a == k) r.insert_term({0, m.b}, c);
    return r;
}

detail::UniPoly as_unipoly_x2(const Poly& f) {
    std::vector<Rat> c(static_cast<std::size_t>(std::max(0, f.degree_in(2) + 1)), Rat(0));
    for (const auto& [m, coeff] : f.terms()) c[static_cast<std::size_t>(m.b)] = coeff;
    return detail::UniPoly{std::move(c)};
}

// gcd over Q[x2] of all x1-coefficients.
Poly content_x1(const Poly& f) {
    detail::UniPoly g;
    for (int k = 0; k <= f.degree_in(1); ++k) {
        Poly c = coeff_in_x1(f, k);
        if (c.is_zero()) continue;
        g = detail::gcd(g, as_unipoly_x2(c));
        if (g.degree() == 0) break;
    }
    return detail::to_poly(g, 2);
}

// Pseudo-remainder of f by g in (Q[x2])[x1].
Poly pseudo_remainder(Poly f, const Poly& g) {
    int dg = g.degree_in(1);
    Poly lg = coeff_in_x1(g, dg);
    while (!f.is_zero() && f.degree_in(1) >= dg) {
        int df = f.degree_in(1);
        Poly lf = coeff_in_x1(f, df);
        // lg * f - lf * x1^{df-dg} * g kills the leading x1-term.
        f = f * lg - g * (lf * Poly::monomial(df - dg, 0, 1));
    }
    return f;
}

Poly primitive_part_x1(const Poly& f) {
    if (f.is_zero()) return f;
    Poly cont = content_x1(f);
    auto q = divide_exact(f, cont);
    if (!q) throw internal_error("content division failed");
    return *q;
}

} // namespace

std::optional<Poly> divide_exact(const Poly& f, const Poly& g) {
    if (g.is_zero()) return std::nullopt;
    Poly rem = f;
    Poly quot;
    const Mono lg = g.terms().rbegin()->first;
    const Rat lgc = g.terms().rbegin()->second;
    while (!rem.is_zero()) {
        const Mono lr = rem.terms().rbegin()->first;
        if (lr.a < lg.a || lr.b < lg.b) return std::nullopt;
        Mono q{lr.a - lg.a, lr.b - lg.b};
        Rat qc = rem.terms().rbegin()->second / lgc;
        Poly qt = Poly::monomial(q.a, q.b, qc);
        quot += qt;
        rem -= qt * g;
    }
    return quot;
}

Poly bivariate_gcd(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) throw internal_error("gcd(0, 0) is undefined");
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    if (f.is_constant() || g.is_constant()) return Poly::one();

    // Primitive PRS in (Q[x2])[x1]; the content part reduces to univariate
    // gcds over Q.
    Poly cf = content_x1(f);
    Poly cg = content_x1(g);
    Poly content_gcd =
        detail::to_poly(detail::gcd(as_unipoly_x2(cf), as_unipoly_x2(cg)), 2);

    Poly a = primitive_part_x1(f);
    Poly b = primitive_part_x1(g);
    if (a.degree_in(1) < b.degree_in(1)) std::swap(a, b);
    while (!b.is_zero() && b.degree_in(1) > 0) {
        Poly r = pseudo_remainder(a, b);
        a = b;
        b = r.is_zero() ? r : primitive_part_x1(r);
        if (!b.is_zero() && a.degree_in(1) < b.degree_in(1)) std::swap(a, b);
    }
    Poly prim = b.is_zero() ? a : Poly::one();
    return (prim * content_gcd).monic();
}

std::vector<std::pair<Poly, int>> squarefree_decompose(const Poly& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree decomposition of zero");
    std::vector<std::pair<Poly, int>> out;
    if (f.is_constant()) return out;

    // Char-0 Yun-style loop with g = gcd(f, f_x1, f_x2) = prod p_i^{e_i - 1}.
    Poly fx = f.derivative(1);
    Poly fy = f.derivative(2);
    Poly g = fx.is_zero() ? fy : (fy.is_zero() ? fx : bivariate_gcd(fx, fy));
    g = g.is_zero() ? f.monic() : bivariate_gcd(f, g);
    auto wq = divide_exact(f, g);
    if (!wq) throw internal_error("squarefree: gcd does not divide");
    Poly w = wq->monic(); // squarefree part
    int i = 1;
    while (!w.is_constant()) {
        Poly y = bivariate_gcd(g, w);
        auto part = divide_exact(w, y);
        if (!part) throw internal_error("squarefree: inner division failed");
        if (!part->is_constant()) out.emplace_back(part->monic(), i);
        auto gq = divide_exact(g, y);
        if (!gq) throw internal_error("squarefree: content division failed");
        g = *gq;
        w = y.monic();
        ++i;
    }
    return out;
}

} // namespace mldsurf

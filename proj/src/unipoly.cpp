#include "mldsurf/detail/unipoly.hpp"

#include <algorithm>

#include "mldsurf/errors.hpp"

namespace mldsurf::detail {

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rat& c) {
    UniPoly p;
    if (c != 0) p.coeffs_.push_back(c);
    return p;
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

Rat UniPoly::evaluate(const Rat& v) const {
    Rat r(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * v + *it;
    return r;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return UniPoly{std::move(c)};
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly{};
    std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly{std::move(c)};
}

UniPoly UniPoly::scaled(const Rat& s) const {
    if (s == 0) return UniPoly{};
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly{};
    std::vector<Rat> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
    return UniPoly{std::move(c)};
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(Rat(1) / leading());
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw internal_error("univariate division by zero");
    UniPoly rem = *this;
    std::vector<Rat> quot(std::max<std::size_t>(1, coeffs_.size()), Rat(0));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int shift = rem.degree() - d.degree();
        Rat factor = rem.leading() / d.leading();
        quot[static_cast<std::size_t>(shift)] += factor;
        std::vector<Rat> sub(static_cast<std::size_t>(shift + d.degree() + 1), Rat(0));
        for (int i = 0; i <= d.degree(); ++i)
            sub[static_cast<std::size_t>(i + shift)] = d.coeff(i) * factor;
        rem = rem - UniPoly{std::move(sub)};
    }
    return {UniPoly{std::move(quot)}, rem};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly f = a, g = b;
    while (!g.is_zero()) {
        UniPoly r = f.divmod(g).second;
        f = g;
        g = r;
    }
    return f.monic();
}

bool is_squarefree(const UniPoly& p) {
    if (p.degree() <= 1) return true;
    return gcd(p, p.derivative()).degree() == 0;
}

namespace {

std::vector<Int> positive_divisors(Int n) {
    if (n < 0) n = -n;
    std::vector<Int> divs;
    if (n == 0) return divs;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d * d != n) divs.push_back(n / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace

RationalRoots rational_roots(const UniPoly& p) {
    RationalRoots out;
    if (p.is_zero()) throw internal_error("rational roots of the zero polynomial");
    UniPoly q = p;

    // Root 0 first.
    int zero_mult = 0;
    while (!q.is_zero() && q.coeff(0) == 0) {
        std::vector<Rat> shifted(q.coeffs().begin() + 1, q.coeffs().end());
        q = UniPoly{std::move(shifted)};
        ++zero_mult;
    }
    if (zero_mult > 0) out.roots.emplace_back(Rat(0), zero_mult);

    if (q.degree() >= 1) {
        // Primitive integer model; candidates num/den with num | a0, den | an.
        Int den_lcm(1);
        for (const auto& c : q.coeffs()) {
            Int d = c.get_den();
            den_lcm = den_lcm / gcd(den_lcm, d) * d;
        }
        std::vector<Int> ic;
        for (const auto& c : q.coeffs()) {
            Rat scaled = c * Rat(den_lcm);
            ic.push_back(scaled.get_num());
        }
        Int content(0);
        for (const auto& v : ic) content = gcd(content, v);
        if (content > 1)
            for (auto& v : ic) v /= content;

        auto nums = positive_divisors(ic.front());
        auto dens = positive_divisors(ic.back());
        std::vector<Rat> candidates;
        for (const auto& n : nums)
            for (const auto& d : dens) {
                Rat r(n, d);
                r.canonicalize();
                candidates.push_back(r);
                candidates.push_back(-r);
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

        for (const auto& r : candidates) {
            int mult = 0;
            while (q.degree() >= 1 && q.evaluate(r) == 0) {
                // Deflate by (u - r).
                std::vector<Rat> d(static_cast<std::size_t>(q.degree()), Rat(0));
                Rat carry(0);
                for (int i = q.degree(); i >= 1; --i) {
                    carry = q.coeff(i) + carry * r;
                    d[static_cast<std::size_t>(i - 1)] = carry;
                }
                q = UniPoly{std::move(d)};
                ++mult;
            }
            if (mult > 0) out.roots.emplace_back(r, mult);
            if (q.degree() < 1) break;
        }
        std::sort(out.roots.begin(), out.roots.end(),
                  [](const auto& l, const auto& r) { return l.first < r.first; });
    }
    out.rootless = q;
    return out;
}

UniPoly restrict_to_axis(const Poly& f, int axis_var) {
    std::vector<Rat> c;
    for (const auto& [m, coeff] : f.terms()) {
        if (axis_var == 1 && m.a == 0) {
            if (static_cast<int>(c.size()) <= m.b) c.resize(static_cast<std::size_t>(m.b + 1), Rat(0));
            c[static_cast<std::size_t>(m.b)] = coeff;
        } else if (axis_var == 2 && m.b == 0) {
            if (static_cast<int>(c.size()) <= m.a) c.resize(static_cast<std::size_t>(m.a + 1), Rat(0));
            c[static_cast<std::size_t>(m.a)] = coeff;
        }
    }
    return UniPoly{std::move(c)};
}

Poly to_poly(const UniPoly& p, int var) {
    Poly r;
    for (int i = 0; i <= p.degree(); ++i) {
        Rat c = p.coeff(i);
        if (c != 0) r.insert_term(var == 1 ? Mono{i, 0} : Mono{0, i}, c);
    }
    return r;
}

} // namespace mldsurf::detail

#ifndef MLDSURF_RATIONAL_HPP
#define MLDSURF_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace mldsurf {

/// Exact rational number. GMP keeps values canonical (reduced, positive
/// denominator) as long as they are constructed canonically.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string rat_string(const Rat& q) { return q.get_str(); }

/// Rational extended with -inf (mld of non-lc pairs) and +inf (order of the
/// zero polynomial, lct of the trivial ideal).
class ExtRat {
public:
    enum class Kind { NegInf, Finite, PosInf };

    ExtRat() : kind_(Kind::Finite), value_(0) {}
    ExtRat(const Rat& value) : kind_(Kind::Finite), value_(value) {}
    static ExtRat neg_inf() { return ExtRat(Kind::NegInf); }
    static ExtRat pos_inf() { return ExtRat(Kind::PosInf); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }

    /// The finite value; only meaningful when is_finite().
    const Rat& value() const { return value_; }

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        if (a.kind_ != b.kind_) return false;
        return a.kind_ != Kind::Finite || a.value_ == b.value_;
    }
    friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
    friend bool operator<(const ExtRat& a, const ExtRat& b) {
        if (a.kind_ == Kind::NegInf) return b.kind_ != Kind::NegInf;
        if (a.kind_ == Kind::PosInf) return false;
        if (b.kind_ == Kind::PosInf) return true;
        if (b.kind_ == Kind::NegInf) return false;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const ExtRat& a, const ExtRat& b) { return a < b || a == b; }
    friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
    friend bool operator>=(const ExtRat& a, const ExtRat& b) { return b <= a; }

    std::string str() const {
        switch (kind_) {
            case Kind::NegInf: return "-infinity";
            case Kind::PosInf: return "+infinity";
            default: return value_.get_str();
        }
    }

private:
    explicit ExtRat(Kind kind) : kind_(kind), value_(0) {}

    Kind kind_;
    Rat value_;
};

} // namespace mldsurf

#endif

#include "projrigid/field.hpp"

#include <cmath>

namespace projrigid {

FieldElement::FieldElement(Rational a, Rational b, Rational c, Rational e, int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), e_(std::move(e)), d_(d) {
    if (d_ < 0) throw PreconditionError("field tag must be a square-free integer >= 0");
    canon();
}

void FieldElement::canon() {
    a_.canonicalize();
    b_.canonicalize();
    c_.canonicalize();
    e_.canonicalize();
    if (d_ == 1) {
        // sqrt(1) = 1: fold the irrational parts into the rational ones.
        a_ += b_;
        c_ += e_;
        b_ = 0;
        e_ = 0;
    }
    if (b_ == 0 && e_ == 0 && d_ != 1) {
        // No surviving sqrt(d) part: drop to the universal rational tag.
        d_ = 0;
    }
}

int FieldElement::unify(int d1, int d2) {
    if (d1 == d2) return d1;
    if (d1 == 0) return d2;
    if (d2 == 0) return d1;
    throw PreconditionError("cannot combine elements of Q(i,sqrt(" + std::to_string(d1) +
                            ")) and Q(i,sqrt(" + std::to_string(d2) + "))");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    return FieldElement(a_ + o.a_, b_ + o.b_, c_ + o.c_, e_ + o.e_, unify(d_, o.d_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    return FieldElement(a_ - o.a_, b_ - o.b_, c_ - o.c_, e_ - o.e_, unify(d_, o.d_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    int d = unify(d_, o.d_);
    // Most matrix entries sit in small subfields; skip the full product
    // formula when either factor has no radical or no imaginary part.
    const bool lhs_rat = b_ == 0 && c_ == 0 && e_ == 0;
    const bool rhs_rat = o.b_ == 0 && o.c_ == 0 && o.e_ == 0;
    if (lhs_rat || rhs_rat) {
        const Rational& s = lhs_rat ? a_ : o.a_;
        const FieldElement& x = lhs_rat ? o : *this;
        if (s == 0) return FieldElement(Rational(0), Rational(0), Rational(0), Rational(0), d);
        return FieldElement(s * x.a_, s * x.b_, s * x.c_, s * x.e_, d);
    }
    Rational dd(d == 0 ? 1 : d);
    // (a1 + b1 r + c1 i + e1 i r)(a2 + b2 r + c2 i + e2 i r) with r^2 = d, i^2 = -1.
    Rational a = a_ * o.a_ + dd * b_ * o.b_ - c_ * o.c_ - dd * e_ * o.e_;
    Rational b = a_ * o.b_ + b_ * o.a_ - c_ * o.e_ - e_ * o.c_;
    Rational c = a_ * o.c_ + c_ * o.a_ + dd * (b_ * o.e_ + e_ * o.b_);
    Rational e = a_ * o.e_ + b_ * o.c_ + c_ * o.b_ + e_ * o.a_;
    return FieldElement(std::move(a), std::move(b), std::move(c), std::move(e), d);
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inv(); }

FieldElement FieldElement::operator-() const { return FieldElement(-a_, -b_, -c_, -e_, d_); }

bool FieldElement::operator==(const FieldElement& o) const {
    unify(d_, o.d_);
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && e_ == o.e_;
}

FieldElement FieldElement::inv() const {
    if (is_zero()) throw PreconditionError("division by zero in Q(i,sqrt(d))");
    FieldElement z1 = *this * conj_i();          // lands in Q(sqrt(d))
    FieldElement rest = z1.conj_sqrt();
    FieldElement n = z1 * rest;                  // rational norm
    FieldElement num = conj_i() * rest;
    Rational inv_n = 1 / n.a_;
    return FieldElement(num.a_ * inv_n, num.b_ * inv_n, num.c_ * inv_n, num.e_ * inv_n,
                        num.d_ == 0 ? d_ : num.d_);
}

double FieldElement::real_part() const {
    double s = d_ == 0 ? 1.0 : std::sqrt(static_cast<double>(d_));
    return a_.get_d() + b_.get_d() * s;
}

double FieldElement::imag_part() const {
    double s = d_ == 0 ? 1.0 : std::sqrt(static_cast<double>(d_));
    return c_.get_d() + e_.get_d() * s;
}

}  // namespace projrigid

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace projrigid {

// Malformed input: bad grammar, bad JSON schema, undeclared generator, and so on.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Well-formed input that violates a documented operation precondition.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Rational = mpq_class;

// Exact element a + b*sqrt(d) + c*i + e*i*sqrt(d) of the biquadratic field Q(i, sqrt(d)).
// The tag d is a square-free positive integer shared by every element of a computation.
// A tag of 0 marks a plain rational literal (the product of the int/Rational
// constructors); it unifies with any other tag, while two distinct nonzero tags
// refuse to combine. For d = 1 the sqrt(d) parts fold into the rational parts,
// so b and e are always 0 after normalization.
class FieldElement {
  public:
    FieldElement() : d_(0) {}
    FieldElement(int n) : a_(n), d_(0) {}
    FieldElement(long n) : a_(static_cast<long>(n)), d_(0) {}
    explicit FieldElement(Rational a) : a_(std::move(a)), d_(0) { canon(); }
    FieldElement(Rational a, Rational b, Rational c, Rational e, int d);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& e() const { return e_; }
    int tag() const { return d_; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // Galois conjugations: i -> -i and sqrt(d) -> -sqrt(d).
    FieldElement conj_i() const { return FieldElement(a_, b_, -c_, -e_, d_); }
    FieldElement conj_sqrt() const { return FieldElement(a_, -b_, c_, -e_, d_); }

    // Multiplicative inverse via the product of Galois conjugates; the full
    // norm x * conj_i(x) * conj_sqrt(x * conj_i(x)) is rational and nonzero.
    FieldElement inv() const;

    bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && e_ == 0; }
    bool is_rational() const { return b_ == 0 && c_ == 0 && e_ == 0; }
    bool is_real() const { return c_ == 0 && e_ == 0; }

    // Numeric image under sqrt(d) -> +sqrt(d), i -> +i; real and imaginary parts.
    double real_part() const;
    double imag_part() const;

    static FieldElement sqrtd(int d) { return FieldElement(0, 1, 0, 0, d); }
    static FieldElement imag_unit() { return FieldElement(0, 0, 1, 0, 0); }
    static FieldElement imag_sqrtd(int d) { return FieldElement(0, 0, 0, 1, d); }

  private:
    void canon();
    static int unify(int d1, int d2);

    Rational a_, b_, c_, e_;
    int d_;
};

inline FieldElement operator+(int n, const FieldElement& x) { return FieldElement(n) + x; }
inline FieldElement operator-(int n, const FieldElement& x) { return FieldElement(n) - x; }
inline FieldElement operator*(int n, const FieldElement& x) { return FieldElement(n) * x; }

}  // namespace projrigid

#ifndef SUBSPACEKIT_QUADEXT_HPP
#define SUBSPACEKIT_QUADEXT_HPP

#include <string>

#include "subspacekit/numbers.hpp"

namespace subspacekit {

// Exact scalar a + b*sqrt(d) with rational a, b and square-free integer
// d >= 2 (purely rational values keep d = 0, b = 0). Closed under ring
// operations within a fixed d; sign determination is exact by squaring, so
// comparisons never touch floating point.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    /*implicit*/ QuadExt(const Rat& r) : a_(r), b_(0), d_(0) {}
    /*implicit*/ QuadExt(int r) : a_(r), b_(0), d_(0) {}
    QuadExt(Rat a, Rat b, Int d);

    // sqrt(x) for x >= 0, radicand split into square * square-free
    static QuadExt sqrt_of(const Rat& x, const Int& factor_bound = default_factor_bound);

    const Rat& rational_part() const { return a_; }
    const Rat& radical_coefficient() const { return b_; }
    const Int& radicand() const { return d_; }
    bool is_rational() const { return b_ == 0; }
    Rat rational_value() const; // requires is_rational()

    int sign() const; // -1, 0, +1
    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }

    // division by a nonzero rational
    friend QuadExt operator/(const QuadExt& x, const Rat& c);

    friend bool operator==(const QuadExt& x, const QuadExt& y) { return (x - y).sign() == 0; }
    friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadExt& x, const QuadExt& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() >= 0; }

    std::string str() const; // "p + q*sqrt(d)" or "p"
    double approx() const;   // decimal rendering, approximate

private:
    Rat a_, b_;
    Int d_;
};

} // namespace subspacekit

#endif

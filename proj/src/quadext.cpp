#include "subspacekit/quadext.hpp"

#include <cmath>

namespace subspacekit {

QuadExt::QuadExt(Rat a, Rat b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (b_ == 0) {
        d_ = 0;
    } else if (d_ < 2) {
        if (d_ < 0) fail(Errc::precondition_failed, "negative radicand");
        // sqrt(0) = 0, sqrt(1) = 1 fold into the rational part
        if (d_ == 1) a_ += b_;
        b_ = 0;
        d_ = 0;
    }
}

QuadExt QuadExt::sqrt_of(const Rat& x, const Int& factor_bound) {
    if (x < 0) fail(Errc::precondition_failed, "square root of a negative rational");
    if (x == 0) return QuadExt(Rat(0));
    // sqrt(n/m) = sqrt(n*m)/m; split n*m = square * square-free
    Int radicand = num(x) * den(x);
    Int square_root_part = 1, square_free = 1;
    for (const auto& [p, e] : factorize(radicand, factor_bound).factors) {
        square_root_part *= pow(p, e / 2);
        if (e % 2) square_free *= p;
    }
    Rat coeff(square_root_part, den(x));
    if (square_free == 1) return QuadExt(coeff);
    return QuadExt(Rat(0), coeff, square_free);
}

Rat QuadExt::rational_value() const {
    if (!is_rational()) fail(Errc::precondition_failed, "value is irrational");
    return a_;
}

int QuadExt::sign() const {
    auto sgn = [](const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); };
    if (b_ == 0) return sgn(a_);
    if (a_ == 0) return sgn(b_);
    if (a_ > 0 && b_ > 0) return 1;
    if (a_ < 0 && b_ < 0) return -1;
    // opposite signs: compare a^2 against b^2 d
    Rat lhs = a_ * a_, rhs = b_ * b_ * d_;
    if (a_ > 0) return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
    return rhs > lhs ? 1 : (rhs < lhs ? -1 : 0);
}

namespace {

Int merged_radicand(const QuadExt& x, const QuadExt& y) {
    const Int& dx = x.radicand();
    const Int& dy = y.radicand();
    if (dx == 0) return dy;
    if (dy == 0 || dx == dy) return dx;
    fail(Errc::precondition_failed, "incompatible radicands " + to_string(dx) + " and " +
                                        to_string(dy));
}

} // namespace

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    Int d = merged_radicand(x, y);
    return QuadExt(x.rational_part() + y.rational_part(),
                   x.radical_coefficient() + y.radical_coefficient(), d);
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    Int d = merged_radicand(x, y);
    // (a + b sqrt d)(a' + b' sqrt d) = aa' + bb'd + (ab' + a'b) sqrt d
    Rat a = x.rational_part() * y.rational_part() +
            x.radical_coefficient() * y.radical_coefficient() * d;
    Rat b = x.rational_part() * y.radical_coefficient() +
            x.radical_coefficient() * y.rational_part();
    return QuadExt(a, b, d);
}

QuadExt operator/(const QuadExt& x, const Rat& c) {
    if (c == 0) fail(Errc::division_by_zero, "division by zero");
    return QuadExt(x.rational_part() / c, x.radical_coefficient() / c, x.radicand());
}

std::string QuadExt::str() const {
    if (is_rational()) return to_string(a_);
    std::string out = to_string(a_);
    if (b_ > 0)
        out += " + " + to_string(b_) + "*sqrt(" + to_string(d_) + ")";
    else
        out += " - " + to_string(-b_) + "*sqrt(" + to_string(d_) + ")";
    return out;
}

double QuadExt::approx() const {
    double a = num(a_).convert_to<double>() / den(a_).convert_to<double>();
    if (b_ == 0) return a;
    double b = num(b_).convert_to<double>() / den(b_).convert_to<double>();
    return a + b * std::sqrt(d_.convert_to<double>());
}

} // namespace subspacekit

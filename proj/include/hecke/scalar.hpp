#ifndef HECKE_SCALAR_HPP
#define HECKE_SCALAR_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hecke {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact complex rational. Arithmetic never rounds, equality is decidable.
struct Scalar {
  Rational re{0};
  Rational im{0};

  Scalar() = default;
  Scalar(Rational r) : re(std::move(r)) {}
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  Scalar(long r) : re(r) {}

  bool is_zero() const { return re == 0 && im == 0; }

  Scalar conj() const { return {re, -im}; }

  friend Scalar operator+(const Scalar &a, const Scalar &b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Scalar operator-(const Scalar &a, const Scalar &b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Scalar operator*(const Scalar &a, const Scalar &b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  Scalar &operator+=(const Scalar &b) {
    re += b.re;
    im += b.im;
    return *this;
  }
  friend bool operator==(const Scalar &a, const Scalar &b) = default;

  std::string str() const {
    return re.str() + (im >= 0 ? "+" : "") + im.str() + "i";
  }
};

} // namespace hecke

#endif

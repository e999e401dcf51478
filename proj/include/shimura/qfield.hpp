#pragma once

#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "shimura/errors.hpp"
#include "shimura/numbers.hpp"

namespace shimura {

/// Ambient real biquadratic field Q(sqrt(m), sqrt(n)) with m, n distinct
/// squarefree integers > 1. Elements are written on the basis
/// {1, sqrt(m), sqrt(n), sqrt(m*n)}; the two radicals always denote the
/// positive real roots, so the field comes with a fixed embedding into R.
struct FieldSpec {
  Int m, n;

  FieldSpec(Int m_, Int n_) : m(std::move(m_)), n(std::move(n_)) {
    if (m <= 1 || n <= 1 || m == n || !is_squarefree(m) || !is_squarefree(n))
      throw Error("field spec requires distinct squarefree integers > 1");
  }

  Int mn() const { return m * n; }

  bool operator==(const FieldSpec& o) const { return m == o.m && n == o.n; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  static bool is_squarefree(const Int& v) {
    if (v < 1) return false;
    Int rest = v;
    for (Int p = 2; p * p <= rest; ++p) {
      if (rest % p == 0) {
        rest /= p;
        if (rest % p == 0) return false;
      }
    }
    return true;
  }
};

/// Element a + b*sqrt(m) + c*sqrt(n) + d*sqrt(m*n) with rational
/// coordinates. All arithmetic is exact; the coordinates are always in
/// canonical (reduced) form because Rat keeps them that way.
///
/// The four coordinates determine the element uniquely: m != n squarefree
/// makes {1, sqrt(m), sqrt(n), sqrt(mn)} linearly independent over Q, so
/// the element is zero iff every coordinate is zero. That gives a decidable
/// zero test, and sign() below extends it to a decidable order.
class QuadExt {
 public:
  QuadExt(FieldSpec spec, Rat a, Rat b, Rat c, Rat d)
      : spec_(std::move(spec)),
        a_(std::move(a)),
        b_(std::move(b)),
        c_(std::move(c)),
        d_(std::move(d)) {}

  static QuadExt zero(const FieldSpec& s) { return {s, 0, 0, 0, 0}; }
  static QuadExt one(const FieldSpec& s) { return {s, 1, 0, 0, 0}; }
  static QuadExt from_rat(const FieldSpec& s, Rat r) {
    return {s, std::move(r), 0, 0, 0};
  }
  static QuadExt sqrt_m(const FieldSpec& s) { return {s, 0, 1, 0, 0}; }
  static QuadExt sqrt_n(const FieldSpec& s) { return {s, 0, 0, 1, 0}; }
  static QuadExt sqrt_mn(const FieldSpec& s) { return {s, 0, 0, 0, 1}; }

  const FieldSpec& spec() const { return spec_; }
  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Rat& c() const { return c_; }
  const Rat& d() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
  bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }

  bool operator==(const QuadExt& o) const {
    return spec_ == o.spec_ && a_ == o.a_ && b_ == o.b_ && c_ == o.c_ &&
           d_ == o.d_;
  }
  bool operator!=(const QuadExt& o) const { return !(*this == o); }

  QuadExt operator-() const { return {spec_, -a_, -b_, -c_, -d_}; }

  QuadExt operator+(const QuadExt& o) const {
    check_spec(o);
    return {spec_, a_ + o.a_, b_ + o.b_, c_ + o.c_, d_ + o.d_};
  }

  QuadExt operator-(const QuadExt& o) const {
    check_spec(o);
    return {spec_, a_ - o.a_, b_ - o.b_, c_ - o.c_, d_ - o.d_};
  }

  // Multiplication table of the basis:
  //   sqrt(m)^2 = m, sqrt(n)^2 = n, sqrt(m)*sqrt(n) = sqrt(mn),
  //   sqrt(m)*sqrt(mn) = m*sqrt(n), sqrt(n)*sqrt(mn) = n*sqrt(m),
  //   sqrt(mn)^2 = m*n.
  QuadExt operator*(const QuadExt& o) const {
    check_spec(o);
    const Rat m(spec_.m), n(spec_.n), mn(spec_.mn());
    Rat ra = a_ * o.a_ + m * (b_ * o.b_) + n * (c_ * o.c_) + mn * (d_ * o.d_);
    Rat rb = a_ * o.b_ + b_ * o.a_ + n * (c_ * o.d_ + d_ * o.c_);
    Rat rc = a_ * o.c_ + c_ * o.a_ + m * (b_ * o.d_ + d_ * o.b_);
    Rat rd = a_ * o.d_ + d_ * o.a_ + b_ * o.c_ + c_ * o.b_;
    return {spec_, std::move(ra), std::move(rb), std::move(rc), std::move(rd)};
  }

  QuadExt operator/(const QuadExt& o) const { return *this * o.inverse(); }

  QuadExt operator*(const Rat& r) const {
    return {spec_, a_ * r, b_ * r, c_ * r, d_ * r};
  }

  /// Multiplicative inverse, computed from the three nontrivial Galois
  /// conjugates: 1/x = conj2(x)*conj3(x)*conj4(x) / Norm(x), where the norm
  /// (the product of all four real embeddings) is a nonzero rational for
  /// nonzero x.
  QuadExt inverse() const {
    if (is_zero()) throw DivisionByZero();
    QuadExt c2{spec_, a_, -b_, c_, -d_};   // sqrt(m) -> -sqrt(m)
    QuadExt c3{spec_, a_, b_, -c_, -d_};   // sqrt(n) -> -sqrt(n)
    QuadExt c4{spec_, a_, -b_, -c_, d_};   // both negated
    QuadExt p = c2 * c3 * c4;
    QuadExt nrm = *this * p;
    // nrm is Galois-invariant, hence rational.
    if (!nrm.is_rational() || nrm.a_ == 0)
      throw Error("norm computation failed; field spec is inconsistent");
    Rat inv_n = Rat(1) / nrm.a_;
    return p * inv_n;
  }

  /// Sign of the element under the fixed real embedding: -1, 0 or +1.
  /// Zero is decided exactly by coordinate vanishing; otherwise rational
  /// interval enclosures of the radicals are refined (precision doubling,
  /// starting at 64 bits) until the enclosure of the value excludes zero.
  int sign() const {
    if (is_zero()) return 0;
    if (is_rational()) return a_ > 0 ? 1 : -1;
    for (unsigned bits = 64;; bits *= 2) {
      auto em = sqrt_enclosure(spec_.m, bits);
      auto en = sqrt_enclosure(spec_.n, bits);
      auto emn = sqrt_enclosure(spec_.mn(), bits);
      Rat lo = a_, hi = a_;
      accumulate(lo, hi, b_, em);
      accumulate(lo, hi, c_, en);
      accumulate(lo, hi, d_, emn);
      if (lo > 0) return 1;
      if (hi < 0) return -1;
    }
  }

  /// Text form in basis order with explicit radicands, e.g.
  /// "3 - 2*r2" or "(1/2)*r6 + (1/2)*r2". Round-trips through parse().
  std::string format() const {
    if (is_zero()) return "0";
    std::string out;
    append_term(out, a_, "");
    append_term(out, b_, "r" + spec_.m.str());
    append_term(out, c_, "r" + spec_.n.str());
    append_term(out, d_, "r" + spec_.mn().str());
    return out;
  }

  /// Parses the grammar
  ///   expr := term (('+'|'-') term)*
  ///   term := rat | rat '*' rad | rad
  ///   rad  := 'r' digits          (radicand must be m, n or m*n)
  ///   rat  := int | '(' int '/' int ')' | int '/' int
  /// with insignificant whitespace. Throws ParseError with a position.
  static QuadExt parse(std::string_view text, const FieldSpec& spec) {
    Parser p{text, 0};
    QuadExt result = zero(spec);
    bool first = true;
    p.skip_ws();
    while (true) {
      int sgn = 1;
      if (p.peek() == '+' || p.peek() == '-') {
        if (p.take() == '-') sgn = -1;
        p.skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", p.pos);
      }
      result = result + parse_term(p, spec, sgn);
      p.skip_ws();
      first = false;
      if (p.at_end()) break;
      if (p.peek() != '+' && p.peek() != '-')
        throw ParseError("unexpected character", p.pos);
    }
    if (first) throw ParseError("empty input", 0);
    return result;
  }

 private:
  struct Parser {
    std::string_view text;
    std::size_t pos;

    bool at_end() const { return pos >= text.size(); }
    char peek() const { return at_end() ? '\0' : text[pos]; }
    char take() { return text[pos++]; }
    void skip_ws() {
      while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
        ++pos;
    }
  };

  void check_spec(const QuadExt& o) const {
    if (spec_ != o.spec_) throw FieldSpecMismatch();
  }

  // lo/hi += coeff * [enc.lo, enc.hi]
  static void accumulate(Rat& lo, Rat& hi, const Rat& coeff,
                         const SqrtEnclosure& enc) {
    if (coeff == 0) return;
    if (coeff > 0) {
      lo += coeff * enc.lo;
      hi += coeff * enc.hi;
    } else {
      lo += coeff * enc.hi;
      hi += coeff * enc.lo;
    }
  }

  static void append_term(std::string& out, const Rat& coeff,
                          const std::string& rad) {
    if (coeff == 0) return;
    Rat mag = coeff < 0 ? Rat(-coeff) : coeff;
    if (out.empty()) {
      if (coeff < 0) out += "-";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    if (rad.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += rad;
    } else if (denominator(mag) == 1) {
      out += numerator(mag).str() + "*" + rad;
    } else {
      out += "(" + to_string(mag) + ")*" + rad;
    }
  }

  static Int parse_int(Parser& p) {
    std::size_t start = p.pos;
    if (p.peek() == '-') p.take();
    if (!std::isdigit(static_cast<unsigned char>(p.peek())))
      throw ParseError("expected integer", p.pos);
    while (std::isdigit(static_cast<unsigned char>(p.peek()))) p.take();
    return Int(std::string(p.text.substr(start, p.pos - start)));
  }

  static Rat parse_rat(Parser& p) {
    bool paren = false;
    if (p.peek() == '(') {
      p.take();
      p.skip_ws();
      paren = true;
    }
    Int num = parse_int(p);
    p.skip_ws();
    Int den = 1;
    if (p.peek() == '/') {
      p.take();
      p.skip_ws();
      std::size_t den_pos = p.pos;
      den = parse_int(p);
      if (den == 0) throw ParseError("zero denominator", den_pos);
      p.skip_ws();
    }
    if (paren) {
      if (p.peek() != ')') throw ParseError("expected ')'", p.pos);
      p.take();
    }
    return Rat(num, den);
  }

  static QuadExt parse_radical(Parser& p, const FieldSpec& spec) {
    std::size_t rad_pos = p.pos;
    p.take();  // 'r'
    if (!std::isdigit(static_cast<unsigned char>(p.peek())))
      throw ParseError("expected radicand digits", p.pos);
    std::size_t start = p.pos;
    while (std::isdigit(static_cast<unsigned char>(p.peek()))) p.take();
    Int radicand{std::string(p.text.substr(start, p.pos - start))};
    if (radicand == spec.m) return sqrt_m(spec);
    if (radicand == spec.n) return sqrt_n(spec);
    if (radicand == spec.mn()) return sqrt_mn(spec);
    throw ParseError("unknown radical r" + radicand.str(), rad_pos);
  }

  static QuadExt parse_term(Parser& p, const FieldSpec& spec, int sgn) {
    p.skip_ws();
    QuadExt value = one(spec);
    if (p.peek() == 'r') {
      value = parse_radical(p, spec);
    } else {
      Rat coeff = parse_rat(p);
      p.skip_ws();
      if (p.peek() == '*') {
        p.take();
        p.skip_ws();
        if (p.peek() != 'r') throw ParseError("expected radical", p.pos);
        value = parse_radical(p, spec) * coeff;
      } else {
        value = from_rat(spec, coeff);
      }
    }
    return sgn < 0 ? -value : value;
  }

  FieldSpec spec_;
  Rat a_, b_, c_, d_;
};

inline QuadExt operator*(const Rat& r, const QuadExt& x) { return x * r; }

inline int sign(const QuadExt& x) { return x.sign(); }

/// Sign of x - y: -1, 0 or +1.
inline int compare(const QuadExt& x, const QuadExt& y) {
  return (x - y).sign();
}

}  // namespace shimura

#include "qm/extreal.hpp"

#include <cctype>

namespace qm {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

Rational dyadic(unsigned k) {
  mpz_class den = 1;
  den <<= k;
  return Rational(mpz_class(1), den);
}

ExtReal::ExtReal(const Rational& value) : value_(value) {
  value_.canonicalize();
  if (sgn(value_) < 0) throw std::domain_error("negative extended real " + qm::to_string(value_));
}

ExtReal::ExtReal(long value) : ExtReal(Rational(value)) {}

ExtReal ExtReal::infinity() {
  ExtReal x;
  x.infinite_ = true;
  return x;
}

ExtReal ExtReal::parse(std::string_view text) {
  if (text == "inf") return infinity();
  if (!text.empty() && text.front() == '-') {
    throw ParseError("negative extended real '" + std::string(text) + "'");
  }
  return ExtReal(parse_rational(text));
}

const Rational& ExtReal::value() const {
  if (infinite_) throw std::logic_error("value() of infinity");
  return value_;
}

std::string ExtReal::to_string() const { return infinite_ ? "inf" : qm::to_string(value_); }

bool operator==(const ExtReal& a, const ExtReal& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  const int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

ExtReal operator+(const ExtReal& a, const ExtReal& b) {
  if (a.infinite_ || b.infinite_) return ExtReal::infinity();
  return ExtReal(Rational(a.value_ + b.value_));
}

ExtReal ExtReal::scaled(const Rational& alpha) const {
  if (sgn(alpha) < 0) throw std::domain_error("negative scale factor");
  if (infinite_) return infinity();
  return ExtReal(Rational(alpha * value_));
}

Ordering compare(const ExtReal& a, const ExtReal& b) {
  const auto c = a <=> b;
  if (c < 0) return Ordering::Less;
  if (c > 0) return Ordering::Greater;
  return Ordering::Equal;
}

ExtReal monus(const ExtReal& a, const ExtReal& b) {
  if (a.is_infinite()) {
    if (b.is_infinite()) throw IndeterminateForm("inf monus inf");
    return ExtReal::infinity();
  }
  if (b.is_infinite() || b >= a) return ExtReal{};
  return ExtReal(Rational(a.value() - b.value()));
}

ExtReal min(const ExtReal& a, const ExtReal& b) { return b < a ? b : a; }
ExtReal max(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }

std::string to_string(const ExtReal& x) { return x.to_string(); }

}  // namespace qm

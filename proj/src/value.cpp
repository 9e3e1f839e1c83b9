#include "vkit/value.hpp"

#include <cctype>

#include "vkit/chords.hpp"
#include "vkit/error.hpp"

namespace vkit {

namespace {

void prune(FormalSum& f) {
  for (auto it = f.begin(); it != f.end();) {
    it = it->second == 0 ? f.erase(it) : std::next(it);
  }
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

boost::multiprecision::cpp_int parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error(ErrorCode::MalformedToken, "bad integer '" + std::string(s) + "'");
  boost::multiprecision::cpp_int v{std::string(s)};
  if (negative) v = -v;
  return v;
}

}  // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::BoundViolation, "formal coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::BoundViolation, "formal coefficient overflow");
  return r;
}

InvariantValue::InvariantValue(FormalSum f) : v_(std::move(f)) { prune(std::get<FormalSum>(v_)); }

InvariantValue InvariantValue::zero(ValueKind kind) {
  return kind == ValueKind::Numeric ? InvariantValue(Rational(0)) : InvariantValue(FormalSum{});
}

InvariantValue InvariantValue::basis(std::string word) { return InvariantValue(FormalSum{{std::move(word), 1}}); }

bool InvariantValue::is_zero() const {
  if (kind() == ValueKind::Numeric) return numeric() == 0;
  return formal().empty();
}

const Rational& InvariantValue::numeric() const {
  if (kind() != ValueKind::Numeric) throw Error(ErrorCode::MixedValueKinds, "formal value used as numeric");
  return std::get<Rational>(v_);
}

const FormalSum& InvariantValue::formal() const {
  if (kind() != ValueKind::Formal) throw Error(ErrorCode::MixedValueKinds, "numeric value used as formal");
  return std::get<FormalSum>(v_);
}

Rational InvariantValue::norm() const {
  if (kind() == ValueKind::Numeric) return abs(numeric());
  Rational total = 0;
  for (const auto& [word, c] : formal()) total += c < 0 ? Rational(-boost::multiprecision::cpp_int(c)) : Rational(c);
  return total;
}

InvariantValue& InvariantValue::operator+=(const InvariantValue& o) {
  if (kind() != o.kind()) throw Error(ErrorCode::MixedValueKinds, "cannot add formal and numeric values");
  if (kind() == ValueKind::Numeric) {
    std::get<Rational>(v_) += o.numeric();
  } else {
    auto& f = std::get<FormalSum>(v_);
    for (const auto& [word, c] : o.formal()) f[word] = checked_add(f[word], c);
    prune(f);
  }
  return *this;
}

InvariantValue& InvariantValue::operator-=(const InvariantValue& o) {
  if (kind() != o.kind()) throw Error(ErrorCode::MixedValueKinds, "cannot subtract formal and numeric values");
  if (kind() == ValueKind::Numeric) {
    std::get<Rational>(v_) -= o.numeric();
  } else {
    auto& f = std::get<FormalSum>(v_);
    for (const auto& [word, c] : o.formal()) f[word] = checked_add(f[word], checked_mul(c, -1));
    prune(f);
  }
  return *this;
}

InvariantValue& InvariantValue::operator*=(std::int64_t k) {
  if (kind() == ValueKind::Numeric) {
    std::get<Rational>(v_) *= k;
  } else {
    auto& f = std::get<FormalSum>(v_);
    for (auto& [word, c] : f) c = checked_mul(c, k);
    prune(f);
  }
  return *this;
}

std::string InvariantValue::to_string() const {
  if (kind() == ValueKind::Numeric) return numeric().str();
  const auto& f = formal();
  if (f.empty()) return "0";
  std::string out;
  for (const auto& [word, c] : f) {
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "e[" + word + "]";
  }
  return out;
}

InvariantValue parse_value(std::string_view text) {
  if (text.size() >= 3 && text.substr(0, 2) == "e[" && text.back() == ']') {
    std::string word(text.substr(2, text.size() - 3));
    if (!is_canonical(word)) throw Error(ErrorCode::NonCanonicalWord, "basis term e[" + word + "]");
    return InvariantValue::basis(std::move(word));
  }
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return InvariantValue(Rational(parse_integer(text)));
  const auto num = parse_integer(text.substr(0, slash));
  const auto den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::MalformedToken, "zero denominator in '" + std::string(text) + "'");
  return InvariantValue(Rational(num, den));
}

}  // namespace vkit

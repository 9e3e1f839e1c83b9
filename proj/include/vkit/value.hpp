#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace vkit {

using Rational = boost::multiprecision::cpp_rational;

/// Integer combination of basis terms e[word].
using FormalSum = std::map<std::string, std::int64_t>;

enum class ValueKind { Numeric, Formal };

/// Exact invariant value. Numeric and Formal values never combine; doing so
/// throws MixedValueKinds.
class InvariantValue {
 public:
  InvariantValue() = default;
  explicit InvariantValue(Rational r) : v_(std::move(r)) {}
  explicit InvariantValue(FormalSum f);

  static InvariantValue zero(ValueKind kind);
  static InvariantValue basis(std::string word);

  ValueKind kind() const noexcept { return v_.index() == 0 ? ValueKind::Numeric : ValueKind::Formal; }
  bool is_zero() const;

  const Rational& numeric() const;
  const FormalSum& formal() const;

  /// |r| for numeric values, sum of |coefficients| for formal ones.
  Rational norm() const;

  InvariantValue& operator+=(const InvariantValue& o);
  InvariantValue& operator-=(const InvariantValue& o);
  InvariantValue& operator*=(std::int64_t k);

  friend InvariantValue operator+(InvariantValue a, const InvariantValue& b) { return a += b; }
  friend InvariantValue operator-(InvariantValue a, const InvariantValue& b) { return a -= b; }
  friend InvariantValue operator*(std::int64_t k, InvariantValue a) { return a *= k; }
  friend bool operator==(const InvariantValue&, const InvariantValue&) = default;

  /// "3", "-1/2", "e[] + 2*e[AA] - e[ABAB]", "0".
  std::string to_string() const;

 private:
  std::variant<Rational, FormalSum> v_;
};

/// Parses one table value: integer, p/q, or a single basis term e[word].
InvariantValue parse_value(std::string_view text);

/// Overflow-checked accumulation used by formal sums.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace vkit

#pragma once

#include "trisect/error.hpp"
#include "trisect/zmatrix.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace trisect {

/// Reduced slope num/den in Q u {1/0}. Canonical form: den >= 0, sign on
/// num, and 1/0 is the only representative with den = 0.
class Fraction {
public:
  Fraction() : num_(0), den_(1) {}
  Fraction(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0 && num_ == 0) throw Error(ErrorCode::InvalidFraction, "0/0");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (den_ == 0) {
      num_ = 1;
      return;
    }
    Int g = gcd_int(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  static auto infinity() -> Fraction { return {1, 0}; }

  /// "a/b" or "a"; whitespace is not accepted.
  static auto parse(std::string_view text) -> Fraction {
    auto parse_int = [&](std::string_view s) -> Int {
      if (s.empty()) throw Error(ErrorCode::InvalidFraction, "empty integer in '" + std::string(text) + "'");
      std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
      if (start == s.size())
        throw Error(ErrorCode::InvalidFraction, "bad integer in '" + std::string(text) + "'");
      for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
          throw Error(ErrorCode::InvalidFraction, "bad integer in '" + std::string(text) + "'");
      Int v(std::string(s.substr(start)));
      return s[0] == '-' ? Int(-v) : v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return {parse_int(text), 1};
    return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
  }

  [[nodiscard]] auto num() const -> const Int & { return num_; }
  [[nodiscard]] auto den() const -> const Int & { return den_; }
  [[nodiscard]] auto is_infinite() const -> bool { return den_ == 0; }

  [[nodiscard]] auto str() const -> std::string {
    return num_.str() + "/" + den_.str();
  }

  friend auto operator==(const Fraction &, const Fraction &) -> bool = default;

  /// Order on the extended line with 1/0 as the largest element.
  friend auto operator<=>(const Fraction &x, const Fraction &y)
      -> std::strong_ordering {
    if (x.is_infinite() || y.is_infinite()) {
      if (x.is_infinite() && y.is_infinite()) return std::strong_ordering::equal;
      return x.is_infinite() ? std::strong_ordering::greater
                             : std::strong_ordering::less;
    }
    Int lhs = x.num_ * y.den_;
    Int rhs = y.num_ * x.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

private:
  Int num_;
  Int den_;
};

/// d(a/b, c/d) = det [[a, c], [b, d]] = a*d - b*c.
inline auto dmet(const Fraction &x, const Fraction &y) -> Int {
  return x.num() * y.den() - x.den() * y.num();
}

} // namespace trisect

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace svirlab {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

double to_double(const Rational& q);
std::string to_string(const Rational& q);
// Accepts "p", "p/q" or a finite decimal such as "0.125".
Rational parse_rational(std::string_view text);

enum class ErrorCode { invalid_argument, numerical, unsupported, budget };

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

// Half-integer stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int n) : twice_(2 * n) {}  // NOLINT(google-explicit-constructor)

  static constexpr HalfInt from_twice(int t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }
  static HalfInt parse(std::string_view text);

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double value() const { return 0.5 * twice_; }
  Rational rational() const { return Rational(twice_, 2); }
  std::string str() const;

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }
  constexpr auto operator<=>(const HalfInt&) const = default;

 private:
  int twice_ = 0;
};

constexpr HalfInt abs(HalfInt h) { return h.twice() < 0 ? -h : h; }
constexpr HalfInt min(HalfInt a, HalfInt b) { return a < b ? a : b; }
constexpr HalfInt max(HalfInt a, HalfInt b) { return a < b ? b : a; }

enum class Sector { NS, R };
enum class ZeroModeVariant { unique, plus, minus };

std::string to_string(Sector s);
std::string to_string(ZeroModeVariant v);
Sector parse_sector(std::string_view text);
ZeroModeVariant parse_variant(std::string_view text);

// NS modes live on 1/2 + Z, R modes on Z.
constexpr bool on_grid(Sector s, HalfInt r) { return s == Sector::R ? r.is_integer() : !r.is_integer(); }

// Energy cutoffs: NS energies lie in Z/2, R energies in Z, so an R cutoff is floored to an integer.
HalfInt floor_cutoff(Sector s, HalfInt cutoff);

}  // namespace svirlab

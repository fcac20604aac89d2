#include "svirlab/types.hpp"

#include <cctype>
#include <charconv>

namespace svirlab {

double to_double(const Rational& q) { return boost::multiprecision::numerator(q).convert_to<double>() /
                                             boost::multiprecision::denominator(q).convert_to<double>(); }

std::string to_string(const Rational& q) {
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

namespace {

std::string trim(std::string_view t) {
  std::size_t b = 0, e = t.size();
  while (b < e && std::isspace(static_cast<unsigned char>(t[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(t[e - 1]))) --e;
  return std::string(t.substr(b, e - b));
}

boost::multiprecision::cpp_int parse_int(const std::string& s, std::string_view whole) {
  if (s.empty()) fail(ErrorCode::invalid_argument, "cannot parse number '" + std::string(whole) + "'");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) fail(ErrorCode::invalid_argument, "cannot parse number '" + std::string(whole) + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      fail(ErrorCode::invalid_argument, "cannot parse number '" + std::string(whole) + "'");
  boost::multiprecision::cpp_int v(s.substr(i));
  return s[0] == '-' ? boost::multiprecision::cpp_int(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string t = trim(text);
  if (auto slash = t.find('/'); slash != std::string::npos) {
    auto num = parse_int(trim(t.substr(0, slash)), text);
    auto den = parse_int(trim(t.substr(slash + 1)), text);
    if (den == 0) fail(ErrorCode::invalid_argument, "zero denominator in '" + t + "'");
    return Rational(num, den);
  }
  if (auto dot = t.find('.'); dot != std::string::npos) {
    std::string ip = t.substr(0, dot), fp = t.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (neg || (!ip.empty() && ip[0] == '+')) ip = ip.substr(1);
    if (ip.empty()) ip = "0";
    if (fp.empty()) fp = "0";
    auto whole = parse_int(ip, text);
    auto frac = parse_int(fp, text);
    boost::multiprecision::cpp_int scale = 1;
    for (std::size_t k = 0; k < fp.size(); ++k) scale *= 10;
    Rational q = Rational(whole) + Rational(frac, scale);
    return neg ? Rational(-q) : q;
  }
  return Rational(parse_int(t, text));
}

HalfInt HalfInt::parse(std::string_view text) {
  Rational q = parse_rational(text);
  Rational tq = q * 2;
  if (boost::multiprecision::denominator(tq) != 1)
    fail(ErrorCode::invalid_argument, "'" + std::string(text) + "' is not a half-integer");
  return from_twice(boost::multiprecision::numerator(tq).convert_to<int>());
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

std::string to_string(Sector s) { return s == Sector::NS ? "NS" : "R"; }

std::string to_string(ZeroModeVariant v) {
  switch (v) {
    case ZeroModeVariant::unique: return "unique";
    case ZeroModeVariant::plus: return "plus";
    case ZeroModeVariant::minus: return "minus";
  }
  return "unique";
}

Sector parse_sector(std::string_view text) {
  std::string t = trim(text);
  for (auto& ch : t) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (t == "ns") return Sector::NS;
  if (t == "r") return Sector::R;
  fail(ErrorCode::invalid_argument, "unknown sector '" + std::string(text) + "'");
}

ZeroModeVariant parse_variant(std::string_view text) {
  std::string t = trim(text);
  if (t == "plus" || t == "+") return ZeroModeVariant::plus;
  if (t == "minus" || t == "-") return ZeroModeVariant::minus;
  if (t == "unique") return ZeroModeVariant::unique;
  fail(ErrorCode::invalid_argument, "unknown zero-mode variant '" + std::string(text) + "'");
}

HalfInt floor_cutoff(Sector s, HalfInt cutoff) {
  if (cutoff < HalfInt(0)) fail(ErrorCode::invalid_argument, "cutoff must be nonnegative");
  if (s == Sector::R && !cutoff.is_integer()) return cutoff - HalfInt::from_twice(1);
  return cutoff;
}

}  // namespace svirlab

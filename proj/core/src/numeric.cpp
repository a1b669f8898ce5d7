#include "quiverlab/numeric.hpp"

#include <cctype>
#include <sstream>

#include "quiverlab/errors.hpp"

namespace quiverlab {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Int parse_int(std::string_view token) {
  if (!is_integer_token(token))
    throw ParseError(ParseError::Kind::Syntax,
                     "expected integer, got '" + std::string(token) + "'");
  return Int(std::string(token), 10);
}

Rat parse_rational(std::string_view token) {
  auto slash = token.find('/');
  if (slash == std::string_view::npos) {
    return Rat(parse_int(token));
  }
  std::string_view num = token.substr(0, slash);
  std::string_view den = token.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den) || den[0] == '-' || den[0] == '+')
    throw ParseError(ParseError::Kind::Syntax,
                     "expected rational 'p' or 'p/q', got '" + std::string(token) + "'");
  Int d = parse_int(den);
  if (d == 0)
    throw ParseError(ParseError::Kind::Syntax, "zero denominator in '" + std::string(token) + "'");
  Rat r(parse_int(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Int& n) { return n.get_str(); }

long to_long(const Int& n) {
  if (!n.fits_slong_p())
    throw DomainError("integer too large for a machine count: " + n.get_str());
  return n.get_si();
}

bool all_nonnegative(const IntVec& v) {
  for (const auto& x : v)
    if (x < 0) return false;
  return true;
}

bool is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Int gcd(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool leq(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::string format_vector(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

}  // namespace quiverlab

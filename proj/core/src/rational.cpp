#include "splitcut/rational.hpp"

#include <cctype>
#include <sstream>

namespace splitcut {

namespace {

bool is_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_text(s)) {
    throw InputError("not an exact integer: '" + std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i])))) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ',' && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const auto den_text = text.substr(slash + 1);
  if (den_text.empty() || den_text.front() == '-' || den_text.front() == '+') {
    throw InputError("malformed rational: '" + std::string(text) + "'");
  }
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(den_text));
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Integer floor(const Rational& a) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.mpq().get_num_mpz_t(), a.mpq().get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& a) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.mpq().get_num_mpz_t(), a.mpq().get_den_mpz_t());
  return q;
}

std::pair<Integer, Integer> floor_ceil(const Rational& a) { return {floor(a), ceil(a)}; }

Rational frac(const Rational& a) { return a - Rational(floor(a)); }

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

void require_same_dim(std::size_t a, std::size_t b, std::string_view what) {
  if (a != b) {
    std::ostringstream os;
    os << "dimension mismatch in " << what << ": " << a << " vs " << b;
    throw InputError(os.str());
  }
}

RationalVector to_rational(const IntVector& v) {
  RationalVector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = Rational(v[i]);
  return out;
}

bool is_integral(const RationalVector& v) {
  for (const auto& e : v) {
    if (!e.is_integer()) return false;
  }
  return true;
}

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
  require_same_dim(a.dim(), b.dim(), "vector sum");
  RationalVector out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + b[i];
  return out;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
  require_same_dim(a.dim(), b.dim(), "vector difference");
  RationalVector out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] - b[i];
  return out;
}

RationalVector operator*(const Rational& t, const RationalVector& v) {
  RationalVector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = t * v[i];
  return out;
}

Rational dot(const RationalVector& u, const RationalVector& v) {
  require_same_dim(u.dim(), v.dim(), "dot product");
  mpq_class acc;
  for (std::size_t i = 0; i < u.dim(); ++i) acc += u[i].mpq() * v[i].mpq();
  return Rational(acc);
}

Rational dot(const IntVector& u, const RationalVector& v) {
  require_same_dim(u.dim(), v.dim(), "dot product");
  mpq_class acc;
  for (std::size_t i = 0; i < u.dim(); ++i) acc += mpq_class(u[i]) * v[i].mpq();
  return Rational(acc);
}

RationalVector append(const RationalVector& v, const Rational& last) {
  RationalVector out = v;
  out.push_back(last);
  return out;
}

IntVector append(const IntVector& v, const Integer& last) {
  IntVector out = v;
  out.push_back(last);
  return out;
}

RationalVector parse_vector(std::string_view text) {
  RationalVector out;
  for (auto tok : split_tokens(text)) out.push_back(Rational::parse(tok));
  return out;
}

IntVector parse_int_vector(std::string_view text) {
  IntVector out;
  for (auto tok : split_tokens(text)) out.push_back(parse_integer(tok));
  return out;
}

std::string str(const RationalVector& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += sep;
    out += v[i].str();
  }
  return out;
}

std::string str(const IntVector& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += sep;
    out += v[i].get_str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RationalVector& v) { return os << '(' << str(v, ", ") << ')'; }
std::ostream& operator<<(std::ostream& os, const IntVector& v) { return os << '(' << str(v, ", ") << ')'; }

}  // namespace splitcut

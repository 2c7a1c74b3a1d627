#include "dendric/exact_real.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>

namespace dendric {

namespace {

const std::vector<unsigned>& primes() {
  static const std::vector<unsigned> table = [] {
    std::vector<unsigned> out;
    for (unsigned n = 2; out.size() < 64; ++n) {
      bool prime = true;
      for (unsigned p : out) {
        if (p * p > n) break;
        if (n % p == 0) {
          prime = false;
          break;
        }
      }
      if (prime) out.push_back(n);
    }
    return out;
  }();
  return table;
}

std::size_t read_basis_size() {
  const char* env = std::getenv("DENDRITIC_SURD_BASIS");
  if (!env || !*env) return 8;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 64)
    throw PreconditionError("DENDRITIC_SURD_BASIS must be an integer in 1..64");
  return static_cast<std::size_t>(v);
}

std::size_t bits(const Integer& n) {
  return n == 0 ? 0 : boost::multiprecision::msb(abs(n)) + 1;
}

void check_size(const Rational& r) {
  if (bits(numerator(r)) > ExactReal::kMaxBits ||
      bits(denominator(r)) > ExactReal::kMaxBits)
    throw FieldOverflowError("exact real coordinate exceeds " +
                             std::to_string(ExactReal::kMaxBits) + " bits");
}

std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace

std::size_t surd_basis_size() {
  static const std::size_t size = read_basis_size();
  return size;
}

unsigned surd_prime(std::size_t i) { return primes().at(i); }

ExactReal::ExactReal(const Rational& r) {
  if (r != 0) coords_.push_back(r);
  check_size(r);
}

ExactReal ExactReal::surd(std::size_t i, const Rational& coeff) {
  if (i >= surd_basis_size())
    throw PreconditionError("surd index " + std::to_string(i) +
                            " outside the basis of size " +
                            std::to_string(surd_basis_size()));
  ExactReal x;
  x.coords_.assign(i + 2, Rational(0));
  x.coords_[i + 1] = coeff;
  x.normalize();
  check_size(coeff);
  return x;
}

Rational ExactReal::coord(std::size_t i) const {
  return i < coords_.size() ? coords_[i] : Rational(0);
}

void ExactReal::normalize() {
  while (!coords_.empty() && coords_.back() == 0) coords_.pop_back();
}

ExactReal ExactReal::operator-() const {
  ExactReal x = *this;
  for (auto& c : x.coords_) c = -c;
  return x;
}

ExactReal& ExactReal::operator+=(const ExactReal& o) {
  if (o.coords_.size() > coords_.size()) coords_.resize(o.coords_.size());
  for (std::size_t i = 0; i < o.coords_.size(); ++i) {
    coords_[i] += o.coords_[i];
    check_size(coords_[i]);
  }
  normalize();
  return *this;
}

ExactReal& ExactReal::operator-=(const ExactReal& o) { return *this += -o; }

ExactReal& ExactReal::operator*=(const Rational& r) {
  for (auto& c : coords_) {
    c *= r;
    check_size(c);
  }
  normalize();
  return *this;
}

ExactReal& ExactReal::operator/=(const Rational& r) {
  if (r == 0) throw PreconditionError("division by zero");
  for (auto& c : coords_) {
    c /= r;
    check_size(c);
  }
  return *this;
}

double ExactReal::to_double() const {
  double v = 0;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const double c = coords_[i].convert_to<double>();
    v += i == 0 ? c : c * std::sqrt(static_cast<double>(surd_prime(i - 1)));
  }
  return v;
}

int ExactReal::sign() const {
  if (coords_.empty()) return 0;
  if (coords_.size() == 1) return coords_[0] > 0 ? 1 : -1;

  // Floating point first: each term carries a relative error of a few ulps.
  double value = 0, magnitude = 0;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const double c = coords_[i].convert_to<double>();
    const double t =
        i == 0 ? c : c * std::sqrt(static_cast<double>(surd_prime(i - 1)));
    value += t;
    magnitude += std::fabs(t);
  }
  const double bound =
      8 * static_cast<double>(coords_.size()) *
          std::numeric_limits<double>::epsilon() * magnitude +
      std::numeric_limits<double>::min();
  if (std::isfinite(value) && std::isfinite(magnitude) &&
      std::fabs(value) > bound)
    return value > 0 ? 1 : -1;

  // Interval evaluation with √p enclosed in [s, s + 1] / 2^N.
  for (unsigned n = 64;; n *= 2) {
    const Integer scale = Integer(1) << n;
    Rational lo = coords_[0], hi = coords_[0];
    for (std::size_t i = 1; i < coords_.size(); ++i) {
      const Rational& c = coords_[i];
      if (c == 0) continue;
      const Integer s =
          boost::multiprecision::sqrt(Integer(surd_prime(i - 1)) << (2 * n));
      const Rational low(s, scale), high(Integer(s + 1), scale);
      if (c > 0) {
        lo += c * low;
        hi += c * high;
      } else {
        lo += c * high;
        hi += c * low;
      }
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
}

std::strong_ordering operator<=>(const ExactReal& a, const ExactReal& b) {
  const int s = (a - b).sign();
  return s < 0   ? std::strong_ordering::less
         : s > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

std::strong_ordering exact_cmp(const ExactReal& x, const ExactReal& y) {
  return x <=> y;
}

std::string ExactReal::to_string() const {
  if (coords_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Rational& c = coords_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational a = negative ? Rational(-c) : c;
    std::string term;
    if (i == 0) {
      term = format_rational(a);
    } else {
      term = a == 1 ? "" : format_rational(a);
      term += "r" + std::to_string(surd_prime(i - 1));
    }
    if (negative)
      out += "-";
    else if (!out.empty())
      out += "+";
    out += term;
  }
  return out;
}

ExactReal ExactReal::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(msg, 1, pos + 1);
  };
  auto digits = [&]() -> std::optional<Integer> {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) return std::nullopt;
    return Integer(std::string(text.substr(start, pos - start)));
  };

  ExactReal result;
  bool first = true;
  skip();
  if (pos == text.size()) throw fail("empty number");
  while (pos < text.size()) {
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      skip();
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;

    Rational coeff = 1;
    bool have_coeff = false;
    if (auto num = digits()) {
      have_coeff = true;
      Integer den = 1;
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        auto d = digits();
        if (!d) throw fail("expected a denominator");
        if (*d == 0) throw fail("zero denominator");
        den = *d;
      }
      coeff = Rational(*num, den);
    }
    if (pos < text.size() && text[pos] == '*') ++pos;
    if (pos < text.size() && text[pos] == 'r') {
      ++pos;
      const std::size_t at = pos;
      auto p = digits();
      if (!p) throw fail("expected a prime after 'r'");
      std::size_t index = surd_basis_size();
      for (std::size_t i = 0; i < surd_basis_size(); ++i)
        if (Integer(surd_prime(i)) == *p) index = i;
      if (index == surd_basis_size()) {
        pos = at;
        throw fail("r" + p->str() + " is not in the surd basis");
      }
      result += ExactReal::surd(index, negative ? Rational(-coeff) : coeff);
    } else {
      if (!have_coeff) throw fail("expected a number");
      result += ExactReal(negative ? Rational(-coeff) : coeff);
    }
    skip();
  }
  return result;
}

std::size_t rational_rank(std::span<const ExactReal> values) {
  std::size_t width = 0;
  for (const auto& v : values) width = std::max(width, v.dimension());
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : values) {
    std::vector<Rational> row(width);
    for (std::size_t j = 0; j < width; ++j) row[j] = v.coord(j);
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t j = col; j < width; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace dendric

#include "garside/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>

#include "garside/error.hpp"
#include "garside/modular.hpp"

namespace garside {

namespace modular {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

const std::vector<std::uint64_t>& large_primes(std::size_t count) {
  static std::mutex mu;
  static std::vector<std::uint64_t> primes;
  std::lock_guard<std::mutex> lock(mu);
  std::uint64_t candidate = primes.empty() ? (1ull << 61) - 1 : primes.back() - 2;
  while (primes.size() < count) {
    if (is_prime(candidate)) primes.push_back(candidate);
    candidate -= 2;
  }
  return primes;
}

}  // namespace modular

LaurentPoly::LaurentPoly(BigInt c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

LaurentPoly LaurentPoly::monomial(BigInt c, int exponent) {
  LaurentPoly p(std::move(c));
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

BigInt LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

BigInt LaurentPoly::abs_sum() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += abs(c);
  return s;
}

bool LaurentPoly::is_unit_monomial() const {
  return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(high(), o.high());
  std::vector<BigInt> sum(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) sum[i + static_cast<std::size_t>(low_ - lo)] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) sum[i + static_cast<std::size_t>(o.low_ - lo)] += o.coeffs_[i];
  low_ = lo;
  coeffs_ = std::move(sum);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPoly r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

std::uint64_t LaurentPoly::eval_mod(std::uint64_t point, std::uint64_t point_inv, std::uint64_t prime) const {
  if (is_zero()) return 0;
  std::uint64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    BigInt c = *it % prime;
    if (c < 0) c += prime;
    acc = modular::add(modular::mul(acc, point, prime), c.convert_to<std::uint64_t>(), prime);
  }
  std::uint64_t shift = low_ >= 0 ? modular::pow(point, static_cast<std::uint64_t>(low_), prime)
                                  : modular::pow(point_inv, static_cast<std::uint64_t>(-low_), prime);
  return modular::mul(acc, shift, prime);
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int e = high(); e >= low_; --e) {
    BigInt c = coeff(e);
    if (c == 0) continue;
    bool negative = c < 0;
    BigInt mag = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (e == 0) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str();
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) fail(ErrorKind::Parse, "empty Laurent polynomial");
  LaurentPoly result;
  std::size_t i = 0;
  auto read_int = [&](std::size_t& k) -> std::string {
    std::size_t start = k;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    return s.substr(start, k - start);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail(ErrorKind::Parse, "expected '+' or '-' in '" + s + "'");
    }
    std::string digits = read_int(i);
    BigInt c = digits.empty() ? BigInt(1) : BigInt(digits);
    int exponent = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int esign = 1;
        if (i < s.size() && s[i] == '-') {
          esign = -1;
          ++i;
        }
        std::string e = read_int(i);
        if (e.empty()) fail(ErrorKind::Parse, "missing exponent in '" + s + "'");
        exponent = esign * std::stoi(e);
      }
    } else if (digits.empty()) {
      fail(ErrorKind::Parse, "malformed term in '" + s + "'");
    }
    result += monomial(sign * c, exponent);
  }
  return result;
}

LaurentMatrix::LaurentMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

LaurentMatrix LaurentMatrix::identity(std::size_t dim) {
  LaurentMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = LaurentPoly(1);
  return m;
}

LaurentMatrix LaurentMatrix::parse(std::string_view text) {
  std::vector<std::vector<LaurentPoly>> rows;
  std::size_t start = 0;
  std::string t(text);
  while (start <= t.size()) {
    std::size_t end = t.find(';', start);
    if (end == std::string::npos) end = t.size();
    std::string row = t.substr(start, end - start);
    std::vector<LaurentPoly> entries;
    std::size_t rs = 0;
    while (rs <= row.size()) {
      std::size_t re = row.find(',', rs);
      if (re == std::string::npos) re = row.size();
      entries.push_back(LaurentPoly::parse(row.substr(rs, re - rs)));
      rs = re + 1;
    }
    rows.push_back(std::move(entries));
    start = end + 1;
  }
  LaurentMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) fail(ErrorKind::Parse, "matrix is not square: '" + t + "'");
    for (std::size_t c = 0; c < rows.size(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

namespace {

LaurentPoly det_of(const std::vector<LaurentPoly>& e, std::size_t n) {
  if (n == 1) return e[0];
  if (n == 2) return e[0] * e[3] - e[1] * e[2];
  LaurentPoly total;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<LaurentPoly> minor;
    minor.reserve((n - 1) * (n - 1));
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) minor.push_back(e[r * n + c]);
      }
    }
    LaurentPoly term = e[col] * det_of(minor, n - 1);
    if (col % 2) total -= term;
    else total += term;
  }
  return total;
}

}  // namespace

LaurentPoly LaurentMatrix::determinant() const {
  if (dim_ == 0) return LaurentPoly(1);
  return det_of(entries_, dim_);
}

LaurentMatrix LaurentMatrix::inverse() const {
  LaurentPoly det = determinant();
  if (!det.is_unit_monomial()) {
    fail(ErrorKind::NonInvertibleGenerator, "determinant " + det.to_string() + " is not a unit monomial");
  }
  // det = c·t^k with c = ±1, so det^{-1} = c·t^{-k}.
  LaurentPoly det_inv = LaurentPoly::monomial(det.coeff(det.low()), -det.low());
  LaurentMatrix inv(dim_);
  if (dim_ == 1) {
    inv.at(0, 0) = det_inv;
    return inv;
  }
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      std::vector<LaurentPoly> minor;
      for (std::size_t i = 0; i < dim_; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
          if (j != c) minor.push_back(at(i, j));
        }
      }
      LaurentPoly cof = det_of(minor, dim_ - 1);
      if ((r + c) % 2) cof = -cof;
      inv.at(c, r) = cof * det_inv;  // adjugate is the transposed cofactor matrix
    }
  }
  return inv;
}

int LaurentMatrix::min_exponent() const {
  int lo = 0;
  bool any = false;
  for (const auto& e : entries_) {
    if (e.is_zero()) continue;
    lo = any ? std::min(lo, e.low()) : e.low();
    any = true;
  }
  return lo;
}

int LaurentMatrix::max_exponent() const {
  int hi = 0;
  bool any = false;
  for (const auto& e : entries_) {
    if (e.is_zero()) continue;
    hi = any ? std::max(hi, e.high()) : e.high();
    any = true;
  }
  return hi;
}

BigInt LaurentMatrix::row_abs_sum() const {
  BigInt best = 0;
  for (std::size_t r = 0; r < dim_; ++r) {
    BigInt s = 0;
    for (std::size_t c = 0; c < dim_; ++c) s += at(r, c).abs_sum();
    best = std::max(best, s);
  }
  return best;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.dim_ != b.dim_) fail(ErrorKind::Internal, "matrix dimension mismatch");
  LaurentMatrix r(a.dim_);
  for (std::size_t i = 0; i < a.dim_; ++i) {
    for (std::size_t k = 0; k < a.dim_; ++k) {
      const LaurentPoly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < a.dim_; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  }
  return r;
}

std::string LaurentMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < dim_; ++r) {
    if (r) out += "; ";
    for (std::size_t c = 0; c < dim_; ++c) {
      if (c) out += ", ";
      out += at(r, c).to_string();
    }
  }
  return out;
}

}  // namespace garside

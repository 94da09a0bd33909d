#include "transfinite/bijections.hpp"

#include <cmath>

#include "transfinite/errors.hpp"

namespace transfinite {

BigNat cantor_pair(const BigNat& p, const BigNat& q) {
  BigNat s = p + q;
  return (s * (s + BigNat(1))) / BigNat(2) + q;
}

uint64_t cantor_pair(uint64_t p, uint64_t q) {
  uint64_t s = p + q;
  return (s % 2 == 0 ? (s / 2) * (s + 1) : s * ((s + 1) / 2)) + q;
}

std::pair<BigNat, BigNat> cantor_unpair(const BigNat& n) {
  BigNat w = (isqrt(BigNat(8) * n + BigNat(1)) - BigNat(1)) / BigNat(2);
  BigNat q = n - (w * w + w) / BigNat(2);
  BigNat p = w - q;
  return {std::move(p), std::move(q)};
}

namespace {

// Floor square root on uint64, Newton iteration on integers.
uint64_t isqrt_u64(uint64_t n) {
  if (n < 4) return n > 0 ? 1 : 0;
  uint64_t x = n;
  uint64_t y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

}  // namespace

std::pair<uint64_t, uint64_t> cantor_unpair(uint64_t n) {
  uint64_t w = (isqrt_u64(8 * n + 1) - 1) / 2;
  uint64_t q = n - (w * w + w) / 2;
  uint64_t p = w - q;
  return {p, q};
}

uint64_t int_to_nat(int64_t k) {
  if (k == 0) return 0;
  if (k > 0) return 2 * static_cast<uint64_t>(k) - 1;
  return 2 * static_cast<uint64_t>(-k);
}

int64_t nat_to_int(uint64_t n) {
  if (n == 0) return 0;
  if (n % 2 == 1) return static_cast<int64_t>((n + 1) / 2);
  return -static_cast<int64_t>(n / 2);
}

std::vector<std::pair<uint64_t, uint64_t>> enumerate_rationals(uint64_t count) {
  std::vector<std::pair<uint64_t, uint64_t>> out;
  out.reserve(count);
  for (uint64_t n = 0; n < count; ++n) out.push_back(cantor_unpair(n));
  return out;
}

HotelShift hotel_shift(uint64_t rooms, HotelNewcomers newcomers) {
  HotelShift out;
  if (newcomers == HotelNewcomers::One) {
    for (uint64_t g = 0; g < rooms; ++g) {
      out.moves.push_back({"guest " + std::to_string(g), g + 1});
    }
    if (rooms > 0) out.moves.push_back({"newcomer", 0});
    return out;
  }
  for (uint64_t n = 0; n < rooms; ++n) {
    out.moves.push_back({"old guest " + std::to_string(n), 2 * n});
    out.moves.push_back({"new guest " + std::to_string(n), 2 * n + 1});
  }
  return out;
}

double tan_bijection(double x) {
  if (!(x > 0.0) || !(x < 1.0)) {
    throw DomainError("tan bijection is defined on (0, 1)");
  }
  return std::tan(M_PI / 2.0 * (2.0 * x - 1.0));
}

DigitMatrix DigitMatrix::from_text(std::string_view text) {
  DigitMatrix m;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) m.rows.emplace_back(line);
    pos = nl + 1;
  }
  return m;
}

std::string diagonalize_digits(const DigitMatrix& m) {
  std::string out;
  out.reserve(m.rows.size());
  for (size_t k = 0; k < m.rows.size(); ++k) {
    const std::string& row = m.rows[k];
    if (row.size() <= k) {
      throw MalformedMatrix("row " + std::to_string(k) + " has only " +
                            std::to_string(row.size()) + " digits, needs " +
                            std::to_string(k + 1));
    }
    char d = row[k];
    if (d < '0' || d > '9') {
      throw MalformedMatrix("row " + std::to_string(k) + " holds a non-digit");
    }
    out.push_back(d == '9' ? '0' : static_cast<char>(d + 1));
  }
  return out;
}

SubsetTable SubsetTable::from_text(std::string_view text) {
  SubsetTable t;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      std::vector<bool> row;
      row.reserve(line.size());
      for (char c : line) {
        if (c == 'Y' || c == 'y') {
          row.push_back(true);
        } else if (c == 'N' || c == 'n') {
          row.push_back(false);
        } else {
          throw MalformedTable("subset tables hold only Y and N characters");
        }
      }
      t.rows.push_back(std::move(row));
    }
    pos = nl + 1;
  }
  return t;
}

std::vector<bool> diagonalize_subsets(const SubsetTable& t) {
  std::vector<bool> out;
  out.reserve(t.rows.size());
  for (size_t k = 0; k < t.rows.size(); ++k) {
    if (t.rows[k].size() <= k) {
      throw MalformedTable("row " + std::to_string(k) + " is shorter than the diagonal");
    }
    out.push_back(!t.rows[k][k]);
  }
  return out;
}

std::string interleave(std::string_view x_digits, std::string_view y_digits) {
  if (x_digits.size() != y_digits.size()) {
    throw LengthMismatch("interleave requires equal-length digit strings");
  }
  std::string out;
  out.reserve(2 * x_digits.size());
  for (size_t i = 0; i < x_digits.size(); ++i) {
    out.push_back(x_digits[i]);
    out.push_back(y_digits[i]);
  }
  return out;
}

std::pair<std::string, std::string> deinterleave(std::string_view r) {
  if (r.size() % 2 != 0) {
    throw LengthMismatch("deinterleave requires an even-length string");
  }
  std::string x, y;
  x.reserve(r.size() / 2);
  y.reserve(r.size() / 2);
  for (size_t i = 0; i < r.size(); i += 2) {
    x.push_back(r[i]);
    y.push_back(r[i + 1]);
  }
  return {std::move(x), std::move(y)};
}

std::vector<std::vector<std::string>> power_set(const std::vector<std::string>& elements,
                                                uint64_t max_size_guard) {
  if (elements.size() > max_size_guard) {
    throw TooLarge("power set of " + std::to_string(elements.size()) +
                   " elements exceeds the guard of " + std::to_string(max_size_guard));
  }
  std::vector<std::vector<std::string>> out;
  uint64_t total = uint64_t{1} << elements.size();
  out.reserve(total);
  for (uint64_t mask = 0; mask < total; ++mask) {
    std::vector<std::string> subset;
    for (size_t i = 0; i < elements.size(); ++i) {
      if (mask & (uint64_t{1} << i)) subset.push_back(elements[i]);
    }
    out.push_back(std::move(subset));
  }
  return out;
}

}  // namespace transfinite

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "transfinite/bignat.hpp"

namespace transfinite {

/// n = (p+q)(p+q+1)/2 + q, the diagonal-tracing bijection N x N -> N.
BigNat cantor_pair(const BigNat& p, const BigNat& q);
uint64_t cantor_pair(uint64_t p, uint64_t q);

/// Inverse of cantor_pair via w = floor((sqrt(8n+1)-1)/2), computed with
/// exact integer square roots only.
std::pair<BigNat, BigNat> cantor_unpair(const BigNat& n);
std::pair<uint64_t, uint64_t> cantor_unpair(uint64_t n);

/// 0 -> 0, k > 0 -> 2k-1, k < 0 -> -2k.
uint64_t int_to_nat(int64_t k);
int64_t nat_to_int(uint64_t n);

/// First `count` p/q pairs in pairing order, duplicates and zero
/// denominators included.
std::vector<std::pair<uint64_t, uint64_t>> enumerate_rationals(uint64_t count);

enum class HotelNewcomers { One, Omega };

struct HotelShift {
  struct Move {
    std::string guest;
    uint64_t room;
  };
  std::vector<Move> moves;
};

/// Room assignment observed through a finite window: one newcomer shifts
/// every guest up a room; omega newcomers send old guests to even rooms
/// and new guests to odd rooms.
HotelShift hotel_shift(uint64_t rooms, HotelNewcomers newcomers);

/// y(x) = tan(pi/2 * (2x-1)), strictly increasing from (0,1) onto R.
/// Throws DomainError at x <= 0 or x >= 1.
double tan_bijection(double x);

/// Finite prefix of an enumerated list of decimal expansions; row k must
/// carry at least k+1 digits.
struct DigitMatrix {
  std::vector<std::string> rows;
  static DigitMatrix from_text(std::string_view text);  // one row per line
};

/// Digit string that differs from row k at position k: digit k is
/// d_kk + 1, wrapping 9 to 0. Throws MalformedMatrix on short or
/// non-digit rows.
std::string diagonalize_digits(const DigitMatrix& m);

/// Y/N subset-membership table, square up to the diagonal.
struct SubsetTable {
  std::vector<std::vector<bool>> rows;
  static SubsetTable from_text(std::string_view text);  // lines of Y/N
};

/// Complements the diagonal, producing a row different from every listed
/// one. Throws MalformedTable on short rows.
std::vector<bool> diagonalize_subsets(const SubsetTable& t);

/// r = a1 b1 a2 b2 ...; inputs must have equal length.
std::string interleave(std::string_view x_digits, std::string_view y_digits);
/// Splits an even-length string back into the two digit streams.
std::pair<std::string, std::string> deinterleave(std::string_view r);

/// All 2^n subsets in binary-counting order (empty set first, full set
/// last). Throws TooLarge past the guard.
std::vector<std::vector<std::string>> power_set(const std::vector<std::string>& elements,
                                                uint64_t max_size_guard = 20);

}  // namespace transfinite

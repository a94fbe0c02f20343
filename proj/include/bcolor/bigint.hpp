#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bcolor {

// Sign-magnitude arbitrary-precision integer, base 2^64.
// Only the operations the counting code needs: add/sub, multiply by a
// machine word, comparison, decimal printing.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);
    static BigInt from_u64(std::uint64_t v);
    static BigInt from_u128(unsigned __int128 v, bool negative = false);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }

    BigInt& operator+=(const BigInt& other);
    BigInt& operator-=(const BigInt& other);
    BigInt operator+(const BigInt& other) const;
    BigInt operator-(const BigInt& other) const;
    BigInt& mul_u64(std::uint64_t m);

    bool operator==(const BigInt& other) const;
    bool operator!=(const BigInt& other) const { return !(*this == other); }
    bool operator<(const BigInt& other) const;

    // -1, 0, +1
    int sign() const;

    std::string to_string() const;

    // Fits in uint64_t (non-negative, single limb)?
    bool fits_u64() const { return !negative_ && limbs_.size() <= 1; }
    std::uint64_t as_u64() const { return limbs_.empty() ? 0 : limbs_[0]; }

private:
    bool negative_ = false;              // never set when limbs_ is empty
    std::vector<std::uint64_t> limbs_;   // little-endian, no trailing zeros

    void trim();
    static int cmp_magnitude(const std::vector<std::uint64_t>& a,
                             const std::vector<std::uint64_t>& b);
    static void add_magnitude(std::vector<std::uint64_t>& a,
                              const std::vector<std::uint64_t>& b);
    // pre: |a| >= |b|
    static void sub_magnitude(std::vector<std::uint64_t>& a,
                              const std::vector<std::uint64_t>& b);
};

}  // namespace bcolor

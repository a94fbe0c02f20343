#include "bcolor/bigint.hpp"

#include <algorithm>

namespace bcolor {

BigInt::BigInt(std::int64_t v) {
    if (v == 0) return;
    negative_ = v < 0;
    std::uint64_t mag = negative_ ? ~static_cast<std::uint64_t>(v) + 1
                                  : static_cast<std::uint64_t>(v);
    limbs_.push_back(mag);
}

BigInt BigInt::from_u64(std::uint64_t v) {
    BigInt r;
    if (v != 0) r.limbs_.push_back(v);
    return r;
}

BigInt BigInt::from_u128(unsigned __int128 v, bool negative) {
    BigInt r;
    while (v != 0) {
        r.limbs_.push_back(static_cast<std::uint64_t>(v));
        v >>= 64;
    }
    r.negative_ = negative && !r.limbs_.empty();
    return r;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_magnitude(const std::vector<std::uint64_t>& a,
                          const std::vector<std::uint64_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

void BigInt::add_magnitude(std::vector<std::uint64_t>& a,
                           const std::vector<std::uint64_t>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    unsigned __int128 carry = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        unsigned __int128 s = carry + a[i] + (i < b.size() ? b[i] : 0);
        a[i] = static_cast<std::uint64_t>(s);
        carry = s >> 64;
    }
    if (carry) a.push_back(static_cast<std::uint64_t>(carry));
}

void BigInt::sub_magnitude(std::vector<std::uint64_t>& a,
                           const std::vector<std::uint64_t>& b) {
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t bi = i < b.size() ? b[i] : 0;
        std::uint64_t ai = a[i];
        std::uint64_t r = ai - bi - borrow;
        borrow = (ai < bi + (unsigned __int128)borrow) ? 1 : 0;
        a[i] = r;
    }
}

BigInt& BigInt::operator+=(const BigInt& other) {
    if (other.is_zero()) return *this;
    if (is_zero()) { *this = other; return *this; }
    if (negative_ == other.negative_) {
        add_magnitude(limbs_, other.limbs_);
        return *this;
    }
    int c = cmp_magnitude(limbs_, other.limbs_);
    if (c == 0) { limbs_.clear(); negative_ = false; return *this; }
    if (c > 0) {
        sub_magnitude(limbs_, other.limbs_);
    } else {
        std::vector<std::uint64_t> tmp = other.limbs_;
        sub_magnitude(tmp, limbs_);
        limbs_ = std::move(tmp);
        negative_ = other.negative_;
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& other) {
    BigInt neg = other;
    if (!neg.is_zero()) neg.negative_ = !neg.negative_;
    return *this += neg;
}

BigInt BigInt::operator+(const BigInt& other) const {
    BigInt r = *this;
    r += other;
    return r;
}

BigInt BigInt::operator-(const BigInt& other) const {
    BigInt r = *this;
    r -= other;
    return r;
}

BigInt& BigInt::mul_u64(std::uint64_t m) {
    if (m == 0 || is_zero()) { limbs_.clear(); negative_ = false; return *this; }
    unsigned __int128 carry = 0;
    for (auto& limb : limbs_) {
        unsigned __int128 p = (unsigned __int128)limb * m + carry;
        limb = static_cast<std::uint64_t>(p);
        carry = p >> 64;
    }
    if (carry) limbs_.push_back(static_cast<std::uint64_t>(carry));
    return *this;
}

bool BigInt::operator==(const BigInt& other) const {
    return negative_ == other.negative_ && limbs_ == other.limbs_;
}

bool BigInt::operator<(const BigInt& other) const {
    if (negative_ != other.negative_) return negative_;
    int c = cmp_magnitude(limbs_, other.limbs_);
    return negative_ ? c > 0 : c < 0;
}

int BigInt::sign() const {
    if (limbs_.empty()) return 0;
    return negative_ ? -1 : 1;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    // Repeated division by 10^19 (largest power of ten in a u64).
    constexpr std::uint64_t kChunk = 10000000000000000000ull;
    std::vector<std::uint64_t> mag = limbs_;
    std::string out;
    while (!mag.empty()) {
        unsigned __int128 rem = 0;
        for (std::size_t i = mag.size(); i-- > 0;) {
            unsigned __int128 cur = (rem << 64) | mag[i];
            mag[i] = static_cast<std::uint64_t>(cur / kChunk);
            rem = cur % kChunk;
        }
        while (!mag.empty() && mag.back() == 0) mag.pop_back();
        std::uint64_t digits = static_cast<std::uint64_t>(rem);
        for (int d = 0; d < 19; ++d) {
            out.push_back(static_cast<char>('0' + digits % 10));
            digits /= 10;
        }
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    if (negative_) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace bcolor

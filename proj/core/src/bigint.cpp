#include "primword/bigint.hpp"

#include <algorithm>
#include <cctype>

#include "primword/errors.hpp"

namespace primword {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(std::int64_t v) {
    negative_ = v < 0;
    // avoid overflow on INT64_MIN
    std::uint64_t mag = negative_ ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    while (mag != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
        mag >>= 32;
    }
    if (limbs_.empty()) negative_ = false;
}

BigInt::BigInt(std::uint64_t v) {
    while (v != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
        v >>= 32;
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::compare_magnitude(const std::vector<std::uint32_t>& a,
                              const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

void BigInt::add_magnitude(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t sum = carry + a[i] + (i < b.size() ? b[i] : 0);
        a[i] = static_cast<std::uint32_t>(sum & 0xffffffffu);
        carry = sum >> 32;
    }
    if (carry != 0) a.push_back(static_cast<std::uint32_t>(carry));
}

void BigInt::sub_magnitude(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow -
                            (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (diff < 0) {
            diff += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        a[i] = static_cast<std::uint32_t>(diff);
    }
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (negative_ == rhs.negative_) {
        add_magnitude(limbs_, rhs.limbs_);
    } else {
        int cmp = compare_magnitude(limbs_, rhs.limbs_);
        if (cmp >= 0) {
            sub_magnitude(limbs_, rhs.limbs_);
        } else {
            std::vector<std::uint32_t> tmp = rhs.limbs_;
            sub_magnitude(tmp, limbs_);
            limbs_ = std::move(tmp);
            negative_ = rhs.negative_;
        }
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
    BigInt neg = rhs;
    if (!neg.is_zero()) neg.negative_ = !neg.negative_;
    return *this += neg;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
    if (is_zero() || rhs.is_zero()) {
        limbs_.clear();
        negative_ = false;
        return *this;
    }
    std::vector<std::uint32_t> out(limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = limbs_[i];
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            std::uint64_t cur = out[i + j] + ai * rhs.limbs_[j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + rhs.limbs_.size();
        while (carry != 0) {
            std::uint64_t cur = out[k] + carry;
            out[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    limbs_ = std::move(out);
    negative_ = negative_ != rhs.negative_;
    trim();
    return *this;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.is_zero()) r.negative_ = !r.negative_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.negative_ = false;
    return r;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.negative_ != b.negative_)
        return a.negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int cmp = BigInt::compare_magnitude(a.limbs_, b.limbs_);
    if (a.negative_) cmp = -cmp;
    if (cmp < 0) return std::strong_ordering::less;
    if (cmp > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint32_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 32;
    while (top != 0) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

BigInt BigInt::pow(std::uint64_t base, std::uint64_t exponent) {
    BigInt result(std::uint64_t{1});
    BigInt b(base);
    while (exponent != 0) {
        if (exponent & 1) result *= b;
        exponent >>= 1;
        if (exponent != 0) b *= b;
    }
    return result;
}

DivmodResult BigInt::divmod(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    DivmodResult res;
    int cmp = compare_magnitude(a.limbs_, b.limbs_);
    if (cmp < 0) {
        res.remainder = a;
        return res;
    }
    // restoring binary long division on magnitudes
    std::size_t nbits = a.bit_length();
    std::vector<std::uint32_t> quot((a.limbs_.size()), 0);
    std::vector<std::uint32_t> rem;
    rem.reserve(b.limbs_.size() + 1);
    for (std::size_t i = nbits; i-- > 0;) {
        // rem = rem * 2 + bit_i(a)
        std::uint32_t carry = (a.limbs_[i / 32] >> (i % 32)) & 1u;
        for (std::size_t j = 0; j < rem.size(); ++j) {
            std::uint32_t next = rem[j] >> 31;
            rem[j] = (rem[j] << 1) | carry;
            carry = next;
        }
        if (carry != 0) rem.push_back(carry);
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (compare_magnitude(rem, b.limbs_) >= 0) {
            sub_magnitude(rem, b.limbs_);
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
            quot[i / 32] |= 1u << (i % 32);
        }
    }
    res.quotient.limbs_ = std::move(quot);
    res.quotient.negative_ = a.negative_ != b.negative_;
    res.quotient.trim();
    res.remainder.limbs_ = std::move(rem);
    res.remainder.negative_ = a.negative_;
    res.remainder.trim();
    return res;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> work = limbs_;
    std::string digits;
    while (!work.empty()) {
        // divide magnitude by 1e9, collecting the remainder
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        for (int d = 0; d < 9; ++d) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (negative_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt BigInt::from_string(std::string_view s) {
    bool neg = false;
    std::size_t pos = 0;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        neg = s[pos] == '-';
        ++pos;
    }
    if (pos >= s.size()) throw DomainError("empty integer literal");
    BigInt result;
    BigInt ten(std::uint64_t{10});
    for (; pos < s.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(s[pos])))
            throw DomainError("bad digit in integer literal");
        result *= ten;
        result += BigInt(static_cast<std::uint64_t>(s[pos] - '0'));
    }
    if (neg && !result.is_zero()) result.negative_ = true;
    return result;
}

std::uint64_t BigInt::to_uint64() const {
    if (negative_) throw DomainError("negative value does not fit uint64");
    if (limbs_.size() > 2) throw DomainError("value does not fit uint64");
    std::uint64_t v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
    return v;
}

std::string render_ratio(const BigInt& num, const BigInt& den, int significant) {
    if (den.sign() <= 0) throw DomainError("ratio denominator must be positive");
    if (num.is_negative()) throw DomainError("ratio numerator must be nonnegative");
    if (significant < 1) significant = 1;
    if (num.is_zero()) return "0";

    // leading_zeros = number of zeros between the point and the first
    // significant digit (only when num < den)
    int leading_zeros = 0;
    int int_digits = 0;
    if (num >= den) {
        int_digits = static_cast<int>(BigInt::divmod(num, den).quotient.to_string().size());
    } else {
        BigInt scaled = num;
        BigInt ten(std::uint64_t{10});
        scaled *= ten;
        while (scaled < den) {
            scaled *= ten;
            ++leading_zeros;
        }
    }

    int frac = int_digits > 0 ? std::max(0, significant - int_digits) : leading_zeros + significant;
    BigInt scale = BigInt::pow(10, static_cast<std::uint64_t>(frac));
    // round half up: floor((num*scale*2 + den) / (2*den))
    BigInt numerator = num * scale * BigInt(std::uint64_t{2}) + den;
    BigInt rounded = BigInt::divmod(numerator, den * BigInt(std::uint64_t{2})).quotient;
    std::string digits = rounded.to_string();

    // rounding may add one digit (9.99... -> 10.0...); drop the now-spurious
    // trailing zero to keep the significant count
    int expected = int_digits > 0 ? int_digits + frac : significant;
    if (static_cast<int>(digits.size()) > expected && frac > 0 && digits.back() == '0') {
        digits.pop_back();
        --frac;
    }

    std::string out = static_cast<int>(digits.size()) > frac
                          ? digits.substr(0, digits.size() - frac)
                          : std::string("0");
    if (frac > 0) {
        out.push_back('.');
        if (digits.size() >= static_cast<std::size_t>(frac))
            out += digits.substr(digits.size() - frac);
        else
            out += std::string(frac - digits.size(), '0') + digits;
    }
    return out;
}

}  // namespace primword

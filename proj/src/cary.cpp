#include "disckit/cary.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>

namespace disckit {

CaryValue::CaryValue(int base, std::vector<int> digits) : base_(base), digits_(std::move(digits)) {
    if (base_ < 2) throw InputError("base must be at least 2");
    if (digits_.empty()) digits_.push_back(0);
    while (digits_.size() > 1 && digits_.back() == 0) digits_.pop_back();
    for (int d : digits_)
        if (d < 0 || d >= base_) throw InputError("digit out of range for base");
    if (digits_[0] > 1) throw InputError("value exceeds 1");
    if (digits_[0] == 1 && digits_.size() > 1) throw InputError("value exceeds 1");
}

std::optional<CaryValue> CaryValue::from_rational(const Rational& r, int base) {
    if (base < 2) throw InputError("base must be at least 2");
    if (r < 0 || r > 1) throw InputError("value outside [0,1]");
    // Finite expansion iff the reduced denominator divides some power of the
    // base, i.e. stripping gcd factors repeatedly reaches 1.
    Int q = denom(r);
    while (true) {
        Int g = boost::multiprecision::gcd(q, Int(base));
        if (g == 1) break;
        q /= g;
    }
    if (q != 1) return std::nullopt;

    std::vector<int> digits;
    digits.push_back(r == 1 ? 1 : 0);
    Rational frac = r - digits[0];
    while (frac != 0) {
        frac *= base;
        Int d = rat_floor(frac);
        digits.push_back(static_cast<int>(d));
        frac -= Rational(d);
    }
    return CaryValue(base, std::move(digits));
}

int CaryValue::digit(int k) const {
    if (k < 0) throw InputError("negative digit position");
    if (k >= static_cast<int>(digits_.size())) return 0;
    return digits_[k];
}

Rational CaryValue::value() const {
    // Horner from the least significant digit.
    Rational acc = 0;
    for (int k = static_cast<int>(digits_.size()) - 1; k >= 1; --k)
        acc = (acc + digits_[k]) / base_;
    return acc + digits_[0];
}

CaryValue CaryValue::truncate(int k) const {
    if (k < 0) throw InputError("negative truncation depth");
    if (k >= length()) return *this;
    std::vector<int> digits(digits_.begin(), digits_.begin() + k + 1);
    return CaryValue(base_, std::move(digits));
}

CaryValue::Increment CaryValue::add_power(int k) const {
    if (k < 1) throw InputError("increment position must be at least 1");
    if (value() + Rational(1, int_pow(base_, static_cast<unsigned>(k))) > 1)
        throw InputError("increment overflows past 1");
    std::vector<int> digits = digits_;
    if (static_cast<int>(digits.size()) < k + 1) digits.resize(k + 1, 0);
    int pos = k;
    int run = 0;
    while (digits[pos] == base_ - 1) {
        digits[pos] = 0;
        ++run;
        --pos;
    }
    digits[pos] += 1;
    return Increment{CaryValue(base_, std::move(digits)), run};
}

CaryValue CaryValue::nearest_expansion(const Rational& z, int base, int max_len) {
    if (base < 2) throw InputError("base must be at least 2");
    if (max_len < 0) throw InputError("negative expansion length");
    if (z < 0 || z > 1) throw InputError("value outside [0,1]");
    Int scale = int_pow(base, static_cast<unsigned>(max_len));
    Rational t = z * scale;
    Int k = rat_floor(t);
    if (t - k > Rational(1, 2)) ++k;  // exact half rounds down (smaller value)
    auto out = from_rational(Rational(k, scale), base);
    return *out;
}

std::string CaryValue::str() const {
    std::string out = std::to_string(digits_[0]);
    if (digits_.size() > 1) {
        out += ';';
        for (std::size_t k = 1; k < digits_.size(); ++k) {
            if (base_ > 10 && k > 1) out += ',';
            out += std::to_string(digits_[k]);
        }
    }
    out += " (base " + std::to_string(base_) + ")";
    return out;
}

CaryValue CaryValue::parse(const std::string& text) {
    auto mark = text.rfind(" (base ");
    if (mark == std::string::npos || text.back() != ')')
        throw InputError("missing '(base c)' suffix: '" + text + "'");
    std::string base_str = text.substr(mark + 7, text.size() - mark - 8);
    std::string body = text.substr(0, mark);
    int base;
    try {
        base = std::stoi(base_str);
    } catch (const std::exception&) {
        throw InputError("bad base: '" + text + "'");
    }
    std::vector<int> digits;
    auto semi = body.find(';');
    std::string head = body.substr(0, semi == std::string::npos ? body.size() : semi);
    if (head.empty() || head.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("bad integer digit: '" + text + "'");
    digits.push_back(std::stoi(head));
    if (semi != std::string::npos) {
        std::string tail = body.substr(semi + 1);
        if (tail.empty()) throw InputError("empty fractional digits: '" + text + "'");
        if (base > 10) {
            std::size_t pos = 0;
            while (pos <= tail.size()) {
                auto comma = tail.find(',', pos);
                std::string piece = tail.substr(pos, comma == std::string::npos ? tail.size() - pos
                                                                                : comma - pos);
                if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
                    throw InputError("bad digit: '" + text + "'");
                digits.push_back(std::stoi(piece));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        } else {
            for (char ch : tail) {
                if (!std::isdigit(static_cast<unsigned char>(ch)))
                    throw InputError("bad digit: '" + text + "'");
                digits.push_back(ch - '0');
            }
        }
    }
    CaryValue out(base, digits);
    // Reject non-canonical spellings so parse∘str is the identity.
    std::vector<int> canon;
    for (int k = 0; k <= out.length(); ++k) canon.push_back(out.digit(k));
    if (canon != digits) throw InputError("non-canonical digits: '" + text + "'");
    return out;
}

bool CaryValue::operator<(const CaryValue& other) const {
    if (base_ != other.base_) throw InputError("comparing different bases");
    int top = std::max(length(), other.length());
    for (int k = 0; k <= top; ++k) {
        if (digit(k) != other.digit(k)) return digit(k) < other.digit(k);
    }
    return false;
}

}  // namespace disckit

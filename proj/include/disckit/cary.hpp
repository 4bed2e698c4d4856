#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "rational.hpp"

namespace disckit {

//! A number in [0,1] held as its finite base-c expansion a_0 + Σ_k a_k c^{-k}.
//! Always canonical: shortest digit list (no trailing zero beyond a_0), with
//! a_0 ∈ {0,1} and a_0 = 1 forcing every other digit to 0. Canonical form
//! makes the expansion unique, so digit positions, lengths, and carry runs
//! are well-defined observables rather than representation accidents.
class CaryValue {
  public:
    //! Canonicalizes and validates raw digits (most significant first).
    CaryValue(int base, std::vector<int> digits);

    //! Exact conversion; nullopt when r has no finite base-c expansion
    //! (its reduced denominator has a prime factor not dividing the base).
    static std::optional<CaryValue> from_rational(const Rational& r, int base);

    int base() const { return base_; }
    //! Expansion length: index of the last stored digit (0 for 0 and 1).
    int length() const { return static_cast<int>(digits_.size()) - 1; }
    //! Digit a_k; 0 for positions beyond the stored length.
    int digit(int k) const;
    Rational value() const;

    //! Drops digits beyond position k (k >= 0) and recanonicalizes.
    //! k >= length leaves the value unchanged.
    CaryValue truncate(int k) const;

    struct Increment;  // defined below; needs the completed class
    //! Adds base^{-k} (k >= 1) with full carry propagation.
    //! Requires value + base^{-k} <= 1; anything larger is an input error.
    Increment add_power(int k) const;

    //! The multiple of base^{-max_len} in [0,1] nearest to z, ties broken
    //! toward the smaller value; |result - z| <= base^{-max_len}/2.
    static CaryValue nearest_expansion(const Rational& z, int base, int max_len);

    //! "a0;a1a2…aL (base c)"; just "a0 (base c)" when the length is 0.
    //! Digits are comma-separated instead when the base exceeds 10.
    std::string str() const;
    //! Parses the rendering above.
    static CaryValue parse(const std::string& text);

    bool operator==(const CaryValue& other) const {
        return base_ == other.base_ && digits_ == other.digits_;
    }
    //! Numeric order; digit-lexicographic comparison agrees with it because
    //! both sides are canonical expansions in the same base.
    bool operator<(const CaryValue& other) const;

  private:
    int base_ = 2;
    std::vector<int> digits_;  // a_0..a_len, canonical
};

struct CaryValue::Increment {
    CaryValue result;
    int carry_run;  // number of (base-1) digits consumed by the carry
};

}  // namespace disckit

#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace infchess {

// Ordinals below w^w in Cantor normal form: sum of w^exp * coeff with
// strictly decreasing exponents and coefficients >= 1. Empty term list is 0.
class Ordinal {
public:
    struct Term {
        uint64_t exp;
        uint64_t coeff;
        bool operator==(const Term&) const = default;
    };

    Ordinal() = default;
    explicit Ordinal(uint64_t n);                     // finite ordinal
    static Ordinal omega_pow(uint64_t e);             // w^e
    static Ordinal single(uint64_t exp, uint64_t coeff);
    static Ordinal from_terms(std::vector<Term> terms); // validates canonical form

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_finite() const;
    uint64_t finite_value() const;                    // throws unless finite
    bool is_limit() const;                            // limit ordinal (> 0, no finite part)

    std::strong_ordering operator<=>(const Ordinal& o) const;
    bool operator==(const Ordinal&) const = default;

    friend Ordinal add(const Ordinal& x, const Ordinal& y);
    friend Ordinal succ(const Ordinal& x);
    friend Ordinal nat_mul(const Ordinal& x, uint64_t k);

    std::string str() const;
    static Ordinal parse(const std::string& text);

private:
    std::vector<Term> terms_;
};

Ordinal add(const Ordinal& x, const Ordinal& y);
Ordinal succ(const Ordinal& x);
Ordinal nat_mul(const Ordinal& x, uint64_t k);

// Coefficient affine in a single parameter n >= 1: a*n + b with a+b >= 1.
struct AffineCoeff {
    uint64_t a = 0;
    uint64_t b = 0;
    uint64_t eval(uint64_t n) const { return a * n + b; }
    bool operator==(const AffineCoeff&) const = default;
};

// CNF-shaped value formula over one parameter: sum of w^exp * (a*n + b),
// strictly decreasing exponents. Evaluates to a valid Ordinal for any n >= 1.
class FamilyValueFormula {
public:
    struct Term {
        uint64_t exp;
        AffineCoeff coeff;
        bool operator==(const Term&) const = default;
    };

    FamilyValueFormula() = default;
    static FamilyValueFormula from_terms(std::vector<Term> terms);
    static FamilyValueFormula constant(const Ordinal& x);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_strictly_increasing() const;              // some a > 0

    Ordinal eval(uint64_t n) const;                   // n >= 1
    Ordinal sup() const;                              // least upper bound over n >= 1

    // Formula + 1 (bumps / creates the exponent-0 constant part).
    FamilyValueFormula plus_one() const;

    std::string str() const;
    static FamilyValueFormula parse(const std::string& text);

    bool operator==(const FamilyValueFormula&) const = default;

private:
    std::vector<Term> terms_;
};

Ordinal eval_formula(const FamilyValueFormula& f, uint64_t n);
Ordinal sup_family(const FamilyValueFormula& f);

struct OrdinalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace infchess

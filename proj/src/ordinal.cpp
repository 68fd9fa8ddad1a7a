#include "infchess/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace infchess {

namespace {

void check_canonical(const std::vector<Ordinal::Term>& ts) {
    for (size_t i = 0; i < ts.size(); ++i) {
        if (ts[i].coeff == 0)
            throw OrdinalError("zero coefficient in CNF term");
        if (i > 0 && ts[i - 1].exp <= ts[i].exp)
            throw OrdinalError("CNF exponents not strictly decreasing");
    }
}

} // namespace

Ordinal::Ordinal(uint64_t n) {
    if (n > 0) terms_.push_back({0, n});
}

Ordinal Ordinal::omega_pow(uint64_t e) {
    return single(e, 1);
}

Ordinal Ordinal::single(uint64_t exp, uint64_t coeff) {
    Ordinal o;
    if (coeff > 0) o.terms_.push_back({exp, coeff});
    return o;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
    check_canonical(terms);
    Ordinal o;
    o.terms_ = std::move(terms);
    return o;
}

bool Ordinal::is_finite() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0);
}

uint64_t Ordinal::finite_value() const {
    if (terms_.empty()) return 0;
    if (!is_finite()) throw OrdinalError("ordinal is not finite: " + str());
    return terms_[0].coeff;
}

bool Ordinal::is_limit() const {
    return !terms_.empty() && terms_.back().exp > 0;
}

std::strong_ordering Ordinal::operator<=>(const Ordinal& o) const {
    size_t n = std::min(terms_.size(), o.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        if (auto c = terms_[i].exp <=> o.terms_[i].exp; c != 0) return c;
        if (auto c = terms_[i].coeff <=> o.terms_[i].coeff; c != 0) return c;
    }
    return terms_.size() <=> o.terms_.size();
}

Ordinal add(const Ordinal& x, const Ordinal& y) {
    if (y.is_zero()) return x;
    uint64_t lead = y.terms_[0].exp;
    Ordinal r;
    // keep the terms of x with exponent > lead; a term of x equal to lead
    // merges coefficients; everything below is absorbed by y.
    for (const auto& t : x.terms_) {
        if (t.exp > lead) {
            r.terms_.push_back(t);
        } else if (t.exp == lead) {
            break;
        } else {
            break;
        }
    }
    std::vector<Ordinal::Term> ytail = y.terms_;
    for (const auto& t : x.terms_) {
        if (t.exp == lead) ytail[0].coeff += t.coeff;
    }
    for (const auto& t : ytail) r.terms_.push_back(t);
    check_canonical(r.terms_);
    return r;
}

Ordinal succ(const Ordinal& x) {
    return add(x, Ordinal(1));
}

Ordinal nat_mul(const Ordinal& x, uint64_t k) {
    if (k == 0 || x.is_zero()) return Ordinal();
    // (w^e*c + tail) * k = w^e*(c*k) + tail for k >= 1.
    Ordinal r = x;
    r.terms_[0].coeff = x.terms_[0].coeff * k;
    return r;
}

std::string Ordinal::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) out << " + ";
        first = false;
        if (t.exp == 0) {
            out << t.coeff;
        } else {
            if (t.exp == 1)
                out << "w";
            else
                out << "w^" << t.exp;
            if (t.coeff != 1) out << "*" << t.coeff;
        }
    }
    return out.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    bool peek_digit() {
        skip_ws();
        return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
    }
    uint64_t number() {
        skip_ws();
        if (!peek_digit()) throw OrdinalError("expected number in ordinal at offset " + std::to_string(i));
        uint64_t v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            ++i;
        }
        return v;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
};

} // namespace

Ordinal Ordinal::parse(const std::string& text) {
    Cursor c{text};
    std::vector<Term> terms;
    if (c.eat('0') && c.done()) return Ordinal();
    c.i = 0;
    for (;;) {
        c.skip_ws();
        Term t{0, 1};
        if (c.i < text.size() && text[c.i] == 'w') {
            ++c.i;
            t.exp = c.eat('^') ? c.number() : 1;
            if (c.eat('*'))
                t.coeff = c.number();
            else
                t.coeff = 1;
        } else {
            t.exp = 0;
            t.coeff = c.number();
        }
        terms.push_back(t);
        if (!c.eat('+')) break;
    }
    if (!c.done()) throw OrdinalError("trailing characters in ordinal: " + text);
    return from_terms(std::move(terms));
}

FamilyValueFormula FamilyValueFormula::from_terms(std::vector<Term> terms) {
    for (size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].coeff.a + terms[i].coeff.b == 0)
            throw OrdinalError("formula term with zero coefficient");
        if (i > 0 && terms[i - 1].exp <= terms[i].exp)
            throw OrdinalError("formula exponents not strictly decreasing");
    }
    FamilyValueFormula f;
    f.terms_ = std::move(terms);
    return f;
}

FamilyValueFormula FamilyValueFormula::constant(const Ordinal& x) {
    std::vector<Term> ts;
    for (const auto& t : x.terms()) ts.push_back({t.exp, {0, t.coeff}});
    return from_terms(std::move(ts));
}

bool FamilyValueFormula::is_strictly_increasing() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.coeff.a > 0; });
}

Ordinal FamilyValueFormula::eval(uint64_t n) const {
    if (n < 1) throw OrdinalError("formula parameter must be >= 1");
    std::vector<Ordinal::Term> ts;
    for (const auto& t : terms_) {
        uint64_t c = t.coeff.eval(n);
        if (c > 0) ts.push_back({t.exp, c});
    }
    return Ordinal::from_terms(std::move(ts));
}

Ordinal FamilyValueFormula::sup() const {
    if (!is_strictly_increasing()) return eval(1);
    // Largest exponent whose coefficient depends on n; everything above it is
    // constant, everything at or below it is dominated by w^(e+1).
    uint64_t estar = 0;
    for (const auto& t : terms_)
        if (t.coeff.a > 0) { estar = t.exp; break; }
    std::vector<Ordinal::Term> prefix;
    for (const auto& t : terms_) {
        if (t.exp > estar) {
            if (t.coeff.a > 0)
                throw OrdinalError("n-dependent term above the leading n-dependent exponent");
            prefix.push_back({t.exp, t.coeff.b});
        }
    }
    return add(Ordinal::from_terms(std::move(prefix)), Ordinal::omega_pow(estar + 1));
}

FamilyValueFormula FamilyValueFormula::plus_one() const {
    std::vector<Term> ts = terms_;
    if (!ts.empty() && ts.back().exp == 0)
        ts.back().coeff.b += 1;
    else
        ts.push_back({0, {0, 1}});
    return from_terms(std::move(ts));
}

std::string FamilyValueFormula::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) out << " + ";
        first = false;
        std::ostringstream coeff;
        if (t.coeff.a == 0) {
            coeff << t.coeff.b;
        } else {
            if (t.coeff.a != 1) coeff << t.coeff.a;
            coeff << "n";
            if (t.coeff.b != 0) coeff << "+" << t.coeff.b;
        }
        if (t.exp == 0) {
            out << coeff.str();
        } else {
            if (t.exp == 1)
                out << "w";
            else
                out << "w^" << t.exp;
            if (!(t.coeff.a == 0 && t.coeff.b == 1)) out << "*(" << coeff.str() << ")";
        }
    }
    return out.str();
}

namespace {

AffineCoeff parse_affine(Cursor& c) {
    AffineCoeff r;
    c.skip_ws();
    uint64_t lead = 1;
    bool have_lead = false;
    if (c.peek_digit()) {
        lead = c.number();
        have_lead = true;
    }
    c.skip_ws();
    if (c.i < c.s.size() && c.s[c.i] == 'n') {
        ++c.i;
        r.a = lead;
        size_t save = c.i;
        if (c.eat('+')) {
            if (c.peek_digit())
                r.b = c.number();
            else
                c.i = save; // the '+' belongs to the term list
        }
    } else {
        if (!have_lead) throw OrdinalError("expected affine coefficient");
        r.b = lead;
    }
    return r;
}

} // namespace

FamilyValueFormula FamilyValueFormula::parse(const std::string& text) {
    Cursor c{text};
    if (c.eat('0') && c.done()) return FamilyValueFormula();
    c.i = 0;
    std::vector<Term> terms;
    for (;;) {
        c.skip_ws();
        Term t{0, {0, 0}};
        if (c.i < text.size() && text[c.i] == 'w') {
            ++c.i;
            t.exp = c.eat('^') ? c.number() : 1;
            if (c.eat('*')) {
                if (c.eat('(')) {
                    t.coeff = parse_affine(c);
                    if (!c.eat(')')) throw OrdinalError("expected ')' in formula");
                } else {
                    t.coeff = parse_affine(c);
                }
            } else {
                t.coeff = {0, 1};
            }
        } else {
            t.exp = 0;
            if (c.eat('(')) {
                t.coeff = parse_affine(c);
                if (!c.eat(')')) throw OrdinalError("expected ')' in formula");
            } else {
                t.coeff = parse_affine(c);
            }
        }
        terms.push_back(t);
        if (!c.eat('+')) break;
    }
    if (!c.done()) throw OrdinalError("trailing characters in formula: " + text);
    return from_terms(std::move(terms));
}

Ordinal eval_formula(const FamilyValueFormula& f, uint64_t n) { return f.eval(n); }
Ordinal sup_family(const FamilyValueFormula& f) { return f.sup(); }

} // namespace infchess

#include "cantor/rational.hpp"

#include <string>

#include "cantor/errors.hpp"

namespace cantor {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        if (s.empty()) throw DomainError("malformed rational '" + std::string(text) + "'");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw DomainError("malformed rational '" + std::string(text) + "'");
        for (std::size_t j = i; j < s.size(); ++j) {
            if (s[j] < '0' || s[j] > '9') throw DomainError("malformed rational '" + std::string(text) + "'");
        }
        return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::to_decimal(int significant) const {
    if (is_zero()) return "0";
    mpq_class a = ::abs(q_);

    // Find e with 10^e <= a < 10^(e+1).
    long e = static_cast<long>(a.get_num().get_str().size()) - static_cast<long>(a.get_den().get_str().size());
    auto pow10 = [](long k) {
        mpz_class out;
        mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(k));
        return mpq_class(out);
    };
    auto scaled = [&](long k) { return k >= 0 ? mpq_class(pow10(k)) : mpq_class(1) / pow10(-k); };
    while (a < scaled(e)) --e;
    while (a >= scaled(e + 1)) ++e;

    // digits = round_half_even(a * 10^(significant-1-e))
    mpq_class m = a / scaled(e - (significant - 1));
    mpz_class fl = m.get_num() / m.get_den();
    mpq_class frac = m - fl;
    int c = cmp(frac, mpq_class(1, 2));
    if (c > 0 || (c == 0 && mpz_odd_p(fl.get_mpz_t()))) fl += 1;
    std::string digits = fl.get_str();
    if (static_cast<int>(digits.size()) > significant) {  // rounded up to 10^significant
        ++e;
        digits.pop_back();
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

    std::string out = sgn(q_) < 0 ? "-" : "";
    if (e < -5 || e >= significant) {
        out += digits.substr(0, 1);
        if (digits.size() > 1) out += "." + digits.substr(1);
        std::string ex = std::to_string(e < 0 ? -e : e);
        if (ex.size() < 2) ex = "0" + ex;
        out += (e < 0 ? "e-" : "e+") + ex;
    } else if (e < 0) {
        out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
    } else {
        auto whole = static_cast<std::size_t>(e + 1);
        if (digits.size() <= whole) {
            out += digits + std::string(whole - digits.size(), '0');
        } else {
            out += digits.substr(0, whole) + "." + digits.substr(whole);
        }
    }
    return out;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

BigInt ipow(unsigned long base, unsigned long exp) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
    return out;
}

Rational pow(const Rational& base, long exp) {
    BigInt num, den;
    auto e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), e);
    return exp < 0 ? Rational(den, num) : Rational(num, den);
}

BigInt floor(const Rational& x) {
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
    return out;
}

BigInt ceil(const Rational& x) {
    BigInt out;
    mpz_cdiv_q(out.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
    return out;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace cantor

#include "polycauchy/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace polycauchy {

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    // Grammar: '-'? digits ('/' digits)?
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && rest.front() == '-') {
        negative = true;
        rest.remove_prefix(1);
    }
    std::string_view num_part = rest;
    std::string_view den_part;
    bool has_den = false;
    if (const auto slash = rest.find('/'); slash != std::string_view::npos) {
        num_part = rest.substr(0, slash);
        den_part = rest.substr(slash + 1);
        has_den = true;
    }
    if (!all_digits(num_part) || (has_den && !all_digits(den_part))) {
        throw std::invalid_argument("Rational: cannot parse \"" + std::string(text) + "\"");
    }
    BigInt num{std::string(num_part)};
    BigInt den = has_den ? BigInt{std::string(den_part)} : BigInt(1);
    if (den == 0) {
        throw std::invalid_argument("Rational: zero denominator in \"" + std::string(text) + "\"");
    }
    if (negative) num = -num;
    return Rational(num, den);
}

std::string Rational::str() const {
    std::ostringstream os;
    os << q_;
    return os.str();
}

Rational pow(const Rational& base, unsigned long exp) {
    const BigInt bn = base.numerator();
    const BigInt bd = base.denominator();
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), bn.get_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), bd.get_mpz_t(), exp);
    // powers of a canonical pair stay coprime with positive denominator
    return Rational(mpq_class(num, den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.q_; }

}  // namespace polycauchy

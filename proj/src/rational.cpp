#include "dsm/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace dsm {

mpz_class Rational::mpz_from(long long value) {
    // mpz_class has no long long constructor on LP64 this matters only in
    // principle; go through the decimal string to stay portable.
    if (value >= std::numeric_limits<long>::min() && value <= std::numeric_limits<long>::max()) {
        return mpz_class(static_cast<long>(value));
    }
    return mpz_class(std::to_string(value));
}

Rational::Rational(long long numerator, long long denominator) {
    if (denominator == 0) {
        throw std::domain_error("rational: zero denominator");
    }
    value_ = mpq_class(mpz_from(numerator), mpz_from(denominator));
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("rational: division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    std::string s(text.substr(begin, end - begin));
    if (s.empty()) {
        throw std::invalid_argument("rational: empty text");
    }

    const auto is_digits = [](std::string_view v) {
        if (v.empty()) return false;
        for (char c : v) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        }
        return true;
    };

    std::string_view sv(s);
    std::string_view num = sv, den = "1";
    if (auto slash = sv.find('/'); slash != std::string_view::npos) {
        num = sv.substr(0, slash);
        den = sv.substr(slash + 1);
    }
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits[0] == '-' || num_digits[0] == '+')) {
        num_digits.remove_prefix(1);
    }
    if (!is_digits(num_digits) || !is_digits(den)) {
        throw std::invalid_argument("rational: malformed value '" + s + "'");
    }

    std::string num_text = (!num.empty() && num[0] == '-') ? "-" + std::string(num_digits)
                                                           : std::string(num_digits);
    mpq_class q{mpz_class(num_text), mpz_class(std::string(den))};
    if (q.get_den() == 0) {
        throw std::invalid_argument("rational: zero denominator in '" + s + "'");
    }
    q.canonicalize();
    return Rational(std::move(q));
}

bool Rational::fits_int64() const {
    if (!is_integer()) return false;
    // long is 64-bit on the platforms we build for; fits_slong_p is exact.
    return value_.get_num().fits_slong_p();
}

long long Rational::as_int64() const {
    if (!fits_int64()) {
        throw std::domain_error("rational: value does not fit in int64");
    }
    return value_.get_num().get_si();
}

std::string Rational::str() const {
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace dsm

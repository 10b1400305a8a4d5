#include <fresco/errors.hpp>
#include <fresco/rational.hpp>

#include <cctype>

namespace fresco
{

const char *error_kind_name(ErrorKind kind)
{
    switch (kind) {
        case ErrorKind::GuardExhausted:
            return "GuardExhausted";
        case ErrorKind::RankUnstable:
            return "RankUnstable";
        case ErrorKind::NotHomogeneous:
            return "NotHomogeneous";
        case ErrorKind::NotMonic:
            return "NotMonic";
        case ErrorKind::NonUnitSeries:
            return "NonUnitSeries";
        case ErrorKind::NotNormal:
            return "NotNormal";
        case ErrorKind::IndexOutOfRange:
            return "IndexOutOfRange";
        case ErrorKind::SearchFailed:
            return "SearchFailed";
        case ErrorKind::EmptyKernel:
            return "EmptyKernel";
        case ErrorKind::NoRoot:
            return "NoRoot";
        case ErrorKind::SearchExhausted:
            return "SearchExhausted";
        case ErrorKind::WitnessNotFound:
            return "WitnessNotFound";
        case ErrorKind::NoAlphaPart:
            return "NoAlphaPart";
        case ErrorKind::RegistryMismatch:
            return "RegistryMismatch";
        case ErrorKind::InvalidInput:
            return "InvalidInput";
    }
    return "Unknown";
}

namespace
{

bool is_integer_literal(const std::string &s)
{
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        ++i;
    }
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(const std::string &text)
{
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
        throw Error(ErrorKind::InvalidInput, "malformed rational '" + text + "'");
    }
    Integer n(num[0] == '+' ? num.substr(1) : num, 10);
    Integer d(den, 10);
    if (d == 0) {
        throw Error(ErrorKind::InvalidInput, "zero denominator in '" + text + "'");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational &q)
{
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational exponent_class_of(const Rational &q)
{
    // floor division on the numerator
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    Rational r = q - Rational(fl);
    if (r == 0) {
        r = 1;
    }
    return r;
}

} // namespace fresco

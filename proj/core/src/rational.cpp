#include "mukai/rational.hpp"

#include "mukai/error.hpp"

#include <cctype>

namespace mukai {

Rational make_rational(long long num, long long den) {
    if (den == 0) throw DomainError(errkind::invalid_argument, "zero denominator");
    Rational q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

namespace {

bool digits_only(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

bool valid_signed_int(const std::string& s, std::size_t from, std::size_t to) {
    if (from < to && (s[from] == '-' || s[from] == '+')) ++from;
    return digits_only(s, from, to);
}

} // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    bool ok = false;
    if (slash == std::string::npos) {
        ok = valid_signed_int(text, 0, text.size());
    } else {
        ok = valid_signed_int(text, 0, slash) && digits_only(text, slash + 1, text.size());
    }
    if (!ok) throw DomainError(errkind::parse_error, "not a rational: '" + text + "'");
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw DomainError(errkind::parse_error, "not a rational: '" + text + "'");
    if (q.get_den() == 0)
        throw DomainError(errkind::parse_error, "zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string fraction_str(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long long to_integer(const Rational& q) {
    if (!is_integer(q)) throw DomainError(errkind::non_integral_input, fraction_str(q));
    if (!q.get_num().fits_slong_p())
        throw DomainError(errkind::invalid_argument, "integer out of range: " + fraction_str(q));
    return q.get_num().get_si();
}

long long floor_to_int(const Rational& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    if (!f.fits_slong_p())
        throw DomainError(errkind::invalid_argument, "floor out of range: " + fraction_str(q));
    return f.get_si();
}

std::string decimal6(const Rational& q) {
    const bool neg = sgn(q) < 0;
    mpq_class abs_q = abs(q);
    // round(|q| * 10^6) half away from zero, exactly
    mpz_class scaled_num = abs_q.get_num() * 1000000;
    mpz_class twice = 2 * scaled_num + abs_q.get_den();
    mpz_class units;
    mpz_fdiv_q(units.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * abs_q.get_den()).get_mpz_t());
    mpz_class whole = units / 1000000;
    mpz_class frac = units % 1000000;
    std::string fs = frac.get_str();
    fs.insert(fs.begin(), 6 - fs.size(), '0');
    std::string out = (neg && (whole != 0 || frac != 0)) ? "-" : "";
    out += whole.get_str() + "." + fs;
    return out;
}

} // namespace mukai

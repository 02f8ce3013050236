#include "kato/exact_complex.hpp"

#include <cctype>
#include <sstream>

namespace kato {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw InputError("empty rational literal");
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw InputError("bad character in rational literal '" + s + "'");
    }
    auto slash = s.find('/');
    if (slash != std::string::npos && s.find('/', slash + 1) != std::string::npos)
        throw InputError("bad rational literal '" + s + "'");
    try {
        Rational r(s);
        if (r.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw InputError("bad rational literal '" + s + "'");
    }
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    if (r.get_den() == 1)
        os << r.get_num();
    else
        os << r;
    return os.str();
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    if (r == 0) return Rational(0);
    const Integer& num = r.get_num();
    const Integer& den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    Rational out(sn, sd);
    out.canonicalize();
    return out;
}

ExactComplex ExactComplex::inverse() const {
    if (isZero()) throw MathError("division by zero in ExactComplex");
    Rational n = norm2();
    return ExactComplex(re_ / n, -im_ / n);
}

std::optional<ExactComplex> ExactComplex::sqrtInField() const {
    // x + y*i with x^2 - y^2 = re, 2xy = im. Solvable in Q(i) iff
    // norm = sqrt(re^2 + im^2) is rational and (re + norm)/2 is a rational
    // square (or, when im = 0 and re < 0, -re is a rational square).
    if (isZero()) return ExactComplex();
    if (im_ == 0) {
        if (auto x = rational_sqrt(re_)) return ExactComplex(*x);
        if (auto y = rational_sqrt(-re_)) return ExactComplex(Rational(0), *y);
        return std::nullopt;
    }
    auto n = rational_sqrt(norm2());
    if (!n) return std::nullopt;
    auto x = rational_sqrt((re_ + *n) / 2);
    if (!x || *x == 0) return std::nullopt;
    Rational y = im_ / (2 * *x);
    ExactComplex root(*x, y);
    if (root * root == *this) return root;
    return std::nullopt;
}

std::string ExactComplex::str() const {
    if (isZero()) return "0";
    std::string out;
    if (re_ != 0) out += rational_to_string(re_);
    if (im_ != 0) {
        if (im_ > 0 && !out.empty()) out += "+";
        out += rational_to_string(im_) + "*i";
    }
    return out;
}

namespace {

// Splits "a+b*i"-style strings at the top-level sign that separates real and
// imaginary parts. Sign characters at position 0 or right after '/' digits
// belong to the numerators.
size_t find_split(const std::string& s) {
    for (size_t p = 1; p < s.size(); ++p) {
        if ((s[p] == '+' || s[p] == '-') && s[p - 1] != '/' && s[p - 1] != '+' && s[p - 1] != '-')
            return p;
    }
    return std::string::npos;
}

}  // namespace

ExactComplex ExactComplex::parse(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw InputError("empty coefficient literal");

    auto parse_part = [](std::string part, bool* imag) -> Rational {
        *imag = false;
        if (part.size() >= 2 && part.compare(part.size() - 2, 2, "*i") == 0) {
            *imag = true;
            part.erase(part.size() - 2);
        } else if (!part.empty() && part.back() == 'i') {
            *imag = true;
            part.pop_back();
            if (part.empty() || part == "+") part = "1";
            else if (part == "-") part = "-1";
        }
        return parse_rational(part);
    };

    size_t split = find_split(s);
    if (split == std::string::npos) {
        bool imag = false;
        Rational r = parse_part(s, &imag);
        return imag ? ExactComplex(Rational(0), r) : ExactComplex(r);
    }
    bool imag1 = false, imag2 = false;
    Rational first = parse_part(s.substr(0, split), &imag1);
    std::string rest = s.substr(split);
    if (rest[0] == '+') rest.erase(0, 1);
    Rational second = parse_part(rest, &imag2);
    if (imag1 == imag2) throw InputError("bad complex literal '" + raw + "'");
    if (imag1) return ExactComplex(second, first);
    return ExactComplex(first, second);
}

std::ostream& operator<<(std::ostream& os, const ExactComplex& z) { return os << z.str(); }

}  // namespace kato

#include "sasaki/gaussian.hpp"

#include <cctype>
#include <stdexcept>

namespace sasaki {

Gaussian& Gaussian::operator*=(const Gaussian& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
    if (o.is_zero()) throw std::domain_error("Gaussian division by zero");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        if (sgn(im_) != 0) im_ /= o.re_;
        return *this;
    }
    const Rational n = o.norm2();
    Rational re = (re_ * o.re_ + im_ * o.im_) / n;
    Rational im = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

void Gaussian::add_product(const Gaussian& a, const Gaussian& b) {
    const bool ar = sgn(a.im_) == 0;
    const bool br = sgn(b.im_) == 0;
    if (ar && br) {
        re_ += a.re_ * b.re_;
        return;
    }
    if (ar) {
        re_ += a.re_ * b.re_;
        im_ += a.re_ * b.im_;
        return;
    }
    if (br) {
        re_ += a.re_ * b.re_;
        im_ += a.im_ * b.re_;
        return;
    }
    re_ += a.re_ * b.re_ - a.im_ * b.im_;
    im_ += a.re_ * b.im_ + a.im_ * b.re_;
}

std::string Gaussian::to_string() const {
    if (sgn(im_) == 0) return re_.get_str();
    return re_.get_str() + "+" + im_.get_str() + "*i";
}

std::ostream& operator<<(std::ostream& os, const Gaussian& z) { return os << z.to_string(); }

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (n.front() == '+') n.erase(0, 1);
    Rational q;
    q.get_num() = mpz_class(n, 10);
    q.get_den() = mpz_class(std::string(den), 10);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

Gaussian Gaussian::parse(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) throw std::invalid_argument("empty scalar");
    if (s.size() >= 2 && s.substr(s.size() - 2) == "*i") {
        const std::string_view body = s.substr(0, s.size() - 2);
        // The separator is the last '+' that is not a leading sign and does not
        // follow a '/' (denominators are unsigned).
        std::size_t sep = std::string_view::npos;
        for (std::size_t k = body.size(); k-- > 1;) {
            if (body[k] == '+' && body[k - 1] != '/') {
                sep = k;
                break;
            }
        }
        if (sep == std::string_view::npos) return {Rational(0), parse_rational(body)};
        return {parse_rational(body.substr(0, sep)), parse_rational(body.substr(sep + 1))};
    }
    return {parse_rational(s)};
}

}  // namespace sasaki

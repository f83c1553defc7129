#include <vertexkernel/rational.hpp>

#include <stdexcept>

namespace vk
{

Rational binom_general(std::int64_t m, std::int64_t j)
{
    if (j < 0) {
        throw std::invalid_argument("binom_general: negative lower index");
    }
    mpz_class num = 1;
    for (std::int64_t i = 0; i < j; ++i) {
        num *= mpz_class(static_cast<long>(m - i));
        if (num == 0) {
            return Rational(0);
        }
    }
    Rational out(num, mpz_class(1));
    out /= factorial(j);
    out.canonicalize();
    return out;
}

Rational factorial(std::int64_t n)
{
    mpz_class f = 1;
    for (std::int64_t i = 2; i <= n; ++i) {
        f *= static_cast<unsigned long>(i);
    }
    return Rational(f);
}

Rational inverse_factorial(std::int64_t n)
{
    Rational out(mpz_class(1), factorial(n).get_num());
    out.canonicalize();
    return out;
}

std::string to_string(const Rational &q)
{
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
            s.remove_prefix(1);
        }
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
            s.remove_suffix(1);
        }
        return s;
    };
    text = trim(text);
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) {
            s.remove_prefix(1);
        }
        if (s.empty()) {
            return false;
        }
        for (char ch : s) {
            if (ch < '0' || ch > '9') {
                return false;
            }
        }
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    std::string num_s(num);
    if (!num_s.empty() && num_s.front() == '+') {
        num_s.erase(0, 1);
    }
    mpz_class n(num_s), d{std::string(den)};
    if (d == 0) {
        throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
    }
    Rational out(n, d);
    out.canonicalize();
    return out;
}

} // namespace vk

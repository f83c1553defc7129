// Sparse linear combinations over an ordered basis.

#ifndef VERTEXKERNEL_LINCOMB_HPP
#define VERTEXKERNEL_LINCOMB_HPP

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include <vertexkernel/rational.hpp>

namespace vk
{

// Invariant: no stored coefficient is zero. Iteration follows the key order,
// which makes printing and hashing canonical.
template <typename K>
class LinComb
{
public:
    using key_type = K;
    using map_type = std::map<K, Rational>;
    using const_iterator = typename map_type::const_iterator;

    LinComb() = default;

    static LinComb term(K key, Rational coeff = 1)
    {
        LinComb out;
        out.add(std::move(key), coeff);
        return out;
    }

    void add(const K &key, const Rational &coeff)
    {
        if (sgn(coeff) == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (sgn(it->second) == 0) {
                terms_.erase(it);
            }
        }
    }

    void add(K &&key, const Rational &coeff)
    {
        if (sgn(coeff) == 0) {
            return;
        }
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), coeff);
            return;
        }
        it->second += coeff;
        if (sgn(it->second) == 0) {
            terms_.erase(it);
        }
    }

    /// this += s * other
    void add_scaled(const LinComb &other, const Rational &s)
    {
        if (sgn(s) == 0) {
            return;
        }
        for (const auto &[k, c] : other.terms_) {
            add(k, c * s);
        }
    }

    LinComb &operator+=(const LinComb &other)
    {
        for (const auto &[k, c] : other.terms_) {
            add(k, c);
        }
        return *this;
    }

    LinComb &operator-=(const LinComb &other)
    {
        for (const auto &[k, c] : other.terms_) {
            add(k, -c);
        }
        return *this;
    }

    LinComb &operator*=(const Rational &s)
    {
        if (sgn(s) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto &kv : terms_) {
            kv.second *= s;
        }
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb &b)
    {
        a += b;
        return a;
    }
    friend LinComb operator-(LinComb a, const LinComb &b)
    {
        a -= b;
        return a;
    }
    friend LinComb operator-(LinComb a)
    {
        a *= Rational(-1);
        return a;
    }
    friend LinComb operator*(const Rational &s, LinComb a)
    {
        a *= s;
        return a;
    }

    friend bool operator==(const LinComb &a, const LinComb &b)
    {
        return a.terms_ == b.terms_;
    }

    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] const_iterator begin() const noexcept { return terms_.begin(); }
    [[nodiscard]] const_iterator end() const noexcept { return terms_.end(); }
    [[nodiscard]] const map_type &terms() const noexcept { return terms_; }

    [[nodiscard]] Rational coeff(const K &key) const
    {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Apply a linear map given on basis keys.
    template <typename F>
    auto apply(F &&f) const -> decltype(f(std::declval<const K &>()))
    {
        decltype(f(std::declval<const K &>())) out;
        for (const auto &[k, c] : terms_) {
            out.add_scaled(f(k), c);
        }
        return out;
    }

private:
    map_type terms_;
};

/// a + s*b
template <typename K>
LinComb<K> combine(const LinComb<K> &a, const LinComb<K> &b, const Rational &s)
{
    LinComb<K> out = a;
    out.add_scaled(b, s);
    return out;
}

template <typename K, typename M>
LinComb<std::pair<K, M>> tensor(const LinComb<K> &a, const LinComb<M> &b)
{
    LinComb<std::pair<K, M>> out;
    for (const auto &[ka, ca] : a) {
        for (const auto &[kb, cb] : b) {
            out.add(std::pair<K, M>(ka, kb), ca * cb);
        }
    }
    return out;
}

/// Generic printer: "c1·k1 + c2·k2", unit coefficients elided, "0" when empty.
template <typename K, typename KeyFmt>
std::string format_lincomb(const LinComb<K> &v, KeyFmt &&key_fmt)
{
    if (v.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[k, c] : v) {
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) {
                os << "-";
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        std::string body = key_fmt(k);
        if (mag != 1 || body.empty()) {
            os << to_string(mag);
            if (!body.empty()) {
                os << "·";
            }
        }
        os << body;
        first = false;
    }
    return os.str();
}

} // namespace vk

#endif

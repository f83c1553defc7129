#include "text_util.hpp"

#include <cctype>

namespace vk::detail
{

std::string trim(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return std::string(s.substr(b, e - b));
}

std::string strip_spaces(std::string_view s)
{
    std::string out;
    for (char ch : s) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            out.push_back(ch);
        }
    }
    return out;
}

std::vector<std::pair<int, std::string>> split_terms(std::string_view text)
{
    std::vector<std::pair<int, std::string>> out;
    int sign = 1;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(' || ch == '[' || ch == '{') {
            ++depth;
        } else if (ch == ')' || ch == ']' || ch == '}') {
            --depth;
        }
        if (depth == 0 && (ch == '+' || ch == '-')) {
            std::string t = trim(cur);
            if (!t.empty()) {
                out.emplace_back(sign, t);
                cur.clear();
                sign = ch == '-' ? -1 : 1;
            } else if (ch == '-') {
                sign = -sign;
            }
            continue;
        }
        cur.push_back(ch);
    }
    std::string t = trim(cur);
    if (!t.empty()) {
        out.emplace_back(sign, t);
    }
    return out;
}

std::pair<std::string, std::string> split_coefficient(const std::string &term)
{
    auto dot = term.find("·");
    std::size_t len = std::string("·").size();
    if (dot == std::string::npos) {
        dot = term.find('*');
        len = 1;
    }
    if (dot == std::string::npos) {
        return {"", trim(term)};
    }
    return {trim(term.substr(0, dot)), trim(term.substr(dot + len))};
}

} // namespace vk::detail

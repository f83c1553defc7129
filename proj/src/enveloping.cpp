#include <vertexkernel/enveloping.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "text_util.hpp"

namespace vk
{

namespace
{

std::size_t hash_mode(const Mode &m)
{
    std::size_t h = std::hash<int>{}(m.n);
    hash_combine(h, m.gen);
    hash_combine(h, m.torsion ? 1u : 0u);
    return h;
}

const State &zero_state()
{
    static const State zero;
    return zero;
}

} // namespace

std::size_t WordHash::operator()(const PbwWord &w) const noexcept
{
    std::size_t h = w.size();
    for (const auto &m : w) {
        hash_combine(h, hash_mode(m));
    }
    return h;
}

std::size_t EnvelopingAlgebra::ActHash::operator()(const ActKey &k) const noexcept
{
    std::size_t h = hash_mode(k.x);
    hash_combine(h, WordHash{}(k.w));
    return h;
}

std::size_t EnvelopingAlgebra::ModeHash::operator()(const ModeKey &k) const noexcept
{
    std::size_t h = WordHash{}(k.u);
    hash_combine(h, std::hash<int>{}(k.n));
    hash_combine(h, WordHash{}(k.v));
    return h;
}

EnvelopingAlgebra::EnvelopingAlgebra(VlaPresentation p) : p_(std::move(p)) {}

State EnvelopingAlgebra::generator_state(GenId g) const
{
    return State::term({make_mode(p_, g, -1)});
}

State EnvelopingAlgebra::from_vla(const VlaElement &u) const
{
    State out;
    for (const auto &[mode, c] : mode_normalize(p_, u, -1)) {
        out.add(PbwWord{mode}, c);
    }
    return out;
}

int EnvelopingAlgebra::word_weight(const PbwWord &w) const
{
    int total = 0;
    for (const auto &m : w) {
        total += mode_weight(p_, m);
    }
    return total;
}

std::optional<int> EnvelopingAlgebra::weight(const State &v) const
{
    std::optional<int> w;
    for (const auto &[word, c] : v) {
        int ww = word_weight(word);
        if (w && *w != ww) {
            return std::nullopt;
        }
        w = ww;
    }
    return w;
}

int EnvelopingAlgebra::max_weight(const State &v) const
{
    int w = 0;
    for (const auto &[word, c] : v) {
        w = std::max(w, word_weight(word));
    }
    return w;
}

int EnvelopingAlgebra::torsion_degree(const PbwWord &w)
{
    return static_cast<int>(std::count_if(w.begin(), w.end(), [](const Mode &m) { return m.torsion; }));
}

bool EnvelopingAlgebra::is_ordered(const PbwWord &w)
{
    for (const auto &m : w) {
        if (m.n >= 0 || (m.torsion && m.n != -1)) {
            return false;
        }
    }
    return std::is_sorted(w.begin(), w.end());
}

State EnvelopingAlgebra::straighten(const std::vector<Mode> &word) const
{
    State s = vacuum();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        s = act(*it, s);
        if (s.empty()) {
            break;
        }
    }
    return s;
}

State EnvelopingAlgebra::act_left(const Mode &x, const State &v) const
{
    State out;
    for (const auto &[w, c] : v) {
        out.add_scaled(act(x, w), c);
    }
    return out;
}

const State &EnvelopingAlgebra::act(const Mode &x, const PbwWord &w) const
{
    if (x.torsion && x.n != -1) {
        return zero_state();
    }
    ActKey key{x, w};
    if (const State *hit = act_memo_.lookup(key)) {
        return *hit;
    }
    State value = compute_act(x, w);
    return act_memo_.insert(std::move(key), std::move(value));
}

State EnvelopingAlgebra::compute_act(const Mode &x, const PbwWord &w) const
{
    if (w.empty()) {
        return x.n >= 0 ? State{} : State::term({x});
    }
    const Mode &first = w.front();
    if (x.n < 0 && !(first < x)) {
        PbwWord out;
        out.reserve(w.size() + 1);
        out.push_back(x);
        out.insert(out.end(), w.begin(), w.end());
        return State::term(std::move(out));
    }
    // x first rest = first (x rest) + [x, first] rest
    PbwWord rest(w.begin() + 1, w.end());
    State out = act_left(first, act(x, rest));
    for (const auto &[m, c] : bracket(p_, x, first)) {
        out.add_scaled(act(m, rest), c);
    }
    return out;
}

State EnvelopingAlgebra::act(const Mode &x, const State &v) const
{
    return act_left(x, v);
}

State EnvelopingAlgebra::act(const ModeCombo &x, const State &v) const
{
    State out;
    for (const auto &[m, c] : x) {
        out.add_scaled(act_left(m, v), c);
    }
    return out;
}

State EnvelopingAlgebra::mode_apply(GenId g, int n, const State &v) const
{
    return act_left(make_mode(p_, g, n), v);
}

int EnvelopingAlgebra::truncation_bound(const PbwWord &u, const PbwWord &v) const
{
    auto all_torsion = [](const PbwWord &w) {
        return std::all_of(w.begin(), w.end(), [](const Mode &m) { return m.torsion; });
    };
    if (all_torsion(u) || all_torsion(v)) {
        return 0;
    }
    // u_n v has weight wt(u) + wt(v) - n - 1 and no word has negative weight.
    return word_weight(u) + word_weight(v);
}

int EnvelopingAlgebra::truncation_bound(const State &u, const State &v) const
{
    int bound = 0;
    for (const auto &[wu, cu] : u) {
        for (const auto &[wv, cv] : v) {
            bound = std::max(bound, truncation_bound(wu, wv));
        }
    }
    return bound;
}

State EnvelopingAlgebra::mode(const State &u, int n, const State &v) const
{
    State out;
    for (const auto &[wu, cu] : u) {
        for (const auto &[wv, cv] : v) {
            out.add_scaled(word_mode(wu, n, wv), cu * cv);
        }
    }
    return out;
}

State EnvelopingAlgebra::word_mode_state(const PbwWord &u, int n, const State &v) const
{
    State out;
    for (const auto &[wv, cv] : v) {
        out.add_scaled(word_mode(u, n, wv), cv);
    }
    return out;
}

const State &EnvelopingAlgebra::word_mode(const PbwWord &u, int n, const PbwWord &v) const
{
    if (n >= truncation_bound(u, v) && !(u.empty() && n == -1)) {
        return zero_state();
    }
    ModeKey key{u, n, v};
    if (const State *hit = mode_memo_.lookup(key)) {
        return *hit;
    }
    State value = compute_word_mode(u, n, v);
    return mode_memo_.insert(std::move(key), std::move(value));
}

State EnvelopingAlgebra::compute_word_mode(const PbwWord &u, int n, const PbwWord &v) const
{
    if (u.empty()) {
        return n == -1 ? State::term(v) : State{};
    }
    const Mode &a = u.front();
    const int k = -a.n - 1;
    if (u.size() == 1) {
        // a(-k-1)|0> = D^k a / k!, and (D^k a)_n = (-1)^k k! binom(n,k) a_{n-k}
        Rational coeff = binom_general(n, k) * sign_power(k);
        if (sgn(coeff) == 0) {
            return {};
        }
        State out = act(make_mode(p_, a.gen, n - k), State::term(v));
        out *= coeff;
        return out;
    }
    PbwWord rest(u.begin() + 1, u.end());
    State out;
    // a(-k-1-i) rest_{n+i} v
    const int rest_bound = truncation_bound(rest, v);
    for (int i = 0; n + i < rest_bound; ++i) {
        const State &inner = word_mode(rest, n + i, v);
        if (inner.empty()) {
            continue;
        }
        out.add_scaled(act_left(make_mode(p_, a.gen, -k - 1 - i), inner), binom_general(k + i, i));
    }
    // -(-1)^{k+1} rest_{n-k-1-i} a(i) v
    const int a_bound = truncation_bound(PbwWord{make_mode(p_, a.gen, -1)}, v);
    for (int i = 0; i < a_bound; ++i) {
        const State &av = act(make_mode(p_, a.gen, i), v);
        if (av.empty()) {
            continue;
        }
        out.add_scaled(word_mode_state(rest, n - k - 1 - i, av), binom_general(k + i, i) * sign_power(k));
    }
    return out;
}

State EnvelopingAlgebra::derivative(const State &v) const
{
    State out;
    for (const auto &[w, c] : v) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            const Mode &m = w[i];
            if (m.torsion || m.n == 0) {
                continue;
            }
            std::vector<Mode> shifted = w;
            shifted[i].n = m.n - 1;
            out.add_scaled(straighten(shifted), c * Rational(-m.n));
        }
    }
    return out;
}

std::vector<PbwWord> EnvelopingAlgebra::graded_basis(int weight, int torsion_bound) const
{
    std::vector<Mode> types;
    for (GenId g = 0; g < p_.size(); ++g) {
        const auto &spec = p_.spec(g);
        if (spec.torsion) {
            if (spec.weight <= weight) {
                types.push_back(make_mode(p_, g, -1));
            }
            continue;
        }
        if (spec.weight <= 0) {
            throw std::domain_error("graded_basis: free generator '" + spec.name + "' has weight 0");
        }
        for (int n = -1; spec.weight - n - 1 <= weight; --n) {
            types.push_back(make_mode(p_, g, n));
        }
    }
    std::sort(types.begin(), types.end());
    std::vector<PbwWord> out;
    PbwWord cur;
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t start, int remaining, int torsion_left) {
        if (remaining == 0) {
            out.push_back(cur);
        }
        for (std::size_t t = start; t < types.size(); ++t) {
            const Mode &m = types[t];
            int mw = mode_weight(p_, m);
            if (mw > remaining || (m.torsion && torsion_left == 0)) {
                continue;
            }
            if (mw == 0 && !m.torsion) {
                continue;
            }
            cur.push_back(m);
            rec(t, remaining - mw, torsion_left - (m.torsion ? 1 : 0));
            cur.pop_back();
        }
    };
    if (weight >= 0) {
        rec(0, weight, torsion_bound);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::size_t EnvelopingAlgebra::graded_dimension(int weight, int torsion_bound) const
{
    return graded_basis(weight, torsion_bound).size();
}

std::vector<PbwWord> EnvelopingAlgebra::basis_up_to(int max_weight, int torsion_bound) const
{
    std::vector<PbwWord> out;
    for (int d = 0; d <= max_weight; ++d) {
        auto piece = graded_basis(d, torsion_bound);
        out.insert(out.end(), piece.begin(), piece.end());
    }
    return out;
}

std::string EnvelopingAlgebra::format_word(const PbwWord &w) const
{
    std::string s;
    for (const auto &m : w) {
        s += format_mode(p_, m);
    }
    return s + "|0⟩";
}

std::string EnvelopingAlgebra::format(const State &v) const
{
    return format_lincomb(v, [this](const PbwWord &w) { return format_word(w); });
}

State EnvelopingAlgebra::parse(std::string_view text) const
{
    State out;
    std::string all = detail::trim(text);
    if (all.empty() || all == "0") {
        return out;
    }
    for (auto [sign, term] : detail::split_terms(all)) {
        auto [coeff_text, body] = detail::split_coefficient(term);
        Rational coeff = sign;
        body = detail::strip_spaces(body);
        for (const char *vac : {"|0⟩", "|0>"}) {
            std::string suffix(vac);
            if (body.size() >= suffix.size() && body.compare(body.size() - suffix.size(), suffix.size(), suffix) == 0) {
                body.erase(body.size() - suffix.size());
            }
        }
        if (!coeff_text.empty()) {
            coeff *= parse_rational(coeff_text);
        } else if (!body.empty() && body.find('(') == std::string::npos) {
            // bare scalar multiple of the vacuum
            coeff *= parse_rational(body);
            body.clear();
        }
        std::vector<Mode> modes;
        std::size_t pos = 0;
        while (pos < body.size()) {
            auto close = body.find(')', pos);
            if (close == std::string::npos) {
                throw MalformedPresentation("malformed state term '" + term + "'");
            }
            modes.push_back(parse_mode(p_, body.substr(pos, close - pos + 1)));
            pos = close + 1;
        }
        out.add_scaled(straighten(modes), coeff);
    }
    return out;
}

} // namespace vk

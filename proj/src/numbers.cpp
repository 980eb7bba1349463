#include "k0forge/numbers.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace k0forge {

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw InvalidParams("empty rational");
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-')
            throw InvalidParams("malformed rational: " + text);
    }
    Rat x;
    if (x.set_str(text, 10) != 0) throw InvalidParams("malformed rational: " + text);
    x.canonicalize();
    return x;
}

std::string rat_to_string(const Rat& x) {
    return x.get_str();
}

Rat make_rat(const Int& num, const Int& den) {
    if (den <= 0) throw InvalidParams("make_rat: denominator must be positive");
    Rat x(num, den);
    x.canonicalize();
    return x;
}

Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::map<unsigned long, unsigned long> factorize(const Int& n) {
    if (n <= 0) throw InvalidParams("factorize: argument must be positive");
    std::map<unsigned long, unsigned long> out;
    Int m = n;
    for (unsigned long d = 2; d <= 1000000ul && Int(d) * d <= m; ++d) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
            ++out[d];
        }
    }
    if (m != 1) {
        if (mpz_probab_prime_p(m.get_mpz_t(), 40) == 0)
            throw InvalidParams("factorize: cofactor " + m.get_str() + " is not prime");
        if (!m.fits_ulong_p())
            throw InvalidParams("factorize: prime factor " + m.get_str() + " too large");
        ++out[m.get_ui()];
    }
    return out;
}

namespace {

Supernatural::Exponent parse_exponent(const std::string& tok, const std::string& term) {
    std::string low = tok;
    std::transform(low.begin(), low.end(), low.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (low == "inf") return {true, 0};
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
            return std::isdigit(c);
        }))
        throw InvalidParams("malformed exponent in term: " + term);
    return {false, std::stoul(tok)};
}

}  // namespace

Supernatural Supernatural::parse(const std::string& text) {
    if (text.empty()) throw InvalidParams("empty supernatural");
    Supernatural n;
    std::stringstream ss(text);
    std::string term;
    while (std::getline(ss, term, '*')) {
        if (term.empty()) throw InvalidParams("malformed token in: " + text);
        auto caret = term.find('^');
        std::string base = term.substr(0, caret);
        if (base.empty() || !std::all_of(base.begin(), base.end(), [](unsigned char c) {
                return std::isdigit(c);
            }))
            throw InvalidParams("malformed token: " + term);
        unsigned long p = std::stoul(base);
        if (!is_prime(p)) throw InvalidParams(base + " is not prime");
        Exponent e{false, 1};
        if (caret != std::string::npos) e = parse_exponent(term.substr(caret + 1), term);
        if (n.factors_.count(p)) throw InvalidParams("repeated prime: " + base);
        if (e.infinite || e.value > 0) n.factors_[p] = e;
    }
    if (text.back() == '*') throw InvalidParams("malformed token in: " + text);
    return n;
}

void Supernatural::set(unsigned long prime, Exponent e) {
    if (!is_prime(prime)) throw InvalidParams(std::to_string(prime) + " is not prime");
    if (e.infinite || e.value > 0)
        factors_[prime] = e;
    else
        factors_.erase(prime);
}

bool Supernatural::is_infinite() const {
    for (const auto& [p, e] : factors_)
        if (e.infinite) return true;
    return false;
}

Supernatural::Exponent Supernatural::exponent_of(unsigned long prime) const {
    auto it = factors_.find(prime);
    return it == factors_.end() ? Exponent{false, 0} : it->second;
}

bool Supernatural::contains(const Rat& x) const {
    Int den = x.get_den();
    if (den == 1) return true;
    for (const auto& [p, e] : factorize(den)) {
        Exponent budget = exponent_of(p);
        if (!budget.infinite && budget.value < e) return false;
    }
    return true;
}

Supernatural Supernatural::divide_by(const Int& b) const {
    if (b <= 0) throw InvalidParams("divisor must be positive");
    Supernatural out = *this;
    for (const auto& [p, e] : factorize(b)) {
        Exponent budget = exponent_of(p);
        if (budget.infinite) continue;  // infinity - l = infinity
        if (budget.value < e)
            throw InvalidParams("divisor does not divide the generalized integer at prime " +
                                std::to_string(p));
        out.set(p, {false, budget.value - e});
    }
    return out;
}

std::string Supernatural::to_string() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (const auto& [p, e] : factors_) {
        if (!s.empty()) s += "*";
        s += std::to_string(p);
        if (e.infinite)
            s += "^inf";
        else if (e.value != 1)
            s += "^" + std::to_string(e.value);
    }
    return s;
}

std::vector<unsigned long> enumerate_primes_from(const Supernatural& nprime, int count,
                                                 unsigned long first_pass_above) {
    if (count < 1) throw InvalidParams("enumeration count must be >= 1");
    if (!nprime.is_infinite())
        throw InvalidParams("enumeration requires an infinite generalized integer");
    // remaining budgets; nullopt = infinite
    std::map<unsigned long, std::optional<unsigned long>> budget;
    for (const auto& [p, e] : nprime.factors())
        budget[p] = e.infinite ? std::optional<unsigned long>{} : std::optional{e.value};

    std::vector<unsigned long> out;
    unsigned long threshold = first_pass_above;
    while (static_cast<int>(out.size()) < count) {
        for (auto& [p, left] : budget) {
            if (p <= threshold) continue;
            if (left && *left == 0) continue;
            out.push_back(p);
            if (left) --*left;
            if (static_cast<int>(out.size()) == count) break;
        }
        threshold = 0;  // later passes cover every prime
    }
    return out;
}

std::vector<unsigned long> enumerate_primes(const Supernatural& nprime, int count) {
    return enumerate_primes_from(nprime, count, 0);
}

}  // namespace k0forge

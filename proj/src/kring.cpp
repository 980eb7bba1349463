#include "k0forge/kring.hpp"

#include <sstream>

namespace k0forge {

KClass::KClass(int vars) : vars_(vars) {
    if (vars < 0 || vars > kMaxVars)
        throw InvalidParams("KClass variable count out of range: " + std::to_string(vars));
}

KClass KClass::trivial(const Int& m, int vars) {
    KClass x(vars);
    x.set_coefficient(0, m);
    return x;
}

KClass KClass::hopf_external(const std::vector<int>& indices, int vars) {
    if (indices.empty()) throw InvalidParams("hopf_external: empty index set");
    KClass x = trivial(1, vars);
    for (int i : indices) {
        if (i < 1 || i > vars) throw InvalidParams("hopf_external: index out of range");
        KClass factor = trivial(1, vars);
        factor.set_coefficient(1u << (i - 1), 1);
        x = x * factor;
    }
    return x;
}

KClass KClass::standard_form(const StandardForm& sf, int vars) {
    if (sf.q != vars)
        throw InvalidParams("standard_form: q must equal the variable count");
    if (sf.m < 0) throw InvalidParams("standard_form: m must be non-negative");
    KClass x = trivial(sf.q - sf.m, vars);
    for (int i = 0; i < vars; ++i) x.set_coefficient(1u << i, 1);
    return x;
}

Int KClass::coefficient(uint32_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? Int(0) : it->second;
}

void KClass::set_coefficient(uint32_t mask, const Int& c) {
    if (vars_ < 32 && (mask >> vars_) != 0)
        throw InvalidParams("KClass: subset outside the variable range");
    if (c == 0)
        terms_.erase(mask);
    else
        terms_[mask] = c;
}

namespace {
void require_same_vars(const KClass& a, const KClass& b) {
    if (a.vars() != b.vars()) throw InvalidParams("KClass: mismatched variable counts");
}
}  // namespace

KClass KClass::operator+(const KClass& rhs) const {
    require_same_vars(*this, rhs);
    KClass out = *this;
    for (const auto& [mask, c] : rhs.terms_) out.set_coefficient(mask, out.coefficient(mask) + c);
    return out;
}

KClass KClass::operator-(const KClass& rhs) const {
    require_same_vars(*this, rhs);
    KClass out = *this;
    for (const auto& [mask, c] : rhs.terms_) out.set_coefficient(mask, out.coefficient(mask) - c);
    return out;
}

KClass KClass::operator*(const KClass& rhs) const {
    require_same_vars(*this, rhs);
    KClass out(vars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : rhs.terms_) {
            if (ma & mb) continue;  // e_i^2 = 0
            uint32_t m = ma | mb;
            out.set_coefficient(m, out.coefficient(m) + ca * cb);
        }
    return out;
}

KClass KClass::scaled(const Int& c) const {
    KClass out(vars_);
    if (c == 0) return out;
    for (const auto& [mask, coeff] : terms_) out.set_coefficient(mask, coeff * c);
    return out;
}

Int KClass::rank() const {
    return coefficient(0);
}

Int KClass::top_coefficient() const {
    uint32_t full = vars_ == 0 ? 0u : ((vars_ == 32 ? 0u : (1u << vars_)) - 1u);
    return coefficient(full);
}

KClass KClass::pullback_power(const Int& eta, const std::vector<int>& on) const {
    uint32_t onmask = 0;
    for (int i : on) {
        if (i < 1 || i > vars_) throw InvalidParams("pullback_power: index out of range");
        onmask |= 1u << (i - 1);
    }
    KClass out(vars_);
    for (const auto& [mask, c] : terms_) {
        Int scale = 1;
        for (int i = 0; i < vars_; ++i)
            if ((mask & onmask) & (1u << i)) scale *= eta;
        out.set_coefficient(mask, out.coefficient(mask) + c * scale);
    }
    return out;
}

KClass KClass::embed_block(int block, int blocks) const {
    if (block < 1 || block > blocks) throw InvalidParams("embed_block: block out of range");
    int total = vars_ * blocks;
    KClass out(total);
    int shift = vars_ * (block - 1);
    for (const auto& [mask, c] : terms_) out.set_coefficient(mask << shift, c);
    return out;
}

std::string KClass::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mask, c] : terms_) {
        if (!first) os << "+";
        first = false;
        os << c.get_str();
        if (mask) {
            os << "*e{";
            bool f2 = true;
            for (int i = 0; i < vars_; ++i)
                if (mask & (1u << i)) {
                    if (!f2) os << ",";
                    f2 = false;
                    os << (i + 1);
                }
            os << "}";
        }
    }
    return os.str();
}

Positivity classify(const StandardForm& sf, const Int& h, const Int& M) {
    if (sf.q <= 0 || sf.m < 0) throw InvalidParams("classify: malformed standard form");
    if (sf.q != M)
        throw InvalidParams("classify: oracle applies only to classes over (S^2)^x q (q = M)");
    if (h < 0) throw InvalidParams("classify: h must be non-negative");
    if (h == 0) return {Verdict::Zero, "h = 0: the zero class"};
    Int w = h * (sf.q - sf.m);
    std::ostringstream os;
    if (w >= sf.q) {
        os << "stable range: rank " << w.get_str() << " = h(q-m) >= q = " << sf.q.get_str()
           << " over real dimension 2*" << sf.q.get_str();
        return {Verdict::Positive, os.str()};
    }
    if (w > 0) {
        os << "Euler obstruction: 0 < " << w.get_str() << " = h(q-m) < q = " << sf.q.get_str();
        return {Verdict::NotPositive, os.str()};
    }
    os << "rank " << w.get_str() << " = h(q-m) <= 0 with h = " << h.get_str()
       << " > 0: non-zero class of non-positive rank";
    return {Verdict::NotPositive, os.str()};
}

Int min_positive_multiple(const StandardForm& sf, const Int& M) {
    if (sf.q != M)
        throw InvalidParams("min_positive_multiple: oracle applies only when q = M");
    Int d = sf.q - sf.m;
    if (d < 1) throw InvalidParams("min_positive_multiple: requires q - m >= 1");
    return ceil_div(sf.q, d);
}

}  // namespace k0forge

#include "grnov/multipoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace grnov {

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] > a[i]) throw std::invalid_argument("mono_div: not divisible");
        r[i] = a[i] - b[i];
    }
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

int mono_cmp_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

long mono_graded_degree(const Monomial& m, const std::vector<int>& var_degrees) {
    long d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<long>(m[i]) * var_degrees[i];
    return d;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Scalar& c) {
    return monomial(Monomial(nvars, 0), c);
}

MultiPoly MultiPoly::monomial(Monomial m, const Scalar& c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_.push_back(Term{std::move(m), c});
    return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return mono_cmp_lex(a.mono, b.mono) > 0; });
    MultiPoly p;
    for (auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        if (!p.terms_.empty() && mono_cmp_lex(p.terms_.back().mono, t.mono) == 0) {
            p.terms_.back().coeff = p.terms_.back().coeff + t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

const Term& MultiPoly::leading() const {
    if (terms_.empty()) throw std::domain_error("MultiPoly: leading term of zero");
    return terms_.front();
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        int c;
        if (i >= a.terms_.size())
            c = -1;
        else if (j >= b.terms_.size())
            c = 1;
        else
            c = mono_cmp_lex(a.terms_[i].mono, b.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(b.terms_[j++]);
        } else {
            Scalar s = a.terms_[i].coeff + b.terms_[j].coeff;
            if (!s.is_zero()) r.terms_.push_back(Term{a.terms_[i].mono, s});
            ++i;
            ++j;
        }
    }
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly MultiPoly::mono_scaled(const Monomial& m, const Scalar& c) const {
    MultiPoly r;
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(Term{mono_mul(t.mono, m), t.coeff * c});
    return r;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
    MultiPoly r;
    if (c.is_zero()) return r;
    for (const auto& t : terms_) r.terms_.push_back(Term{t.mono, t.coeff * c});
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return MultiPoly();
    // accumulate through a map keyed by monomial (descending lex)
    auto cmp = [](const Monomial& x, const Monomial& y) { return mono_cmp_lex(x, y) > 0; };
    std::map<Monomial, Scalar, decltype(cmp)> acc(cmp);
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            Monomial m = mono_mul(ta.mono, tb.mono);
            Scalar c = ta.coeff * tb.coeff;
            auto it = acc.find(m);
            if (it == acc.end()) {
                acc.emplace(std::move(m), c);
            } else {
                it->second = it->second + c;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    }
    MultiPoly r;
    for (auto& [m, c] : acc) r.terms_.push_back(Term{m, c});
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (mono_cmp_lex(terms_[i].mono, o.terms_[i].mono) != 0) return false;
        if (!(terms_[i].coeff == o.terms_[i].coeff)) return false;
    }
    return true;
}

std::optional<long> MultiPoly::homogeneous_degree(const std::vector<int>& var_degrees) const {
    if (terms_.empty()) return 0;
    long d = mono_graded_degree(terms_.front().mono, var_degrees);
    for (const auto& t : terms_)
        if (mono_graded_degree(t.mono, var_degrees) != d) return std::nullopt;
    return d;
}

std::string MultiPoly::to_string(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) out += " + ";
        out += terms_[i].coeff.to_string();
        for (std::size_t v = 0; v < terms_[i].mono.size(); ++v) {
            if (terms_[i].mono[v] == 0) continue;
            out += "*" + var_names[v];
            if (terms_[i].mono[v] > 1) out += "^" + std::to_string(terms_[i].mono[v]);
        }
    }
    return out;
}

MultiPoly poly_normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis) {
    MultiPoly rem;
    MultiPoly cur = p;
    while (!cur.is_zero()) {
        const Term& lt = cur.leading();
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            const Term& gl = g.leading();
            if (mono_divides(gl.mono, lt.mono)) {
                Monomial q = mono_div(lt.mono, gl.mono);
                Scalar c = lt.coeff / gl.coeff;
                cur = cur - g.mono_scaled(q, c);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem = rem + MultiPoly::monomial(lt.mono, lt.coeff);
            cur = cur - MultiPoly::monomial(lt.mono, lt.coeff);
        }
    }
    return rem;
}

namespace {
MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
    const Term& lf = f.leading();
    const Term& lg = g.leading();
    Monomial l = mono_lcm(lf.mono, lg.mono);
    MultiPoly a = f.mono_scaled(mono_div(l, lf.mono), Scalar::one(lf.coeff.field()) / lf.coeff);
    MultiPoly b = g.mono_scaled(mono_div(l, lg.mono), Scalar::one(lg.coeff.field()) / lg.coeff);
    return a - b;
}

bool coprime_leads(const MultiPoly& f, const MultiPoly& g) {
    const Monomial& a = f.leading().mono;
    const Monomial& b = g.leading().mono;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}
}  // namespace

std::vector<MultiPoly> buchberger(std::vector<MultiPoly> gens) {
    std::vector<MultiPoly> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(g);
    if (basis.empty()) return basis;

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        if (coprime_leads(basis[i], basis[j])) continue;  // Buchberger's first criterion
        MultiPoly r = poly_normal_form(s_polynomial(basis[i], basis[j]), basis);
        if (r.is_zero()) continue;
        for (std::size_t k = 0; k < basis.size(); ++k) pairs.emplace_back(k, basis.size());
        basis.push_back(r);
    }

    // inter-reduce to the reduced Groebner basis, monic leads
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            std::vector<MultiPoly> others;
            for (std::size_t k = 0; k < basis.size(); ++k)
                if (k != i && !basis[k].is_zero()) others.push_back(basis[k]);
            MultiPoly r = poly_normal_form(basis[i], others);
            if (!(r == basis[i])) changed = true;
            basis[i] = r;
        }
        basis.erase(std::remove_if(basis.begin(), basis.end(),
                                   [](const MultiPoly& p) { return p.is_zero(); }),
                    basis.end());
    }
    for (auto& g : basis) g = g.scaled(g.leading().coeff.inverse());
    std::sort(basis.begin(), basis.end(), [](const MultiPoly& a, const MultiPoly& b) {
        return mono_cmp_lex(a.leading().mono, b.leading().mono) > 0;
    });
    return basis;
}

}  // namespace grnov

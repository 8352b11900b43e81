#include "k3period/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace k3p {

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (auto& [v, e] : m) d += e;
    return d;
}

bool monomial_less(const Monomial& a, const Monomial& b) {
    int da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db;
    // lex over the union of names in ascending order; missing exponent = 0
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        std::string va = ia != a.end() ? ia->first : std::string();
        std::string vb = ib != b.end() ? ib->first : std::string();
        int ea, eb;
        std::string v;
        if (ib == b.end() || (ia != a.end() && va < vb)) {
            v = va; ea = ia->second; eb = 0; ++ia;
        } else if (ia == a.end() || vb < va) {
            v = vb; ea = 0; eb = ib->second; ++ib;
        } else {
            v = va; ea = ia->second; eb = ib->second; ++ia; ++ib;
        }
        if (ea != eb) return ea < eb;  // higher power on earlier var is larger
    }
    return false;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (auto& [v, e] : b) {
        int& x = out[v];
        x += e;
        if (x == 0) out.erase(v);
    }
    return out;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (auto& [v, e] : a) {
        auto it = b.find(v);
        if (it == b.end() || it->second < e) return false;
    }
    return true;
}

Monomial monomial_div(const Monomial& b, const Monomial& a) {
    Monomial out = b;
    for (auto& [v, e] : a) {
        int& x = out[v];
        x -= e;
        if (x == 0) out.erase(v);
    }
    return out;
}

MPoly::MPoly(const Rat& c) {
    if (c != 0) terms_[Monomial{}] = c;
}

MPoly::MPoly(long c) {
    if (c != 0) terms_[Monomial{}] = Rat(c);
}

MPoly MPoly::var(const std::string& name, int exp) {
    if (name.empty()) throw std::invalid_argument("MPoly::var: empty name");
    MPoly p;
    if (exp == 0) return MPoly(Rat(1));
    if (exp < 0) throw std::invalid_argument("MPoly::var: negative exponent");
    p.terms_[Monomial{{name, exp}}] = Rat(1);
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat MPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::domain_error("MPoly: not a constant");
    return terms_.begin()->second;
}

MPoly MPoly::operator-() const {
    MPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out;
    if (a.terms_.empty() || b.terms_.empty()) return out;
    for (auto& [ma, ca] : a.terms_) {
        for (auto& [mb, cb] : b.terms_) {
            Monomial m = monomial_mul(ma, mb);
            auto it = out.terms_.find(m);
            if (it == out.terms_.end()) {
                out.terms_.emplace(std::move(m), ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

MPoly& MPoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [m, co] : terms_) co *= c;
    }
    return *this;
}

MPoly MPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("MPoly::pow: negative exponent");
    MPoly out{Rat(1)};
    MPoly base = *this;
    while (e) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

MPoly MPoly::diff(const std::string& var) const {
    MPoly out;
    for (auto& [m, c] : terms_) {
        auto it = m.find(var);
        if (it == m.end()) continue;
        Monomial dm = m;
        int e = it->second;
        if (e == 1) dm.erase(var); else dm[var] = e - 1;
        out.terms_[dm] += c * e;
        if (out.terms_[dm] == 0) out.terms_.erase(dm);
    }
    return out;
}

int MPoly::degree() const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
    return d;
}

int MPoly::degree(const std::string& var) const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (auto& [m, c] : terms_) {
        auto it = m.find(var);
        if (it != m.end()) d = std::max(d, it->second);
    }
    return d;
}

int MPoly::min_degree(const std::string& var) const {
    if (terms_.empty()) return 0;
    int d = INT32_MAX;
    for (auto& [m, c] : terms_) {
        auto it = m.find(var);
        d = std::min(d, it == m.end() ? 0 : it->second);
    }
    return d;
}

std::vector<std::string> MPoly::variables() const {
    std::set<std::string> vs;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m) vs.insert(v);
    return {vs.begin(), vs.end()};
}

std::pair<Monomial, Rat> MPoly::leading_term() const {
    if (terms_.empty()) throw std::domain_error("MPoly::leading_term: zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (monomial_less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

MPoly MPoly::coeff_of(const std::string& var, int k) const {
    MPoly out;
    for (auto& [m, c] : terms_) {
        auto it = m.find(var);
        int e = it == m.end() ? 0 : it->second;
        if (e != k) continue;
        Monomial rest = m;
        rest.erase(var);
        out.terms_[rest] += c;
        if (out.terms_[rest] == 0) out.terms_.erase(rest);
    }
    return out;
}

MPoly MPoly::subst(const std::string& var, const MPoly& value) const {
    // Horner over the powers of var.
    int d = degree(var);
    if (d <= 0) return *this;
    MPoly out = coeff_of(var, d);
    for (int k = d - 1; k >= 0; --k) out = out * value + coeff_of(var, k);
    return out;
}

Rat MPoly::eval(const std::map<std::string, Rat>& point) const {
    Rat out(0);
    for (auto& [m, c] : terms_) {
        Rat t = c;
        for (auto& [v, e] : m) {
            auto it = point.find(v);
            if (it == point.end()) throw std::invalid_argument("MPoly::eval: missing value for " + v);
            t *= rat_pow(it->second, e);
        }
        out += t;
    }
    return out;
}

std::complex<double> MPoly::eval_c(const std::map<std::string, std::complex<double>>& point) const {
    std::complex<double> out(0.0, 0.0);
    for (auto& [m, c] : terms_) {
        std::complex<double> t = rat_complex(c);
        for (auto& [v, e] : m) {
            auto it = point.find(v);
            if (it == point.end()) throw std::invalid_argument("MPoly::eval_c: missing value for " + v);
            std::complex<double> p(1.0, 0.0), b = it->second;
            for (int k = 0; k < e; ++k) p *= b;
            t *= p;
        }
        out += t;
    }
    return out;
}

Rat MPoly::content_scale() const {
    if (terms_.empty()) return Rat(0);
    Int num_gcd(0), den_lcm(1);
    for (auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat scale(num_gcd, den_lcm);
    scale.canonicalize();
    if (leading_term().second < 0) scale = -scale;
    return scale;
}

MPoly MPoly::primitive() const {
    if (terms_.empty()) return MPoly();
    Rat s = content_scale();
    MPoly out = *this;
    for (auto& [m, c] : out.terms_) c /= s;
    return out;
}

void MPoly::set_term(const Monomial& m, const Rat& c) {
    for (auto& [v, e] : m)
        if (e <= 0) throw std::invalid_argument("MPoly::set_term: nonpositive exponent");
    if (c == 0) terms_.erase(m); else terms_[m] = c;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Monomial, Rat>*> ts;
    for (auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](auto* x, auto* y) { return monomial_less(y->first, x->first); });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        const Rat& c = t->second;
        Rat a = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (a == 1) && !t->first.empty();
        if (!unit) os << a.get_str();
        bool need_star = !unit;
        for (auto& [v, e] : t->first) {
            if (need_star) os << "*";
            os << v;
            if (e > 1) os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }

    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }

    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }

    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("mpoly_parse: " + why + " at position " + std::to_string(i) +
                                    " in '" + s + "'");
    }

    MPoly expr() {
        MPoly out = term();
        for (;;) {
            if (eat('+')) out += term();
            else if (eat('-')) out -= term();
            else return out;
        }
    }

    MPoly term() {
        MPoly out = factor();
        for (;;) {
            skip();
            if (eat('*')) out = out * factor();
            else return out;
        }
    }

    MPoly factor() {
        MPoly b = base();
        skip();
        if (eat('^')) {
            bool neg = eat('-');
            if (neg) fail("negative exponent");
            long e = integer();
            b = b.pow(static_cast<int>(e));
        }
        return b;
    }

    long integer() {
        skip();
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) fail("expected integer");
        long v = std::stol(s.substr(i, j - i));
        i = j;
        return v;
    }

    MPoly base() {
        skip();
        if (i >= s.size()) fail("unexpected end");
        char c = s[i];
        if (c == '(') {
            ++i;
            MPoly e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c == '-') { ++i; return -base(); }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            std::string num = s.substr(i, j - i);
            i = j;
            // literal rational n/m only (no general division in polynomials)
            skip();
            if (i < s.size() && s[i] == '/') {
                ++i;
                skip();
                size_t k = i;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                if (k == i) fail("expected denominator digits");
                std::string den = s.substr(i, k - i);
                i = k;
                return MPoly(rat_parse(num + "/" + den));
            }
            return MPoly(rat_parse(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            std::string name = s.substr(i, j - i);
            i = j;
            return MPoly::var(name);
        }
        fail("unexpected character");
    }
};

}  // namespace

MPoly mpoly_parse(const std::string& text) {
    Parser p(text);
    MPoly out = p.expr();
    p.skip();
    if (p.i != text.size()) p.fail("trailing input");
    return out;
}

// ---------------------------------------------------------------------------
// division and gcd

bool mpoly_try_divexact(const MPoly& f, const MPoly& g, MPoly& quotient) {
    if (g.is_zero()) return false;
    MPoly r = f, q;
    auto [gm, gc] = g.leading_term();
    while (!r.is_zero()) {
        auto [rm, rc] = r.leading_term();
        if (!monomial_divides(gm, rm)) return false;
        MPoly t;
        t.set_term(monomial_div(rm, gm), rc / gc);
        q += t;
        r -= t * g;
    }
    quotient = std::move(q);
    return true;
}

MPoly mpoly_divexact(const MPoly& f, const MPoly& g) {
    MPoly q;
    if (!mpoly_try_divexact(f, g, q)) throw std::domain_error("mpoly_divexact: not divisible");
    return q;
}

namespace {

// gcd of the common monomial factor
Monomial common_monomial(const MPoly& p) {
    Monomial out;
    bool first = true;
    for (auto& [m, c] : p.terms()) {
        if (first) { out = m; first = false; continue; }
        Monomial next;
        for (auto& [v, e] : out) {
            auto it = m.find(v);
            if (it != m.end()) next[v] = std::min(e, it->second);
        }
        out = std::move(next);
        if (out.empty()) break;
    }
    return out;
}

MPoly from_monomial(const Monomial& m) {
    MPoly p;
    p.set_term(m, Rat(1));
    return p;
}

MPoly content_in(const MPoly& p, const std::string& x);

// pseudo-remainder of f by g w.r.t. x (both nonzero, deg_x f >= deg_x g)
MPoly prem(MPoly f, const MPoly& g, const std::string& x) {
    int dg = g.degree(x);
    MPoly lg = g.coeff_of(x, dg);
    int df = f.degree(x);
    while (!f.is_zero() && (df = f.degree(x)) >= dg) {
        MPoly lf = f.coeff_of(x, df);
        MPoly shift = df - dg > 0 ? MPoly::var(x, df - dg) : MPoly(Rat(1));
        f = lg * f - lf * shift * g;
        // degree must strictly drop; guard against zero-cancel corner cases
        if (!f.is_zero() && f.degree(x) >= df) throw std::logic_error("prem: no progress");
    }
    return f;
}

MPoly gcd_impl(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    // fast path: monomial arguments
    if (a.is_monomial() || b.is_monomial()) {
        Monomial ma = common_monomial(a), mb = common_monomial(b);
        Monomial g;
        for (auto& [v, e] : ma) {
            auto it = mb.find(v);
            if (it != mb.end()) g[v] = std::min(e, it->second);
        }
        return from_monomial(g);
    }
    auto va = a.variables();
    auto vb = b.variables();
    if (va.empty()) return MPoly(Rat(1));   // nonzero constants are units over Q
    if (vb.empty()) return MPoly(Rat(1));
    // main variable: first common variable if any, else contents only
    std::string x;
    for (auto& v : va)
        if (std::find(vb.begin(), vb.end(), v) != vb.end()) { x = v; break; }
    if (x.empty()) {
        // disjoint variable sets: gcd of contents w.r.t. everything = constant
        return MPoly(Rat(1));
    }
    MPoly ca = content_in(a, x), cb = content_in(b, x);
    MPoly c = gcd_impl(ca, cb);
    MPoly pa = mpoly_divexact(a, ca), pb = mpoly_divexact(b, cb);
    if (pa.degree(x) < pb.degree(x)) std::swap(pa, pb);
    // primitive PRS
    while (!pb.is_zero()) {
        MPoly r = prem(pa, pb, x);
        pa = pb;
        if (r.is_zero()) { pb = MPoly(); break; }
        pb = mpoly_divexact(r, content_in(r, x));
    }
    if (pa.degree(x) <= 0 && pa.is_constant()) return c.primitive();
    return (c * mpoly_divexact(pa, content_in(pa, x))).primitive();
}

MPoly content_in(const MPoly& p, const std::string& x) {
    // gcd of x-coefficients (an MPoly in the remaining variables)
    MPoly g;
    int d = p.degree(x);
    for (int k = 0; k <= d; ++k) {
        MPoly c = p.coeff_of(x, k);
        if (c.is_zero()) continue;
        g = gcd_impl(g, c);
        if (g.is_constant() && !g.is_zero()) return MPoly(Rat(1)) * g.primitive();
    }
    return g;
}

}  // namespace

MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
    MPoly g = gcd_impl(a, b);
    return g.is_zero() ? g : g.primitive();
}

std::vector<Rat> univariate_coeffs(const MPoly& p, const std::string& var) {
    auto vs = p.variables();
    for (auto& v : vs)
        if (v != var) throw std::invalid_argument("univariate_coeffs: extra variable " + v);
    int d = std::max(p.degree(var), 0);
    std::vector<Rat> out(static_cast<size_t>(d) + 1, Rat(0));
    for (auto& [m, c] : p.terms()) {
        int e = m.empty() ? 0 : m.begin()->second;
        out[static_cast<size_t>(e)] = c;
    }
    return out;
}

std::vector<std::pair<MPoly, int>> squarefree_decomposition(const MPoly& p, const std::string& var) {
    // Yun's algorithm over Q.
    std::vector<std::pair<MPoly, int>> out;
    if (p.is_zero() || p.degree(var) <= 0) return out;
    MPoly f = p.primitive();
    MPoly fp = f.diff(var);
    MPoly a = mpoly_gcd(f, fp);
    MPoly b = mpoly_divexact(f, a);
    MPoly c = mpoly_divexact(fp, a);
    MPoly d = c - b.diff(var);
    int i = 1;
    while (!(b.degree(var) <= 0)) {
        MPoly g = mpoly_gcd(b, d);
        if (g.degree(var) > 0) out.emplace_back(g, i);
        b = mpoly_divexact(b, g);
        c = mpoly_divexact(d, g);
        d = c - b.diff(var);
        ++i;
    }
    return out;
}

}  // namespace k3p

#include "gradmod/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gradmod/errors.hpp"

namespace gradmod {

std::string RingSpec::str() const {
    std::ostringstream os;
    os << "F" << p << "[[";
    for (std::size_t i = 0; i < vars.size(); ++i) os << (i ? "," : "") << vars[i];
    os << "]] deg<" << cap;
    return os.str();
}

RingSpecPtr make_ring_spec(std::vector<std::string> vars, uint32_t p, int cap) {
    if (vars.empty()) throw ValidationError("ring needs at least one variable");
    if (cap < 2) throw ValidationError("truncation cap must be >= 2");
    GF check(p);  // validates primality and size
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i].empty() || !std::isalpha(static_cast<unsigned char>(vars[i][0])))
            throw ValidationError("variable names must start with a letter: '" + vars[i] + "'");
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw ValidationError("duplicate variable '" + vars[i] + "'");
    }
    RingSpec s;
    s.vars = std::move(vars);
    s.p = p;
    s.cap = cap;
    return std::make_shared<const RingSpec>(std::move(s));
}

TruncPoly TruncPoly::constant(RingSpecPtr spec, long long v) {
    TruncPoly q(spec);
    GF gf(spec->p);
    uint32_t c = gf.from_int(v);
    if (c) q.terms_[Monomial{std::vector<uint16_t>(spec->vars.size(), 0)}] = c;
    return q;
}

TruncPoly TruncPoly::variable(RingSpecPtr spec, int idx) {
    TruncPoly q(spec);
    Monomial m{std::vector<uint16_t>(spec->vars.size(), 0)};
    m.e[idx] = 1;
    q.terms_[m] = 1;
    return q;
}

TruncPoly TruncPoly::monomial(RingSpecPtr spec, const Monomial& m, uint32_t coeff) {
    TruncPoly q(std::move(spec));
    q.add_term(m, coeff);
    return q;
}

int TruncPoly::order() const {
    if (terms_.empty()) return kOrderInf;
    return terms_.begin()->first.degree();
}

void TruncPoly::check_same_spec(const TruncPoly& o) const {
    if (!spec_ || !o.spec_ || !(*spec_ == *o.spec_))
        throw ValidationError("ring spec mismatch in polynomial arithmetic");
}

void TruncPoly::add_term(const Monomial& m, uint32_t coeff) {
    GF gf(spec_->p);
    coeff %= spec_->p;
    if (coeff == 0 || m.degree() >= spec_->cap) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, coeff);
    } else {
        it->second = gf.add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

TruncPoly TruncPoly::operator+(const TruncPoly& o) const {
    check_same_spec(o);
    TruncPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

TruncPoly TruncPoly::operator-(const TruncPoly& o) const {
    check_same_spec(o);
    GF gf(spec_->p);
    TruncPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, gf.neg(c));
    return out;
}

TruncPoly TruncPoly::operator*(const TruncPoly& o) const {
    check_same_spec(o);
    GF gf(spec_->p);
    TruncPoly out(spec_);
    const int cap = spec_->cap;
    const int nv = spec_->v();
    Monomial prod{std::vector<uint16_t>(nv, 0)};
    for (const auto& [ma, ca] : terms_) {
        int da = ma.degree();
        for (const auto& [mb, cb] : o.terms_) {
            if (da + mb.degree() >= cap) continue;
            for (int i = 0; i < nv; ++i) prod.e[i] = static_cast<uint16_t>(ma.e[i] + mb.e[i]);
            out.add_term(prod, gf.mul(ca, cb));
        }
    }
    return out;
}

TruncPoly TruncPoly::pow(unsigned e) const {
    TruncPoly acc = TruncPoly::constant(spec_, 1);
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

TruncPoly TruncPoly::scaled(uint32_t c) const {
    GF gf(spec_->p);
    TruncPoly out(spec_);
    c %= spec_->p;
    if (c == 0) return out;
    for (const auto& [m, v] : terms_) out.terms_[m] = gf.mul(v, c);
    return out;
}

TruncPoly TruncPoly::negated() const { return scaled(spec_->p - 1); }

bool TruncPoly::operator==(const TruncPoly& o) const {
    if (!spec_ || !o.spec_) return terms_.empty() && o.terms_.empty();
    return *spec_ == *o.spec_ && terms_ == o.terms_;
}

bool TruncPoly::is_linear_form() const {
    if (terms_.empty()) return false;
    for (const auto& [m, c] : terms_)
        if (m.degree() != 1) return false;
    return true;
}

uint32_t TruncPoly::coeff_of_var(int idx) const {
    Monomial m{std::vector<uint16_t>(spec_->vars.size(), 0)};
    m.e[idx] = 1;
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

TruncPoly TruncPoly::retruncated(const RingSpecPtr& new_spec) const {
    if (new_spec->vars != spec_->vars || new_spec->p != spec_->p)
        throw ValidationError("retruncate: rings differ in more than the cap");
    TruncPoly out(new_spec);
    for (const auto& [m, c] : terms_) out.add_term(m, c);
    return out;
}

std::string TruncPoly::str() const {
    if (terms_.empty()) return "0";
    const uint32_t p = spec_->p;
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        // print small negative residues as negative integers
        long long v = c;
        if (v > p / 2) v -= p;
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        long long a = v < 0 ? -v : v;
        bool unit = a == 1;
        bool any_var = m.degree() > 0;
        if (!unit || !any_var) os << a;
        bool star = !unit && any_var;
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (star) os << "*";
            os << spec_->vars[i];
            if (m.e[i] > 1) os << "^" << m.e[i];
            star = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// expression parser

namespace {

class Parser {
public:
    Parser(std::string_view text, RingSpecPtr spec) : text_(text), spec_(std::move(spec)) {}

    TruncPoly run() {
        TruncPoly e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("parse error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    TruncPoly expr() {
        TruncPoly acc = term();
        for (;;) {
            if (eat('+')) {
                acc = acc + term();
            } else if (eat('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    TruncPoly term() {
        TruncPoly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    TruncPoly factor() {
        if (eat('-')) return factor().negated();
        TruncPoly base = atom();
        if (eat('^')) {
            unsigned e = natural();
            return base.pow(e);
        }
        return base;
    }

    unsigned natural() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a non-negative integer exponent");
        unsigned long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000) fail("exponent too large");
            ++pos_;
        }
        return static_cast<unsigned>(v);
    }

    TruncPoly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            TruncPoly e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            unsigned long long v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = (v * 10 + (text_[pos_] - '0')) % (static_cast<unsigned long long>(spec_->p) << 20);
                ++pos_;
            }
            return TruncPoly::constant(spec_, static_cast<long long>(v % spec_->p));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            for (int i = 0; i < spec_->v(); ++i)
                if (spec_->vars[i] == name) return TruncPoly::variable(spec_, i);
            pos_ = start;
            fail("unknown identifier '" + name + "'");
        }
        fail("expected integer, variable or '('");
    }

    std::string_view text_;
    RingSpecPtr spec_;
    std::size_t pos_ = 0;
};

}  // namespace

TruncPoly parse_poly(std::string_view text, RingSpecPtr spec) {
    return Parser(text, std::move(spec)).run();
}

// ---------------------------------------------------------------------------
// graded monomial bases

namespace {

void gen_degree(int v, int d, std::vector<uint16_t>& cur, int pos, std::vector<Monomial>& out) {
    if (pos == v - 1) {
        cur[pos] = static_cast<uint16_t>(d);
        out.push_back(Monomial{cur});
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur[pos] = static_cast<uint16_t>(e);
        gen_degree(v, d - e, cur, pos + 1, out);
    }
}

}  // namespace

std::vector<Monomial> graded_basis(int d, const RingSpec& spec) {
    if (d < 0 || d >= spec.cap)
        throw ValidationError("graded_basis: degree " + std::to_string(d) + " outside [0, cap)");
    std::vector<Monomial> out;
    std::vector<uint16_t> cur(spec.v(), 0);
    gen_degree(spec.v(), d, cur, 0, out);
    return out;
}

MonomialTable::MonomialTable(RingSpecPtr spec) : spec_(std::move(spec)), nvars_(spec_->v()) {
    deg_start_.resize(spec_->cap + 1, 0);
    for (int d = 0; d < spec_->cap; ++d) {
        deg_start_[d] = static_cast<int>(mons_.size());
        auto layer = graded_basis(d, *spec_);
        for (auto& m : layer) {
            degs_.push_back(d);
            index_.emplace(m.e, static_cast<int>(mons_.size()));
            mons_.push_back(std::move(m));
        }
    }
    deg_start_[spec_->cap] = static_cast<int>(mons_.size());

    mul_var_.assign(mons_.size() * nvars_, -1);
    std::vector<uint16_t> tmp;
    for (std::size_t i = 0; i < mons_.size(); ++i) {
        if (degs_[i] + 1 >= spec_->cap) continue;
        for (int var = 0; var < nvars_; ++var) {
            tmp = mons_[i].e;
            ++tmp[var];
            auto it = index_.find(tmp);
            mul_var_[i * nvars_ + var] = it == index_.end() ? -1 : it->second;
        }
    }
}

int MonomialTable::index_of(const Monomial& m) const {
    auto it = index_.find(m.e);
    return it == index_.end() ? -1 : it->second;
}

int MonomialTable::mul(int idx, const Monomial& m) const {
    if (degree_of(idx) + m.degree() >= spec_->cap) return -1;
    std::vector<uint16_t> sum = mons_[idx].e;
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = static_cast<uint16_t>(sum[i] + m.e[i]);
    auto it = index_.find(sum);
    return it == index_.end() ? -1 : it->second;
}

// ---------------------------------------------------------------------------
// elimination of a linear form

TruncPoly LinearElimination::apply(const TruncPoly& q) const {
    if (!(*q.spec() == *from)) throw ValidationError("substitution applied to the wrong ring");
    TruncPoly out(to);
    const int nv = from->v();
    for (const auto& [m, c] : q.terms()) {
        TruncPoly term = TruncPoly::constant(to, 0);
        // image of the monomial: mapped variables stay variables, the pivot
        // variable becomes `replacement`
        Monomial img{std::vector<uint16_t>(to->vars.size(), 0)};
        int pivot_exp = 0;
        for (int i = 0; i < nv; ++i) {
            if (i == pivot) {
                pivot_exp = m.e[i];
            } else {
                img.e[var_map[i]] = m.e[i];
            }
        }
        TruncPoly t = TruncPoly::monomial(to, img, c);
        if (pivot_exp > 0) t = t * replacement.pow(pivot_exp);
        out = out + t;
    }
    return out;
}

LinearElimination eliminate_linear_form(const RingSpecPtr& spec, const TruncPoly& form) {
    if (!(*form.spec() == *spec)) throw ValidationError("form lives in a different ring");
    if (!form.is_linear_form())
        throw ValidationError("eliminate_linear_form: form must be homogeneous of degree 1");
    if (spec->v() < 2)
        throw ValidationError("eliminate_linear_form: cannot drop below one variable");

    GF gf(spec->p);
    int pivot = -1;
    for (int i = spec->v() - 1; i >= 0; --i)
        if (form.coeff_of_var(i) != 0) {
            pivot = i;
            break;
        }

    LinearElimination el;
    el.from = spec;
    el.pivot = pivot;
    std::vector<std::string> new_vars;
    el.var_map.assign(spec->v(), -1);
    for (int i = 0; i < spec->v(); ++i) {
        if (i == pivot) continue;
        el.var_map[i] = static_cast<int>(new_vars.size());
        new_vars.push_back(spec->vars[i]);
    }
    el.to = make_ring_spec(std::move(new_vars), spec->p, spec->cap);

    // solve form = 0 for the pivot variable
    uint32_t inv = gf.inv(form.coeff_of_var(pivot));
    TruncPoly repl(el.to);
    for (int i = 0; i < spec->v(); ++i) {
        if (i == pivot) continue;
        uint32_t c = form.coeff_of_var(i);
        if (c == 0) continue;
        repl = repl + TruncPoly::variable(el.to, el.var_map[i]).scaled(gf.neg(gf.mul(c, inv)));
    }
    el.replacement = std::move(repl);
    return el;
}

}  // namespace gradmod

#include "sdisc/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sdisc {

// ---------------------------------------------------------------- Var

Var Var::a(int i)
{
    if (i < 0 || i >= kMaxCoeffSymbols)
        throw AlgebraError(Errc::out_of_range, "coefficient symbol a" + std::to_string(i) + " outside the variable universe");
    return Var(i);
}

Var Var::from_name(std::string_view name)
{
    if (name == "x") return x();
    if (name == "y") return y();
    if (name == "z") return z();
    if (name == "w") return w();
    if (name.size() >= 2 && name[0] == 'a') {
        int i = 0;
        for (char c : name.substr(1)) {
            if (!std::isdigit(static_cast<unsigned char>(c)) || i > kMaxCoeffSymbols)
                throw AlgebraError(Errc::bad_input, "unknown variable '" + std::string(name) + "'");
            i = 10 * i + (c - '0');
        }
        if (i < kMaxCoeffSymbols)
            return Var(i);
    }
    throw AlgebraError(Errc::bad_input, "unknown variable '" + std::string(name) + "'");
}

Var Var::at(int index)
{
    if (index < 0 || index >= kNumVars)
        throw AlgebraError(Errc::out_of_range, "variable index " + std::to_string(index) + " outside the universe");
    return Var(index);
}

std::string Var::name() const
{
    if (idx_ < kMaxCoeffSymbols)
        return "a" + std::to_string(idx_);
    static const char *aux[] = {"x", "y", "z", "w"};
    return aux[idx_ - kMaxCoeffSymbols];
}

// ----------------------------------------------------------- Monomial

Monomial Monomial::var(Var v, unsigned e)
{
    if (e > kMaxDegree)
        throw AlgebraError(Errc::overflow, "monomial degree exceeds 255");
    Monomial m;
    auto word = static_cast<std::uint64_t>(e) << shift(v.index());
    (v.index() < 8 ? m.lo_ : m.hi_) = word;
    m.hi_ |= static_cast<std::uint64_t>(e) << 56;
    return m;
}

unsigned Monomial::exponent(Var v) const
{
    int i = v.index();
    return static_cast<unsigned>(((i < 8 ? lo_ : hi_) >> shift(i)) & 0xff);
}

bool Monomial::divides(const Monomial &m) const
{
    for (int b = 0; b < 64; b += 8) {
        if (((hi_ >> b) & 0xff) > ((m.hi_ >> b) & 0xff))
            return false;
        if (((lo_ >> b) & 0xff) > ((m.lo_ >> b) & 0xff))
            return false;
    }
    return true;
}

Monomial Monomial::quotient_of(const Monomial &m) const
{
    // Byte-wise subtraction cannot borrow once divides(m) holds.
    Monomial r;
    r.hi_ = m.hi_ - hi_;
    r.lo_ = m.lo_ - lo_;
    return r;
}

Monomial Monomial::without(Var v) const
{
    return Monomial::var(v, exponent(v)).quotient_of(*this);
}

Monomial operator*(const Monomial &a, const Monomial &b)
{
    if (a.degree() + b.degree() > Monomial::kMaxDegree)
        throw AlgebraError(Errc::overflow, "monomial degree exceeds 255");
    Monomial r;
    r.hi_ = a.hi_ + b.hi_;
    r.lo_ = a.lo_ + b.lo_;
    return r;
}

// -------------------------------------------------------------- MPoly

MPoly::MPoly(const Rational &c)
{
    if (!c.is_zero())
        terms_.push_back({Monomial(), c});
}

MPoly::MPoly(const Monomial &m, const Rational &c)
{
    if (!c.is_zero())
        terms_.push_back({m, c});
}

MPoly MPoly::from_terms(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) { return a.mono > b.mono; });
    MPoly r;
    for (auto &t : terms) {
        if (!r.terms_.empty() && r.terms_.back().mono == t.mono)
            r.terms_.back().coeff += t.coeff;
        else {
            if (!r.terms_.empty() && r.terms_.back().coeff.is_zero())
                r.terms_.pop_back();
            r.terms_.push_back(std::move(t));
        }
    }
    if (!r.terms_.empty() && r.terms_.back().coeff.is_zero())
        r.terms_.pop_back();
    return r;
}

Rational MPoly::constant_value() const
{
    if (!is_constant())
        throw AlgebraError(Errc::out_of_range, "polynomial is not constant: " + str());
    return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

unsigned MPoly::degree(Var v) const
{
    unsigned d = 0;
    for (const auto &t : terms_)
        d = std::max(d, t.mono.exponent(v));
    return d;
}

Rational MPoly::coeff(const Monomial &m) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term &t, const Monomial &key) { return t.mono > key; });
    if (it != terms_.end() && it->mono == m)
        return it->coeff;
    return Rational(0);
}

MPoly MPoly::operator-() const
{
    MPoly r(*this);
    for (auto &t : r.terms_)
        t.coeff = -t.coeff;
    return r;
}

namespace {

template <typename Combine>
std::vector<Term> merge(const std::vector<Term> &a, const std::vector<Term> &b, Combine sign_b)
{
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].mono > a[i].mono) {
            out.push_back({b[j].mono, sign_b(b[j].coeff)});
            ++j;
        } else {
            Rational c = a[i].coeff;
            c += sign_b(b[j].coeff);
            if (!c.is_zero())
                out.push_back({a[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

struct HeapEntry {
    Monomial key;
    std::uint32_t i, j;
};

struct HeapLess {
    bool operator()(const HeapEntry &a, const HeapEntry &b) const { return a.key < b.key; }
};

} // namespace

MPoly &MPoly::operator+=(const MPoly &o)
{
    terms_ = merge(terms_, o.terms_, [](const Rational &c) { return c; });
    return *this;
}

MPoly &MPoly::operator-=(const MPoly &o)
{
    terms_ = merge(terms_, o.terms_, [](const Rational &c) { return -c; });
    return *this;
}

MPoly &MPoly::operator*=(const Rational &c)
{
    if (c.is_zero())
        terms_.clear();
    for (auto &t : terms_)
        t.coeff *= c;
    return *this;
}

MPoly &MPoly::operator*=(const MPoly &o)
{
    *this = *this * o;
    return *this;
}

/* Johnson's heap multiplication: the heap holds one cursor per term of
 * the shorter factor, so product terms come out in decreasing order and
 * like terms are combined as they appear. */
MPoly operator*(const MPoly &a, const MPoly &b)
{
    if (a.is_zero() || b.is_zero())
        return MPoly();
    const auto &p = a.terms_.size() <= b.terms_.size() ? a.terms_ : b.terms_;
    const auto &q = a.terms_.size() <= b.terms_.size() ? b.terms_ : a.terms_;

    MPoly r;
    if (p.size() == 1) {
        r.terms_.reserve(q.size());
        for (const auto &t : q)
            r.terms_.push_back({p[0].mono * t.mono, p[0].coeff * t.coeff});
        return r;
    }

    std::vector<HeapEntry> heap;
    heap.reserve(p.size());
    for (std::uint32_t i = 0; i < p.size(); ++i)
        heap.push_back({p[i].mono * q[0].mono, i, 0});
    std::make_heap(heap.begin(), heap.end(), HeapLess{});

    mpq_class acc, prod;
    Monomial current;
    bool pending = false;
    auto flush = [&] {
        if (pending && sgn(acc) != 0)
            r.terms_.push_back({current, Rational(acc)});
        pending = false;
    };
    while (!heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), HeapLess{});
        HeapEntry e = heap.back();
        heap.pop_back();
        if (!pending || e.key != current) {
            flush();
            current = e.key;
            acc = 0;
            pending = true;
        }
        mpq_mul(prod.get_mpq_t(), p[e.i].coeff.gmp().get_mpq_t(), q[e.j].coeff.gmp().get_mpq_t());
        acc += prod;
        if (e.j + 1 < q.size()) {
            heap.push_back({p[e.i].mono * q[e.j + 1].mono, e.i, e.j + 1});
            std::push_heap(heap.begin(), heap.end(), HeapLess{});
        }
    }
    flush();
    return r;
}

MPoly MPoly::pow(unsigned e) const
{
    MPoly result(1), base(*this);
    while (e) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

bool operator==(const MPoly &a, const MPoly &b)
{
    if (a.terms_.size() != b.terms_.size())
        return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

/* Heap division: the heap enumerates products q[i]*quot[j] for i >= 1,
 * so the quotient is produced term by term in decreasing order.  In a
 * monomial order the leading term of p - q*(partial quotient) must be
 * divisible by lm(q) whenever q | p, which gives the early exit. */
MPoly exact_div(const MPoly &p, const MPoly &q)
{
    if (q.is_zero())
        throw AlgebraError(Errc::not_divisible, "division by the zero polynomial");
    if (p.is_zero())
        return MPoly();
    const auto &qt = q.terms();
    const auto &pt = p.terms();
    const Monomial &lead = qt[0].mono;
    const mpq_class &lead_c = qt[0].coeff.gmp();

    if (qt.size() == 1) {
        std::vector<Term> out;
        out.reserve(pt.size());
        Rational inv = qt[0].coeff.inverse();
        for (const auto &t : pt) {
            if (!lead.divides(t.mono))
                throw AlgebraError(Errc::not_divisible, "monomial divisor does not divide");
            out.push_back({lead.quotient_of(t.mono), t.coeff * inv});
        }
        return MPoly::from_terms(std::move(out));
    }

    std::vector<Term> quot;
    std::vector<HeapEntry> heap;
    std::size_t k = 0;
    mpq_class acc, prod;
    while (k < pt.size() || !heap.empty()) {
        Monomial m;
        if (heap.empty() || (k < pt.size() && pt[k].mono > heap.front().key))
            m = pt[k].mono;
        else
            m = heap.front().key;

        acc = 0;
        if (k < pt.size() && pt[k].mono == m) {
            acc = pt[k].coeff.gmp();
            ++k;
        }
        while (!heap.empty() && heap.front().key == m) {
            std::pop_heap(heap.begin(), heap.end(), HeapLess{});
            HeapEntry e = heap.back();
            heap.pop_back();
            mpq_mul(prod.get_mpq_t(), qt[e.i].coeff.gmp().get_mpq_t(), quot[e.j].coeff.gmp().get_mpq_t());
            acc -= prod;
            if (e.i + 1 < qt.size()) {
                heap.push_back({qt[e.i + 1].mono * quot[e.j].mono, e.i + 1, e.j});
                std::push_heap(heap.begin(), heap.end(), HeapLess{});
            }
        }
        if (sgn(acc) == 0)
            continue;
        if (!lead.divides(m))
            throw AlgebraError(Errc::not_divisible, "polynomial is not an exact multiple of the divisor");
        quot.push_back({lead.quotient_of(m), Rational(mpq_class(acc / lead_c))});
        auto j = static_cast<std::uint32_t>(quot.size() - 1);
        heap.push_back({qt[1].mono * quot[j].mono, 1, j});
        std::push_heap(heap.begin(), heap.end(), HeapLess{});
    }
    // quot is already strictly decreasing with nonzero coefficients.
    return MPoly::from_terms(std::move(quot));
}

MPoly MPoly::derivative(Var v) const
{
    std::vector<Term> out;
    for (const auto &t : terms_) {
        unsigned e = t.mono.exponent(v);
        if (e == 0)
            continue;
        out.push_back({Monomial::var(v, 1).quotient_of(t.mono), t.coeff * Rational(static_cast<long>(e))});
    }
    return from_terms(std::move(out));
}

MPoly MPoly::substitute(const std::map<Var, MPoly> &bindings) const
{
    // Power tables per bound variable, filled on demand.
    std::map<Var, std::vector<MPoly>> powers;
    auto power = [&](Var v, unsigned e) -> const MPoly & {
        auto &table = powers[v];
        if (table.empty())
            table.push_back(MPoly(1));
        while (table.size() <= e)
            table.push_back(table.back() * bindings.at(v));
        return table[e];
    };

    MPoly result;
    std::vector<Term> free_terms;
    for (const auto &t : terms_) {
        Monomial rest = t.mono;
        MPoly factor(1);
        bool bound = false;
        for (const auto &[v, _] : bindings) {
            unsigned e = rest.exponent(v);
            if (e == 0)
                continue;
            rest = rest.without(v);
            factor = factor * power(v, e);
            bound = true;
        }
        if (!bound) {
            free_terms.push_back(t);
            continue;
        }
        result += factor * MPoly(rest, t.coeff);
    }
    result += from_terms(std::move(free_terms));
    return result;
}

MPoly MPoly::evaluate(const std::map<Var, Rational> &values) const
{
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto &t : terms_) {
        Monomial rest = t.mono;
        Rational c = t.coeff;
        for (const auto &[v, val] : values) {
            unsigned e = rest.exponent(v);
            if (e == 0)
                continue;
            rest = rest.without(v);
            c *= val.pow(e);
        }
        out.push_back({rest, std::move(c)});
    }
    return from_terms(std::move(out));
}

std::string MPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c.sign() < 0)
                os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        c = c.abs();
        bool need_star = false;
        if (!c.is_one() || t.mono.is_one()) {
            os << c.str();
            need_star = true;
        }
        for (int i = 0; i < kNumVars; ++i) {
            Var v = Var::at(i);
            unsigned e = t.mono.exponent(v);
            if (e == 0)
                continue;
            if (need_star)
                os << '*';
            os << v.name();
            if (e > 1)
                os << '^' << e;
            need_star = true;
        }
        first = false;
    }
    return os.str();
}

// ------------------------------------------------------------- parser

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    MPoly parse_all()
    {
        MPoly p = expression();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string &msg)
    {
        throw AlgebraError(Errc::bad_input, "polynomial parse error at " + std::to_string(pos_) + ": " + msg);
    }
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::string digits()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected digits");
        return std::string(s_.substr(start, pos_ - start));
    }

    MPoly expression()
    {
        MPoly acc;
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        acc = term();
        if (negate)
            acc = -acc;
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    MPoly term()
    {
        MPoly acc = factor();
        while (accept('*'))
            acc = acc * factor();
        return acc;
    }

    MPoly factor()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        MPoly base;
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            base = expression();
            if (!accept(')'))
                fail("expected ')'");
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = Integer::parse(digits());
            if (accept('/'))
                return MPoly(Rational(num, Integer::parse(digits())));
            base = MPoly(Rational(num));
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            base = MPoly(Var::from_name(s_.substr(start, pos_ - start)));
        } else {
            fail("unexpected '" + std::string(1, c) + "'");
        }
        if (accept('^')) {
            Integer e = Integer::parse(digits());
            if (!e.fits_long() || e.to_long() > static_cast<long>(Monomial::kMaxDegree))
                fail("exponent too large");
            base = base.pow(static_cast<unsigned>(e.to_long()));
        }
        return base;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

MPoly MPoly::parse(std::string_view text)
{
    return Parser(text).parse_all();
}

// ------------------------------------------------------------ UniView

MPoly UniView::assemble() const
{
    MPoly r;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        r += coeffs[k] * MPoly(Monomial::var(main, static_cast<unsigned>(k)), Rational(1));
    return r;
}

UniView univariate_view(const MPoly &p, Var v)
{
    UniView view;
    view.main = v;
    if (p.is_zero())
        return view;
    std::vector<std::vector<Term>> buckets(p.degree(v) + 1);
    for (const auto &t : p.terms()) {
        unsigned e = t.mono.exponent(v);
        buckets[e].push_back({t.mono.without(v), t.coeff});
    }
    view.coeffs.reserve(buckets.size());
    for (auto &b : buckets)
        view.coeffs.push_back(MPoly::from_terms(std::move(b)));
    return view;
}

} // namespace sdisc

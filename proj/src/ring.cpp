#include "logsym/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace logsym {

Rational parse_rational(std::string_view text)
{
    Rational q;
    if (text.empty() || q.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

VarSpec::VarSpec(int total_vars, int divisor_vars) : total_(total_vars), divisor_(divisor_vars)
{
    if (total_vars < 2 || total_vars % 2 != 0)
        throw std::invalid_argument("total variable count must be even and at least 2");
    if (total_vars > 16)
        throw std::invalid_argument("at most 16 variables are supported");
    if (divisor_vars < 0 || divisor_vars > total_vars)
        throw std::invalid_argument("divisor variable count must lie in [0, total]");
}

int total_degree(const Exponent& e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

int weight(const Exponent& e, int frame_weight)
{
    return total_degree(e) + frame_weight;
}

LaurentPoly::LaurentPoly(VarSpec spec) : spec_(spec) {}

LaurentPoly LaurentPoly::constant(VarSpec spec, const Rational& c)
{
    LaurentPoly p(spec);
    p.add_term(Exponent(spec.total_vars(), 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(VarSpec spec, Exponent e, const Rational& c)
{
    LaurentPoly p(spec);
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::variable(VarSpec spec, int var, int power)
{
    if (var < 0 || var >= spec.total_vars())
        throw std::out_of_range("variable index out of range");
    Exponent e(spec.total_vars(), 0);
    e[var] = power;
    return monomial(spec, std::move(e));
}

void LaurentPoly::check_exponent(const Exponent& e) const
{
    if (static_cast<int>(e.size()) != spec_.total_vars())
        throw std::invalid_argument("exponent length does not match variable count");
    for (int i = spec_.divisor_vars(); i < spec_.total_vars(); ++i)
        if (e[i] < 0)
            throw AlgebraError("negative power of non-divisor variable x" + std::to_string(i + 1));
}

bool LaurentPoly::is_constant() const
{
    if (terms_.empty())
        return true;
    if (terms_.size() > 1)
        return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

bool LaurentPoly::is_polynomial() const
{
    for (const auto& [e, c] : terms_)
        for (int k : e)
            if (k < 0)
                return false;
    return true;
}

Rational LaurentPoly::constant_term() const
{
    return coefficient(Exponent(spec_.total_vars(), 0));
}

Rational LaurentPoly::coefficient(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const Rational& c_in)
{
    Rational c = c_in;
    c.canonicalize();
    if (c == 0)
        return;
    check_exponent(e);
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::shifted(const Exponent& shift) const
{
    LaurentPoly out(spec_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        for (std::size_t i = 0; i < f.size(); ++i)
            f[i] += shift[i];
        out.check_exponent(f);
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

bool LaurentPoly::divisible_by_monomial(const Exponent& e) const
{
    for (const auto& [f, c] : terms_)
        for (int i = spec_.divisor_vars(); i < spec_.total_vars(); ++i)
            if (f[i] < e[i])
                return false;
    return true;
}

LaurentPoly LaurentPoly::divide_by_monomial(const Exponent& e) const
{
    Exponent neg(e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        neg[i] = -e[i];
    return shifted(neg);
}

LaurentPoly LaurentPoly::unit_inverse() const
{
    if (!is_single_term())
        throw AlgebraError("only single-term elements are invertible in the Laurent ring");
    const auto& [e, c] = *terms_.begin();
    Exponent inv(e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        inv[i] = -e[i];
    return monomial(spec_, inv, 1 / c);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other)
{
    if (!(spec_ == other.spec_))
        throw std::invalid_argument("variable spec mismatch");
    for (const auto& [e, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other)
{
    return *this += -other;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly out(*this);
    for (auto& [e, c] : out.terms_)
        c = -c;
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c_in)
{
    Rational c = c_in;
    c.canonicalize();
    if (c == 0)
        terms_.clear();
    else
        for (auto& [e, v] : terms_)
            v *= c;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other)
{
    *this = *this * other;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    if (!(a.spec_ == b.spec_))
        throw std::invalid_argument("variable spec mismatch");
    LaurentPoly out(a.spec_);
    const std::size_t n = a.spec_.total_vars();
    Exponent e(n);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < n; ++i)
                e[i] = ea[i] + eb[i];
            auto [it, inserted] = out.terms_.try_emplace(e, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0)
                    out.terms_.erase(it);
            }
        }
    }
    return out;
}

LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q)
{
    return p * q;
}

LaurentPoly partial_derivative(const LaurentPoly& p, int var)
{
    if (var < 0 || var >= p.spec().total_vars())
        throw std::out_of_range("variable index out of range");
    LaurentPoly out(p.spec());
    for (const auto& [e, c] : p.terms()) {
        if (e[var] == 0)
            continue;
        Exponent f = e;
        f[var] -= 1;
        out.add_term(f, c * e[var]);
    }
    return out;
}

bool is_unit_local(const LaurentPoly& p)
{
    if (!p.is_polynomial())
        throw AlgebraError("element has a pole and is not in the local ring");
    return p.constant_term() != 0;
}

Exponent min_exponent(const LaurentPoly& p)
{
    Exponent out(p.spec().total_vars(), 0);
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            out[i] = first ? e[i] : std::min(out[i], e[i]);
        first = false;
    }
    return out;
}

namespace {

std::string monomial_text(const Exponent& e)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += 'x' + std::to_string(i + 1);
        if (e[i] != 1)
            out += '^' + std::to_string(e[i]);
    }
    return out;
}

class PolyParser {
public:
    PolyParser(VarSpec spec, std::string_view text) : spec_(spec)
    {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch)))
                src_ += ch;
    }

    LaurentPoly parse()
    {
        LaurentPoly out(spec_);
        if (src_.empty())
            fail("empty polynomial");
        bool first = true;
        while (pos_ < src_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            auto [e, c] = term();
            out.add_term(e, sign * c);
            first = false;
        }
        return out;
    }

private:
    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("cannot parse polynomial '" + src_ + "' at offset "
                                    + std::to_string(pos_) + ": " + what);
    }

    long integer(bool allow_sign)
    {
        std::size_t start = pos_;
        if (allow_sign && peek() == '-')
            ++pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (pos_ == start || (allow_sign && pos_ == start + 1 && src_[start] == '-'))
            fail("expected integer");
        return std::stol(src_.substr(start, pos_ - start));
    }

    std::pair<Exponent, Rational> term()
    {
        Exponent e(spec_.total_vars(), 0);
        Rational c = 1;
        while (true) {
            if (peek() == 'x') {
                ++pos_;
                long var = integer(false);
                if (var < 1 || var > spec_.total_vars())
                    fail("variable index out of range");
                long power = 1;
                if (peek() == '^') {
                    ++pos_;
                    power = integer(true);
                }
                e[var - 1] += static_cast<int>(power);
            } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
                std::size_t start = pos_;
                integer(false);
                if (peek() == '/') {
                    ++pos_;
                    integer(false);
                }
                c *= parse_rational(src_.substr(start, pos_ - start));
            } else {
                fail("expected a factor");
            }
            if (peek() != '*')
                break;
            ++pos_;
        }
        return {e, c};
    }

    VarSpec spec_;
    std::string src_;
    std::size_t pos_ = 0;
};

} // namespace

std::string to_string(const LaurentPoly& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        std::string mono = monomial_text(e);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        if (mono.empty())
            out << mag.get_str();
        else if (mag == 1)
            out << mono;
        else
            out << mag.get_str() << '*' << mono;
        first = false;
    }
    return out.str();
}

LaurentPoly parse_poly(VarSpec spec, std::string_view text)
{
    return PolyParser(spec, text).parse();
}

} // namespace logsym

#include "logsym/poisson.hpp"

#include <algorithm>

namespace logsym {

SkewMatrix::SkewMatrix(PolyMatrix entries) : m_(std::move(entries))
{
    if (m_.rows() != m_.cols() || m_.rows() == 0)
        throw std::invalid_argument("skew matrix must be square and nonempty");
    for (int i = 0; i < size(); ++i) {
        if (!m_(i, i).is_zero())
            throw std::invalid_argument("skew matrix must have zero diagonal");
        for (int j = i + 1; j < size(); ++j)
            if (!(m_(i, j) == -m_(j, i)))
                throw std::invalid_argument("matrix is not skew-symmetric");
    }
}

SkewMatrix SkewMatrix::from_rational(VarSpec spec, const RationalMatrix& m)
{
    return SkewMatrix(to_poly_matrix(spec, m));
}

RationalMatrix SkewMatrix::constant_matrix() const
{
    if (!is_constant())
        throw std::invalid_argument("skew matrix has non-constant entries");
    return constant_terms(m_);
}

PoissonStructure::PoissonStructure(MultiVector bivector) : pi_(std::move(bivector))
{
    if (pi_.degree() != 2)
        throw std::invalid_argument("a Poisson structure is a bivector");
    if (pi_.frame().kind() != FrameKind::coordinate)
        pi_ = change_frame(pi_, Frame::coordinate(pi_.spec()));
    for (const auto& [k, c] : pi_.terms())
        if (!c.is_polynomial())
            throw std::invalid_argument("Poisson bivector must have polynomial coefficients");
}

MultiVector schouten(const MultiVector& p_in, const MultiVector& q_in)
{
    const Frame coord = Frame::coordinate(p_in.spec());
    const MultiVector p = change_frame(p_in, coord);
    const MultiVector q = change_frame(q_in, coord);
    const int n = p.spec().total_vars();
    const int degree = p.degree() + q.degree() - 1;
    if (degree < 0 || degree > n)
        return MultiVector(coord, std::clamp(degree, 0, n));

    // Koszul form: sum_i  (P <- d/dxi_i) ^ d_i Q  -  d_i P ^ (d/dxi_i -> Q),
    // with right and left odd derivatives.
    MultiVector out(coord, degree);
    for (const auto& [kp, fp] : p.terms()) {
        for (const auto& [kq, fq] : q.terms()) {
            for (int i : kp.indices()) {
                LaurentPoly dq = partial_derivative(fq, i);
                if (dq.is_zero())
                    continue;
                IndexSet rest = kp.without(i);
                int s = wedge_sign(rest, kq);
                if (s == 0)
                    continue;
                if ((kp.size() - 1 - kp.position(i)) % 2)
                    s = -s;
                LaurentPoly c = fp * dq;
                out.add_term(rest | kq, s > 0 ? c : -c);
            }
            for (int i : kq.indices()) {
                LaurentPoly dp = partial_derivative(fp, i);
                if (dp.is_zero())
                    continue;
                IndexSet rest = kq.without(i);
                int s = wedge_sign(kp, rest);
                if (s == 0)
                    continue;
                if (kq.position(i) % 2)
                    s = -s;
                LaurentPoly c = dp * fq;
                out.add_term(kp | rest, s > 0 ? -c : c);
            }
        }
    }
    // (-1)^(p-1) turns the Koszul bracket into the normalized one
    if (p.degree() % 2 == 0)
        out = -out;
    return out;
}

bool jacobi_holds(const PoissonStructure& p)
{
    return schouten(p.bivector(), p.bivector()).is_zero();
}

TopPower top_power(const PoissonStructure& p)
{
    const int n = p.half_dim();
    const Frame coord = Frame::coordinate(p.spec());
    MultiVector power = function_field(coord, LaurentPoly::constant(p.spec(), 1));
    for (int k = 0; k < n; ++k)
        power = wedge(power, p.bivector());
    LaurentPoly f = power.coefficient(IndexSet::range(0, p.spec().total_vars()));
    return {std::move(f), std::move(power)};
}

namespace {

template <class T, class Entry>
T pfaffian_rec(std::vector<int>& rows, const Entry& entry, const T& one)
{
    if (rows.empty())
        return one;
    const int first = rows.front();
    T total = one - one;
    for (std::size_t j = 1; j < rows.size(); ++j) {
        T a = entry(first, rows[j]);
        if (a == one - one)
            continue;
        std::vector<int> rest;
        rest.reserve(rows.size() - 2);
        for (std::size_t k = 1; k < rows.size(); ++k)
            if (k != j)
                rest.push_back(rows[k]);
        T sub = pfaffian_rec<T>(rest, entry, one);
        // matching {first, rows[j]} crosses j-1 remaining indices
        if (j % 2 == 1)
            total += a * sub;
        else
            total -= a * sub;
    }
    return total;
}

} // namespace

Rational pfaffian(const RationalMatrix& a)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("Pfaffian needs a square matrix");
    if (a.rows() % 2)
        throw std::invalid_argument("Pfaffian of an odd-sized matrix");
    std::vector<int> rows(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        rows[i] = i;
    return pfaffian_rec<Rational>(rows, [&](int i, int j) { return a(i, j); }, Rational(1));
}

LaurentPoly pfaffian(const SkewMatrix& a)
{
    if (a.size() % 2)
        throw std::invalid_argument("Pfaffian of an odd-sized matrix");
    std::vector<int> rows(a.size());
    for (int i = 0; i < a.size(); ++i)
        rows[i] = i;
    return pfaffian_rec<LaurentPoly>(rows, [&](int i, int j) { return a(i, j); },
                                     LaurentPoly::constant(a.spec(), 1));
}

DegeneracyDivisor degeneracy_divisor(const PoissonStructure& p)
{
    LaurentPoly f = top_power(p).coefficient;
    if (f.is_zero())
        throw AlgebraError("degenerate: Pi^n vanishes identically");
    Exponent low = min_exponent(f);
    LaurentPoly unit = f.divide_by_monomial(low);
    if (!is_unit_local(unit))
        throw AlgebraError("cannot certify normal crossings: Pi^n coefficient is not a monomial times a unit");
    DegeneracyDivisor out{{}, unit, true};
    for (int i = 0; i < static_cast<int>(low.size()); ++i) {
        if (low[i] == 0)
            continue;
        out.components.emplace_back(i, low[i]);
        if (low[i] > 1)
            out.simple_normal_crossings = false;
    }
    return out;
}

SkewMatrix log_matrix(const PoissonStructure& p)
{
    const VarSpec& spec = p.spec();
    const MultiVector in_log = change_frame(p.bivector(), Frame::log(spec));
    const int n = spec.total_vars();
    PolyMatrix a(n, n, LaurentPoly(spec));
    for (const auto& [k, c] : in_log.terms()) {
        if (!c.is_polynomial()) {
            auto idx = k.indices();
            throw AlgebraError("coefficient of d" + std::to_string(idx[0] + 1) + "^d"
                               + std::to_string(idx[1] + 1)
                               + " is not divisible by the divisor equations; not a log bivector");
        }
        auto idx = k.indices();
        a(idx[0], idx[1]) = c;
        a(idx[1], idx[0]) = -c;
    }
    return SkewMatrix(std::move(a));
}

MultiVector pi_sharp(const PoissonStructure& p, const DiffForm& w)
{
    if (w.degree() != 1)
        throw std::invalid_argument("pi_sharp takes a 1-form");
    return contract(change_frame(w, Frame::coordinate(p.spec())), p.bivector());
}

MultiVector pi_sharp_graded(const PoissonStructure& p, const DiffForm& w)
{
    const VarSpec& spec = p.spec();
    const Frame coord = Frame::coordinate(spec);
    const DiffForm wc = change_frame(w, coord);
    std::vector<MultiVector> images;
    for (int i = 0; i < spec.total_vars(); ++i)
        images.push_back(contract(make_form(coord, IndexSet::single(i), LaurentPoly::constant(spec, 1)),
                                  p.bivector()));
    MultiVector out(coord, w.degree());
    for (const auto& [k, c] : wc.terms()) {
        MultiVector term = function_field(coord, c);
        for (int i : k.indices())
            term = wedge(term, images[i]);
        out += term;
    }
    return out;
}

namespace {

SkewMatrix invert_log_matrix(const SkewMatrix& a)
{
    if (!is_unit_local(pfaffian(a)))
        throw AlgebraError("log matrix is not invertible over the local ring (Pfaffian is not a unit)");
    SkewMatrix b(inverse_local(a.matrix()));
    for (int i = 0; i < b.size(); ++i)
        for (int j = 0; j < b.size(); ++j)
            if (!b(i, j).is_polynomial())
                throw AlgebraError("inverse log matrix leaves the local ring");
    return b;
}

} // namespace

LogDuality::LogDuality(const PoissonStructure& p)
    : p_(p)
    , a_(log_matrix(p))
    , b_(invert_log_matrix(a_))
    , phi_(Frame::phi(std::make_shared<PhiData>(a_.matrix(), b_.matrix())))
{
}

DiffForm LogDuality::pi_flat(const MultiVector& v) const
{
    const MultiVector vc = change_frame(v, Frame::coordinate(v.spec()));
    DiffForm in_phi(phi_, vc.degree());
    for (const auto& [k, c] : vc.terms())
        in_phi.add_term(k, c);
    return change_frame(in_phi, Frame::coordinate(v.spec()));
}

DiffForm LogDuality::phi(int i) const
{
    const VarSpec& spec = p_.spec();
    return pi_flat(make_field(Frame::coordinate(spec), IndexSet::single(i), LaurentPoly::constant(spec, 1)));
}

DiffForm pi_flat(const PoissonStructure& p, const MultiVector& v)
{
    return LogDuality(p).pi_flat(v);
}

} // namespace logsym

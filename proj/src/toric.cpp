#include "logsym/toric.hpp"

#include <set>

namespace logsym {

namespace {

long long binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace

ToricStructure make_toric(const RationalMatrix& a)
{
    const int size = a.rows();
    if (size != a.cols() || size < 2 || size % 2)
        throw std::invalid_argument("toric matrix must be square of even size");
    for (int i = 0; i < size; ++i) {
        if (a(i, i) != 0)
            throw std::invalid_argument("toric matrix must have zero diagonal");
        for (int j = i + 1; j < size; ++j)
            if (a(i, j) != -a(j, i))
                throw std::invalid_argument("toric matrix is not skew-symmetric");
    }
    VarSpec spec(size, size);
    MultiVector pi(Frame::coordinate(spec), 2);
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) {
            if (a(i, j) == 0)
                continue;
            Exponent e(size, 0);
            e[i] = e[j] = 1;
            pi.add_term(IndexSet::single(i).with(j), LaurentPoly::monomial(spec, e, a(i, j)));
        }
    return {size / 2, a, PoissonStructure(std::move(pi))};
}

ToricReport certify(const ToricStructure& t)
{
    ToricReport report;
    report.pfaffian = pfaffian(t.a);
    report.nonsingular = report.pfaffian != 0;
    report.jacobi = jacobi_holds(t.structure);
    try {
        report.divisor = degeneracy_divisor(t.structure);
    } catch (const AlgebraError& e) {
        report.divisor_error = e.what();
    }
    const int size = 2 * t.n;
    const PolyMatrix m = log_matrix(t.structure).matrix();
    const PolyMatrix id = identity_matrix(t.structure.spec(), size);
    std::set<int> seen;
    for (int level : {1, 2, 3, size}) {
        if (level > size || !seen.insert(level).second)
            continue;
        GenPosCertificate cert = is_relative_t_general(m, id, level);
        bool ok = verify_certificate(m, id, cert);
        report.general_position.push_back({std::move(cert), ok});
    }
    return report;
}

long long betti_torus(int d, int i)
{
    if (d < 0 || i < 0 || i > d)
        throw std::out_of_range("betti_torus needs 0 <= i <= d");
    return binomial(d, i);
}

long long log_hodge_numbers(int d, int i, int j)
{
    if (d < 0 || i < 0 || i > d || j < 0 || j > d)
        throw std::out_of_range("log_hodge_numbers needs 0 <= i, j <= d");
    return i > 0 ? 0 : binomial(d, j);
}

long long deformation_tangent_dim(int n)
{
    if (n < 2)
        throw std::domain_error("the deformation count needs dimension 2n >= 4");
    return binomial(2 * n, 2);
}

RationalMatrix random_skew(std::mt19937_64& rng, int n)
{
    const int size = 2 * n;
    RationalMatrix a(size, size, Rational(0));
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) {
            long p = static_cast<long>(rng() % 19) - 9;
            long q = static_cast<long>(rng() % 4) + 1;
            Rational v(p, q);
            v.canonicalize();
            a(i, j) = v;
            a(j, i) = -v;
        }
    return a;
}

RationalMatrix random_generic_skew(std::mt19937_64& rng, int n)
{
    for (;;) {
        RationalMatrix a = random_skew(rng, n);
        std::set<Rational> seen;
        bool generic = true;
        for (int i = 0; i < a.rows() && generic; ++i)
            for (int j = i + 1; j < a.rows() && generic; ++j)
                generic = a(i, j) != 0 && seen.insert(abs(a(i, j))).second;
        if (generic)
            return a;
    }
}

RationalMatrix random_two_general(std::mt19937_64& rng, int n)
{
    for (;;) {
        RationalMatrix a = random_generic_skew(rng, n);
        if (pfaffian(a) == 0)
            continue;
        const VarSpec spec(2 * n, 2 * n);
        const PolyMatrix m = to_poly_matrix(spec, a);
        if (is_relative_t_general(m, identity_matrix(spec, 2 * n), 2).verdict)
            return a;
    }
}

RationalMatrix sample_matrix()
{
    RationalMatrix a(4, 4, Rational(0));
    int v = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            a(i, j) = v;
            a(j, i) = -v;
            ++v;
        }
    return a;
}

RationalMatrix block_diagonal(const Rational& a, const Rational& b)
{
    RationalMatrix m(4, 4, Rational(0));
    m(0, 1) = a;
    m(1, 0) = -a;
    m(2, 3) = b;
    m(3, 2) = -b;
    return m;
}

} // namespace logsym

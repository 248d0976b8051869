#include "logsym/complexes.hpp"

#include "logsym/parallel.hpp"

#include <sstream>

namespace logsym {

std::string to_string(const BasisLabel& label)
{
    std::ostringstream out;
    out << "x^(";
    for (std::size_t i = 0; i < label.exponent.size(); ++i)
        out << (i ? "," : "") << label.exponent[i];
    out << ")*e{";
    bool first = true;
    for (int i : label.frame_index.indices()) {
        out << (first ? "" : ",") << i + 1;
        first = false;
    }
    out << "}";
    return out.str();
}

// ---------------------------------------------------------------------------
// WeightSlicedComplex

WeightSlicedComplex::WeightSlicedComplex(std::string id, Range range, const Enumerator& enumerate, const Rule& rule,
                                         const WeightOf& weight_of)
    : id_(std::move(id)), range_(range)
{
    if (range.min_degree > range.max_degree || range.min_weight > range.max_weight)
        throw std::invalid_argument("empty degree or weight range");
    const int degrees = range.max_degree - range.min_degree + 1;
    const int weights = range.max_weight - range.min_weight + 1;
    slices_.resize(static_cast<std::size_t>(degrees) * weights);
    for (int k = range.min_degree; k <= range.max_degree; ++k)
        for (int w = range.min_weight; w <= range.max_weight; ++w) {
            Slice& s = slices_[slot(k, w)];
            s.basis = enumerate(k, w);
            for (std::size_t i = 0; i < s.basis.size(); ++i)
                s.index.emplace(s.basis[i], static_cast<int>(i));
        }

    const int with_targets = range.top_is_final ? degrees : degrees - 1;
    differentials_.assign(static_cast<std::size_t>(with_targets) * weights, SparseMatrix(0, 0));
    parallel_for(differentials_.size(), [&](std::size_t item) {
        const int k = range_.min_degree + static_cast<int>(item) / weights;
        const int w = range_.min_weight + static_cast<int>(item) % weights;
        const Slice& source = slices_[slot(k, w)];
        if (k == range_.max_degree) {
            differentials_[item] = SparseMatrix(0, static_cast<int>(source.basis.size()));
            return;
        }
        const Slice& target = slices_[slot(k + 1, w)];
        SparseMatrix d(static_cast<int>(target.basis.size()), static_cast<int>(source.basis.size()));
        for (std::size_t j = 0; j < source.basis.size(); ++j) {
            SparseVector column;
            for (const auto& [label, c] : rule(k, source.basis[j])) {
                if (weight_of(label) != w)
                    throw AlgebraError(id_ + ": differential does not preserve weight at " + to_string(label));
                auto it = target.index.find(label);
                if (it == target.index.end())
                    throw AlgebraError(id_ + ": image " + to_string(label) + " of "
                                       + to_string(source.basis[j]) + " is outside the complex");
                column.emplace(it->second, c);
            }
            d.set_column(static_cast<int>(j), std::move(column));
        }
        differentials_[item] = std::move(d);
    });
}

std::size_t WeightSlicedComplex::slot(int degree, int weight) const
{
    if (degree < range_.min_degree || degree > range_.max_degree || weight < range_.min_weight
        || weight > range_.max_weight)
        throw std::out_of_range(id_ + ": slice (" + std::to_string(degree) + ", " + std::to_string(weight)
                                + ") outside the complex");
    const int weights = range_.max_weight - range_.min_weight + 1;
    return static_cast<std::size_t>(degree - range_.min_degree) * weights + (weight - range_.min_weight);
}

const std::vector<BasisLabel>& WeightSlicedComplex::basis(int degree, int weight) const
{
    return slices_[slot(degree, weight)].basis;
}

int WeightSlicedComplex::dimension(int degree, int weight) const
{
    return static_cast<int>(basis(degree, weight).size());
}

std::optional<int> WeightSlicedComplex::index_of(int degree, int weight, const BasisLabel& label) const
{
    const auto& index = slices_[slot(degree, weight)].index;
    auto it = index.find(label);
    if (it == index.end())
        return std::nullopt;
    return it->second;
}

const SparseMatrix& WeightSlicedComplex::differential(int degree, int weight) const
{
    std::size_t s = slot(degree, weight);
    if (s >= differentials_.size())
        throw std::out_of_range(id_ + ": no differential out of the truncation degree");
    return differentials_[s];
}

SparseVector WeightSlicedComplex::coordinates(int degree, int weight, const LabelCombination& combo) const
{
    SparseVector out;
    for (const auto& [label, c] : combo) {
        auto idx = index_of(degree, weight, label);
        if (!idx)
            throw AlgebraError(id_ + ": " + to_string(label) + " is not in slice (" + std::to_string(degree)
                               + ", " + std::to_string(weight) + ")");
        out.emplace(*idx, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// basis enumeration

namespace {

// All exponents e with e_i == floor_i on frozen variables, e_i >= floor_i
// elsewhere, and total degree `total`.
std::vector<Exponent> exponents_with_floor(const Exponent& floor, IndexSet frozen, int total)
{
    std::vector<Exponent> out;
    int remaining = total - total_degree(floor);
    if (remaining < 0)
        return out;
    std::vector<int> free_vars;
    for (int i = 0; i < static_cast<int>(floor.size()); ++i)
        if (!frozen.contains(i))
            free_vars.push_back(i);
    Exponent e = floor;
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
        if (pos + 1 >= free_vars.size()) {
            if (free_vars.empty()) {
                if (left == 0)
                    out.push_back(e);
                return;
            }
            e[free_vars[pos]] = floor[free_vars[pos]] + left;
            out.push_back(e);
            e[free_vars[pos]] = floor[free_vars[pos]];
            return;
        }
        for (int take = left; take >= 0; --take) {
            e[free_vars[pos]] = floor[free_vars[pos]] + take;
            rec(pos + 1, left - take);
        }
        e[free_vars[pos]] = floor[free_vars[pos]];
    };
    rec(0, remaining);
    return out;
}

int non_divisor_count(const VarSpec& spec, IndexSet k)
{
    int count = 0;
    for (int i : k.indices())
        count += spec.is_divisor(i) ? 0 : 1;
    return count;
}

long long binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

void add_label(LabelCombination& out, const BasisLabel& label, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = out.try_emplace(label, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            out.erase(it);
    }
}

void require_toric_model(const LogDuality& duality)
{
    const VarSpec& spec = duality.structure().spec();
    if (spec.divisor_vars() != spec.total_vars())
        throw std::invalid_argument("log-plus complexes need every coordinate to be a divisor variable");
    if (!duality.a().is_constant())
        throw std::invalid_argument("log-plus complexes need a constant log matrix");
}

int resolve_max_degree(const VarSpec& spec, int max_degree)
{
    if (max_degree < 0 || max_degree > spec.total_vars())
        return spec.total_vars();
    return max_degree;
}

int logplus_weight(const BasisLabel& label)
{
    return total_degree(label.exponent) - label.frame_index.size();
}

std::vector<BasisLabel> logplus_basis(int n, int degree, int weight)
{
    std::vector<BasisLabel> out;
    for (IndexSet k : subsets_of_size(n, degree))
        for (auto& e : exponents_with_floor(Exponent(n, 0), IndexSet(), weight + degree))
            out.push_back({k, std::move(e)});
    return out;
}

std::vector<BasisLabel> piece_basis(int n, IndexSet piece, int degree, int weight)
{
    std::vector<BasisLabel> out;
    for (IndexSet k : subsets_of_size(n, degree)) {
        if (!k.includes(piece))
            continue;
        Exponent floor(n, 0);
        for (int i : k.minus(piece).indices())
            floor[i] = 1;
        for (auto& e : exponents_with_floor(floor, piece, weight + degree))
            out.push_back({k, std::move(e)});
    }
    return out;
}

DiffForm label_form(const Frame& frame, const VarSpec& spec, const BasisLabel& label)
{
    return make_form(frame, label.frame_index, LaurentPoly::monomial(spec, label.exponent));
}

LabelCombination labels_of_terms(const TermMap& terms, const char* what)
{
    LabelCombination out;
    for (const auto& [k, c] : terms)
        for (const auto& [e, q] : c.terms()) {
            for (int x : e)
                if (x < 0)
                    throw AlgebraError(std::string("not ") + what + ": coefficient has a pole");
            add_label(out, {k, e}, q);
        }
    return out;
}

} // namespace

LabelCombination logplus_labels(const LogDuality& duality, const DiffForm& form)
{
    return labels_of_terms(change_frame(form, duality.phi_frame()).terms(), "a log-plus form");
}

LabelCombination log_labels(const DiffForm& form)
{
    return labels_of_terms(change_frame(form, Frame::log(form.spec())).terms(), "a log form");
}

int filtration_level(const BasisLabel& label)
{
    int level = 0;
    for (int i : label.frame_index.indices())
        level += label.exponent[i] == 0 ? 1 : 0;
    return level;
}

namespace {

IndexSet pole_set(const BasisLabel& label)
{
    IndexSet out;
    for (int i : label.frame_index.indices())
        if (label.exponent[i] == 0)
            out = out.with(i);
    return out;
}

} // namespace

LabelCombination project_to_piece(IndexSet i, const LabelCombination& combo)
{
    LabelCombination out;
    for (const auto& [label, c] : combo) {
        IndexSet poles = pole_set(label);
        if (poles == i)
            out.emplace(label, c);
        else if (poles.size() >= i.size())
            throw AlgebraError("projection failure: " + to_string(label) + " lies outside F_"
                               + std::to_string(i.size()) + " or in another summand");
    }
    return out;
}

// ---------------------------------------------------------------------------
// builders

WeightSlicedComplex build_log_complex(VarSpec spec, int weight_cap, int max_degree)
{
    if (weight_cap < 0)
        throw std::invalid_argument("weight cap must be nonnegative");
    const int n = spec.total_vars();
    const int top = resolve_max_degree(spec, max_degree);
    const Frame log = Frame::log(spec);
    auto weight_of = [spec](const BasisLabel& l) {
        return total_degree(l.exponent) + non_divisor_count(spec, l.frame_index);
    };
    auto enumerate = [spec, n](int degree, int weight) {
        std::vector<BasisLabel> out;
        for (IndexSet k : subsets_of_size(n, degree))
            for (auto& e : exponents_with_floor(Exponent(n, 0), IndexSet(), weight - non_divisor_count(spec, k)))
                out.push_back({k, std::move(e)});
        return out;
    };
    auto rule = [spec, log](int, const BasisLabel& l) {
        return log_labels(exterior_derivative(label_form(log, spec, l)));
    };
    return WeightSlicedComplex("log(m=" + std::to_string(spec.divisor_vars()) + ")", {0, top, 0, weight_cap, top == n},
                               enumerate, rule, weight_of);
}

WeightSlicedComplex build_bracket_complex(const PoissonStructure& p, int weight_cap, int max_degree, bool log_fields)
{
    if (weight_cap < 0)
        throw std::invalid_argument("weight cap must be nonnegative");
    const VarSpec spec = p.spec();
    const int n = spec.total_vars();
    for (const auto& [k, c] : p.bivector().terms())
        for (const auto& [e, q] : c.terms())
            if (total_degree(e) != 2)
                throw std::invalid_argument("bracket complex needs a bivector of weight 0");
    const int top = resolve_max_degree(spec, max_degree);
    const Frame frame = log_fields ? Frame::log(spec) : Frame::coordinate(spec);
    auto frame_w = [spec, log_fields](IndexSet k) {
        return log_fields ? non_divisor_count(spec, k) : k.size();
    };
    auto weight_of = [frame_w](const BasisLabel& l) { return total_degree(l.exponent) - frame_w(l.frame_index); };
    auto enumerate = [n, frame_w](int degree, int weight) {
        std::vector<BasisLabel> out;
        for (IndexSet k : subsets_of_size(n, degree))
            for (auto& e : exponents_with_floor(Exponent(n, 0), IndexSet(), weight + frame_w(k)))
                out.push_back({k, std::move(e)});
        return out;
    };
    const MultiVector pi = p.bivector();
    auto rule = [spec, frame, pi](int, const BasisLabel& l) {
        MultiVector v = make_field(frame, l.frame_index, LaurentPoly::monomial(spec, l.exponent));
        MultiVector image = change_frame(schouten(v, pi), frame);
        return labels_of_terms(image.terms(), "a polynomial multivector");
    };
    const int min_weight = log_fields ? -std::min(top, n - spec.divisor_vars()) : -top;
    return WeightSlicedComplex(log_fields ? "bracket(log fields)" : "bracket", {0, top, min_weight, weight_cap, top == n},
                               enumerate, rule, weight_of);
}

WeightSlicedComplex build_logplus_complex(const LogDuality& duality, int weight_cap, int max_degree)
{
    if (weight_cap < 0)
        throw std::invalid_argument("weight cap must be nonnegative");
    require_toric_model(duality);
    const VarSpec spec = duality.structure().spec();
    const int n = spec.total_vars();
    const int top = resolve_max_degree(spec, max_degree);
    const Frame phi = duality.phi_frame();
    auto rule = [&duality, spec, phi](int, const BasisLabel& l) {
        return logplus_labels(duality, exterior_derivative(label_form(phi, spec, l)));
    };
    auto enumerate = [n](int degree, int weight) { return logplus_basis(n, degree, weight); };
    return WeightSlicedComplex("log-plus", {0, top, -top, weight_cap, top == n}, enumerate, rule, logplus_weight);
}

GradedPieceQI build_QI(const LogDuality& duality, IndexSet piece, int weight_cap, int max_degree)
{
    if (weight_cap < 0)
        throw std::invalid_argument("weight cap must be nonnegative");
    require_toric_model(duality);
    const VarSpec spec = duality.structure().spec();
    const int n = spec.total_vars();
    if (piece.bits() >> n)
        throw std::invalid_argument("piece index outside the divisor variables");
    const int top = resolve_max_degree(spec, max_degree);
    const int bottom = piece.size();
    if (top < bottom)
        throw std::invalid_argument("max degree below |I|");
    const Frame phi = duality.phi_frame();
    auto rule = [&duality, spec, phi, piece](int, const BasisLabel& l) {
        return project_to_piece(piece, logplus_labels(duality, exterior_derivative(label_form(phi, spec, l))));
    };
    auto enumerate = [n, piece](int degree, int weight) { return piece_basis(n, piece, degree, weight); };

    std::string id = "Q_{";
    bool first = true;
    for (int i : piece.indices()) {
        id += (first ? "" : ",") + std::to_string(i + 1);
        first = false;
    }
    id += "}";
    WeightSlicedComplex complex(id, {bottom, top, -top, weight_cap, top == n}, enumerate, rule, logplus_weight);

    // nominal direct-sum shape versus the actual piece
    const int outside = n - bottom;
    const Frame log = Frame::log(spec);
    const DiffForm phi_i = make_form(phi, piece, LaurentPoly::constant(spec, 1));
    IndexSet complement = IndexSet::range(0, n).minus(piece);
    std::vector<ComponentReport> components;
    for (int d = bottom; d <= top; ++d) {
        const int k = d - bottom;
        for (int w = -top; w <= weight_cap; ++w) {
            const int poly_degree = w + bottom;
            const long long monomials = poly_degree < 0 ? 0 : binomial(poly_degree + outside - 1, outside - 1);
            long long nominal = 0;
            for (int j = 0; j <= k; ++j)
                nominal += binomial(bottom, j) * binomial(outside, k - j) * monomials;
            ComponentReport report{d, w, complex.dimension(d, w), static_cast<int>(nominal), 0, false};
            if (poly_degree >= 0) {
                std::vector<SparseVector> columns;
                const auto coeffs = exponents_with_floor(Exponent(n, 0), piece, poly_degree);
                for (int j = 0; j <= k; ++j)
                    for (IndexSet jj : subsets_of_size(n, j)) {
                        if (!piece.includes(jj))
                            continue;
                        for (IndexSet kk : subsets_of_size(n, k - j)) {
                            if (!complement.includes(kk))
                                continue;
                            for (const auto& e : coeffs) {
                                DiffForm eta = make_form(log, jj | kk, LaurentPoly::monomial(spec, e));
                                if (wedge_sign(jj, kk) < 0)
                                    eta = -eta;
                                DiffForm element = wedge(phi_i, change_frame(eta, phi));
                                columns.push_back(complex.coordinates(
                                    d, w, project_to_piece(piece, logplus_labels(duality, element))));
                            }
                        }
                    }
                SparseMatrix span(report.actual_dim, static_cast<int>(columns.size()));
                for (std::size_t c = 0; c < columns.size(); ++c)
                    span.set_column(static_cast<int>(c), columns[c]);
                report.spanned_rank = checked_rank(span);
            }
            report.direct = report.nominal_dim == report.actual_dim && report.spanned_rank == report.actual_dim;
            components.push_back(report);
        }
    }
    return {piece, std::move(complex), std::move(components)};
}

// ---------------------------------------------------------------------------
// cohomology and checks

std::map<int, int> cohomology_dims(const WeightSlicedComplex& c, int degree)
{
    if (degree < c.min_degree() || degree > c.max_degree())
        throw std::out_of_range("degree outside the complex");
    if (degree == c.max_degree() && !c.top_is_final())
        throw std::out_of_range("cohomology at the truncation degree needs the next differential");
    const int weights = c.max_weight() - c.min_weight() + 1;
    std::vector<int> dims(weights);
    parallel_for(weights, [&](std::size_t i) {
        const int w = c.min_weight() + static_cast<int>(i);
        const int kernel = c.dimension(degree, w) - checked_rank(c.differential(degree, w));
        const int image = degree > c.min_degree() ? checked_rank(c.differential(degree - 1, w)) : 0;
        dims[i] = kernel - image;
    });
    std::map<int, int> out;
    for (int i = 0; i < weights; ++i)
        out.emplace(c.min_weight() + i, dims[i]);
    return out;
}

ExactnessReport verify_exactness(const WeightSlicedComplex& c, int min_degree, int max_degree, int weight_cap)
{
    ExactnessReport report{c.id(), weight_cap, {}, true};
    const int lo = std::max(min_degree, c.min_degree());
    const int hi = std::min(max_degree, c.max_degree());
    for (int k = lo; k <= hi; ++k)
        for (const auto& [w, dim] : cohomology_dims(c, k)) {
            if (w > weight_cap)
                continue;
            report.table.push_back({k, w, dim});
            if (dim != 0)
                report.exact = false;
        }
    return report;
}

bool differential_squares_to_zero(const WeightSlicedComplex& c)
{
    const int last = c.top_is_final() ? c.max_degree() - 1 : c.max_degree() - 2;
    for (int k = c.min_degree(); k <= last; ++k)
        for (int w = c.min_weight(); w <= c.max_weight(); ++w)
            if (!multiply(c.differential(k + 1, w), c.differential(k, w)).is_zero())
                return false;
    return true;
}

ConjugationReport check_conjugation(const WeightSlicedComplex& source, const WeightSlicedComplex& target,
                                    const std::function<LabelCombination(int, const BasisLabel&)>& map)
{
    ConjugationReport report{true, 0, ""};
    const int lo = std::max(source.min_degree(), target.min_degree());
    const int hi = std::min(source.max_degree(), target.max_degree());
    const int wlo = std::max(source.min_weight(), target.min_weight());
    const int whi = std::min(source.max_weight(), target.max_weight());
    auto transfer = [&](int k, int w) {
        const auto& basis = source.basis(k, w);
        SparseMatrix p(target.dimension(k, w), static_cast<int>(basis.size()));
        for (std::size_t j = 0; j < basis.size(); ++j)
            p.set_column(static_cast<int>(j), target.coordinates(k, w, map(k, basis[j])));
        return p;
    };
    auto fail = [&](int k, int w, const std::string& what) {
        if (report.agree)
            report.first_mismatch = what + " at degree " + std::to_string(k) + ", weight " + std::to_string(w);
        report.agree = false;
    };
    for (int w = wlo; w <= whi; ++w) {
        for (int k = lo; k <= hi; ++k) {
            SparseMatrix p = transfer(k, w);
            if (p.rows() != p.cols() || checked_rank(p) != p.cols())
                fail(k, w, "identification is not invertible");
            if (k == hi)
                continue;
            SparseMatrix p_next = transfer(k + 1, w);
            if (!(multiply(target.differential(k, w), p) == multiply(p_next, source.differential(k, w))))
                fail(k, w, "differentials disagree");
            ++report.slices_checked;
        }
    }
    return report;
}

std::vector<int> dphi_signs(const LogDuality& duality, IndexSet i)
{
    const VarSpec spec = duality.structure().spec();
    const Frame coord = Frame::coordinate(spec);
    for (int r : i.indices())
        if (!spec.is_divisor(r))
            throw std::invalid_argument("dphi_signs needs divisor indices");
    const DiffForm phi_i = duality.pi_flat(make_field(coord, i, LaurentPoly::constant(spec, 1)));
    const DiffForm target = exterior_derivative(phi_i);
    std::vector<DiffForm> pieces;
    for (int r : i.indices())
        pieces.push_back(wedge(make_form(coord, IndexSet::single(r), LaurentPoly::variable(spec, r, -1)), phi_i));
    const int k = static_cast<int>(pieces.size());
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
        DiffForm sum(coord, i.size() + 1 > spec.total_vars() ? spec.total_vars() : i.size() + 1);
        std::vector<int> signs(k);
        for (int j = 0; j < k; ++j) {
            signs[j] = (mask >> j) & 1u ? -1 : 1;
            sum += signs[j] > 0 ? pieces[j] : -pieces[j];
        }
        if (sum == target)
            return signs;
    }
    throw AlgebraError("d phi_I is not a signed sum of dlog(x_i) ^ phi_I");
}

std::vector<FiltrationLevelCheck> check_filtration(const LogDuality& duality, int degree, int weight)
{
    require_toric_model(duality);
    const VarSpec spec = duality.structure().spec();
    const int n = spec.total_vars();
    const Frame phi = duality.phi_frame();
    const Frame log = Frame::log(spec);
    const auto basis = logplus_basis(n, degree, weight);
    std::map<BasisLabel, int> index;
    for (std::size_t j = 0; j < basis.size(); ++j)
        index.emplace(basis[j], static_cast<int>(j));

    std::vector<FiltrationLevelCheck> out;
    std::vector<SparseVector> generators;
    for (int level = 0; level <= degree; ++level) {
        // new generators phi_P ^ x^e eta_J with |P| == level
        for (IndexSet pp : subsets_of_size(n, level)) {
            const DiffForm phi_p = make_form(phi, pp, LaurentPoly::constant(spec, 1));
            for (IndexSet jj : subsets_of_size(n, degree - level))
                for (const auto& e : exponents_with_floor(Exponent(n, 0), IndexSet(), weight + level)) {
                    DiffForm g = wedge(phi_p, change_frame(make_form(log, jj, LaurentPoly::monomial(spec, e)), phi));
                    SparseVector v;
                    for (const auto& [label, c] : logplus_labels(duality, g))
                        v.emplace(index.at(label), c);
                    generators.push_back(std::move(v));
                }
        }
        SparseMatrix span(static_cast<int>(basis.size()), static_cast<int>(generators.size()));
        for (std::size_t c = 0; c < generators.size(); ++c)
            span.set_column(static_cast<int>(c), generators[c]);

        FiltrationLevelCheck check{level, checked_rank(span), 0, 0};
        for (const auto& label : basis)
            check.label_count += filtration_level(label) <= level ? 1 : 0;
        for (IndexSet piece : subsets_of_size(n, level))
            check.pieces_sum += static_cast<int>(piece_basis(n, piece, degree, weight).size());
        out.push_back(check);
    }
    return out;
}

bool annihilator_matches(const LogDuality& duality, IndexSet piece, int degree, int weight)
{
    require_toric_model(duality);
    const VarSpec spec = duality.structure().spec();
    const int n = spec.total_vars();
    const Frame phi = duality.phi_frame();
    const auto basis = piece_basis(n, piece, degree, weight);
    const auto next = piece_basis(n, piece, degree, weight + 1);
    std::map<BasisLabel, int> next_index;
    for (std::size_t j = 0; j < next.size(); ++j)
        next_index.emplace(next[j], static_cast<int>(j));

    for (int r = 0; r < n; ++r) {
        SparseMatrix mult(static_cast<int>(next.size()), static_cast<int>(basis.size()));
        for (std::size_t j = 0; j < basis.size(); ++j) {
            DiffForm form = label_form(phi, spec, basis[j]);
            form *= LaurentPoly::variable(spec, r);
            LabelCombination image = project_to_piece(piece, logplus_labels(duality, form));
            if (piece.contains(r)) {
                if (!image.empty())
                    return false;
                continue;
            }
            SparseVector v;
            for (const auto& [label, c] : image)
                v.emplace(next_index.at(label), c);
            mult.set_column(static_cast<int>(j), std::move(v));
        }
        if (!piece.contains(r) && checked_rank(mult) != static_cast<int>(basis.size()))
            return false;
    }
    return true;
}

} // namespace logsym

#include "logsym/exterior.hpp"

#include <bit>

namespace logsym {

IndexSet IndexSet::from_list(std::span<const int> sorted_indices)
{
    std::uint32_t bits = 0;
    int prev = -1;
    for (int i : sorted_indices) {
        if (i <= prev)
            throw std::invalid_argument("index set must be strictly increasing");
        if (i < 0 || i >= 32)
            throw std::out_of_range("index out of range");
        bits |= std::uint32_t{1} << i;
        prev = i;
    }
    return IndexSet(bits);
}

IndexSet IndexSet::range(int begin, int end)
{
    std::uint32_t bits = 0;
    for (int i = begin; i < end; ++i)
        bits |= std::uint32_t{1} << i;
    return IndexSet(bits);
}

int IndexSet::size() const
{
    return std::popcount(bits_);
}

int IndexSet::position(int i) const
{
    return std::popcount(bits_ & ((std::uint32_t{1} << i) - 1));
}

std::vector<int> IndexSet::indices() const
{
    std::vector<int> out;
    for (std::uint32_t b = bits_; b; b &= b - 1)
        out.push_back(std::countr_zero(b));
    return out;
}

std::strong_ordering operator<=>(IndexSet a, IndexSet b)
{
    if (auto c = a.size() <=> b.size(); c != 0)
        return c;
    return a.bits_ <=> b.bits_;
}

int wedge_sign(IndexSet a, IndexSet b)
{
    if (a.intersects(b))
        return 0;
    int inversions = 0;
    for (std::uint32_t bb = b.bits(); bb; bb &= bb - 1) {
        int y = std::countr_zero(bb);
        inversions += std::popcount(a.bits() >> (y + 1));
    }
    return inversions % 2 ? -1 : 1;
}

std::vector<IndexSet> subsets_of_size(int n, int k)
{
    std::vector<IndexSet> out;
    if (k < 0 || k > n)
        return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        out.push_back(IndexSet::from_list(idx));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return out;
}

const char* to_string(FrameKind kind)
{
    switch (kind) {
    case FrameKind::coordinate:
        return "coordinate";
    case FrameKind::log:
        return "log";
    case FrameKind::phi:
        return "phi";
    }
    return "?";
}

namespace {

void add_into(TermMap& out, IndexSet k, const LaurentPoly& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = out.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            out.erase(it);
    }
}

TermMap wedge_terms(const TermMap& a, const TermMap& b)
{
    TermMap out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            int s = wedge_sign(ka, kb);
            if (s == 0)
                continue;
            LaurentPoly p = ca * cb;
            if (s < 0)
                p = -p;
            add_into(out, ka | kb, p);
        }
    return out;
}

// x^(K ∩ D) raised to `power` (+1 or -1)
Exponent divisor_shift(const VarSpec& spec, IndexSet k, int power)
{
    Exponent e(spec.total_vars(), 0);
    for (int i : k.indices())
        if (spec.is_divisor(i))
            e[i] = power;
    return e;
}

LaurentPoly divisor_scale(const VarSpec& spec, int i, int power)
{
    return spec.is_divisor(i) ? LaurentPoly::variable(spec, i, power) : LaurentPoly::constant(spec, 1);
}

constexpr int kCacheVars = 10;

} // namespace

PhiData::PhiData(PolyMatrix a, PolyMatrix b) : spec_(a(0, 0).spec()), a_(std::move(a)), b_(std::move(b))
{
    const int n = spec_.total_vars();
    if (a_.rows() != n || a_.cols() != n || b_.rows() != n || b_.cols() != n)
        throw std::invalid_argument("phi frame matrices must be N x N");
    for (int i = 0; i < n; ++i) {
        TermMap phi, eta;
        LaurentPoly inv_i = divisor_scale(spec_, i, -1);
        for (int j = 0; j < n; ++j) {
            add_into(phi, IndexSet::single(j), b_(i, j) * inv_i * divisor_scale(spec_, j, -1));
            add_into(eta, IndexSet::single(j), a_(i, j) * divisor_scale(spec_, j, 1));
        }
        phi_rows_.push_back(std::move(phi));
        eta_rows_.push_back(std::move(eta));
    }
    if (n <= kCacheVars) {
        const std::size_t count = std::size_t{1} << n;
        phi_cache_.resize(count);
        eta_cache_.resize(count);
        const LaurentPoly one = LaurentPoly::constant(spec_, 1);
        phi_cache_[0].emplace(IndexSet(), one);
        eta_cache_[0].emplace(IndexSet(), one);
        for (std::size_t bits = 1; bits < count; ++bits) {
            // peel off the largest index; the rest is already cached
            int top = 31 - std::countl_zero(static_cast<std::uint32_t>(bits));
            std::size_t rest = bits & ~(std::size_t{1} << top);
            phi_cache_[bits] = wedge_terms(phi_cache_[rest], phi_rows_[top]);
            eta_cache_[bits] = wedge_terms(eta_cache_[rest], eta_rows_[top]);
        }
    }
}

TermMap PhiData::phi_in_coordinates(IndexSet k) const
{
    if (!phi_cache_.empty())
        return phi_cache_[k.bits()];
    TermMap out{{IndexSet(), LaurentPoly::constant(spec_, 1)}};
    for (int i : k.indices())
        out = wedge_terms(out, phi_rows_[i]);
    return out;
}

TermMap PhiData::eta_in_phi(IndexSet k) const
{
    if (!eta_cache_.empty())
        return eta_cache_[k.bits()];
    TermMap out{{IndexSet(), LaurentPoly::constant(spec_, 1)}};
    for (int i : k.indices())
        out = wedge_terms(out, eta_rows_[i]);
    return out;
}

Frame Frame::phi(std::shared_ptr<const PhiData> data)
{
    if (!data)
        throw std::invalid_argument("phi frame requires the matrices A and B");
    VarSpec spec = data->spec();
    return Frame(FrameKind::phi, spec, std::move(data));
}

bool operator==(const Frame& a, const Frame& b)
{
    if (a.kind_ != b.kind_ || !(a.spec_ == b.spec_))
        return false;
    if (a.kind_ != FrameKind::phi || a.phi_ == b.phi_)
        return true;
    return a.phi_->a() == b.phi_->a() && a.phi_->b() == b.phi_->b();
}

DiffForm make_form(const Frame& frame, IndexSet k, const LaurentPoly& f)
{
    DiffForm w(frame, k.size());
    w.add_term(k, f);
    return w;
}

MultiVector make_field(const Frame& frame, IndexSet k, const LaurentPoly& f)
{
    MultiVector v(frame, k.size());
    v.add_term(k, f);
    return v;
}

DiffForm function_form(const Frame& frame, const LaurentPoly& f)
{
    return make_form(frame, IndexSet(), f);
}

MultiVector function_field(const Frame& frame, const LaurentPoly& f)
{
    return make_field(frame, IndexSet(), f);
}

namespace {

template <class Tag>
Graded<Tag> wedge_impl(const Graded<Tag>& a, const Graded<Tag>& b)
{
    if (!(a.frame() == b.frame()))
        throw std::invalid_argument("wedge of elements in different frames");
    const int degree = a.degree() + b.degree();
    if (degree > a.spec().total_vars())
        return Graded<Tag>(a.frame(), a.spec().total_vars());
    Graded<Tag> out(a.frame(), degree);
    for (const auto& [k, c] : wedge_terms(a.terms(), b.terms()))
        out.add_term(k, c);
    return out;
}

DiffForm form_from_terms(const Frame& frame, int degree, const TermMap& terms)
{
    DiffForm out(frame, degree);
    for (const auto& [k, c] : terms)
        out.add_term(k, c);
    return out;
}

DiffForm to_coordinate(const DiffForm& w)
{
    const VarSpec& spec = w.spec();
    const Frame coord = Frame::coordinate(spec);
    switch (w.frame().kind()) {
    case FrameKind::coordinate:
        return w;
    case FrameKind::log: {
        DiffForm out(coord, w.degree());
        for (const auto& [k, c] : w.terms())
            out.add_term(k, c.shifted(divisor_shift(spec, k, -1)));
        return out;
    }
    case FrameKind::phi: {
        TermMap acc;
        const PhiData& data = *w.frame().phi_data();
        for (const auto& [k, c] : w.terms())
            for (const auto& [kk, cc] : data.phi_in_coordinates(k))
                add_into(acc, kk, c * cc);
        return form_from_terms(coord, w.degree(), acc);
    }
    }
    throw std::logic_error("unknown frame");
}

} // namespace

DiffForm wedge(const DiffForm& a, const DiffForm& b)
{
    return wedge_impl(a, b);
}

MultiVector wedge(const MultiVector& a, const MultiVector& b)
{
    return wedge_impl(a, b);
}

DiffForm change_frame(const DiffForm& w, const Frame& target)
{
    if (!(w.spec() == target.spec()))
        throw std::invalid_argument("variable spec mismatch");
    if (w.frame() == target)
        return w;
    DiffForm coord = to_coordinate(w);
    const VarSpec& spec = w.spec();
    switch (target.kind()) {
    case FrameKind::coordinate:
        return coord;
    case FrameKind::log: {
        DiffForm out(target, w.degree());
        for (const auto& [k, c] : coord.terms())
            out.add_term(k, c.shifted(divisor_shift(spec, k, 1)));
        return out;
    }
    case FrameKind::phi: {
        const PhiData& data = *target.phi_data();
        TermMap acc;
        for (const auto& [k, c] : coord.terms()) {
            LaurentPoly log_coeff = c.shifted(divisor_shift(spec, k, 1));
            for (const auto& [kk, cc] : data.eta_in_phi(k))
                add_into(acc, kk, log_coeff * cc);
        }
        return form_from_terms(target, w.degree(), acc);
    }
    }
    throw std::logic_error("unknown frame");
}

MultiVector change_frame(const MultiVector& v, const Frame& target)
{
    if (!(v.spec() == target.spec()))
        throw std::invalid_argument("variable spec mismatch");
    if (target.kind() == FrameKind::phi)
        throw std::invalid_argument("the phi frame is only defined for forms");
    if (v.frame() == target)
        return v;
    // coordinate <-> log: v_K = x^(K ∩ D) d_K
    const int power = target.kind() == FrameKind::coordinate ? 1 : -1;
    MultiVector out(target, v.degree());
    for (const auto& [k, c] : v.terms())
        out.add_term(k, c.shifted(divisor_shift(v.spec(), k, power)));
    return out;
}

DiffForm exterior_derivative(const DiffForm& w)
{
    DiffForm coord = to_coordinate(w);
    const VarSpec& spec = w.spec();
    const int n = spec.total_vars();
    if (w.degree() == n)
        return DiffForm(coord.frame(), n);
    DiffForm out(coord.frame(), w.degree() + 1);
    for (const auto& [k, c] : coord.terms()) {
        for (int i = 0; i < n; ++i) {
            if (k.contains(i))
                continue;
            LaurentPoly di = partial_derivative(c, i);
            if (di.is_zero())
                continue;
            if (wedge_sign(IndexSet::single(i), k) < 0)
                di = -di;
            out.add_term(k.with(i), di);
        }
    }
    return out;
}

MultiVector contract(const DiffForm& w, const MultiVector& v)
{
    if (w.degree() != 1)
        throw std::invalid_argument("contraction needs a 1-form");
    if (v.degree() == 0)
        throw std::invalid_argument("cannot contract a degree-0 multivector");
    if (w.frame().kind() != FrameKind::coordinate || v.frame().kind() != FrameKind::coordinate)
        throw std::invalid_argument("contraction operands must be in the coordinate frame");
    if (!(w.spec() == v.spec()))
        throw std::invalid_argument("variable spec mismatch");
    MultiVector out(v.frame(), v.degree() - 1);
    for (const auto& [kw, cw] : w.terms()) {
        const int a = kw.indices().front();
        for (const auto& [k, c] : v.terms()) {
            if (!k.contains(a))
                continue;
            LaurentPoly p = cw * c;
            if (k.position(a) % 2)
                p = -p;
            out.add_term(k.without(a), p);
        }
    }
    return out;
}

int frame_weight(FrameKind kind, const VarSpec& spec, IndexSet k, bool is_form)
{
    const int sign = is_form ? 1 : -1;
    switch (kind) {
    case FrameKind::coordinate:
        return sign * k.size();
    case FrameKind::log: {
        int non_divisor = 0;
        for (int i : k.indices())
            non_divisor += spec.is_divisor(i) ? 0 : 1;
        return sign * non_divisor;
    }
    case FrameKind::phi:
        return -k.size();
    }
    return 0;
}

} // namespace logsym

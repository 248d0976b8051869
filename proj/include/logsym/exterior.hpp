// Exterior algebra of differential forms and multivector fields with Laurent
// coefficients, expressed in one of three frames:
//
//   coordinate  dx_i            / d_i
//   log         eta_i = dx_i/x_i (i < m), dx_i otherwise
//               v_i   = x_i d_i  (i < m), d_i  otherwise
//   phi         phi_i = pi_flat(d_i), forms only; needs the log-frame
//               matrix A of a Poisson structure and its inverse B.
//
// Indices are 0-based in code and 1-based in every textual representation.
#ifndef LOGSYM_EXTERIOR_HPP
#define LOGSYM_EXTERIOR_HPP

#include "logsym/linalg.hpp"
#include "logsym/ring.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

namespace logsym {

/// Strictly increasing set of indices, stored as a bit mask.
class IndexSet {
public:
    IndexSet() = default;

    static IndexSet from_bits(std::uint32_t bits) { return IndexSet(bits); }
    static IndexSet from_list(std::span<const int> sorted_indices);
    static IndexSet single(int i) { return IndexSet(std::uint32_t{1} << i); }
    static IndexSet range(int begin, int end);

    std::uint32_t bits() const { return bits_; }
    int size() const;
    bool empty() const { return bits_ == 0; }
    bool contains(int i) const { return (bits_ >> i) & 1u; }
    /// Number of elements smaller than i.
    int position(int i) const;
    std::vector<int> indices() const;

    IndexSet with(int i) const { return IndexSet(bits_ | (std::uint32_t{1} << i)); }
    IndexSet without(int i) const { return IndexSet(bits_ & ~(std::uint32_t{1} << i)); }
    bool intersects(IndexSet o) const { return (bits_ & o.bits_) != 0; }
    bool includes(IndexSet o) const { return (bits_ & o.bits_) == o.bits_; }
    IndexSet operator|(IndexSet o) const { return IndexSet(bits_ | o.bits_); }
    IndexSet operator&(IndexSet o) const { return IndexSet(bits_ & o.bits_); }
    IndexSet minus(IndexSet o) const { return IndexSet(bits_ & ~o.bits_); }

    /// Orders by size, then by mask.
    friend std::strong_ordering operator<=>(IndexSet a, IndexSet b);
    friend bool operator==(IndexSet, IndexSet) = default;

private:
    explicit IndexSet(std::uint32_t bits) : bits_(bits) {}
    std::uint32_t bits_ = 0;
};

/// Sign of sorting the concatenation a ++ b; 0 if a and b overlap.
int wedge_sign(IndexSet a, IndexSet b);

/// All subsets of {0..n-1} of the given size, in lexicographic order.
std::vector<IndexSet> subsets_of_size(int n, int k);

enum class FrameKind { coordinate, log, phi };

const char* to_string(FrameKind kind);

using TermMap = std::map<IndexSet, LaurentPoly>;

/// Log-frame matrices of a nondegenerate Poisson structure together with the
/// basis changes they induce between the phi frame and the coordinate frame.
class PhiData {
public:
    /// `a` is the matrix of pi_sharp in the log bases, `b` its inverse.
    PhiData(PolyMatrix a, PolyMatrix b);

    const VarSpec& spec() const { return spec_; }
    const PolyMatrix& a() const { return a_; }
    const PolyMatrix& b() const { return b_; }

    /// phi_K written in the coordinate frame.
    TermMap phi_in_coordinates(IndexSet k) const;
    /// eta_K written in the phi frame.
    TermMap eta_in_phi(IndexSet k) const;

private:
    VarSpec spec_;
    PolyMatrix a_;
    PolyMatrix b_;
    std::vector<TermMap> phi_rows_;  // phi_i in coordinates
    std::vector<TermMap> eta_rows_;  // eta_i in phi frame
    std::vector<TermMap> phi_cache_; // all phi_K, when 2^N is small
    std::vector<TermMap> eta_cache_;
};

class Frame {
public:
    static Frame coordinate(VarSpec spec) { return Frame(FrameKind::coordinate, spec, nullptr); }
    static Frame log(VarSpec spec) { return Frame(FrameKind::log, spec, nullptr); }
    static Frame phi(std::shared_ptr<const PhiData> data);

    FrameKind kind() const { return kind_; }
    const VarSpec& spec() const { return spec_; }
    const PhiData* phi_data() const { return phi_.get(); }

    friend bool operator==(const Frame& a, const Frame& b);

private:
    Frame(FrameKind kind, VarSpec spec, std::shared_ptr<const PhiData> phi)
        : kind_(kind), spec_(spec), phi_(std::move(phi))
    {
    }

    FrameKind kind_;
    VarSpec spec_;
    std::shared_ptr<const PhiData> phi_;
};

struct FormTag {};
struct FieldTag {};

/// Homogeneous element of the exterior algebra over LaurentPoly.
template <class Tag>
class Graded {
public:
    Graded(Frame frame, int degree) : frame_(std::move(frame)), degree_(degree)
    {
        if constexpr (std::is_same_v<Tag, FieldTag>)
            if (frame_.kind() == FrameKind::phi)
                throw std::invalid_argument("the phi frame is only defined for forms");
        if (degree < 0 || degree > frame_.spec().total_vars())
            throw std::invalid_argument("degree out of range");
    }

    const Frame& frame() const { return frame_; }
    const VarSpec& spec() const { return frame_.spec(); }
    int degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LaurentPoly coefficient(IndexSet k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? LaurentPoly(spec()) : it->second;
    }

    void add_term(IndexSet k, const LaurentPoly& c)
    {
        if (k.size() != degree_)
            throw std::invalid_argument("index set length differs from degree");
        if (!(c.spec() == spec()))
            throw std::invalid_argument("variable spec mismatch");
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    Graded& operator+=(const Graded& o)
    {
        check_compatible(o);
        for (const auto& [k, c] : o.terms_)
            add_term(k, c);
        return *this;
    }
    Graded& operator-=(const Graded& o) { return *this += -o; }

    Graded operator-() const
    {
        Graded out(*this);
        for (auto& [k, c] : out.terms_)
            c = -c;
        return out;
    }

    Graded& operator*=(const LaurentPoly& f)
    {
        TermMap next;
        for (const auto& [k, c] : terms_) {
            LaurentPoly p = c * f;
            if (!p.is_zero())
                next.emplace(k, std::move(p));
        }
        terms_ = std::move(next);
        return *this;
    }

    friend Graded operator+(Graded a, const Graded& b) { return a += b; }
    friend Graded operator-(Graded a, const Graded& b) { return a -= b; }
    friend Graded operator*(const LaurentPoly& f, Graded a) { return a *= f; }
    friend Graded operator*(const Rational& c, Graded a)
    {
        return a *= LaurentPoly::constant(a.spec(), c);
    }

    friend bool operator==(const Graded& a, const Graded& b)
    {
        return a.frame_ == b.frame_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    void check_compatible(const Graded& o) const
    {
        if (!(frame_ == o.frame_))
            throw std::invalid_argument("frame mismatch");
        if (degree_ != o.degree_ && !o.is_zero() && !is_zero())
            throw std::invalid_argument("degree mismatch");
    }

    Frame frame_;
    int degree_;
    TermMap terms_;
};

using DiffForm = Graded<FormTag>;
using MultiVector = Graded<FieldTag>;

/// f * e_K, where e_K is the frame element indexed by K.
DiffForm make_form(const Frame& frame, IndexSet k, const LaurentPoly& f);
MultiVector make_field(const Frame& frame, IndexSet k, const LaurentPoly& f);
/// Degree-0 element f.
DiffForm function_form(const Frame& frame, const LaurentPoly& f);
MultiVector function_field(const Frame& frame, const LaurentPoly& f);

DiffForm wedge(const DiffForm& a, const DiffForm& b);
MultiVector wedge(const MultiVector& a, const MultiVector& b);

DiffForm change_frame(const DiffForm& w, const Frame& target);
MultiVector change_frame(const MultiVector& v, const Frame& target);

/// d of a form; non-coordinate inputs are converted first and the result is
/// in the coordinate frame.
DiffForm exterior_derivative(const DiffForm& w);

/// Interior product of a 1-form with a multivector (both in the coordinate
/// frame): i_w(V_1 ^ ... ^ V_k) = sum_j (-1)^(j-1) w(V_j) V_1 ^ .. ^ V_k
/// with V_j omitted.
MultiVector contract(const DiffForm& w, const MultiVector& v);

/// Weight of a frame element: dx counts 1, d counts -1, eta_i and v_i count
/// 0 on divisor indices, phi_i counts -1.
int frame_weight(FrameKind kind, const VarSpec& spec, IndexSet k, bool is_form);

} // namespace logsym

#endif

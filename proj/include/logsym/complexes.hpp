// Weight-sliced cochain complexes built from the log complex, the log-plus
// complex and its filtration, with exact cohomology by rank-nullity.
//
// A basis vector is a label (K, e) standing for x^e times the frame element
// indexed by K. The weight (total exponent plus frame weight) is preserved by
// every differential here, so each (degree, weight) slice is a finite
// dimensional Q-vector space and the differentials are sparse rational
// matrices between slices.
//
// The log-plus constructions need a toric-type local model: every coordinate
// is a divisor variable and the log matrix A is constant. Then phi_i has
// weight -1 and the log-plus basis is {x^e phi_K : e >= 0}. The filtration
// level of x^e phi_K is the size of its pole set {k in K : e_k = 0}.
#ifndef LOGSYM_COMPLEXES_HPP
#define LOGSYM_COMPLEXES_HPP

#include "logsym/exterior.hpp"
#include "logsym/linalg.hpp"
#include "logsym/poisson.hpp"

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace logsym {

struct BasisLabel {
    IndexSet frame_index;
    Exponent exponent;

    friend auto operator<=>(const BasisLabel&, const BasisLabel&) = default;
};

using LabelCombination = std::map<BasisLabel, Rational>;

std::string to_string(const BasisLabel& label);

class WeightSlicedComplex {
public:
    using Enumerator = std::function<std::vector<BasisLabel>(int degree, int weight)>;
    using Rule = std::function<LabelCombination(int degree, const BasisLabel&)>;
    using WeightOf = std::function<int(const BasisLabel&)>;

    struct Range {
        int min_degree;
        int max_degree;
        int min_weight;
        int max_weight;
        /// True when nothing lies above max_degree, so d_max = 0.
        bool top_is_final;
    };

    /// Enumerates every slice, applies `rule` to each basis label and checks
    /// that the result stays in the slice of the same weight. Throws
    /// AlgebraError when an image leaves the basis.
    WeightSlicedComplex(std::string id, Range range, const Enumerator& enumerate, const Rule& rule,
                        const WeightOf& weight_of);

    const std::string& id() const { return id_; }
    int min_degree() const { return range_.min_degree; }
    int max_degree() const { return range_.max_degree; }
    int min_weight() const { return range_.min_weight; }
    int max_weight() const { return range_.max_weight; }
    bool top_is_final() const { return range_.top_is_final; }

    const std::vector<BasisLabel>& basis(int degree, int weight) const;
    int dimension(int degree, int weight) const;
    std::optional<int> index_of(int degree, int weight, const BasisLabel& label) const;

    /// d: (degree, weight) -> (degree + 1, weight). Zero map at the top.
    const SparseMatrix& differential(int degree, int weight) const;

    /// Coordinates of a combination of labels lying in one slice.
    SparseVector coordinates(int degree, int weight, const LabelCombination& combo) const;

private:
    struct Slice {
        std::vector<BasisLabel> basis;
        std::map<BasisLabel, int> index;
    };

    std::size_t slot(int degree, int weight) const;

    std::string id_;
    Range range_;
    std::vector<Slice> slices_;
    std::vector<SparseMatrix> differentials_;
};

/// Log complex: basis x^e eta_K, e >= 0, weights 0..weight_cap.
WeightSlicedComplex build_log_complex(VarSpec spec, int weight_cap, int max_degree = -1);

/// Multivector complex (wedge T, [., Pi]) on x^e d_K, or on x^e v_K when
/// `log_fields` is set. Pi must have weight 0.
WeightSlicedComplex build_bracket_complex(const PoissonStructure& p, int weight_cap, int max_degree,
                                          bool log_fields = false);

/// Log-plus complex on x^e phi_K with d computed on meromorphic
/// representatives. Throws std::invalid_argument outside the toric-type model.
WeightSlicedComplex build_logplus_complex(const LogDuality& duality, int weight_cap, int max_degree = -1);

/// Expands a coordinate or phi-frame form as a combination of log-plus labels.
/// Throws AlgebraError if it is not in the log-plus module.
LabelCombination logplus_labels(const LogDuality& duality, const DiffForm& form);

/// Expands a form as a combination of log-complex labels x^e eta_K.
LabelCombination log_labels(const DiffForm& form);

/// Size of the pole set {k in K : e_k = 0} of a log-plus label.
int filtration_level(const BasisLabel& label);

/// Keeps the terms of `combo` whose pole set is exactly I and drops those of
/// lower filtration level. Throws AlgebraError on any other term.
LabelCombination project_to_piece(IndexSet i, const LabelCombination& combo);

/// Per-slice comparison of an actual graded piece with the nominal
/// direct-sum shape  sum_J Omega^{k-|J|}_{D_I}(log) (x) dlog(x)_J.
struct ComponentReport {
    int degree;
    int weight;
    int actual_dim;
    int nominal_dim;
    /// Rank of the images of phi_I ^ dlog(x)_J ^ psi in the slice.
    int spanned_rank;
    bool direct; // nominal_dim == actual_dim == spanned_rank
};

struct GradedPieceQI {
    IndexSet piece;
    WeightSlicedComplex complex;
    std::vector<ComponentReport> components;
};

/// Q_I = I-summand of F_|I| / F_|I|-1, degrees |I|..max_degree (all when -1).
GradedPieceQI build_QI(const LogDuality& duality, IndexSet i, int weight_cap, int max_degree = -1);

/// dim H^k per weight: dim ker d_k - rank d_(k-1), ranks cross-checked in two
/// elimination orders.
std::map<int, int> cohomology_dims(const WeightSlicedComplex& c, int degree);

struct ExactnessEntry {
    int degree;
    int weight;
    int dim_cohomology;
};

struct ExactnessReport {
    std::string complex_id;
    int weight_cap;
    std::vector<ExactnessEntry> table;
    bool exact;
};

/// Cohomology over degrees [min_degree, max_degree] (clipped to the complex)
/// and weights up to weight_cap.
ExactnessReport verify_exactness(const WeightSlicedComplex& c, int min_degree, int max_degree, int weight_cap);

/// d_(k+1) d_k == 0 on every slice.
bool differential_squares_to_zero(const WeightSlicedComplex& c);

struct ConjugationReport {
    bool agree;
    int slices_checked;
    std::string first_mismatch;
};

/// Checks P d_source = d_target P on every common slice, where P maps a
/// source label to a combination of target labels of the same degree and
/// weight, and that each P is invertible.
ConjugationReport check_conjugation(const WeightSlicedComplex& source, const WeightSlicedComplex& target,
                                    const std::function<LabelCombination(int degree, const BasisLabel&)>& map);

/// Signs s_j with d phi_I = sum_j s_j (dx_{i_j}/x_{i_j}) ^ phi_I, found by
/// comparing meromorphic representatives. Throws if no sign vector fits.
std::vector<int> dphi_signs(const LogDuality& duality, IndexSet i);

struct FiltrationLevelCheck {
    int level;
    int rank_from_generators; // span of phi_P ^ x^e eta_J, |P| <= level
    int label_count;          // labels with pole set size <= level
    int pieces_sum;           // sum of dim Q_I over |I| = level (0 for level 0)
};

/// Filtration of one log-plus slice, computed from generators and compared
/// with the label description and the direct sum of graded pieces.
std::vector<FiltrationLevelCheck> check_filtration(const LogDuality& duality, int degree, int weight);

/// For every label of the Q_I slice: x_r times it vanishes in Q_I for r in I,
/// and multiplication by x_r (r not in I) is injective on the slice.
bool annihilator_matches(const LogDuality& duality, IndexSet i, int degree, int weight);

} // namespace logsym

#endif

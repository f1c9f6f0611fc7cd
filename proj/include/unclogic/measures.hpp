#ifndef UNCLOGIC_MEASURES_HPP
#define UNCLOGIC_MEASURES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "unclogic/exec.hpp"
#include "unclogic/spaces.hpp"

namespace unclogic {

enum class MeasureKind { Probability, Upper, Lower, Plausibility, Belief, Possibility, Necessity };

std::string kind_name(MeasureKind k);
MeasureKind dual_kind(MeasureKind k);
// true for upper/plausibility/possibility/probability (value(carrier)=1 side of
// the duality); false for lower/belief/necessity
bool is_upper_side(MeasureKind k);

// Finitely additive probability measure, stored by atom weights.
struct ProbabilityMeasure {
    SpacePtr space;
    std::vector<Rat> atom_weight;

    Rat operator()(const MeasurableSet& u) const;
    Rat operator()(std::uint64_t mask) const;
};

ProbabilityMeasure make_probability(SpacePtr space, std::vector<Rat> atom_weights);

struct Envelope {
    MeasureKind kind = MeasureKind::Upper;  // Upper or Lower
    std::vector<ProbabilityMeasure> family;
};

struct Tabulated {
    MeasureKind claimed = MeasureKind::Upper;
    SpacePtr space;
    std::vector<Rat> value_by_mask;  // size 2^atoms
};

struct MassFunction {
    MeasureKind reading = MeasureKind::Plausibility;  // Plausibility or Belief
    SpacePtr space;
    std::vector<std::pair<std::uint64_t, Rat>> focal;  // nonempty sets, mass > 0
};

struct PossibilityDist {
    MeasureKind reading = MeasureKind::Possibility;  // Possibility or Necessity
    SpacePtr space;
    std::vector<Rat> degree;  // per carrier point, max = 1
};

// Tagged union over the measure representations. Mass functions and
// possibility distributions are the generative representations; Tabulated is
// the audited one.
class UncertaintyMeasure {
public:
    UncertaintyMeasure() = default;
    explicit UncertaintyMeasure(ProbabilityMeasure m) : repr_(std::move(m)) {}
    explicit UncertaintyMeasure(Envelope m) : repr_(std::move(m)) {}
    explicit UncertaintyMeasure(Tabulated m) : repr_(std::move(m)) {}
    explicit UncertaintyMeasure(MassFunction m) : repr_(std::move(m)) {}
    explicit UncertaintyMeasure(PossibilityDist m) : repr_(std::move(m)) {}

    MeasureKind kind() const;
    const SpacePtr& space() const;
    Rat eval(const MeasurableSet& u) const;
    Rat eval_mask(std::uint64_t mask) const;

    template <typename T>
    const T* get_if() const {
        return std::get_if<T>(&repr_);
    }

    bool pointwise_equal(const UncertaintyMeasure& other) const;

private:
    std::variant<ProbabilityMeasure, Envelope, Tabulated, MassFunction, PossibilityDist> repr_;
};

// Dual measure: value(U) = 1 - eval(m, complement(U)), kind flipped.
// Representation-preserving where possible, Tabulated otherwise.
UncertaintyMeasure dual(const UncertaintyMeasure& m);

UncertaintyMeasure upper_envelope(std::vector<ProbabilityMeasure> family);
UncertaintyMeasure lower_envelope(std::vector<ProbabilityMeasure> family);
UncertaintyMeasure mass_to_measure(MassFunction mass);
UncertaintyMeasure possdist_to_measure(PossibilityDist dist);
UncertaintyMeasure tabulate(const UncertaintyMeasure& m);  // audited copy

// ---- verifiers ------------------------------------------------------------

struct ProbabilityVerdict {
    bool ok = false;
    std::string reason;  // first failure, when !ok
};

// Additivity on every disjoint pair of measurable sets plus normalization.
ProbabilityVerdict is_probability(const UncertaintyMeasure& m);

struct UpperVerdict {
    bool ok = false;
    bool credal_set_empty = false;
    std::optional<MeasurableSet> failing_set;  // max mu(U) < g(U) here
    Rat attained;                              // the LP maximum at failing_set
    std::vector<ProbabilityMeasure> witness_family;
};

// Envelope criterion for Theorem-style characterization of upper
// probabilities: g is an upper probability iff the credal set
// C(g) = { mu probability | mu(V) <= g(V) for all V } has max_{mu} mu(U) = g(U)
// for every measurable U. One exact LP per U; embarrassingly parallel over U.
// On success the witness family (one maximizer per U, deduplicated) has upper
// envelope equal to g everywhere.
UpperVerdict is_upper_probability_lp(const UncertaintyMeasure& g,
                                     ExecMode mode = ExecMode::Serial);

// (n,k)-cover test: every carrier point lies in at least k members of seq and
// every point of u in at least n+k, counted with multiplicity.
bool is_nk_cover(const MeasurableSet& u, const std::vector<MeasurableSet>& seq, long n, long k);

struct CoverWitness {
    MeasurableSet target;
    std::vector<MeasurableSet> seq;
    long n = 0, k = 0;
    Rat lhs, rhs;  // lhs = k + n*g(U) > rhs = sum g(U_i)
};

// Bounded search for a violation of the cover inequality
// k + n*g(U) <= sum_i g(U_i): all sequences of length <= m_max over the
// algebra (with repetition), all targets, tightest (n,k) per candidate.
// Sound always; complete only relative to m_max.
std::optional<CoverWitness> find_cover_violation(const UncertaintyMeasure& g, int m_max,
                                                 ExecMode mode = ExecMode::Serial);

struct PlausibilityVerdict {
    bool ok = false;
    std::string reason;
    std::vector<MeasurableSet> violating_tuple;
};

// Inclusion-exclusion inequality g(U_1 cap..cap U_n) <= sum over nonempty I of
// (-1)^{|I|+1} g(union_{i in I} U_i), over all tuples of <= n_max distinct
// measurable sets (n_max <= 0 means all of them), plus normalization.
PlausibilityVerdict is_plausibility(const UncertaintyMeasure& g, int n_max = 0,
                                    ExecMode mode = ExecMode::Serial);

// Equivalent fast criterion on finite algebras: the Moebius transform of the
// dual belief values is a nonnegative mass assignment. Used where the tuple
// search is too large; agreement with is_plausibility is tested.
PlausibilityVerdict is_plausibility_moebius(const UncertaintyMeasure& g);

struct PossibilityVerdict {
    bool ok = false;
    std::string reason;
    std::optional<std::pair<MeasurableSet, MeasurableSet>> violating_pair;
};

// Max law on all pairs plus normalization (pairs suffice on a finite algebra).
PossibilityVerdict is_possibility(const UncertaintyMeasure& g);

// ---- pushforward -----------------------------------------------------------

// Point map between spaces; measurability = the preimage of every target atom
// is a union of source atoms.
struct PointMap {
    SpacePtr source, target;
    std::vector<int> image;  // target point index per source point
};

struct MeasurabilityReport {
    bool ok = false;
    std::optional<MeasurableSet> offending_set;  // target set with bad preimage
};

MeasurabilityReport check_measurable(const PointMap& f);
MeasurableSet preimage(const PointMap& f, const MeasurableSet& u);

// value(U) = eval(m, preimage(U)); kind preserved, representation mapped
// structurally. Throws DomainError when f is not measurable.
UncertaintyMeasure pushforward(const PointMap& f, const UncertaintyMeasure& m);

}  // namespace unclogic

#endif

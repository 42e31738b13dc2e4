#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "coev/algebra.hpp"
#include "coev/rational.hpp"

namespace coev {

/// One validation rule outcome. Validators never throw; every rule lands
/// here, passed or not.
struct ValidationCheck {
    std::string rule;
    bool passed;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;

    bool valid() const {
        for (const auto& c : checks) {
            if (!c.passed) return false;
        }
        return true;
    }
    const ValidationCheck* first_failure() const {
        for (const auto& c : checks) {
            if (!c.passed) return &c;
        }
        return nullptr;
    }
};

/// A probability measure given by one exact weight per history. The measure
/// of an event is the sum of its members' weights.
class ClassicalMeasure {
public:
    /// `normalize` rescales the weights by their total (when nonzero) so the
    /// whole space gets measure 1. Rescaling never changes which events are
    /// null. Invariants (nonnegativity, total 1) are checked by
    /// validate_classical, not enforced here.
    ClassicalMeasure(SpacePtr space, std::vector<Rational> weights, bool normalize = false);

    const SpacePtr& space() const noexcept { return space_; }
    const std::vector<Rational>& weights() const noexcept { return weights_; }

    Rational evaluate_mask(EventMask mask) const;
    Rational total() const;  // measure of the unit event

private:
    SpacePtr space_;
    std::vector<Rational> weights_;
};

/// A quantum measure given by an n-by-n decoherence matrix D. The measure of
/// an event A is the double sum of D entries over pairs of members of A
/// (its real part; a Hermitian D makes the imaginary parts cancel exactly).
class QuantumMeasure {
public:
    /// Rank-1 construction from per-history amplitudes: D[i][j] = a_i * conj(a_j),
    /// so the measure of A is |sum of amplitudes over A|^2.
    static QuantumMeasure from_amplitudes(SpacePtr space, std::vector<ComplexRational> amplitudes,
                                          bool normalize = false);

    /// General construction from a full matrix.
    static QuantumMeasure from_decoherence(SpacePtr space,
                                           std::vector<std::vector<ComplexRational>> matrix,
                                           bool normalize = false);

    const SpacePtr& space() const noexcept { return space_; }
    const std::vector<std::vector<ComplexRational>>& decoherence() const noexcept {
        return matrix_;
    }

    Rational evaluate_mask(EventMask mask) const;
    ComplexRational evaluate_mask_full(EventMask mask) const;
    Rational total() const;

private:
    QuantumMeasure(SpacePtr space, std::vector<std::vector<ComplexRational>> matrix);

    SpacePtr space_;
    std::vector<std::vector<ComplexRational>> matrix_;
};

/// Tagged union over the two measure kinds.
class Measure {
public:
    Measure(ClassicalMeasure m) : value_(std::move(m)) {}
    Measure(QuantumMeasure m) : value_(std::move(m)) {}

    bool is_classical() const noexcept {
        return std::holds_alternative<ClassicalMeasure>(value_);
    }
    bool is_quantum() const noexcept { return std::holds_alternative<QuantumMeasure>(value_); }

    const ClassicalMeasure& classical() const { return std::get<ClassicalMeasure>(value_); }
    const QuantumMeasure& quantum() const { return std::get<QuantumMeasure>(value_); }

    const SpacePtr& space() const noexcept;
    Rational evaluate_mask(EventMask mask) const;

private:
    std::variant<ClassicalMeasure, QuantumMeasure> value_;
};

/// Exact measure of an event; zero for the empty event, the normalization
/// total for the unit event.
Rational evaluate(const Measure& mu, const Event& a);

/// Kolmogorov checks: weights nonnegative, total exactly 1, and additivity
/// over disjoint pairs (exhaustive up to n=10, deterministic sample above).
ValidationReport validate_classical(const ClassicalMeasure& mu);

/// Quantum checks: Hermiticity, unit total, nonnegativity on every event
/// (exhaustive up to n=16), and the quadratic sum rule
/// I2(A,B,C) = mu(ABC) - mu(AB) - mu(BC) - mu(AC) + mu(A) + mu(B) + mu(C) = 0
/// over pairwise-disjoint triples (exhaustive up to n=10, sampled above).
/// The report records which coverage applied.
ValidationReport validate_quantum(const QuantumMeasure& mu);

ValidationReport validate(const Measure& mu);

/// Cap for whole-algebra scans (null events and everything built on them).
inline constexpr std::size_t kMaxNullEnumerationHistories = 20;

/// Every event of measure exactly zero, ascending mask order. Always
/// contains the empty event. Scans all 2^n events; n is capped at 20.
std::vector<Event> null_events(const Measure& mu, unsigned threads = 0);

/// The inclusion-maximal null events, ascending mask order.
std::vector<Event> maximal_null_events(const Measure& mu, unsigned threads = 0);

/// Same, derived from an already-computed null list instead of a fresh scan.
std::vector<Event> maximal_null_events(const SpacePtr& space, std::span<const Event> nulls);

/// An event is stymied when some null event contains it. Stymied events are
/// exactly the subsets of maximal null events.
bool is_stymied(const Measure& mu, const Event& a);
bool is_stymied(const Event& a, std::span<const Event> nulls);

}  // namespace coev

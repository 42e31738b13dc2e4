#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coev/algebra.hpp"
#include "coev/measure.hpp"

namespace coev {

/// An answering map: one yes/no verdict per event of a space, stored as a
/// dense truth table indexed by event mask. Constant maps are not co-events
/// and are rejected at construction — a co-event must affirm at least one
/// event and deny at least one.
class CoEvent {
public:
    /// values[k] answers the event with mask k; needs all 2^n entries.
    CoEvent(SpacePtr space, const std::vector<bool>& values);

    /// Parses the wire form: a string of '0'/'1' of length 2^n, mask-ascending
    /// (first character answers the empty event).
    static CoEvent from_table_string(SpacePtr space, std::string_view bits);

    const SpacePtr& space() const noexcept { return space_; }

    bool value(EventMask mask) const {
        return (table_[mask >> 6] >> (mask & 63)) & 1u;
    }
    bool operator()(const Event& a) const;

    /// Number of affirmed events.
    std::uint64_t affirmed_count() const noexcept;

    /// Truth table in the wire form, mask-ascending.
    std::string table_string() const;

    friend bool operator==(const CoEvent& a, const CoEvent& b) noexcept {
        return a.table_ == b.table_ && same_space(a.space_, b.space_);
    }

private:
    CoEvent(SpacePtr space, std::vector<std::uint64_t> table);
    void reject_constant() const;

    friend class CoEventBuilder;

    SpacePtr space_;
    std::vector<std::uint64_t> table_;  // bit k = answer for event mask k
};

/// Incremental construction for enumeration-heavy callers; validates the
/// non-constant rule once at finish().
class CoEventBuilder {
public:
    explicit CoEventBuilder(SpacePtr space);
    void set(EventMask mask, bool value);
    CoEvent finish();
    void reset();

private:
    SpacePtr space_;
    std::vector<std::uint64_t> table_;
};

/// The non-empty event a multiplicative co-event concentrates on.
class Support {
public:
    explicit Support(Event event);
    const Event& event() const noexcept { return event_; }

private:
    Event event_;
};

/// The co-event of a single history: affirms exactly the events the history
/// belongs to. Always a homomorphism.
CoEvent classical_coevent(const SpacePtr& space, std::size_t history);

/// The co-event affirming exactly the supersets of the support. Always
/// multiplicative and unital.
CoEvent from_support(const Support& support);
CoEvent from_support(const Event& support_event);

/// The intersection of all affirmed events. Defined only for multiplicative
/// co-events (checked; others do not round-trip and get a domain error).
Support support_of(const CoEvent& phi);

// The property predicates. All of them scan the truth table; the pairwise
// ones cost O(4^n) table probes.
bool is_zero_preserving(const CoEvent& phi);  // denies the empty event
bool is_unital(const CoEvent& phi);           // affirms the whole space
bool is_multiplicative(const CoEvent& phi);   // phi(AB) = phi(A)phi(B)
bool is_additive(const CoEvent& phi);         // phi(A+B) = phi(A)+phi(B)

/// Modus ponens: affirming the implication event 1+A+AB and affirming A
/// forces affirming B.
bool is_mp(const CoEvent& phi);

bool is_c1(const CoEvent& phi);  // affirmed events have denied complements
bool is_c2(const CoEvent& phi);  // denied events have affirmed complements

/// Multiplicative and additive.
bool is_homomorphism(const CoEvent& phi);

/// The affirmed events form a filter: non-empty, proper, closed under
/// supersets and under pairwise intersection.
bool affirmed_is_filter(const CoEvent& phi);

/// Denies every null event of the measure.
bool is_preclusive(const CoEvent& phi, const Measure& mu);
bool is_preclusive(const CoEvent& phi, std::span<const Event> nulls);

/// The refinement order: a precedes b when a affirms everything b affirms.
/// Minimal co-events affirm as much as their class allows.
bool precedes(const CoEvent& a, const CoEvent& b);

}  // namespace coev

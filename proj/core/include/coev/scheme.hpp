#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coev/coevent.hpp"
#include "coev/measure.hpp"

namespace coev {

/// Everything the multiplicative-scheme solver knows about one measure:
/// the null structure, the minimal supports, and the classical diagnosis.
struct SchemeSolution {
    SpacePtr space;
    std::vector<Event> null_events;
    std::vector<Event> maximal_null_events;

    /// Supports of the minimal preclusive multiplicative co-events, sorted by
    /// (cardinality, mask). Non-empty, pairwise incomparable, never stymied.
    std::vector<Event> minimal_supports;

    /// Histories lying in no null event. Exactly the histories whose
    /// singleton is a minimal support; non-empty means a classical world
    /// (a preclusive homomorphism) exists.
    std::vector<std::size_t> preclusive_homomorphism_histories;
    bool classical_world_exists = false;
};

/// The inclusion-minimal non-empty events that are not stymied, ascending
/// (cardinality, mask) order. Computed as the minimal hitting sets of the
/// complements of the maximal null events: an event avoids being trapped
/// under a null event exactly when it sticks out of every maximal one.
std::vector<Event> minimal_nonstymied_events(const Measure& mu, unsigned threads = 0);

/// Same, derived from already-computed maximal null events.
std::vector<Event> minimal_nonstymied_events(const SpacePtr& space,
                                             std::span<const Event> maximal_nulls);

/// from_support applied to each minimal non-stymied event: the minimal
/// preclusive multiplicative co-events of the measure.
std::vector<CoEvent> minimal_coevents(const Measure& mu, unsigned threads = 0);

/// Histories contained in no null event. Each one indexes a preclusive
/// homomorphism (its classical co-event), and they are the only ones.
std::vector<std::size_t> preclusive_homomorphisms(const Measure& mu, unsigned threads = 0);

SchemeSolution solve(const Measure& mu, unsigned threads = 0);

/// One row of the nine-way equivalence diagnostics.
struct EquivalenceItem {
    std::string id;           // "i" .. "ix"
    std::string description;
    std::size_t count = 0;
    bool exists = false;

    /// Populated for the history-indexed items (i, iii, v, vi, vii).
    std::vector<std::string> history_witnesses;
    /// Populated for the event-indexed items (ii, iv, viii, ix); for the
    /// co-event items these are the supports.
    std::vector<Event> event_witnesses;
};

/// For a fixed measure, which of the nine classical-world descriptions
/// admit at least one object, the objects themselves where feasible, and
/// whether the cross-checks between them all came out consistent.
///
/// The co-event-quantified items are checked literally (by enumerating all
/// co-events) up to n = 4 and through the history/support correspondences
/// above that; `notes` records which route each item took.
struct EquivalenceReport {
    std::vector<EquivalenceItem> items;
    bool consistent = false;
    std::vector<std::string> notes;

    const EquivalenceItem& item(const std::string& id) const;
};

EquivalenceReport equivalence_report(const Measure& mu, unsigned threads = 0);

/// Same, reusing an already-solved record for the measure.
EquivalenceReport equivalence_report(const Measure& mu, const SchemeSolution& solution);

}  // namespace coev
